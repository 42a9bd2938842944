"""Oracle suites: exhaustive and fixture-based checks binding theory to the engine.

Every suite is deterministic and idempotent; a failing suite reports the
first witness in enumeration order as a reproducible graph6 string.
Exhaustive suites quantify over labeled graph streams; the heavier
order-6 and tree suites quantify over isomorphism-class representatives,
which proves the same isomorphism-invariant statements at a fraction of
the cost (class generation is count-checked against the known sequences).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from heapq import heapify, heappop, heappush
from itertools import product

from . import fixtures
from .blocking import (
    Provenance,
    designated_family,
    enumerate_family,
    hits_all,
    is_connected_psd_fort,
    is_psd_fort,
    is_skew_fort,
    is_standard_fort,
)
from .closures import (
    ClosureRule,
    close,
    derived_blocking_family,
    generators,
    is_union_closed,
    is_x_set,
)
from .errors import OrderBudgetExceeded, UnknownSuite
from .graphs import (
    Graph,
    all_labeled_graphs,
    all_permutations,
    bits,
    build,
    closed_nbhd_set,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    induced,
    is_connected,
    isomorphism,
    mask_from,
    path,
    permute_mask,
    star,
    to_graph6,
)
from .irredundance import (
    aux_domination,
    domination_chain,
    enumerate_maximal_xir_sets,
    is_xir_set,
    reduced_family,
    report,
    xir_membership_table,
)
from .tar import (
    KIND_X_SETS,
    KIND_XIR_SETS,
    build_tar,
    independence_tar,
    tar_isomorphic,
)

FORCING_RULES = (ClosureRule.STANDARD, ClosureRule.PSD, ClosureRule.SKEW)
ALL_RULES = tuple(ClosureRule)


@dataclass
class SuiteResult:
    """Outcome of one suite: pass iff the failure list is empty."""

    suite_name: str
    graphs_checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, g6: str, property_id: str, detail: str) -> None:
        self.failures.append((g6, property_id, detail))

    def finish(self) -> "SuiteResult":
        self.failures.sort()
        return self

    def to_json_dict(self) -> dict:
        return {
            "suite_name": self.suite_name,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "failures": [
                {"graph_g6": g, "property_id": p, "detail": d}
                for g, p, d in self.failures
            ],
        }

    def format_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite {self.suite_name}: {status} "
            f"({self.graphs_checked} graphs, {len(self.failures)} failures)"
        ]
        for g, p, d in self.failures[:50]:
            lines.append(f"  {g}  {p}  {d}")
        if len(self.failures) > 50:
            lines.append(f"  ... {len(self.failures) - 50} more")
        return "\n".join(lines)


# -- corpora -----------------------------------------------------------------

def labeled_graphs_up_to(max_n: int):
    for n in range(1, max_n + 1):
        yield from all_labeled_graphs(n)


def _prufer_decode(n: int, seq: tuple[int, ...]) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v))
    return build(n, edges)


def labeled_trees(n: int):
    """All n^(n-2) labeled trees on n vertices via Pruefer sequences."""
    if n == 1:
        yield empty(1)
        return
    for seq in product(range(n), repeat=n - 2):
        yield _prufer_decode(n, seq)


def generate_trees(max_n: int):
    """Stream every labeled tree of each order 1..max_n."""
    if max_n > 10:
        raise OrderBudgetExceeded("labeled-tree streaming capped at order 10")
    for n in range(1, max_n + 1):
        yield from labeled_trees(n)


def _tree_centers(g: Graph) -> list[int]:
    n = g.n
    if n <= 2:
        return list(range(n))
    degree = [g.degree(v) for v in range(n)]
    alive = [True] * n
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for leaf in layer:
            alive[leaf] = False
            remaining -= 1
            for w in bits(g.adj[leaf]):
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(n) if alive[v]]


def tree_certificate(g: Graph) -> tuple:
    """Canonical form of a free tree: AHU shape at the center(s)."""

    def rooted(v: int, parent: int) -> tuple:
        return tuple(sorted(rooted(w, v) for w in bits(g.adj[v]) if w != parent))

    return min(rooted(c, -1) for c in _tree_centers(g))


@lru_cache(maxsize=None)
def nonisomorphic_trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if n == 1:
        return (empty(1),)
    reps = []
    seen = set()
    for t in nonisomorphic_trees(n - 1):
        for v in range(t.n):
            cand = build(n, t.edges() + [(v, n - 1)])
            cert = tree_certificate(cand)
            if cert not in seen:
                seen.add(cert)
                reps.append(cand)
    return tuple(reps)


def _graph_signature(g: Graph) -> tuple:
    per_vertex = sorted(
        (g.degree(v), tuple(sorted(g.degree(u) for u in bits(g.adj[v]))))
        for v in range(g.n)
    )
    return (g.n, g.edge_count(), tuple(per_vertex))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on n vertices.

    Built by extending (n-1)-representatives with every possible new-vertex
    neighborhood and deduplicating with the brute-force isomorphism check
    inside cheap invariant buckets.  Practical through n = 7.
    """
    if n == 1:
        return (empty(1),)
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in nonisomorphic_graphs(n - 1):
        base_edges = g.edges()
        for nb in range(1 << g.n):
            cand = build(n, base_edges + [(v, n - 1) for v in bits(nb)])
            key = _graph_signature(cand)
            bucket = buckets.setdefault(key, [])
            if not any(isomorphism(cand, r) is not None for r in bucket):
                bucket.append(cand)
                reps.append(cand)
    return tuple(reps)


def nonisomorphic_graphs_up_to(max_n: int) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(nonisomorphic_graphs(n))
    return out


def _bipartition(g: Graph) -> tuple[int, int] | None:
    color = {}
    for comp in components(g):
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for w in bits(g.adj[u]):
                    if w not in color:
                        color[w] = color[u] ^ 1
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return None
            frontier = nxt
    a = mask_from(v for v, c in color.items() if c == 0)
    return a, g.full_mask & ~a


# -- exhaustive suites -------------------------------------------------------

def suite_chain(max_n: int = 5) -> SuiteResult:
    """xir <= X <= X-upper <= XIR for all five parameters (labeled graphs)."""
    res = SuiteResult("chain")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        for rule in ALL_RULES:
            rep = report(g, rule)
            if not rep.xir <= rep.x <= rep.x_upper <= rep.xir_upper:
                res.fail(rep.graph_g6, f"chain:{rule.value}", f"{rep.values()}")
            if rule is ClosureRule.SKEW and rep.x == 0 and rep.values() != (0, 0, 0, 0):
                res.fail(rep.graph_g6, "chain:skew-degenerate", f"{rep.values()}")
    return res.finish()


def suite_hitting(max_n: int = 5) -> SuiteResult:
    """Forcing-set recognition by closure equals intersecting every fort."""
    res = SuiteResult("hitting")
    provs = {
        ClosureRule.STANDARD: Provenance.ENUMERATED_FORTS,
        ClosureRule.PSD: Provenance.ENUMERATED_FORTS,
        ClosureRule.SKEW: Provenance.ENUMERATED_FORTS,
    }
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        for rule in FORCING_RULES:
            fam = enumerate_family(rule, provs[rule], g)
            members = fam.members
            for s in range(1 << g.n):
                by_closure = is_x_set(rule, g, s)
                by_forts = all(m & s for m in members)
                if by_closure != by_forts:
                    res.fail(g6, f"hitting:{rule.value}",
                             f"S={s:#x} closure={by_closure} forts={by_forts}")
                    break
    return res.finish()


def suite_vcir_eq_tau(max_n: int = 6) -> SuiteResult:
    """vcir equals the vertex cover number, certified by the exchange witness.

    This suite is expected to FAIL at order 6: the 60 labeled triangular
    prisms have vcir = 3 < tau = 4 (each triangle is a maximal
    VC-irredundant set whose members privately cover the matching edges),
    so the asserted equality is false there and the exchange dead-ends.
    """
    from .irredundance import _exchange_to_cover

    res = SuiteResult("vcir-eq-tau")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        edge_masks = tuple(g.edge_masks())
        size = 1 << g.n
        tau = g.n
        for s in range(size):
            if s.bit_count() < tau and all(e & s for e in edge_masks):
                tau = s.bit_count()
        table = xir_membership_table(g.n, edge_masks)
        maximal = [
            s for s in range(size)
            if table[s]
            and all(not table[s | (1 << v)] for v in range(g.n) if not s >> v & 1)
        ]
        vcir = min(m.bit_count() for m in maximal)
        if vcir != tau:
            res.fail(g6, "vcir-eq-tau", f"vcir={vcir} tau={tau}")
        for s in maximal:
            if s.bit_count() != vcir:
                continue
            cover = _exchange_to_cover(g, s, edge_masks)
            if cover is None:
                res.fail(g6, "vcir-to-cover", f"S={s:#x} exchange stuck")
            elif cover.bit_count() != vcir or not all(e & cover for e in edge_masks):
                res.fail(g6, "vcir-to-cover", f"S={s:#x} cover={cover:#x}")
    return res.finish()


def suite_dom_chain(max_n: int = 5) -> SuiteResult:
    """Extended Domination Chain on labeled graphs with no isolated vertices."""
    res = SuiteResult("dom-chain")
    for g in labeled_graphs_up_to(max_n):
        if any(a == 0 for a in g.adj):
            continue
        res.graphs_checked += 1
        c = domination_chain(g)
        vals = (c.dir, c.gamma, c.lower_alpha, c.alpha, c.gamma_upper, c.DIR, c.VCIR)
        if any(vals[i] > vals[i + 1] for i in range(6)):
            res.fail(c.graph_g6, "dom-chain", f"{vals}")
        # every domination-irredundant set is vertex-cover irredundant
        nbhd = designated_family(ClosureRule.DOMINATION, g)
        edges_fam = designated_family(ClosureRule.VERTEX_COVER, g)
        t_dir = xir_membership_table(g.n, nbhd.members)
        t_vc = xir_membership_table(g.n, edges_fam.members)
        for s in range(1 << g.n):
            if t_dir[s] and not t_vc[s]:
                res.fail(c.graph_g6, "dir-set-is-vcir-set", f"S={s:#x}")
                break
    return res.finish()


def suite_closure_laws(max_n: int = 5) -> SuiteResult:
    """Extensive, monotone, idempotent; X-compliance; component consistency."""
    res = SuiteResult("closure-laws")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        n = g.n
        size = 1 << n
        full = g.full_mask
        for rule in ALL_RULES:
            cl = [close(rule, g, s) for s in range(size)]
            for s in range(size):
                c = cl[s]
                if s & ~c:
                    res.fail(g6, f"extensive:{rule.value}", f"S={s:#x}")
                    break
                if cl[c] != c:
                    res.fail(g6, f"idempotent:{rule.value}", f"S={s:#x}")
                    break
                # monotone over covering pairs implies monotone (transitivity)
                grow = full & ~s
                bad = False
                for v in bits(grow):
                    if c & ~cl[s | (1 << v)]:
                        res.fail(g6, f"monotone:{rule.value}", f"S={s:#x} v={v}")
                        bad = True
                        break
                if bad:
                    break
            # X-compliance against the direct set-level definitions
            if rule is ClosureRule.DOMINATION:
                for s in range(size):
                    if (cl[s] == full) != (closed_nbhd_set(g, s) == full):
                        res.fail(g6, "compliance:domination", f"S={s:#x}")
                        break
            if rule is ClosureRule.VERTEX_COVER:
                edge_masks = g.edge_masks()
                for s in range(size):
                    covers = all(e & s for e in edge_masks)
                    if (cl[s] == full) != covers:
                        res.fail(g6, "compliance:vertex_cover", f"S={s:#x}")
                        break
        # component consistency on disconnected graphs
        comps = components(g)
        if len(comps) > 1:
            strict_rules = (ClosureRule.STANDARD, ClosureRule.PSD, ClosureRule.DOMINATION)
            for comp in comps:
                sub = comp
                s = sub
                while True:
                    for rule in strict_rules:
                        if close(rule, g, s) & ~comp:
                            res.fail(g6, f"component:{rule.value}", f"S={s:#x}")
                    s = (s - 1) & sub
                    if s == sub:
                        break
            for rule in (*strict_rules, ClosureRule.SKEW):
                for s in range(size):
                    whole = close(rule, g, s)
                    pieces = 0
                    for comp in comps:
                        pieces |= close(rule, g, s & comp) & comp
                    if whole != pieces:
                        res.fail(g6, f"component-decomp:{rule.value}", f"S={s:#x}")
                        break
            isolated = mask_from(v for v in range(n) if g.adj[v] == 0)
            if close(ClosureRule.VERTEX_COVER, g, 0) != isolated:
                res.fail(g6, "component:vc-empty", "phi(empty) != isolated vertices")
    return res.finish()


def suite_closure_families(max_n: int = 5) -> SuiteResult:
    """Closure-derived families equal fort families; generator algebra; B vs B*."""
    res = SuiteResult("closure-families")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        size = 1 << g.n
        derived = {rule: derived_blocking_family(rule, g) for rule in ALL_RULES}
        # forcing rules: derived equals the enumerated fort family
        for rule in FORCING_RULES:
            forts = enumerate_family(rule, Provenance.ENUMERATED_FORTS, g)
            if derived[rule].members != forts.members:
                res.fail(g6, f"derived-eq-forts:{rule.value}",
                         f"{len(derived[rule])} vs {len(forts)}")
        # every closure-derived family is union-closed
        for rule in ALL_RULES:
            if not is_union_closed(derived[rule].members):
                res.fail(g6, f"union-closed:{rule.value}", "")
        # domination: B_D subset of B_{D,Phi}; generators inside B_D
        nbhd = designated_family(ClosureRule.DOMINATION, g)
        dphi = set(derived[ClosureRule.DOMINATION].members)
        if not set(nbhd.members) <= dphi:
            res.fail(g6, "dom:BD-in-BDphi", "")
        dgens = generators(derived[ClosureRule.DOMINATION])
        if not set(dgens.members) <= set(nbhd.members):
            res.fail(g6, "dom:gens-in-BD", "")
        # vertex cover: edges inside B_{VC,Phi}; members are unions of edges;
        # generators are exactly the edges
        edges_fam = designated_family(ClosureRule.VERTEX_COVER, g)
        vphi = derived[ClosureRule.VERTEX_COVER]
        if not set(edges_fam.members) <= set(vphi.members):
            res.fail(g6, "vc:edges-in-BVCphi", "")
        for w in vphi.members:
            if any(not g.adj[v] & w for v in bits(w)):
                res.fail(g6, "vc:member-union-of-edges", f"W={w:#x}")
                break
        vgens = generators(vphi)
        if vgens.members != edges_fam.members:
            res.fail(g6, "vc:gens-eq-edges", "")
        # irredundant-set equivalence between a family and its generators
        for rule in ALL_RULES:
            fam = derived[rule]
            gens = generators(fam)
            t_full = xir_membership_table(g.n, fam.members)
            t_gens = xir_membership_table(g.n, gens.members)
            if t_full != t_gens:
                res.fail(g6, f"xir-eq-generators:{rule.value}", "")
        # the reduced families used by report() agree with the designated ones
        for rule in ALL_RULES:
            fam = designated_family(rule, g)
            red = reduced_family(rule, g)
            if xir_membership_table(g.n, fam.members) != xir_membership_table(
                g.n, red.members
            ):
                res.fail(g6, f"xir-eq-reduced:{rule.value}", "")
            for s in range(size):
                if hits_all(fam, s) != hits_all(red, s):
                    res.fail(g6, f"hits-eq-reduced:{rule.value}", f"S={s:#x}")
                    break
    return res.finish()


def suite_minimal_xset(max_n: int = 5) -> SuiteResult:
    """Every minimal X-set is a maximal XIr-set, all five parameters."""
    res = SuiteResult("minimal-xset-maximal-xir")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        for rule in ALL_RULES:
            fam = designated_family(rule, g)
            members = fam.members
            size = 1 << g.n
            hit = [all(m & s for m in members) for s in range(size)]
            table = xir_membership_table(g.n, members)
            for s in range(size):
                if not hit[s]:
                    continue
                if any(hit[s ^ (1 << v)] for v in bits(s)):
                    continue  # not minimal
                maximal = table[s] and all(
                    not table[s | (1 << v)] for v in range(g.n) if not s >> v & 1
                )
                if not maximal:
                    res.fail(g6, f"min-xset-max-xir:{rule.value}", f"S={s:#x}")
                    break
    return res.finish()


_ADDITIVITY_POOL = (
    ("K1", lambda: empty(1)),
    ("P2", lambda: path(2)),
    ("P3", lambda: path(3)),
    ("K3", lambda: complete(3)),
    ("paw", lambda: fixtures.PAW.graph),
    ("star3", lambda: star(3)),
)


def suite_component_additivity(max_n: int = 8) -> SuiteResult:
    """xir, X, X-upper, XIR are additive over disjoint unions (all parameters)."""
    res = SuiteResult("component-additivity")
    for _, fa in _ADDITIVITY_POOL:
        for _, fb in _ADDITIVITY_POOL:
            a, b = fa(), fb()
            if a.n + b.n > max_n:
                continue
            g = disjoint_union(a, b)
            res.graphs_checked += 1
            for rule in ALL_RULES:
                ra, rb, rg = report(a, rule), report(b, rule), report(g, rule)
                want = tuple(x + y for x, y in zip(ra.values(), rb.values()))
                if rg.values() != want:
                    res.fail(rg.graph_g6, f"additivity:{rule.value}",
                             f"{rg.values()} != {ra.values()}+{rb.values()}")
    return res.finish()


def suite_fort_structure(max_n: int = 5) -> SuiteResult:
    """Containments and decompositions among the three fort species."""
    res = SuiteResult("fort-structure")
    for g in labeled_graphs_up_to(max_n):
        res.graphs_checked += 1
        g6 = to_graph6(g)
        size = 1 << g.n
        skew = [f for f in range(1, size) if is_skew_fort(g, f)]
        psd = [f for f in range(1, size) if is_psd_fort(g, f)]
        for f in skew:
            if not is_standard_fort(g, f):
                res.fail(g6, "skew-fort-is-fort", f"F={f:#x}")
                break
        for f in psd:
            if not is_standard_fort(g, f):
                res.fail(g6, "psd-fort-is-fort", f"F={f:#x}")
                break
            comps = components(g, within=f)
            if not all(is_connected_psd_fort(g, c) for c in comps):
                res.fail(g6, "psd-fort-decomposition", f"F={f:#x}")
                break
        psd_set = set(psd)
        for i, f1 in enumerate(psd):
            for f2 in psd[i + 1:]:
                if f1 & f2 == 0 and (f1 | f2) not in psd_set:
                    res.fail(g6, "disjoint-psd-union", f"{f1:#x}|{f2:#x}")
        bip = _bipartition(g)
        if bip is not None:
            a, b = bip
            for f in skew:
                for part in (f & a, f & b):
                    if part and not is_skew_fort(g, part):
                        res.fail(g6, "skew-bipartite-split", f"F={f:#x}")
        if is_x_set(ClosureRule.SKEW, g, 0) and skew:
            res.fail(g6, "skew-zero-no-forts", f"{len(skew)} forts")
    return res.finish()


def _has_join_partition(g: Graph) -> bool:
    # V = A | B | C with A, B nonempty independent and G = G[A] v G[B] v G[C]
    n = g.n
    for assign in product((0, 1, 2), repeat=n):
        a = mask_from(v for v in range(n) if assign[v] == 0)
        b = mask_from(v for v in range(n) if assign[v] == 1)
        if not a or not b:
            continue
        if any(g.adj[v] & a for v in bits(a)):
            continue
        if any(g.adj[v] & b for v in bits(b)):
            continue
        c = g.full_mask & ~(a | b)
        ok = True
        for v in bits(a):
            if (b | c) & ~g.adj[v]:
                ok = False
                break
        if ok:
            for v in bits(b):
                if (a | c) & ~g.adj[v]:
                    ok = False
                    break
        if ok:
            for v in bits(c):
                if (a | b) & ~g.adj[v]:
                    ok = False
                    break
        if ok:
            return True
    return False


def _is_complete_plus_isolates(g: Graph) -> bool:
    # one complete component on >= 2 vertices, all other components singletons
    big = [c for c in components(g) if c.bit_count() >= 2]
    if len(big) != 1:
        return False
    k = big[0].bit_count()
    sub, _ = induced(g, big[0])
    return sub.edge_count() == k * (k - 1) // 2


def suite_characterizations(max_n: int = 6) -> SuiteResult:
    """Extreme-value characterizations as decision procedures."""
    res = SuiteResult("characterizations")
    for g in nonisomorphic_graphs_up_to(max_n):
        if g.n < 2 or g.edge_count() == 0:
            continue
        res.graphs_checked += 1
        g6 = to_graph6(g)
        n = g.n
        rep_p = report(g, ClosureRule.PSD)
        # top value n-1 is attained exactly by a complete graph plus isolates
        structural_top = _is_complete_plus_isolates(g)
        tops = {
            "zpir": rep_p.xir == n - 1,
            "Z+": rep_p.x == n - 1,
            "Z+bar": rep_p.x_upper == n - 1,
            "ZpIR": rep_p.xir_upper == n - 1,
        }
        if any(v != structural_top for v in tops.values()):
            res.fail(g6, "psd-top-iff-complete-plus-isolates",
                     f"structural={structural_top} {tops}")
        if not is_connected(g):
            continue
        is_tree = g.edge_count() == n - 1
        ones = {
            "zpir": rep_p.xir == 1,
            "Z+": rep_p.x == 1,
            "Z+bar": rep_p.x_upper == 1,
            "ZpIR": rep_p.xir_upper == 1,
        }
        if any(v != is_tree for v in ones.values()):
            res.fail(g6, "tree-iff-psd-one", f"tree={is_tree} {ones}")
        rep_s = report(g, ClosureRule.SKEW)
        structural = _has_join_partition(g)
        skew_tops = {
            "Z-bar": rep_s.x_upper == n - 2,
            "ZsIR": rep_s.xir_upper == n - 2,
        }
        if any(v != structural for v in skew_tops.values()):
            res.fail(g6, "skew-n-2-join", f"partition={structural} {skew_tops}")
    return res.finish()


def suite_bounds(max_n: int = 6) -> SuiteResult:
    """Domination-flavored bounds on the upper irredundance numbers."""
    res = SuiteResult("bounds")
    for g in nonisomorphic_graphs_up_to(max_n):
        if any(a == 0 for a in g.adj):
            continue
        res.graphs_checked += 1
        g6 = to_graph6(g)
        n = g.n
        size = 1 << n
        gamma = min(
            s.bit_count() for s in range(size) if closed_nbhd_set(g, s) == g.full_mask
        )
        zir = report(g, ClosureRule.STANDARD).xir_upper
        rep_p = report(g, ClosureRule.PSD)
        rep_s = report(g, ClosureRule.SKEW)
        vcir_up = report(g, ClosureRule.VERTEX_COVER).xir_upper
        if n >= 3:
            c2 = aux_domination(g, "connected_2_dom")
            if c2 is not None and not n - c2[0] <= rep_p.xir_upper:
                res.fail(g6, "psd-lower-2dom", f"n-{c2[0]} > {rep_p.xir_upper}")
            t2 = aux_domination(g, "total_2_dom")
            if t2 is not None and not n - t2[0] <= rep_s.xir_upper:
                res.fail(g6, "skew-lower-2dom", f"n-{t2[0]} > {rep_s.xir_upper}")
            if not rep_p.xir_upper <= n - gamma:
                res.fail(g6, "psd-upper-gamma", f"{rep_p.xir_upper} > {n - gamma}")
            if not rep_s.xir_upper <= n - gamma:
                res.fail(g6, "skew-upper-gamma", f"{rep_s.xir_upper} > {n - gamma}")
        if not n - gamma <= vcir_up:
            res.fail(g6, "vcir-lower-gamma", f"{n - gamma} > {vcir_up}")
        if (vcir_up == n - 1) != (gamma == 1):
            res.fail(g6, "vcir-n-1-iff-gamma-1", f"VCIR={vcir_up} gamma={gamma}")
        if vcir_up < math.ceil(n / 2):
            res.fail(g6, "vcir-half", f"VCIR={vcir_up}")
        if n >= 2 and not (
            zir <= vcir_up and rep_p.xir_upper <= vcir_up and rep_s.xir_upper <= vcir_up
        ):
            res.fail(g6, "vcir-largest",
                     f"ZIR={zir} ZpIR={rep_p.xir_upper} ZsIR={rep_s.xir_upper} VCIR={vcir_up}")
        if rep_p.xir_upper > zir or rep_s.xir_upper > zir:
            res.fail(g6, "zir-dominates", f"{rep_p.xir_upper},{rep_s.xir_upper} > {zir}")
        if min(a.bit_count() for a in g.adj) >= 2 and rep_p.xir < 2:
            res.fail(g6, "delta2-zpir", f"zpir={rep_p.xir}")
    return res.finish()


_TREE_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def suite_trees(max_n: int = 10, exhaustive_n: int = 6) -> SuiteResult:
    """Skew parameters coincide on trees; PSD irredundance is 1.

    Labeled trees up to exhaustive_n, then one representative per
    isomorphism class up to max_n (the properties are isomorphism
    invariant, so class coverage decides every labeled tree).
    """
    if max_n > 10:
        raise OrderBudgetExceeded("tree suite capped at order 10")
    res = SuiteResult("trees")

    def check(t: Graph) -> None:
        res.graphs_checked += 1
        rep_s = report(t, ClosureRule.SKEW)
        if len(set(rep_s.values())) != 1:
            res.fail(to_graph6(t), "tree-skew-equal", f"{rep_s.values()}")
        rep_p = report(t, ClosureRule.PSD)
        if rep_p.xir != 1 or rep_p.xir_upper != 1:
            res.fail(to_graph6(t), "tree-psd-one", f"{rep_p.values()}")

    for n in range(1, min(exhaustive_n, max_n) + 1):
        count = 0
        for t in labeled_trees(n):
            count += 1
            check(t)
        expected = 1 if n <= 2 else n ** (n - 2)
        if count != expected:
            res.fail("", "tree-labeled-count", f"n={n} {count} != {expected}")
    for n in range(min(exhaustive_n, max_n) + 1, max_n + 1):
        reps = nonisomorphic_trees(n)
        if len(reps) != _TREE_CLASS_COUNTS[n]:
            res.fail("", "tree-class-count", f"n={n} {len(reps)} != {_TREE_CLASS_COUNTS[n]}")
        for t in reps:
            check(t)
    return res.finish()


def suite_tar_structure(max_n: int = 5) -> SuiteResult:
    """TAR graphs are induced hypercube subgraphs; alpha/DIR/VCIR TARs nest."""
    res = SuiteResult("tar-structure")
    for g in labeled_graphs_up_to(max_n):
        if any(a == 0 for a in g.adj):
            continue
        res.graphs_checked += 1
        g6 = to_graph6(g)
        for rule in ALL_RULES:
            for kind in (KIND_X_SETS, KIND_XIR_SETS):
                t = build_tar(g, kind, rule)
                nodes = t.nodes
                want = {
                    (i, j)
                    for i in range(len(nodes))
                    for j in range(i + 1, len(nodes))
                    if (nodes[i] ^ nodes[j]).bit_count() == 1
                }
                if set(t.edges) != want:
                    res.fail(g6, f"tar-hypercube:{rule.value}:{kind}", "")
        alpha_nodes = set(independence_tar(g).nodes)
        dir_nodes = set(build_tar(g, KIND_XIR_SETS, ClosureRule.DOMINATION).nodes)
        vc_nodes = set(build_tar(g, KIND_XIR_SETS, ClosureRule.VERTEX_COVER).nodes)
        if not alpha_nodes <= dir_nodes:
            res.fail(g6, "tar-nesting:alpha-dir", "")
        if not dir_nodes <= vc_nodes:
            res.fail(g6, "tar-nesting:dir-vcir", "")
    return res.finish()


def _xir_family(g: Graph, rule: ClosureRule) -> frozenset[int]:
    red = reduced_family(rule, g)
    table = xir_membership_table(g.n, red.members)
    return frozenset(s for s in range(1 << g.n) if table[s])


def suite_tar_isomorphism(max_n: int = 5) -> SuiteResult:
    """Isomorphic XIr-TAR graphs come from bases with identical XIr families."""
    res = SuiteResult("tar-isomorphism")
    params = (ClosureRule.STANDARD, ClosureRule.PSD, ClosureRule.VERTEX_COVER)
    bases = [
        g for g in nonisomorphic_graphs_up_to(max_n)
        if g.n >= 2 and is_connected(g)
    ]
    res.graphs_checked = len(bases)
    for rule in params:
        tars = [build_tar(g, KIND_XIR_SETS, rule) for g in bases]
        fams = [_xir_family(g, rule) for g in bases]
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                if tar_isomorphic(tars[i], tars[j]) is None:
                    continue
                gi, gj = bases[i], bases[j]
                if gi.n != gj.n:
                    res.fail(to_graph6(gi), f"tar-iso-order:{rule.value}",
                             f"vs {to_graph6(gj)}")
                    continue
                found = any(
                    frozenset(permute_mask(s, perm) for s in fams[i]) == fams[j]
                    for perm in all_permutations(gi.n)
                )
                if not found:
                    res.fail(to_graph6(gi), f"tar-iso-family:{rule.value}",
                             f"vs {to_graph6(gj)}")
    return res.finish()


def suite_open_questions(max_n: int = 7) -> SuiteResult:
    """Computational status of the open questions; failures are findings, not bugs."""
    res = SuiteResult("open-questions")
    for g in nonisomorphic_graphs_up_to(max_n):
        res.graphs_checked += 1
        delta = min(a.bit_count() for a in g.adj)
        zpir = report(g, ClosureRule.PSD).xir
        if delta > zpir:
            res.fail(to_graph6(g), "delta-le-zpir", f"delta={delta} zpir={zpir}")
    return res.finish()


# -- table fixtures ----------------------------------------------------------

KPQ_PAIRS = ((1, 2), (1, 5), (2, 2), (2, 3), (3, 4), (4, 5), (5, 6))


def _path_table(n: int) -> dict[ClosureRule, tuple[int, int, int, int]]:
    rows = {}
    if n >= 5:
        rows[ClosureRule.STANDARD] = (1, 1, 2, (n - 1) // 2)
    elif n == 4:
        # published row starts at n=5; these are the enumerated values
        rows[ClosureRule.STANDARD] = (1, 1, 2, 2)
    rows[ClosureRule.PSD] = (1, 1, 1, 1)
    z = 0 if n % 2 == 0 else 1
    rows[ClosureRule.SKEW] = (z, z, z, z)
    # upper entries: ceil(2(n-1)/3); the two-of-every-three pattern over n-1 edges
    u = -(-(2 * (n - 1)) // 3)
    rows[ClosureRule.VERTEX_COVER] = (n // 2, n // 2, u, u)
    return rows


def _cycle_table(n: int) -> dict[ClosureRule, tuple[int, int, int, int]]:
    rows = {
        ClosureRule.STANDARD: (2, 2, 2, n // 2),
        ClosureRule.PSD: (2, 2, 2, 2),
    }
    z = 2 if n % 2 == 0 else 1
    rows[ClosureRule.SKEW] = (z, z, z, z)
    u = -(-(2 * n - 2) // 3)
    rows[ClosureRule.VERTEX_COVER] = (-(-n // 2), -(-n // 2), u, u)
    return rows


def _kpq_table(p: int, q: int) -> dict[ClosureRule, tuple[int, int, int, int]]:
    rows = {ClosureRule.STANDARD: (p, q + p - 2, q + p - 2, q + p - 2)}
    if p == 1:
        rows[ClosureRule.PSD] = (1, 1, 1, 1)
        rows[ClosureRule.VERTEX_COVER] = (1, 1, q, q)
    else:
        rows[ClosureRule.PSD] = (p, p, q, max(q, q + p - 4))
        rows[ClosureRule.VERTEX_COVER] = (p, p, q, q + p - 2)
    s = q + p - 2
    rows[ClosureRule.SKEW] = (s, s, s, s)
    return rows


def verify_family_tables(max_n: int = 11) -> SuiteResult:
    """Closed-form parameter values for paths, cycles, K_{p,q}, K_n, empty graphs."""
    if max_n > 12:
        raise OrderBudgetExceeded("table suite capped at order 12")
    res = SuiteResult("tables")

    def check(g: Graph, name: str, rows) -> None:
        res.graphs_checked += 1
        for rule, want in rows.items():
            got = report(g, rule).values()
            if got != want:
                res.fail(to_graph6(g), f"table:{name}:{rule.value}",
                         f"expected {want} got {got}")

    for n in range(4, min(10, max_n) + 1):
        check(path(n), f"P{n}", _path_table(n))
        check(cycle(n), f"C{n}", _cycle_table(n))
    for p, q in KPQ_PAIRS:
        if p + q <= max_n:
            check(complete_bipartite(p, q), f"K{p},{q}", _kpq_table(p, q))
    for n in range(2, min(8, max_n) + 1):
        kn_rows = {
            ClosureRule.STANDARD: (n - 1,) * 4,
            ClosureRule.PSD: (n - 1,) * 4,
            ClosureRule.SKEW: (n - 2,) * 4,
            ClosureRule.VERTEX_COVER: (n - 1,) * 4,
        }
        check(complete(n), f"K{n}", kn_rows)
        empty_rows = {
            ClosureRule.STANDARD: (n,) * 4,
            ClosureRule.PSD: (n,) * 4,
            ClosureRule.SKEW: (n,) * 4,
            ClosureRule.VERTEX_COVER: (0,) * 4,
        }
        check(empty(n), f"E{n}", empty_rows)
    return res.finish()


# -- figure fixtures ---------------------------------------------------------

def verify_figures() -> SuiteResult:
    """Re-derive every figure's stated values from the transcribed adjacency."""
    res = SuiteResult("figures")

    def expect(cond: bool, fix_g6: str, prop: str, detail: str = "") -> None:
        if not cond:
            res.fail(fix_g6, prop, detail)

    # fig2: PSD lower irredundance 3, PSD forcing number 4
    L = fixtures.FIG2_L
    res.graphs_checked += 1
    rep = report(L.graph, ClosureRule.PSD)
    expect(rep.xir == 3, L.g6, "fig2:zpir", f"{rep.xir}")
    expect(rep.x == 4, L.g6, "fig2:Z+", f"{rep.x}")
    s = L.mask({2, 3, 6})
    fam = designated_family(ClosureRule.PSD, L.graph)
    expect(is_xir_set(L.graph, fam, s) and s in enumerate_maximal_xir_sets(L.graph, fam),
           L.g6, "fig2:maximal-set")
    for u, fort in ((2, {1, 2, 4, 7}), (3, {1, 3, 4, 7, 8}), (6, {1, 4, 5, 6, 7})):
        fm = L.mask(fort)
        expect(is_connected_psd_fort(L.graph, fm) and fm & s == L.mask({u}),
               L.g6, f"fig2:private:{u}")

    # fig3: PSD forcing 4, upper PSD forcing 5, two stated minimal forcing sets
    B = fixtures.FIG3_BC
    res.graphs_checked += 1
    rep = report(B.graph, ClosureRule.PSD)
    expect(rep.x == 4, B.g6, "fig3:Z+", f"{rep.x}")
    expect(rep.x_upper == 5, B.g6, "fig3:Z+bar", f"{rep.x_upper}")
    for labels in ({1, 2, 5, 11}, {1, 2, 3, 5, 10}):
        m = B.mask(labels)
        minimal = is_x_set(ClosureRule.PSD, B.graph, m) and all(
            not is_x_set(ClosureRule.PSD, B.graph, m ^ (1 << v)) for v in bits(m)
        )
        expect(minimal, B.g6, f"fig3:minimal:{sorted(labels)}")

    # fig4: the ten standard forts; PSD lower 1 < standard lower 2
    T = fixtures.FIG4_TREE
    res.graphs_checked += 1
    forts = enumerate_family(ClosureRule.STANDARD, Provenance.ENUMERATED_FORTS, T.graph)
    want_forts = {
        frozenset(f) for f in (
            {1, 2}, {5, 6}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 5, 6},
            {1, 4, 5, 6}, {2, 4, 5, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6},
            {1, 2, 3, 4, 5, 6},
        )
    }
    expect(T.family_labels(forts.members) == want_forts, T.g6, "fig4:forts")
    expect(report(T.graph, ClosureRule.PSD).xir == 1, T.g6, "fig4:zpir")
    expect(report(T.graph, ClosureRule.STANDARD).xir == 2, T.g6, "fig4:zir")
    chain = domination_chain(T.graph)
    expect(report(T.graph, ClosureRule.VERTEX_COVER).x == 2, T.g6, "fig4:tau")
    expect(chain.lower_alpha == 3, T.g6, "fig4:lower-alpha", f"{chain.lower_alpha}")

    # fig5: eighteen standard forts, eleven connected PSD forts, zpir 3 > zir 2
    G5 = fixtures.FIG5_TRIANGLES
    res.graphs_checked += 1
    forts = enumerate_family(ClosureRule.STANDARD, Provenance.ENUMERATED_FORTS, G5.graph)
    want18 = {
        frozenset(f) for f in (
            {3, 4}, {5, 6}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 4, 5}, {1, 2, 4, 6},
            {1, 3, 5, 6}, {1, 4, 5, 6}, {2, 3, 4, 5}, {2, 3, 4, 6}, {3, 4, 5, 6},
            {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6},
            {1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6},
        )
    }
    expect(G5.family_labels(forts.members) == want18, G5.g6, "fig5:forts",
           f"{len(forts)} forts")
    connected = enumerate_family(
        ClosureRule.PSD, Provenance.CONNECTED_PSD_FORTS, G5.graph
    )
    want11 = {
        frozenset(f) for f in (
            {3, 4}, {5, 6}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 4, 5}, {1, 2, 4, 6},
            {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6},
            {1, 2, 3, 4, 5, 6},
        )
    }
    expect(G5.family_labels(connected.members) == want11, G5.g6, "fig5:psd-forts")
    expect(report(G5.graph, ClosureRule.PSD).xir == 3, G5.g6, "fig5:zpir")
    expect(report(G5.graph, ClosureRule.STANDARD).xir == 2, G5.g6, "fig5:zir")
    std_fam = designated_family(ClosureRule.STANDARD, G5.graph)
    expect(G5.mask({1, 2}) in enumerate_maximal_xir_sets(G5.graph, std_fam),
           G5.g6, "fig5:max-zir-set")

    # fig6: upper skew forcing 1 (three singleton minimal sets), ZsIR 2
    F = fixtures.FIG6_FAN
    res.graphs_checked += 1
    rep = report(F.graph, ClosureRule.SKEW)
    expect(rep.x_upper == 1, F.g6, "fig6:Z-bar", f"{rep.x_upper}")
    expect(rep.xir_upper == 2, F.g6, "fig6:ZsIR", f"{rep.xir_upper}")
    minimal_sets = set()
    for s in range(1 << F.graph.n):
        if is_x_set(ClosureRule.SKEW, F.graph, s) and all(
            not is_x_set(ClosureRule.SKEW, F.graph, s ^ (1 << v)) for v in bits(s)
        ):
            minimal_sets.add(s)
    expect(minimal_sets == {F.mask({0}), F.mask({3}), F.mask({4})},
           F.g6, "fig6:minimal-forcing-sets")
    s12 = F.mask({1, 2})
    skew_fam = designated_family(ClosureRule.SKEW, F.graph)
    expect(is_xir_set(F.graph, skew_fam, s12), F.g6, "fig6:ir-set")
    for u, fort in ((1, {0, 1, 3, 4}), (2, {0, 2, 3, 4})):
        fm = F.mask(fort)
        expect(is_skew_fort(F.graph, fm) and fm & s12 == F.mask({u}),
               F.g6, f"fig6:private:{u}")

    # fig7: fourteen skew forts, lower skew irredundance 2 < skew forcing 3
    G7 = fixtures.FIG7_SKEW
    res.graphs_checked += 1
    skew = enumerate_family(ClosureRule.SKEW, Provenance.ENUMERATED_FORTS, G7.graph)
    want14 = {
        frozenset(f) for f in (
            {1, 2}, {4, 6}, {1, 2, 4, 6}, {0, 1, 3, 4, 5}, {0, 1, 3, 5, 6},
            {0, 2, 3, 4, 5}, {0, 2, 3, 5, 6}, {1, 2, 3, 4, 6},
            {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 5, 6}, {0, 1, 2, 4, 5, 6},
            {0, 1, 3, 4, 5, 6}, {0, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6},
        )
    }
    expect(G7.family_labels(skew.members) == want14, G7.g6, "fig7:skew-forts",
           f"{len(skew)} forts")
    rep = report(G7.graph, ClosureRule.SKEW)
    expect(rep.xir == 2, G7.g6, "fig7:z-ir", f"{rep.xir}")
    expect(rep.x == 3, G7.g6, "fig7:Z-", f"{rep.x}")
    s35 = G7.mask({3, 5})
    expect(s35 in enumerate_maximal_xir_sets(G7.graph, skew), G7.g6, "fig7:max-set")
    private3 = [m for m in skew.members if m & s35 == G7.mask({3})]
    expect(private3 == [G7.mask({1, 2, 3, 4, 6})], G7.g6, "fig7:private-3")
    private5 = [m for m in skew.members if m & s35 == G7.mask({5})]
    expect(private5 == [G7.mask({0, 1, 2, 4, 5, 6})], G7.g6, "fig7:private-5")

    # paw: chain values dir=1 < tau=2 and DIR=2 < VCIR=3
    P = fixtures.PAW
    res.graphs_checked += 1
    chain = domination_chain(P.graph)
    expect(chain.dir == 1, P.g6, "paw:dir", f"{chain.dir}")
    expect(chain.DIR == 2, P.g6, "paw:DIR", f"{chain.DIR}")
    expect(chain.VCIR == 3, P.g6, "paw:VCIR", f"{chain.VCIR}")
    expect(report(P.graph, ClosureRule.VERTEX_COVER).x == 2, P.g6, "paw:tau")
    vc_derived = derived_blocking_family(ClosureRule.VERTEX_COVER, P.graph)
    # the fixed point A = {} also contributes the member V
    want_vc = {
        frozenset(f) for f in (
            {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
            {1, 2, 3, 4},
        )
    }
    expect(P.family_labels(vc_derived.members) == want_vc, P.g6, "paw:BVCphi")
    expect(
        P.family_labels(generators(vc_derived).members)
        == {frozenset(f) for f in ({1, 4}, {2, 3}, {2, 4}, {3, 4})},
        P.g6, "paw:BVCphi-generators",
    )

    # bull: the domination blocking families and their generators
    Bu = fixtures.BULL
    res.graphs_checked += 1
    nbhd = designated_family(ClosureRule.DOMINATION, Bu.graph)
    want_bd = {
        frozenset(f) for f in (
            {1, 2}, {1, 2, 3, 4}, {2, 3, 4}, {2, 3, 4, 5}, {4, 5},
        )
    }
    expect(Bu.family_labels(nbhd.members) == want_bd, Bu.g6, "bull:BD")
    dphi = derived_blocking_family(ClosureRule.DOMINATION, Bu.graph)
    # the fixed point A = {} also contributes the member V
    want_dphi = {
        frozenset(f) for f in (
            {1, 2}, {4, 5}, {2, 3, 4}, {1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 5},
            {1, 2, 3, 4, 5},
        )
    }
    expect(Bu.family_labels(dphi.members) == want_dphi, Bu.g6, "bull:BDphi")
    expect(
        Bu.family_labels(generators(dphi).members)
        == {frozenset(f) for f in ({1, 2}, {4, 5}, {2, 3, 4})},
        Bu.g6, "bull:BDphi-generators",
    )

    # fig1: both TAR graphs of the star K_{1,3} (labels: 1 is the center)
    K13 = star(3)
    res.graphs_checked += 1
    g6 = to_graph6(K13)

    def lab(mask: int) -> frozenset[int]:
        return frozenset(v + 1 for v in bits(mask))

    t_x = build_tar(K13, KIND_X_SETS, ClosureRule.STANDARD)
    want_x_nodes = {
        frozenset(x) for x in (
            {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
            {2, 3}, {2, 4}, {3, 4},
        )
    }
    expect({lab(m) for m in t_x.nodes} == want_x_nodes, g6, "fig1:Z-tar-nodes")
    x_edges = {
        frozenset((lab(t_x.nodes[i]), lab(t_x.nodes[j]))) for i, j in t_x.edges
    }
    want_x_edges = {
        frozenset((frozenset(a), frozenset(b))) for a, b in (
            ({1, 2, 3, 4}, {1, 2, 3}), ({1, 2, 3, 4}, {1, 2, 4}),
            ({1, 2, 3, 4}, {1, 3, 4}), ({1, 2, 3, 4}, {2, 3, 4}),
            ({2, 3, 4}, {2, 3}), ({2, 3, 4}, {2, 4}), ({2, 3, 4}, {3, 4}),
            ({1, 2, 3}, {2, 3}), ({1, 2, 4}, {2, 4}), ({1, 3, 4}, {3, 4}),
        )
    }
    expect(x_edges == want_x_edges, g6, "fig1:Z-tar-edges", f"{len(x_edges)} edges")
    t_ir = build_tar(K13, KIND_XIR_SETS, ClosureRule.STANDARD)
    want_ir_nodes = {
        frozenset(x) for x in (
            set(), {1}, {2}, {3}, {4}, {2, 3}, {2, 4}, {3, 4},
        )
    }
    expect({lab(m) for m in t_ir.nodes} == want_ir_nodes, g6, "fig1:Zir-tar-nodes")
    ir_edges = {
        frozenset((lab(t_ir.nodes[i]), lab(t_ir.nodes[j]))) for i, j in t_ir.edges
    }
    want_ir_edges = {
        frozenset((frozenset(a), frozenset(b))) for a, b in (
            (set(), {1}), (set(), {2}), (set(), {3}), (set(), {4}),
            ({2}, {2, 3}), ({2}, {2, 4}), ({3}, {2, 3}), ({3}, {3, 4}),
            ({4}, {2, 4}), ({4}, {3, 4}),
        )
    }
    expect(ir_edges == want_ir_edges, g6, "fig1:Zir-tar-edges", f"{len(ir_edges)} edges")

    # fig9: nested alpha / DIR / VCIR TAR graphs of K_{2,3}
    K23 = complete_bipartite(2, 3)
    res.graphs_checked += 1
    g6 = to_graph6(K23)
    t_alpha = independence_tar(K23)
    t_dir = build_tar(K23, KIND_XIR_SETS, ClosureRule.DOMINATION)
    t_vc = build_tar(K23, KIND_XIR_SETS, ClosureRule.VERTEX_COVER)
    expect(t_alpha.node_count() == 11, g6, "fig9:alpha-nodes", f"{t_alpha.node_count()}")
    expect(t_dir.node_count() == 17, g6, "fig9:dir-nodes", f"{t_dir.node_count()}")
    expect(t_vc.node_count() == 23, g6, "fig9:vcir-nodes", f"{t_vc.node_count()}")
    a_nodes, d_nodes, v_nodes = set(t_alpha.nodes), set(t_dir.nodes), set(t_vc.nodes)
    expect(a_nodes < d_nodes < v_nodes, g6, "fig9:nesting")
    return res.finish()


# -- registry ----------------------------------------------------------------

# name -> (function, default max_n, hard cap)
_SUITES = {
    "chain": (suite_chain, 5, 6),
    "hitting": (suite_hitting, 5, 6),
    "vcir-eq-tau": (suite_vcir_eq_tau, 6, 6),
    "dom-chain": (suite_dom_chain, 5, 6),
    "closure-laws": (suite_closure_laws, 5, 6),
    "closure-families": (suite_closure_families, 5, 6),
    "minimal-xset-maximal-xir": (suite_minimal_xset, 5, 6),
    "component-additivity": (suite_component_additivity, 8, 8),
    "fort-structure": (suite_fort_structure, 5, 6),
    "characterizations": (suite_characterizations, 6, 7),
    "bounds": (suite_bounds, 6, 7),
    "trees": (suite_trees, 10, 10),
    "tar-structure": (suite_tar_structure, 5, 6),
    "tar-isomorphism": (suite_tar_isomorphism, 5, 6),
    "open-questions": (suite_open_questions, 7, 7),
    "tables": (verify_family_tables, 11, 12),
    "figures": (lambda max_n: verify_figures(), 0, 64),
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    """Run one named suite; max_n defaults per suite and is capped per suite."""
    entry = _SUITES.get(name)
    if entry is None:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    fn, default_n, cap = entry
    n = default_n if max_n is None else max_n
    if n > cap:
        raise OrderBudgetExceeded(f"suite {name} capped at max_n={cap}")
    return fn(n)
