"""Irredundance over blocking families: private sets, XIr-sets, parameter reports.

A vertex u of S is irredundant when some family member R intersects S in
exactly {u} (a private blocking set); S is an XIr-set when every element
has one.  XIr-sets form a downward-closed family, so maximality under
inclusion equals one-step maximality and the reports scan all subsets once.

For the three forcing rules the 2^n scans run against the union-closed
generators of the fort family, which leaves every reported number unchanged
(hitting and irredundance are invariant under that reduction) while keeping
dense graphs tractable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocking import (
    DEFAULT_BUDGET,
    BlockingFamily,
    Provenance,
    designated_family,
    enumerate_family,
)
from .closures import ClosureRule, generators
from .errors import ExchangeStuck, NotAVcirSet, OrderBudgetExceeded, VertexNotInSet
from .graphs import Graph, bits, closed_nbhd_set, component_of, to_graph6, vertex_list


def private_set(g: Graph, family: BlockingFamily, s: int, u: int) -> int | None:
    """Lowest-bitmask family member R with S intersect R = {u}, or None."""
    if not s >> u & 1:
        raise VertexNotInSet(f"vertex {u} not in S")
    bit = 1 << u
    for m in family.members:
        if m & s == bit:
            return m
    return None


def is_xir_set(g: Graph, family: BlockingFamily, s: int) -> bool:
    """Every element of s has a private blocking set (vacuously true for the empty set)."""
    members = family.members
    for u in bits(s):
        bit = 1 << u
        if not any(m & s == bit for m in members):
            return False
    return True


def is_maximal_xir_set(g: Graph, family: BlockingFamily, s: int) -> bool:
    """XIr-set with no single-vertex extension; sufficient since XIr-sets are downward closed."""
    if not is_xir_set(g, family, s):
        return False
    rest = g.full_mask & ~s
    return all(not is_xir_set(g, family, s | (1 << v)) for v in bits(rest))


def xir_membership_table(n: int, members: tuple[int, ...]) -> bytearray:
    """table[s] = 1 iff s is an XIr-set for the member list, for every mask s."""
    table = bytearray(1 << n)
    for s in range(1 << n):
        covered = 0
        for m in members:
            x = m & s
            if x and x & (x - 1) == 0:
                covered |= x
                if covered == s:
                    break
        table[s] = covered == s
    return table


def _maximal_from_table(n: int, table: bytearray) -> list[int]:
    out = []
    for s in range(1 << n):
        if not table[s]:
            continue
        if all(not table[s | (1 << v)] for v in range(n) if not s >> v & 1):
            out.append(s)
    return out


def enumerate_maximal_xir_sets(
    g: Graph, family: BlockingFamily, budget_n: int = DEFAULT_BUDGET
) -> list[int]:
    """All maximal XIr-sets for the family, complete by 2^n scan, ascending masks."""
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    table = xir_membership_table(g.n, family.members)
    return _maximal_from_table(g.n, table)


def reduced_family(
    parameter: ClosureRule, g: Graph, budget_n: int = DEFAULT_BUDGET
) -> BlockingFamily:
    """Family with the same hitting sets and XIr-sets as the designated one.

    Forcing rules: generators of the full (union-closed) fort family.
    Domination and vertex cover keep their small designated families.
    """
    if parameter in (ClosureRule.DOMINATION, ClosureRule.VERTEX_COVER):
        return designated_family(parameter, g, budget_n)
    fam = enumerate_family(parameter, Provenance.ENUMERATED_FORTS, g, budget_n)
    return generators(fam)


@dataclass(frozen=True)
class ParameterReport:
    """The four-number chain for one graph and one parameter, with witnesses.

    xir <= x <= x_upper <= xir_upper always holds (all four are 0 exactly
    when the empty set is already an X-set, e.g. skew forcing on an even
    path).  Witness masks satisfy their defining predicates; ties are
    broken by lowest bitmask.
    """

    graph_g6: str
    parameter: ClosureRule
    n: int
    xir: int
    x: int
    x_upper: int
    xir_upper: int
    witnesses: dict = field(compare=False)

    def values(self) -> tuple[int, int, int, int]:
        return (self.xir, self.x, self.x_upper, self.xir_upper)

    def to_json_dict(self) -> dict:
        return {
            "graph_g6": self.graph_g6,
            "parameter": self.parameter.value,
            "n": self.n,
            "xir": self.xir,
            "x": self.x,
            "x_upper": self.x_upper,
            "xir_upper": self.xir_upper,
            "witnesses": {k: vertex_list(v) for k, v in self.witnesses.items()},
        }


def _best_min(cands: list[int]) -> int:
    # lowest popcount, then lowest mask
    return min(cands, key=lambda s: (s.bit_count(), s))


def _best_max(cands: list[int]) -> int:
    # highest popcount, then lowest mask
    return min(cands, key=lambda s: (-s.bit_count(), s))


def report(g: Graph, parameter: ClosureRule, budget_n: int = DEFAULT_BUDGET) -> ParameterReport:
    """Compute (xir, X, X-upper, XIR) with witnesses for one parameter.

    X-sets are recognized as the hitting sets of the complete blocking
    family (the hitting theorems); X-upper scans minimal hitting sets via
    single-deletion tests, valid because X-sets are upward closed.
    """
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    red = reduced_family(parameter, g, budget_n)
    members = red.members
    n = g.n
    size = 1 << n

    hits = bytearray(size)
    for s in range(size):
        ok = True
        for m in members:
            if not m & s:
                ok = False
                break
        hits[s] = ok

    x_sets = [s for s in range(size) if hits[s]]
    x_wit = _best_min(x_sets)
    minimal_x = [
        s for s in x_sets if all(not hits[s ^ (1 << v)] for v in bits(s))
    ]
    x_upper_wit = _best_max(minimal_x)

    table = xir_membership_table(n, members)
    maximal = _maximal_from_table(n, table)
    xir_wit = _best_min(maximal)
    xir_upper_wit = _best_max(maximal)

    rep = ParameterReport(
        graph_g6=to_graph6(g),
        parameter=parameter,
        n=n,
        xir=xir_wit.bit_count(),
        x=x_wit.bit_count(),
        x_upper=x_upper_wit.bit_count(),
        xir_upper=xir_upper_wit.bit_count(),
        witnesses={
            "xir": xir_wit,
            "x": x_wit,
            "x_upper": x_upper_wit,
            "xir_upper": xir_upper_wit,
        },
    )
    assert rep.xir <= rep.x <= rep.x_upper <= rep.xir_upper
    return rep


def _independent(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def _dominating(g: Graph, s: int) -> bool:
    return closed_nbhd_set(g, s) == g.full_mask


@dataclass(frozen=True)
class ChainReport:
    """Domination Chain quantities plus the vertex-cover irredundance cap.

    dir <= gamma <= lower_alpha <= alpha <= gamma_upper <= DIR <= VCIR holds
    on graphs with no isolated vertices; has_isolated flags the exception.
    """

    graph_g6: str
    n: int
    dir: int
    gamma: int
    lower_alpha: int
    alpha: int
    gamma_upper: int
    DIR: int
    VCIR: int
    has_isolated: bool
    witnesses: dict = field(compare=False)

    def to_json_dict(self) -> dict:
        return {
            "graph_g6": self.graph_g6,
            "n": self.n,
            "dir": self.dir,
            "gamma": self.gamma,
            "lower_alpha": self.lower_alpha,
            "alpha": self.alpha,
            "gamma_upper": self.gamma_upper,
            "DIR": self.DIR,
            "VCIR": self.VCIR,
            "has_isolated": self.has_isolated,
            "witnesses": {k: vertex_list(v) for k, v in self.witnesses.items()},
        }


def domination_chain(g: Graph, budget_n: int = DEFAULT_BUDGET) -> ChainReport:
    """Compute the Extended Domination Chain quantities with witnesses."""
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    n = g.n
    size = 1 << n

    dominating = [s for s in range(size) if _dominating(g, s)]
    gamma_wit = _best_min(dominating)
    dom_set = set(dominating)
    minimal_dom = [
        s for s in dominating
        if all(s ^ (1 << v) not in dom_set for v in bits(s))
    ]
    gamma_upper_wit = _best_max(minimal_dom)

    independent = [s for s in range(size) if _independent(g, s)]
    alpha_wit = _best_max(independent)
    maximal_ind = [
        s for s in independent
        if all(g.adj[v] & s for v in bits(g.full_mask & ~s))
    ]
    lower_alpha_wit = _best_min(maximal_ind)

    nbhd = designated_family(ClosureRule.DOMINATION, g, budget_n)
    dir_maximal = enumerate_maximal_xir_sets(g, nbhd, budget_n)
    dir_wit = _best_min(dir_maximal)
    dir_upper_wit = _best_max(dir_maximal)

    edges_fam = designated_family(ClosureRule.VERTEX_COVER, g, budget_n)
    vc_maximal = enumerate_maximal_xir_sets(g, edges_fam, budget_n)
    vcir_upper_wit = _best_max(vc_maximal)

    return ChainReport(
        graph_g6=to_graph6(g),
        n=n,
        dir=dir_wit.bit_count(),
        gamma=gamma_wit.bit_count(),
        lower_alpha=lower_alpha_wit.bit_count(),
        alpha=alpha_wit.bit_count(),
        gamma_upper=gamma_upper_wit.bit_count(),
        DIR=dir_upper_wit.bit_count(),
        VCIR=vcir_upper_wit.bit_count(),
        has_isolated=any(a == 0 for a in g.adj),
        witnesses={
            "dir": dir_wit,
            "gamma": gamma_wit,
            "lower_alpha": lower_alpha_wit,
            "alpha": alpha_wit,
            "gamma_upper": gamma_upper_wit,
            "DIR": dir_upper_wit,
            "VCIR": vcir_upper_wit,
        },
    )


def aux_domination(
    g: Graph, kind: str, budget_n: int = DEFAULT_BUDGET
) -> tuple[int, int] | None:
    """Minimum connected 2-dominating or total 2-dominating set, or None.

    Returns (size, witness mask).  Either kind may not exist: a connected
    2-dominating set needs a connected graph, a total one needs every
    vertex to see two set members.
    """
    if kind not in ("connected_2_dom", "total_2_dom"):
        raise ValueError(f"unknown kind {kind!r}")
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    adj = g.adj
    n = g.n

    def feasible(d: int) -> bool:
        if kind == "connected_2_dom":
            v = (d & -d).bit_length() - 1
            if component_of(g, v, d) != d:
                return False
            for u in bits(g.full_mask & ~d):
                if (adj[u] & d).bit_count() < 2:
                    return False
            return True
        return all((adj[u] & d).bit_count() >= 2 for u in range(n))

    best = None
    for d in range(1, 1 << n):
        if best is not None and d.bit_count() >= best[0]:
            continue
        if feasible(d):
            if best is None or (d.bit_count(), d) < best:
                best = (d.bit_count(), d)
    return best


def _exchange_to_cover(g: Graph, s: int, edge_masks: tuple[int, ...]) -> int | None:
    """Search the private-edge exchange moves for a path from s to a vertex cover.

    A move picks an endpoint x of an uncovered edge and the neighbor z in the
    current set whose unique private edge is zx, then swaps z for x; the swap
    covers the edge and uncovers nothing.  A greedy single pass can dead-end
    (a swap may hand other vertices extra private edges and destroy later
    swaps), so all allowed moves are explored.  Returns None when every path
    dead-ends, which does happen: each triangle of the triangular prism is a
    minimum maximal VC-irredundant set with no exchange path to a cover.
    """
    edges_at: list[list[int]] = [[] for _ in range(g.n)]
    for e in edge_masks:
        for v in bits(e):
            edges_at[v].append(e)
    seen: set[int] = set()

    def dfs(cur: int) -> int | None:
        if all(e & cur for e in edge_masks):
            return cur
        if cur in seen:
            return None
        seen.add(cur)
        for e in edge_masks:
            if e & cur:
                continue
            for x in bits(e):
                xbit = 1 << x
                for z in bits(g.adj[x] & cur):
                    zbit = 1 << z
                    if [f for f in edges_at[z] if f & cur == zbit] == [zbit | xbit]:
                        got = dfs((cur | xbit) & ~zbit)
                        if got is not None:
                            return got
        return None

    return dfs(s)


def vcir_to_cover(g: Graph, s: int, budget_n: int = DEFAULT_BUDGET) -> int:
    """Exchange a minimum maximal VC-irredundant set into an equal-size vertex cover.

    Raises ExchangeStuck when no exchange sequence reaches a cover; such
    inputs exist (triangular prism), where the minimum maximal
    VC-irredundant size is in fact strictly below the cover number.
    """
    edges_fam = designated_family(ClosureRule.VERTEX_COVER, g, budget_n)
    maximal = enumerate_maximal_xir_sets(g, edges_fam, budget_n)
    if s not in maximal:
        raise NotAVcirSet("not a maximal VC-irredundant set")
    vcir = min(m.bit_count() for m in maximal)
    if s.bit_count() != vcir:
        raise NotAVcirSet("not of minimum size among maximal VC-irredundant sets")
    cur = _exchange_to_cover(g, s, edges_fam.members)
    if cur is None:
        raise ExchangeStuck(f"no exchange path from {s:#x} reaches a vertex cover")
    assert all(e & cur for e in edges_fam.members)
    assert cur.bit_count() == s.bit_count()
    return cur
