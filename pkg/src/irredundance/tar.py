"""Token addition/removal reconfiguration graphs over X-sets or XIr-sets.

Nodes are the qualifying vertex subsets of a base graph; two nodes are
adjacent exactly when their symmetric difference is a single vertex, so
every TAR graph is an induced subgraph of the n-dimensional hypercube.
The XIr-set TAR includes the whole downward-closed family (the empty set
and all singletons that qualify), matching how these graphs are drawn.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocking import DEFAULT_BUDGET
from .closures import ClosureRule
from .errors import BudgetExceeded, OrderBudgetExceeded
from .graphs import Graph, to_graph6, vertex_list
from .irredundance import reduced_family, xir_membership_table

KIND_X_SETS = "x_sets"
KIND_XIR_SETS = "xir_sets"


@dataclass(frozen=True)
class TarGraph:
    """Reconfiguration graph: nodes are masks, edges are index pairs (i < j)."""

    base_g6: str
    kind: str
    parameter: ClosureRule | None
    n_base: int
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def node_count(self) -> int:
        return len(self.nodes)

    def edge_count(self) -> int:
        return len(self.edges)

    def degree_multiset(self) -> tuple[int, ...]:
        deg = [0] * len(self.nodes)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(sorted(deg))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.nodes]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_json_dict(self) -> dict:
        return {
            "base_g6": self.base_g6,
            "kind": self.kind,
            "parameter": self.parameter.value if self.parameter else None,
            "n_base": self.n_base,
            "nodes": [vertex_list(m) for m in self.nodes],
            "edges": [list(e) for e in self.edges],
        }


def tar_from_sets(
    g: Graph, masks: list[int], kind: str, parameter: ClosureRule | None = None
) -> TarGraph:
    """TAR graph over an explicit node family (sorted, symmetric-difference-1 edges)."""
    nodes = tuple(sorted(set(masks)))
    edges = []
    for i, a in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            if (a ^ nodes[j]).bit_count() == 1:
                edges.append((i, j))
    return TarGraph(
        base_g6=to_graph6(g),
        kind=kind,
        parameter=parameter,
        n_base=g.n,
        nodes=nodes,
        edges=tuple(edges),
    )


def build_tar(
    g: Graph, kind: str, parameter: ClosureRule, budget_n: int = DEFAULT_BUDGET
) -> TarGraph:
    """TAR graph over all X-sets or all XIr-sets of the parameter."""
    if kind not in (KIND_X_SETS, KIND_XIR_SETS):
        raise ValueError(f"unknown TAR kind {kind!r}")
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} node scan exceeds budget n <= {budget_n}")
    red = reduced_family(parameter, g, budget_n)
    members = red.members
    if kind == KIND_X_SETS:
        masks = [
            s for s in range(1 << g.n) if all(m & s for m in members)
        ]
    else:
        table = xir_membership_table(g.n, members)
        masks = [s for s in range(1 << g.n) if table[s]]
    return tar_from_sets(g, masks, kind, parameter)


def independence_tar(g: Graph) -> TarGraph:
    """TAR graph over the independent sets of the base graph."""
    masks = [
        s
        for s in range(1 << g.n)
        if all(not g.adj[v] & s for v in vertex_list(s))
    ]
    return tar_from_sets(g, masks, "independent_sets")


def export_dot(t: TarGraph) -> str:
    """Deterministic DOT text; node labels are sorted vertex lists."""
    lines = ["graph tar {"]
    for i, m in enumerate(t.nodes):
        label = "{" + ",".join(str(v) for v in vertex_list(m)) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in t.edges:
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _eccentricities(adjacency: list[set[int]]) -> list[int]:
    n = len(adjacency)
    ecc = [0] * n
    for start in range(n):
        dist = {start: 0}
        frontier = [start]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in adjacency[u]:
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        ecc[start] = max(dist.values()) if len(dist) == n else n  # n flags disconnection
    return ecc


def _refine_colors(adjacency: list[set[int]], initial: list) -> list[int]:
    # iterative refinement by neighbor color multisets, to stability
    palette: dict = {}
    colors = []
    for c in initial:
        colors.append(palette.setdefault(c, len(palette)))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(len(adjacency))
        ]
        palette = {}
        new = [palette.setdefault(k, len(palette)) for k in keys]
        if new == colors:
            return colors
        colors = new


def tar_isomorphic(
    t1: TarGraph, t2: TarGraph, max_nodes: int = 64
) -> tuple[int, ...] | None:
    """Adjacency-preserving bijection between TAR node sets, or None.

    Degree/eccentricity classes are refined by neighbor-class multisets
    before a backtracking search; budget-guarded since TAR graphs grow
    as 2^n in the base order.
    """
    m = t1.node_count()
    if m > max_nodes or t2.node_count() > max_nodes:
        raise BudgetExceeded(f"TAR isomorphism capped at {max_nodes} nodes")
    if m != t2.node_count() or t1.edge_count() != t2.edge_count():
        return None
    if t1.degree_multiset() != t2.degree_multiset():
        return None
    a1, a2 = t1.adjacency(), t2.adjacency()
    e1, e2 = _eccentricities(a1), _eccentricities(a2)
    init1 = [(len(a1[v]), e1[v]) for v in range(m)]
    init2 = [(len(a2[v]), e2[v]) for v in range(m)]
    if sorted(init1) != sorted(init2):
        return None
    c1 = _refine_colors(a1, init1)
    c2 = _refine_colors(a2, init2)

    # refinement palettes are per-graph; (initial key, class size) is the
    # cross-graph class identity candidates must respect
    def class_ids(colors, init):
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        return {v: (init[v], sizes[colors[v]]) for v in range(len(colors))}

    id1 = class_ids(c1, init1)
    id2 = class_ids(c2, init2)
    if sorted(id1.values()) != sorted(id2.values()):
        return None

    order = sorted(range(m), key=lambda v: (id1[v], v))
    candidates = {v: [w for w in range(m) if id2[w] == id1[v]] for v in range(m)}
    mapping = [-1] * m
    used = [False] * m

    def extend(k: int) -> bool:
        if k == m:
            return True
        v = order[k]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for prev in range(k):
                u = order[prev]
                if (u in a1[v]) != (mapping[u] in a2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None
