"""Bitmask graph core: construction, named families, graph6 I/O, structure queries.

Graphs are simple, undirected, order 1..64.  Vertex subsets are plain ints
used as bitmasks (bit v set means vertex v is in the set), which keeps the
exponential subset loops of the enumeration layers branch-light.  All values
are immutable after construction; every function here is pure.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyInducedSet,
    EndpointOutOfRange,
    InvalidFamilyParams,
    MalformedGraph6,
    OrderOutOfRange,
    SelfLoop,
)

MAX_ORDER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(vertices: Iterable[int]) -> int:
    """Bitmask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_list(mask: int) -> list[int]:
    """Ascending list of the vertices in a mask."""
    return list(bits(mask))


class Graph:
    """Simple undirected graph with per-vertex neighborhood bitmasks.

    adj[v] is the open neighborhood N(v) as a mask; never contains v, and
    u in adj[v] iff v in adj[u].  Treated as immutable.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 1 <= n <= MAX_ORDER:
            raise OrderOutOfRange(f"order {n} not in 1..{MAX_ORDER}")
        self.n = n
        self.adj = tuple(adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for k in bits(rest):
                out.append((u, u + 1 + k))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edge_masks(self) -> list[int]:
        """Each edge as a 2-bit mask, ascending."""
        return sorted((1 << u) | (1 << v) for u, v in self.edges())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an order and an iterable of unordered vertex pairs."""
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order {n} not in 1..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) on {n} vertices")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# -- named families ----------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("path needs n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParams("cycle needs n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("complete needs n >= 1")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("empty needs n >= 1")
    return build(n, [])


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with partite sets {0..p-1} and {p..p+q-1}."""
    if not 1 <= p <= q:
        raise InvalidFamilyParams("complete_bipartite needs 1 <= p <= q")
    return build(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K_{n_1,...,n_t} with consecutive partite sets in the given order."""
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidFamilyParams("multipartite needs nonempty positive part sizes")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            edges.extend(
                (i, j)
                for i in range(starts[a], starts[a + 1])
                for j in range(starts[b], starts[b + 1])
            )
    return build(starts[-1], edges)


def star(q: int) -> Graph:
    """K_{1,q}: center 0, leaves 1..q."""
    return complete_bipartite(1, q)


def comb(r: int) -> Graph:
    """The comb P_r o K_1: spine 0..r-1 in path order, leaf i+r pendant on i."""
    if r < 1:
        raise InvalidFamilyParams("comb needs r >= 1")
    edges = [(i, i + 1) for i in range(r - 1)] + [(i, i + r) for i in range(r)]
    return build(2 * r, edges)


_FAMILY_KINDS = {
    "path": lambda p: path(p[0]),
    "cycle": lambda p: cycle(p[0]),
    "complete": lambda p: complete(p[0]),
    "empty": lambda p: empty(p[0]),
    "complete_bipartite": lambda p: complete_bipartite(p[0], p[1]),
    "complete_multipartite": complete_multipartite,
    "star": lambda p: star(p[1]),
    "comb": lambda p: comb(p[0]),
}

_FAMILY_ARITY = {
    "path": 1, "cycle": 1, "complete": 1, "empty": 1,
    "complete_bipartite": 2, "star": 2, "comb": 1,
}


def family(kind: str, params: Sequence[int]) -> Graph:
    """Build a named family graph with the canonical labeling."""
    if kind not in _FAMILY_KINDS:
        raise InvalidFamilyParams(f"unknown family kind {kind!r}")
    arity = _FAMILY_ARITY.get(kind)
    if arity is not None and len(params) != arity:
        raise InvalidFamilyParams(f"{kind} takes {arity} parameter(s), got {list(params)}")
    if kind == "star" and params[0] != 1:
        raise InvalidFamilyParams("star params are (1, q)")
    return _FAMILY_KINDS[kind](list(params))


def join(g: Graph, h: Graph) -> Graph:
    """Join of disjoint graphs: h relabeled to follow g, all cross edges added."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderOutOfRange(f"join order {n} exceeds {MAX_ORDER}")
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return build(n, g.edges() + [(g.n + u, g.n + v) for u, v in h.edges()] + cross)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union: h relabeled to follow g, no cross edges."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderOutOfRange(f"disjoint union order {n} exceeds {MAX_ORDER}")
    return build(n, g.edges() + [(g.n + u, g.n + v) for u, v in h.edges()])


# -- graph6 ------------------------------------------------------------------

def _g6_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: upper triangle by column, (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    """Encode in the standard graph6 format (6-bit chunks, offset 63)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    bits_out = []
    for i, j in _g6_pairs(n):
        bits_out.append(1 if g.has_edge(i, j) else 0)
    while len(bits_out) % 6:
        bits_out.append(0)
    chunks = []
    for k in range(0, len(bits_out), 6):
        val = 0
        for b in bits_out[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return head + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; strict about length, padding, and order range."""
    s = text.strip()
    if not s:
        raise MalformedGraph6("empty input")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6("byte outside graph6 range")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise MalformedGraph6("8-byte order encoding exceeds supported range")
        if len(s) < 4:
            raise MalformedGraph6("truncated order field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"graph6 order {n} not in 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} body bytes, got {len(body)}")
    bitstream = []
    for c in body:
        val = ord(c) - 63
        bitstream.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bitstream[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = [pair for pair, b in zip(_g6_pairs(n), bitstream) if b]
    return build(n, edges)


# -- structure queries -------------------------------------------------------

def closed_nbhd(g: Graph, v: int) -> int:
    """N[v] as a mask."""
    return g.adj[v] | (1 << v)


def closed_nbhd_set(g: Graph, s: int) -> int:
    """N[S]: union of closed neighborhoods over the mask s."""
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def min_degree(g: Graph) -> int:
    return min(a.bit_count() for a in g.adj)


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    """Mask of the component containing v, optionally inside the induced mask."""
    allowed = g.full_mask if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= g.adj[u] & allowed
        frontier = grow & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Component masks, ordered by minimum vertex; restricted to `within` if given."""
    remaining = g.full_mask if within is None else within
    out = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = component_of(g, v, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.full_mask


def induced(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on mask s, relabeled ascending; returns (graph, new->old map)."""
    if s == 0:
        raise EmptyInducedSet("induced subgraph needs a nonempty vertex set")
    old = vertex_list(s)
    index = {v: i for i, v in enumerate(old)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if (s >> u & 1) and (s >> v & 1)
    ]
    return build(len(old), edges), tuple(old)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in lexicographic edge-mask order."""
    if not 1 <= n <= 6:
        raise OrderOutOfRange("all_labeled_graphs supports n in 1..6")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, adj)


def _nbr_degree_multiset(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted(g.degree(u) for u in bits(g.adj[v])))


def isomorphism(g: Graph, h: Graph, max_order: int = 10) -> tuple[int, ...] | None:
    """Adjacency-preserving bijection g -> h, or None.

    Brute-force search pruned by degree sequence and neighbor-degree
    multisets; intended for small graphs only.
    """
    if g.n > max_order or h.n > max_order:
        raise OrderOutOfRange(f"isomorphism capped at order {max_order}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    n = g.n
    sig_g = [(g.degree(v), _nbr_degree_multiset(g, v)) for v in range(n)]
    sig_h = [(h.degree(v), _nbr_degree_multiset(h, v)) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    candidates = [
        [w for w in range(n) if sig_h[w] == sig_g[v]] for v in range(n)
    ]
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    return build(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    """Image of a vertex mask under a relabeling."""
    out = 0
    for v in bits(mask):
        out |= 1 << perm[v]
    return out


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(n))
