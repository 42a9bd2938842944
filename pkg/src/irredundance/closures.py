"""The five closure operators and the blocking families they derive.

Each rule is a total map on vertex subsets that is extensive, monotone, and
idempotent, and characterizes its parameter: a set is an X-set exactly when
its closure is all of V.  The three forcing rules iterate a color change
rule to a fixed point; domination and vertex cover close in a single
formula application.
"""

from __future__ import annotations

from enum import Enum

from .errors import NotUnionClosed, OrderBudgetExceeded
from .graphs import Graph, bits, closed_nbhd, closed_nbhd_set, components


class ClosureRule(str, Enum):
    STANDARD = "standard"
    PSD = "psd"
    SKEW = "skew"
    DOMINATION = "domination"
    VERTEX_COVER = "vertex_cover"


def _close_standard(g: Graph, s: int) -> int:
    # blue u with exactly one white neighbor colors it; lowest-index force first
    blue = s
    full = g.full_mask
    adj = g.adj
    changed = True
    while changed and blue != full:
        changed = False
        white = full & ~blue
        for u in bits(blue):
            w = adj[u] & white
            if w and w & (w - 1) == 0:
                blue |= w
                changed = True
                break
    return blue


def _close_psd(g: Graph, s: int) -> int:
    # components of G - blue are recomputed after every force
    blue = s
    full = g.full_mask
    adj = g.adj
    changed = True
    while changed and blue != full:
        changed = False
        for comp in components(g, within=full & ~blue):
            for u in bits(blue):
                w = adj[u] & comp
                if w and w & (w - 1) == 0:
                    blue |= w
                    changed = True
                    break
            if changed:
                break
    return blue


def _close_skew(g: Graph, s: int) -> int:
    # any vertex, blue or white, with exactly one white neighbor forces it
    blue = s
    full = g.full_mask
    adj = g.adj
    changed = True
    while changed and blue != full:
        changed = False
        white = full & ~blue
        for u in range(g.n):
            w = adj[u] & white
            if w and w & (w - 1) == 0:
                blue |= w
                changed = True
                break
    return blue


def _close_domination(g: Graph, s: int) -> int:
    # single application: {v : N[v] subseteq N[A]}; idempotent
    dominated = closed_nbhd_set(g, s)
    out = 0
    for v in range(g.n):
        if closed_nbhd(g, v) & ~dominated == 0:
            out |= 1 << v
    return out


def _close_vertex_cover(g: Graph, s: int) -> int:
    # single application: A plus vertices whose whole open neighborhood lies in A
    out = s
    for v in range(g.n):
        if g.adj[v] & ~s == 0:
            out |= 1 << v
    return out


_CLOSERS = {
    ClosureRule.STANDARD: _close_standard,
    ClosureRule.PSD: _close_psd,
    ClosureRule.SKEW: _close_skew,
    ClosureRule.DOMINATION: _close_domination,
    ClosureRule.VERTEX_COVER: _close_vertex_cover,
}


def close(rule: ClosureRule, g: Graph, s: int) -> int:
    """Closure of the vertex mask s under the given rule."""
    return _CLOSERS[rule](g, s)


def is_x_set(rule: ClosureRule, g: Graph, s: int) -> bool:
    """X-compliance: s is an X-set iff its closure is all of V."""
    return close(rule, g, s) == g.full_mask


def derived_blocking_family(
    rule: ClosureRule, g: Graph, budget_n: int = 16
) -> "BlockingFamily":
    """All nonempty V \\ A where A is a closure fixed point that is not an X-set.

    Plain 2^n scan over fixed points; the budget guard replaces cleverness.
    Each member R determines its fixed-point complement as V \\ R.
    """
    from .blocking import BlockingFamily, Provenance

    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    full = g.full_mask
    members = []
    for a in range(1 << g.n):
        if close(rule, g, a) == a and a != full:
            members.append(full ^ a)
    return BlockingFamily(rule, Provenance.CLOSURE_DERIVED, g.n, tuple(members))


def is_union_closed(members: tuple[int, ...]) -> bool:
    """True iff the union of any two members is again a member."""
    have = set(members)
    return all(
        (a | b) in have for i, a in enumerate(members) for b in members[i:]
    )


def generators(family: "BlockingFamily", strict: bool = False) -> "BlockingFamily":
    """Members not expressible as the union of two proper-subset members.

    A set trivially equals its union with any of its subsets, so both parts
    of a decomposition must be proper.  With strict=True the family must be
    union-closed (the situation where generators determine the family).
    """
    from .blocking import BlockingFamily, Provenance

    members = family.members
    if strict and not is_union_closed(members):
        raise NotUnionClosed("family is not union-closed")
    decomposable = set()
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            u = a | b
            if u != a and u != b:
                decomposable.add(u)
    keep = tuple(m for m in members if m not in decomposable)
    return BlockingFamily(family.parameter, Provenance.GENERATORS, family.n, keep)
