"""Blocking families defined directly from adjacency: forts, neighborhoods, edges.

A blocking set R is one whose complement fails to be an X-set, so every
X-set must intersect R.  Forts (standard, PSD, skew) are the blocking sets
of the three forcing parameters; closed neighborhoods serve domination and
edges serve vertex cover.  Fort enumeration is a full 2^n subset scan: at
desk scale the scan is cheap and it is the oracle everything else is
judged against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .closures import ClosureRule
from .errors import IncompleteFamily, OrderBudgetExceeded
from .graphs import Graph, bits, closed_nbhd, components, mask_from, vertex_list

DEFAULT_BUDGET = 16


class Provenance(str, Enum):
    ENUMERATED_FORTS = "enumerated_forts"
    CONNECTED_PSD_FORTS = "connected_psd_forts"
    NEIGHBORHOODS = "neighborhoods"
    EDGES = "edges"
    CLOSURE_DERIVED = "closure_derived"
    GENERATORS = "generators"
    MINIMAL_SETS = "minimal_sets"


#: Provenances whose member list is complete for its defining predicate,
#: so subset-minimality within the list is true minimality.
_COMPLETE_PROVENANCES = frozenset({
    Provenance.ENUMERATED_FORTS,
    Provenance.CONNECTED_PSD_FORTS,
    Provenance.NEIGHBORHOODS,
    Provenance.EDGES,
    Provenance.CLOSURE_DERIVED,
})


@dataclass(frozen=True)
class BlockingFamily:
    """A finite list of blocking sets (masks) tagged with parameter and provenance."""

    parameter: ClosureRule
    provenance: Provenance
    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        dedup = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", dedup)
        if any(m == 0 for m in dedup):
            raise ValueError("blocking sets are nonempty")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def member_lists(self) -> list[list[int]]:
        return [vertex_list(m) for m in self.members]

    def to_json_dict(self) -> dict:
        return {
            "parameter": self.parameter.value,
            "provenance": self.provenance.value,
            "n": self.n,
            "members": self.member_lists(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BlockingFamily":
        return cls(
            parameter=ClosureRule(data["parameter"]),
            provenance=Provenance(data["provenance"]),
            n=data["n"],
            members=tuple(mask_from(vs) for vs in data["members"]),
        )


def is_standard_fort(g: Graph, f: int) -> bool:
    """Nonempty f with no outside vertex having exactly one neighbor in f."""
    if f == 0:
        return False
    outside = g.full_mask & ~f
    adj = g.adj
    for v in bits(outside):
        if (adj[v] & f).bit_count() == 1:
            return False
    return True


def is_psd_fort(g: Graph, f: int) -> bool:
    """Nonempty f, each component of g[f] a standard fort of g."""
    if f == 0:
        return False
    return all(is_standard_fort(g, comp) for comp in components(g, within=f))


def is_connected_psd_fort(g: Graph, f: int) -> bool:
    """PSD fort inducing a connected subgraph: exactly one component, itself a fort."""
    if f == 0:
        return False
    comps = components(g, within=f)
    return len(comps) == 1 and is_standard_fort(g, f)


def is_skew_fort(g: Graph, f: int) -> bool:
    """Nonempty f with NO vertex of g (inside or out) having exactly one neighbor in f."""
    if f == 0:
        return False
    adj = g.adj
    for v in range(g.n):
        if (adj[v] & f).bit_count() == 1:
            return False
    return True


_FORT_PREDICATES = {
    (ClosureRule.STANDARD, Provenance.ENUMERATED_FORTS): is_standard_fort,
    (ClosureRule.PSD, Provenance.ENUMERATED_FORTS): is_psd_fort,
    (ClosureRule.PSD, Provenance.CONNECTED_PSD_FORTS): is_connected_psd_fort,
    (ClosureRule.SKEW, Provenance.ENUMERATED_FORTS): is_skew_fort,
}


def enumerate_family(
    parameter: ClosureRule,
    provenance: Provenance,
    g: Graph,
    budget_n: int = DEFAULT_BUDGET,
) -> BlockingFamily:
    """Enumerate the complete blocking family of the given provenance.

    Fort provenances scan all 2^n subsets and are budget-guarded;
    neighborhoods and edges are direct reads.
    """
    if provenance in (Provenance.NEIGHBORHOODS,):
        members = {closed_nbhd(g, v) for v in range(g.n)}
        return BlockingFamily(parameter, provenance, g.n, tuple(members))
    if provenance is Provenance.EDGES:
        return BlockingFamily(parameter, provenance, g.n, tuple(g.edge_masks()))
    predicate = _FORT_PREDICATES.get((parameter, provenance))
    if predicate is None:
        raise ValueError(f"no enumeration for {parameter.value}/{provenance.value}")
    if g.n > budget_n:
        raise OrderBudgetExceeded(f"2^{g.n} scan exceeds budget n <= {budget_n}")
    members = tuple(f for f in range(1, 1 << g.n) if predicate(g, f))
    return BlockingFamily(parameter, provenance, g.n, members)


def designated_family(
    parameter: ClosureRule, g: Graph, budget_n: int = DEFAULT_BUDGET
) -> BlockingFamily:
    """The blocking family each parameter's irredundance is defined over.

    Standard: all forts.  PSD: connected PSD forts (sufficient because any
    PSD fort is a disjoint union of connected ones).  Skew: skew forts.
    Domination: closed neighborhoods.  Vertex cover: edges.
    """
    if parameter is ClosureRule.STANDARD:
        return enumerate_family(parameter, Provenance.ENUMERATED_FORTS, g, budget_n)
    if parameter is ClosureRule.PSD:
        return enumerate_family(parameter, Provenance.CONNECTED_PSD_FORTS, g, budget_n)
    if parameter is ClosureRule.SKEW:
        return enumerate_family(parameter, Provenance.ENUMERATED_FORTS, g, budget_n)
    if parameter is ClosureRule.DOMINATION:
        return enumerate_family(parameter, Provenance.NEIGHBORHOODS, g, budget_n)
    return enumerate_family(parameter, Provenance.EDGES, g, budget_n)


def hits_all(family: BlockingFamily, s: int) -> bool:
    """True iff s intersects every member; with a complete family this is the X-set test."""
    return all(m & s for m in family.members)


def minimal_members(family: BlockingFamily) -> BlockingFamily:
    """Subfamily of members with no proper subset in the family.

    Valid only for complete provenances, where in-family minimality equals
    minimality in the full blocking-set lattice.
    """
    if family.provenance not in _COMPLETE_PROVENANCES:
        raise IncompleteFamily(
            f"minimality is relative for provenance {family.provenance.value}"
        )
    members = family.members
    keep = [
        m
        for m in members
        if not any(other != m and other & m == other for other in members)
    ]
    return BlockingFamily(family.parameter, Provenance.MINIMAL_SETS, family.n, tuple(keep))


def minimal_closed_neighborhoods(g: Graph) -> BlockingFamily:
    """Closed neighborhoods minimal under set inclusion (deduplicated)."""
    fam = enumerate_family(ClosureRule.DOMINATION, Provenance.NEIGHBORHOODS, g)
    return minimal_members(fam)
