"""Exception types raised by the engine."""


class EngineError(ValueError):
    """Base class for all engine-specific errors."""


class OrderOutOfRange(EngineError):
    """Graph order outside the supported range (1..64, or an op-specific cap)."""


class SelfLoop(EngineError):
    """An edge (v, v) was supplied; graphs are simple."""


class EndpointOutOfRange(EngineError):
    """An edge endpoint is not a vertex of the graph."""


class InvalidFamilyParams(EngineError):
    """Named-family parameters violate the family's definition."""


class MalformedGraph6(EngineError):
    """Input is not a valid graph6 encoding."""


class EmptyInducedSet(EngineError):
    """induced() requires a nonempty vertex set."""


class OrderBudgetExceeded(EngineError):
    """A 2^n enumeration was requested beyond the configured budget."""


class NotUnionClosed(EngineError):
    """generators() strict mode: the family is not union-closed."""


class IncompleteFamily(EngineError):
    """minimal_members() needs a complete family; this provenance is filtered."""


class VertexNotInSet(EngineError):
    """private_set() requires u to be a member of S."""


class NotAVcirSet(EngineError):
    """vcir_to_cover() requires a maximal VC-irredundant set of minimum size."""


class ExchangeStuck(EngineError):
    """No sequence of private-edge exchanges reaches a vertex cover.

    Happens on real inputs: on the triangular prism each triangle is a
    minimum maximal VC-irredundant set (of size 3, below the cover number 4)
    from which every exchange path dead-ends.
    """


class UnknownSuite(EngineError):
    """run_suite() was given an unrecognized suite name."""


class BudgetExceeded(EngineError):
    """TAR isomorphism was requested beyond the node-count budget."""
