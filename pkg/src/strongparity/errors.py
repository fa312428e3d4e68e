"""Exception hierarchy shared by every module."""


class SppError(Exception):
    """Base class for all package errors."""


class GraphInputError(SppError, ValueError):
    """Malformed input: out-of-range vertex, non-edge, overlapping sets, bad graph6."""


class CapacityError(SppError):
    """Instance exceeds a configured enumeration limit."""


class ParityError(SppError, ValueError):
    """A vertex set has the wrong cardinality parity."""


class StructureError(SppError, ValueError):
    """The graph lacks a structural precondition (e.g. connectivity)."""


class ContractError(SppError, ValueError):
    """An operation's precondition on its arguments does not hold."""
