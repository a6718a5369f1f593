"""Error types raised across the pipeline.

Each class names the violated invariant; messages carry the offending data.
"""


class TriangulationError(Exception):
    """Base class for invalid or inconsistent input data."""


class OddTriangleCount(TriangulationError):
    """Triangle count must be even (3n slots cannot pair otherwise)."""


class SlotSelfPaired(TriangulationError):
    """A slot was glued to itself; the pairing must be fixed-point free."""


class SlotPairedTwice(TriangulationError):
    """A slot appeared in more than one gluing pair."""


class SlotUnpaired(TriangulationError):
    """A slot appeared in no gluing pair."""


class Disconnected(TriangulationError):
    """The induced dual graph is not connected."""


class NonIntegralGenus(TriangulationError):
    """2 - c - chi came out odd; non-orientable or corrupt input."""


class BacktrackNotAFork(TriangulationError):
    """A path tried to leave a vertex along the edge it arrived by."""


class NotTwins(TriangulationError):
    """The two leaves passed to path_word are not a twin pair."""


class NoInteriorVertex(TriangulationError):
    """The tree has no degree-3 vertex to diagnose."""


class DegenerateConfiguration(TriangulationError):
    """Two of the four ideal points coincide."""


class SameSide(TriangulationError):
    """The two opposite vertices are not separated by the common edge."""


class NonPositive(TriangulationError):
    """The horocycle configuration needs a positive parameter."""


class GenerationFailed(TriangulationError):
    """Random instance generation exhausted its retry budget."""
