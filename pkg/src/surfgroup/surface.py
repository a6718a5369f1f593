"""Glued ideal triangulations, their Poincare duals, and surface invariants.

A surface is given combinatorially: n oriented ideal triangles whose 3n edge
slots (slot s of triangle t, s = 0,1,2 counterclockwise) are glued in pairs.
Slots double as dart ids via d = 3t + s, so the gluing is exactly the twin
involution of the dual rotation graph: one dual vertex per triangle, one
dual edge per glued pair, ccw slot order as the rotation.  Faces of the
dual are the cusps of the surface.
"""

from collections import namedtuple

from .errors import (OddTriangleCount, SlotSelfPaired, SlotPairedTwice,
                     SlotUnpaired, Disconnected, NonIntegralGenus,
                     TriangulationError)
from .rotation import RotationGraph, trace_faces


class GluedTriangulation(object):
    """n triangles plus a fixed-point-free pairing of their 3n slots."""

    __slots__ = ('n', 'twin')

    def __init__(self, n, twin):
        if n <= 0 or n % 2 != 0:
            raise OddTriangleCount("triangle count %d must be positive and even" % n)
        twin = tuple(twin)
        if len(twin) != 3 * n:
            raise SlotUnpaired("expected %d slots, got %d" % (3 * n, len(twin)))
        for d in range(3 * n):
            t = twin[d]
            if t == d:
                raise SlotSelfPaired("slot (%d,%d) glued to itself" % (d // 3, d % 3))
            if not 0 <= t < 3 * n or twin[t] != d:
                raise SlotUnpaired("slot (%d,%d) not consistently paired" % (d // 3, d % 3))
        self.n = n
        self.twin = twin
        self._check_connected()

    def _check_connected(self):
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for s in range(3):
                w = self.twin[3 * v + s] // 3
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != self.n:
            raise Disconnected("dual graph has %d of %d triangles reachable from 0"
                               % (count, self.n))

    def partner(self, t, s):
        d = self.twin[3 * t + s]
        return d // 3, d % 3

    def pairs(self):
        """Canonical slot-pair list, sorted by the lower dart id."""
        out = []
        for d in range(3 * self.n):
            t = self.twin[d]
            if d < t:
                out.append(((d // 3, d % 3), (t // 3, t % 3)))
        return out

    def __eq__(self, other):
        if not isinstance(other, GluedTriangulation):
            return NotImplemented
        return self.n == other.n and self.twin == other.twin

    def __hash__(self):
        return hash((self.n, self.twin))


def validate(pairs, n=None):
    """Assemble and check a GluedTriangulation from raw slot pairs.

    pairs: iterable of ((t1,s1),(t2,s2)).  n defaults to 1 + max triangle
    index seen.  Raises the error class naming the first violated invariant.
    """
    pairs = list(pairs)
    if n is None:
        n = 0
        for (t1, _s1), (t2, _s2) in pairs:
            n = max(n, t1 + 1, t2 + 1)
    if n <= 0 or n % 2 != 0:
        raise OddTriangleCount("triangle count %d must be positive and even" % n)
    twin = [None] * (3 * n)
    for (t1, s1), (t2, s2) in pairs:
        for (t, s) in ((t1, s1), (t2, s2)):
            if not (0 <= t < n and 0 <= s < 3):
                raise SlotUnpaired("slot (%d,%d) out of range for %d triangles" % (t, s, n))
        a = 3 * t1 + s1
        b = 3 * t2 + s2
        if a == b:
            raise SlotSelfPaired("slot (%d,%d) glued to itself" % (t1, s1))
        if twin[a] is not None:
            raise SlotPairedTwice("slot (%d,%d) glued more than once" % (t1, s1))
        if twin[b] is not None:
            raise SlotPairedTwice("slot (%d,%d) glued more than once" % (t2, s2))
        twin[a] = b
        twin[b] = a
    for d in range(3 * n):
        if twin[d] is None:
            raise SlotUnpaired("slot (%d,%d) never glued" % (d // 3, d % 3))
    return GluedTriangulation(n, twin)


def parse_tri(text):
    """Parse the .tri interchange format.

    First data line: `triangles <n>`; then one `glue t1 s1 t2 s2` line per
    pair; `#` starts a comment; tokens are whitespace-separated.
    """
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != 'triangles' or len(tokens) != 2:
                raise TriangulationError("line %d: expected `triangles <n>`" % lineno)
            try:
                header = int(tokens[1])
            except ValueError:
                raise TriangulationError("line %d: bad triangle count %r" % (lineno, tokens[1]))
            continue
        if tokens[0] != 'glue' or len(tokens) != 5:
            raise TriangulationError("line %d: expected `glue t1 s1 t2 s2`" % lineno)
        try:
            t1, s1, t2, s2 = (int(x) for x in tokens[1:])
        except ValueError:
            raise TriangulationError("line %d: non-integer glue field" % lineno)
        pairs.append(((t1, s1), (t2, s2)))
    if header is None:
        raise TriangulationError("missing `triangles <n>` header")
    return validate(pairs, header)


def format_tri(tri):
    """Serialize canonically; parse_tri(format_tri(t)) == t."""
    lines = ["triangles %d" % tri.n]
    for (t1, s1), (t2, s2) in tri.pairs():
        lines.append("glue %d %d %d %d" % (t1, s1, t2, s2))
    return "\n".join(lines) + "\n"


class DualComplex(object):
    """Poincare dual: 3-regular rotation graph plus its traced faces."""

    __slots__ = ('graph', 'faces')

    def __init__(self, graph, faces):
        self.graph = graph
        self.faces = tuple(faces)

    @property
    def n(self):
        return self.graph.n_vertices


def build_dual(tri):
    """Dual rotation graph of the triangulation, with faces traced.

    Dart d = 3t + s emanates from dual vertex t; ccw order at each vertex
    is slot order 0,1,2.  Linear in n.
    """
    n = tri.n
    vertex_of = [d // 3 for d in range(3 * n)]
    sigma_next = [3 * (d // 3) + (d % 3 + 1) % 3 for d in range(3 * n)]
    graph = RotationGraph(vertex_of, tri.twin, sigma_next)
    return DualComplex(graph, trace_faces(graph))


SurfaceInvariants = namedtuple('SurfaceInvariants', 'n cusps euler genus rank')


def invariants_of(dual):
    """Global invariants (n, c, chi, g, rank) of the traced dual.

    chi = n - 3n/2 (triangles minus edges; the ideal vertices are the
    punctures, counted by faces of the dual); chi = 2 - 2g - c fixes g.
    """
    n = dual.n
    cusps = len(dual.faces)
    euler = n - (3 * n) // 2
    twice_genus = 2 - cusps - euler
    if twice_genus % 2 != 0 or twice_genus < 0:
        raise NonIntegralGenus("2 - c - chi = %d; non-orientable or corrupt input"
                               % twice_genus)
    rank = n // 2 + 1
    return SurfaceInvariants(n, cusps, euler, twice_genus // 2, rank)
