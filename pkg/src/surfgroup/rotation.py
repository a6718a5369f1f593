"""Rotation graphs (graphs embedded in oriented surfaces) and face tracing.

A rotation graph is a multigraph given by darts (half-edges): each dart
knows its vertex, its twin on the same edge, and the next dart
counterclockwise around its vertex.  Loops and parallel edges are fine.

Faces are traced by the rule: from dart d, continue along the dart that
precedes twin(d) in the cyclic order at twin(d)'s vertex.  Every dart lands
in exactly one face, so the trace is a single linear pass.
"""

from collections import namedtuple

from .errors import TriangulationError

Dart = namedtuple('Dart', 'id vertex twin')

FaceCycle = namedtuple('FaceCycle', 'darts')


class RotationGraph(object):
    """Embedded multigraph: per-dart vertex, twin, and ccw successor."""

    __slots__ = ('vertex_of', 'twin', 'sigma_next', 'n_vertices')

    def __init__(self, vertex_of, twin, sigma_next):
        vertex_of = tuple(vertex_of)
        twin = tuple(twin)
        sigma_next = tuple(sigma_next)
        nd = len(vertex_of)
        if len(twin) != nd or len(sigma_next) != nd:
            raise TriangulationError("dart arrays disagree in length")
        for d in range(nd):
            if twin[d] == d or twin[twin[d]] != d:
                raise TriangulationError("twin is not a fixed-point-free involution at dart %d" % d)
        # sigma must cycle exactly through each vertex's darts
        seen = [False] * nd
        for d0 in range(nd):
            if seen[d0]:
                continue
            d = d0
            while not seen[d]:
                seen[d] = True
                if vertex_of[d] != vertex_of[d0]:
                    raise TriangulationError("sigma cycle at dart %d leaves its vertex" % d0)
                d = sigma_next[d]
            if d != d0:
                raise TriangulationError("sigma is not a permutation")
        by_vertex = {}
        for d in range(nd):
            by_vertex.setdefault(vertex_of[d], []).append(d)
        for v, ds in by_vertex.items():
            # one cycle per vertex: following sigma from any dart returns
            # after exactly deg(v) steps (checked above that it stays home)
            d = ds[0]
            count = 0
            while True:
                d = sigma_next[d]
                count += 1
                if d == ds[0]:
                    break
            if count != len(ds):
                raise TriangulationError("sigma at vertex %r is not a single cycle" % (v,))
        self.vertex_of = vertex_of
        self.twin = twin
        self.sigma_next = sigma_next
        self.n_vertices = max(vertex_of) + 1 if vertex_of else 0

    @classmethod
    def from_rotations(cls, rotations, twin):
        """Build from explicit ccw dart lists, one per vertex."""
        nd = sum(len(r) for r in rotations)
        vertex_of = [None] * nd
        sigma_next = [None] * nd
        for v, ring in enumerate(rotations):
            for i, d in enumerate(ring):
                vertex_of[d] = v
                sigma_next[d] = ring[(i + 1) % len(ring)]
        if any(v is None for v in vertex_of):
            raise TriangulationError("rotations do not cover every dart")
        return cls(vertex_of, twin, sigma_next)

    @property
    def n_darts(self):
        return len(self.twin)

    def dart(self, d):
        return Dart(d, self.vertex_of[d], self.twin[d])

    @property
    def darts(self):
        return [self.dart(d) for d in range(len(self.twin))]

    def degree(self, v):
        return sum(1 for u in self.vertex_of if u == v)


def trace_faces(graph):
    """Partition the darts into face cycles; linear in the dart count."""
    twin = graph.twin
    sigma_next = graph.sigma_next
    nd = len(twin)
    sigma_prev = [0] * nd
    for d in range(nd):
        sigma_prev[sigma_next[d]] = d
    visited = [False] * nd
    faces = []
    for d0 in range(nd):
        if visited[d0]:
            continue
        cycle = []
        d = d0
        while not visited[d]:
            visited[d] = True
            cycle.append(d)
            d = sigma_prev[twin[d]]
        faces.append(FaceCycle(tuple(cycle)))
    return faces
