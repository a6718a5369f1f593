"""Instance generators for tests, benchmarks and the CLI."""

import random

from .errors import Disconnected, GenerationFailed, OddTriangleCount
from .surface import GluedTriangulation


def gen_random(n, seed):
    """Random connected gluing of n triangles, deterministic in (n, seed).

    Pairs a shuffle of the 3n slots; redraws while the surface comes out
    disconnected.  For n >= 2 a redraw is rare, but a cap keeps a bad seed
    from spinning forever.
    """
    if n < 2 or n % 2:
        raise OddTriangleCount("need an even number of triangles >= 2, got %d" % n)
    rng = random.Random(seed)
    slots = list(range(3 * n))
    for _ in range(1000):
        rng.shuffle(slots)
        twin = [0] * (3 * n)
        for k in range(0, 3 * n, 2):
            a, b = slots[k], slots[k + 1]
            twin[a] = b
            twin[b] = a
        try:
            return GluedTriangulation(n, twin)
        except Disconnected:
            continue
    raise GenerationFailed(
        "no connected gluing of %d triangles in 1000 draws (seed %r)" % (n, seed))


def long_diameter_instance(n):
    """Deliberately bad case for the naive engine: a cycle of n triangles
    whose twin pairs sit at opposite ends, so almost every generator path
    crosses the whole diameter.  n must be even and >= 2."""
    if n < 2 or n % 2:
        raise ValueError("need an even triangle count, got %r" % n)
    twin = [0] * (3 * n)

    def glue(a, b):
        twin[a] = b
        twin[b] = a

    for i in range(n - 1):
        glue(3 * i + 2, 3 * (i + 1) + 1)
    glue(3 * (n - 1) + 2, 1)
    for i in range(n):
        j = n - 1 - i
        if i < j:
            glue(3 * i, 3 * j)
    return GluedTriangulation(n, twin)
