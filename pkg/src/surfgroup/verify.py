"""Independent checks on a computed generating set.

Everything here recomputes from first principles, sharing as little code
with the engines as possible.  The model: each triangle t is a copy of the
ideal triangle with corners at infinity, 0, -1, corner s of triangle t
being the s-th of these.  Developing across a gluing multiplies by a fixed
element of SL(2,Z) depending only on the two slot indices, which lets us

  * place every triangle of the spanning tree in the upper half plane,
  * close up each boundary face and test that its holonomy is parabolic,
  * measure shears and horocycle arcs as exact rationals.

Points on the boundary circle are Fractions plus an INFINITY sentinel; all
cross-ratio arithmetic is exact, so equality tests need no tolerance.
"""

import math
from collections import namedtuple
from fractions import Fraction

from .errors import (DegenerateConfiguration, NonPositive, NotTwins,
                     SameSide, TriangulationError)
from .sl2z import IDENTITY, Mat2Z, mat_of_word
from .words import RunStats, all_generators_naive

INFINITY = float('inf')

# _DEVELOP[a][b] carries a triangle glued along its side a onto the base
# triangle's side b:  side s runs from corner s to corner s+1, and the
# glued copy must land on the far side with opposite orientation.  All
# nine carriers have determinant 1; swapping indices inverts (up to sign).
_DEVELOP = (
    (Mat2Z(1, 1, -2, -1), Mat2Z(0, -1, 1, 2), Mat2Z(1, 0, -1, 1)),
    (Mat2Z(2, 1, -1, 0), Mat2Z(1, 2, -1, -1), Mat2Z(1, -1, 0, 1)),
    (Mat2Z(1, 0, 1, 1), Mat2Z(1, 1, 0, 1), Mat2Z(0, 1, -1, 0)),
)

# frame for a cut edge lying in slot s: the carrier taking the standard
# corner frame to the side-s frame, used to conjugate a generator's word
# matrix into the deck transformation pairing the edge's developed copies
_FRAME = _DEVELOP[2]
_FRAME_INV = tuple(m.inverse() for m in _FRAME)


def develop_step(s_from, s_to):
    """SL(2,Z) carrier across a gluing of slot s_from onto slot s_to."""
    return _DEVELOP[s_from][s_to]


def apply_moebius(m, z):
    """Act by m on a boundary point (Fraction or INFINITY), exactly."""
    if z == INFINITY:
        if m.c == 0:
            return INFINITY
        return Fraction(m.a, m.c)
    num = m.a * z + m.b
    den = m.c * z + m.d
    if den == 0:
        return INFINITY
    return Fraction(num, den)


def _placements(st):
    """Matrix placing each triangle, walking the spanning tree from 0."""
    n = st.n
    twin = st.twin
    on_tree = st.on_tree
    place = [None] * n
    place[0] = IDENTITY
    stack = [0]
    while stack:
        v = stack.pop()
        for s in range(3):
            d = 3 * v + s
            if not on_tree[d]:
                continue
            w = twin[d] // 3
            if place[w] is None:
                place[w] = place[v] * develop_step(d % 3, twin[d] % 3)
                stack.append(w)
    if any(p is None for p in place):
        raise TriangulationError("spanning tree does not reach every triangle")
    return place


def corners_of(st, t):
    """The three ideal corners of triangle t in the developed picture."""
    p = _placements(st)[t]
    base = (INFINITY, Fraction(0), Fraction(-1))
    return tuple(apply_moebius(p, z) for z in base)


def _pairings_by_leaf(st, gens, place=None):
    """Deck transformation per cut-edge leaf; twins carry inverse elements."""
    if place is None:
        place = _placements(st)
    out = {}
    for g in gens.generators:
        c1, c2 = g.pair
        if c1 ^ 1 != c2:
            raise NotTwins("generator pair %r is not a twin pair" % (g.pair,))
        d1 = st.leaf_dart[c1]
        frame = place[d1 // 3] * _FRAME_INV[d1 % 3]
        gamma = frame * g.matrix.inverse() * frame.inverse()
        out[c1] = gamma
        out[c2] = gamma.inverse()
    return out


def side_pairing(st, gen):
    """Holonomy of one generator in the developed picture.

    The generator's word transports the corner frame along the tree path
    between the two leaves of its cut edge; conjugating the inverse word
    matrix by the placement of the first leaf's triangle composed with its
    slot frame yields the deck transformation identifying the edge's two
    developed copies.
    """
    d1 = st.leaf_dart[gen.pair[0]]
    frame = _placements(st)[d1 // 3] * _FRAME_INV[d1 % 3]
    return frame * gen.matrix.inverse() * frame.inverse()


def cusp_holonomy(dual, st, gens, face):
    """Holonomy around one boundary face, as a matrix.

    Crossing a cut edge by its first-listed leaf contributes that
    generator's side pairing, by its twin leaf the inverse.  A valid
    generating set makes every face's holonomy parabolic: |trace| = 2.
    """
    by_leaf = _pairings_by_leaf(st, gens)
    hol = IDENTITY
    leaf_of = st.leaf_of
    for d in face.darts:
        j = leaf_of.get(d)
        if j is not None:
            hol = hol * by_leaf[j]
    return hol


CuspReport = namedtuple('CuspReport', 'ok traces failures')


def check_cusps(dual, st, gens):
    """Every boundary face's holonomy, with the parabolicity verdict."""
    by_leaf = _pairings_by_leaf(st, gens)
    leaf_of = st.leaf_of
    traces = []
    failures = []
    for idx, face in enumerate(dual.faces):
        hol = IDENTITY
        for d in face.darts:
            j = leaf_of.get(d)
            if j is not None:
                hol = hol * by_leaf[j]
        tr = hol.trace()
        traces.append(tr)
        if tr != 2 and tr != -2:
            failures.append("face %d holonomy %r has trace %d" % (idx, hol, tr))
    return CuspReport(not failures, tuple(traces), tuple(failures))


Report = namedtuple('Report', 'ok failures')


def check_generator_set(gens, inv):
    """Structural checks: count matches the rank, every matrix is in
    SL(2,Z) and agrees with its own word."""
    failures = []
    count = len(gens.generators)
    if count != inv.rank:
        failures.append("expected %d generators, got %d" % (inv.rank, count))
    for g in gens.generators:
        if g.matrix.det() != 1:
            failures.append("pair %r: determinant %d" % (g.pair, g.matrix.det()))
        if g.word is not None and mat_of_word(g.word) != g.matrix:
            failures.append("pair %r: matrix disagrees with word %r"
                            % (g.pair, g.word))
    return Report(not failures, tuple(failures))


def diff_generator_sets(a, b):
    """First divergence between two generator sets, or None."""
    if len(a.generators) != len(b.generators):
        return "generator counts differ: %d vs %d" % (
            len(a.generators), len(b.generators))
    for ga, gb in zip(a.generators, b.generators):
        if ga.pair != gb.pair:
            return "pair order differs: %r vs %r" % (ga.pair, gb.pair)
        if ga.word != gb.word:
            if ga.word is None or gb.word is None:
                return "pair %r: only one run kept words" % (ga.pair,)
            k = min(len(ga.word), len(gb.word))
            for i, (x, y) in enumerate(zip(ga.word, gb.word)):
                if x != y:
                    k = i
                    break
            return "pair %r: words differ at letter %d (%r vs %r)" % (
                ga.pair, k, ga.word, gb.word)
        if ga.matrix != gb.matrix:
            return "pair %r: matrices differ (%r vs %r)" % (
                ga.pair, ga.matrix, gb.matrix)
    return None


def oracle_compare(st, fast_result=None, stats=None):
    """Recompute naively and report the first divergence from the fast run."""
    from .fastpaths import all_generators_fast
    if fast_result is None:
        fast_result = all_generators_fast(st, stats)
    naive = all_generators_naive(st, RunStats())
    d = diff_generator_sets(naive, fast_result)
    return Report(d is None, (d,) if d else ())


def cross_ratio(a, b, c, d):
    """[a,b;c,d] = (a-c)(b-d) / ((b-c)(a-d)), exact, INFINITY-aware.

    Each point may be INFINITY; the two factors meeting it cancel.  Raises
    DegenerateConfiguration when fewer than the needed differences exist
    (some pair of arguments coincides).
    """
    pts = (a, b, c, d)
    if pts.count(INFINITY) > 1:
        raise DegenerateConfiguration("cross ratio needs distinct points")
    try:
        if a == INFINITY:
            r = Fraction(b - d, b - c)
        elif b == INFINITY:
            r = Fraction(a - c, a - d)
        elif c == INFINITY:
            r = Fraction(b - d, a - d)
        elif d == INFINITY:
            r = Fraction(a - c, b - c)
        else:
            num = (a - c) * (b - d)
            den = (b - c) * (a - d)
            r = Fraction(num, den)
    except ZeroDivisionError:
        raise DegenerateConfiguration("coincident points in cross ratio") from None
    if r == 0 or r == 1:
        raise DegenerateConfiguration("coincident points in cross ratio")
    return r


def shear(a, b, c, d):
    """Shear across the diagonal a-b of the quadrilateral on (a,b,c) and
    (a,b,d).

    The unique isometry taking (a,b,c) to (inf,0,-1) sends d to minus the
    cross ratio [a,b;c,d], which must land on the far side of the
    geodesic from 0 to inf, i.e. be positive; the shear is its log.
    Raises SameSide when c and d sit on one side of that geodesic.
    Computed as log(numerator) - log(denominator): swapping the last two
    arguments inverts the cross ratio, so the shear negates exactly,
    not merely to roundoff.
    """
    r = cross_ratio(a, b, c, d)
    if r > 0:
        raise SameSide("cross ratio %s is positive" % r)
    t = -r
    return math.log(t.numerator) - math.log(t.denominator)


def horocycle_ratio(z):
    """Ratio of horocyclic arcs cut by the triangles (inf,0,-1), (inf,0,z).

    A horocycle at height h about infinity crosses the region between the
    vertical sides over 0 and x in an arc of hyperbolic length x/h.  The
    ratio of the second triangle's arc to the first is computed at two
    heights clear of both triangles' circular sides, checked equal, and
    returned: with the base arc normalized away the coordinate is exactly
    z.  Exact in Fractions; z must be positive, else NonPositive.
    """
    z = Fraction(z)
    if z <= 0:
        raise NonPositive("need a positive coordinate, got %s" % z)
    h1 = z + 1
    h2 = 2 * z + 2
    r1 = (z / h1) / (Fraction(1) / h1)
    r2 = (z / h2) / (Fraction(1) / h2)
    assert r1 == r2
    return r1


def full_check(dual, st, gens, inv):
    """Structural plus cusp checks in one report."""
    rep = check_generator_set(gens, inv)
    cusps = check_cusps(dual, st, gens)
    failures = rep.failures + cusps.failures
    return Report(not failures, failures)
