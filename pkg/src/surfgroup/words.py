"""Turn words along split-tree paths, one generator per twin pair.

Walking the unique tree path from leaf C1 to leaf C2, every interior
vertex passed is a fork: arriving at slot a, the path leaves by slot a+1
(counterclockwise next, letter L) or slot a+2 (letter R).  Backtracking is
impossible in a tree path, so the letters are total.  The word is the
letter sequence in path order and the generator matrix is its product,
accumulated letter by letter as the path is walked.

This engine finds each path by climbing from both leaves to their lowest
common ancestor under a fixed rooting: O(V) per pair, quadratic in total,
which is exactly what makes it the oracle rather than the fast path.
"""

from collections import namedtuple

from .errors import BacktrackNotAFork, NotTwins, TriangulationError
from .sl2z import Mat2Z

Generator = namedtuple('Generator', 'pair word matrix')

GeneratorSet = namedtuple('GeneratorSet', 'generators')


class RunStats(object):
    """Unit-cost counters: matrix multiplications, letters, node visits,
    and the deepest recursion reached.  The counts are identical whether
    or not matrices and words are materialized."""

    __slots__ = ('mults', 'letters', 'visits', 'max_depth')

    def __init__(self):
        self.mults = 0
        self.letters = 0
        self.visits = 0
        self.max_depth = 0

    def as_dict(self):
        return {'mults': self.mults, 'letters': self.letters,
                'visits': self.visits, 'max_depth': self.max_depth}

    def __repr__(self):
        return ("RunStats(mults=%d, letters=%d, visits=%d, max_depth=%d)"
                % (self.mults, self.letters, self.visits, self.max_depth))


def turn_at(st, v, in_dart, out_dart):
    """Letter assigned to the fork at interior vertex v.

    in_dart arrives at v (so its twin emanates from v), out_dart leaves v.
    L if out_dart sits one slot counterclockwise of the arrival, R if two.
    """
    arrival = st.twin[in_dart]
    if arrival // 3 != v or out_dart // 3 != v:
        raise TriangulationError("darts do not meet at vertex %d" % v)
    if out_dart == arrival:
        raise BacktrackNotAFork("left vertex %d by the arriving edge" % v)
    return 'L' if (out_dart - arrival) % 3 == 1 else 'R'


# rooting of the split tree used by the climb: parallel arrays over nodes
_Rooting = namedtuple('_Rooting', 'parent depth dart_up dart_down')


def _root_split_tree(st, root=0):
    """Parent/depth arrays from a DFS at `root` (an interior vertex).

    dart_up[x] is the dart at x toward its parent (None for leaves),
    dart_down[x] the dart at the parent toward x.
    """
    size = st.n_nodes
    parent = [-1] * size
    depth = [0] * size
    dart_up = [None] * size
    dart_down = [None] * size
    n = st.n
    twin = st.twin
    on_tree = st.on_tree
    leaf_of = st.leaf_of
    stack = [root]
    seen = [False] * size
    seen[root] = True
    while stack:
        x = stack.pop()
        for s in range(3):
            d = 3 * x + s
            if on_tree[d]:
                t = twin[d]
                y = t // 3
                up, down = t, d
            else:
                y = n + leaf_of[d]
                up, down = None, d
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                depth[y] = depth[x] + 1
                dart_up[y] = up
                dart_down[y] = down
                if y < n:
                    stack.append(y)
    return _Rooting(parent, depth, dart_up, dart_down)


def _climb_hops(st, rooting, c1, c2, stats=None):
    """Edge hops of the path leaf c1 -> leaf c2 as (dart at from-node,
    dart at to-node) pairs, via the lowest common ancestor."""
    parent = rooting.parent
    depth = rooting.depth
    dart_up = rooting.dart_up
    dart_down = rooting.dart_down
    a = st.leaf_node(c1)
    b = st.leaf_node(c2)
    up1 = []       # hops (dart at child, dart at parent) climbing from c1
    up2 = []       # same climbing from c2; reversed below
    while a != b:
        if depth[a] >= depth[b]:
            up1.append((dart_up[a], dart_down[a]))
            a = parent[a]
        else:
            up2.append((dart_up[b], dart_down[b]))
            b = parent[b]
    if stats is not None:
        stats.visits += len(up1) + len(up2)
    hops = up1
    for d_child, d_parent in reversed(up2):
        hops.append((d_parent, d_child))
    return hops


def path_word(st, c1, c2, rooting=None, stats=None,
              want_word=True, want_matrix=True):
    """Generator for the twin pair (c1, c2), read from c1 to c2.

    One letter per interior vertex of the path; the matrix is accumulated
    as the letters are produced.  Works for either direction of a pair.
    """
    if c1 ^ 1 != c2:
        raise NotTwins("leaves %d and %d are not a twin pair" % (c1, c2))
    if rooting is None:
        rooting = _root_split_tree(st)
    hops = _climb_hops(st, rooting, c1, c2, stats)
    letters = [] if want_word else None
    # inline accumulator: right-multiplying by a letter is two additions per row
    ma, mb, mc, md = 1, 0, 0, 1
    arrival = None
    count = 0
    for d_from, d_to in hops:
        if arrival is not None:
            turn = (d_from - arrival) % 3
            count += 1
            if turn == 1:       # L
                if want_matrix:
                    mb += ma
                    md += mc
                if want_word:
                    letters.append('L')
            elif turn == 2:     # R
                if want_matrix:
                    ma += mb
                    mc += md
                if want_word:
                    letters.append('R')
            else:
                raise BacktrackNotAFork("tree path doubled back at dart %d" % d_from)
        arrival = d_to
    if stats is not None:
        stats.letters += count
        stats.mults += count
    word = ''.join(letters) if want_word else None
    matrix = Mat2Z(ma, mb, mc, md) if want_matrix else None
    return Generator((c1, c2), word, matrix)


def all_generators_naive(st, stats=None, want_words=True, want_matrices=True):
    """One generator per twin pair, in co-tree discovery order.

    Worst-case quadratic: each pair pays its own path length.  This is the
    oracle the divide-and-conquer output is compared against, letter for
    letter and entry for entry.
    """
    rooting = _root_split_tree(st)
    gens = []
    for i in range(st.n_pairs):
        gens.append(path_word(st, 2 * i, 2 * i + 1, rooting, stats,
                              want_words, want_matrices))
    return GeneratorSet(tuple(gens))
