"""Divide-and-conquer computation of all twin-pair generators.

Strategy: delete the tree edge whose worse side is smallest.  A degree-3
tree always has an edge whose worse side holds at most 2V/3 + 2 vertices
(split at the vertex minimizing its largest branch and take that branch's
edge), so the recursion depth is logarithmic.  Pairs with both leaves in
one side are delegated to that side's recursive call; pairs straddling the
deleted edge are assembled immediately from two per-side leaf tables:

    word(C1 -> root1) + turn at root1 + turn at root2 + word(root2 -> C2)

The tables are built by one depth-first pass per side holding a running
product, so each tree edge costs a constant number of letter
multiplications per level, and each cross pair a constant number of
products on top.  Total work: O(V log V) multiplications and emitted
letters, against the naive engine's quadratic worst case.

Turn letters do not mirror under path reversal (the reverse path of an L
turn reads R), so the leaf-to-root and root-to-leaf directions are
developed separately.  Letter sequences are kept as shared-tail chains,
one cell per emitted letter; a generator's word is materialized once, on
output.  The solver never builds per-piece sets: node membership lives in
stamp arrays reused across the whole recursion, which keeps the constant
factor small enough for six-figure triangle counts.
"""

from collections import namedtuple

from .errors import BacktrackNotAFork, NoInteriorVertex, TriangulationError
from .sl2z import Mat2Z
from .words import Generator, GeneratorSet, RunStats

Piece = namedtuple('Piece', 'root nodes')

SplitResult = namedtuple('SplitResult', 'edge sides sizes')

LeafTable = namedtuple('LeafTable', 'root root_dart up down')
LeafTable.__doc__ += """

up[leaf] = (word, matrix, junction dart at the root) for the leaf-to-root
direction, the root's own turn excluded; down[leaf] likewise for
root-to-leaf.  root_dart is the dart at the root on the deleted edge,
when the table serves a junction.
"""

_ID4 = (1, 0, 0, 1)


def _lmul_letter(t, m):
    # letter * m ; t = 1 for L, 2 for R
    a, b, c, d = m
    if t == 1:
        return (a + c, b + d, c, d)
    return (a, b, a + c, b + d)


def _rmul_letter(m, t):
    a, b, c, d = m
    if t == 1:
        return (a, a + b, c, c + d)
    return (a + b, b, c + d, d)


def _mul4(m, k):
    a, b, c, d = m
    e, f, g, h = k
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _neighbors_in(st, x, nodes):
    """Neighbor nodes of x lying in the node set, in slot order."""
    n = st.n
    out = []
    if x >= n:
        y = st.leaf_dart[x - n] // 3
        if y in nodes:
            out.append(y)
        return out
    twin = st.twin
    on_tree = st.on_tree
    leaf_of = st.leaf_of
    for s in range(3):
        d = 3 * x + s
        y = twin[d] // 3 if on_tree[d] else n + leaf_of[d]
        if y in nodes:
            out.append(y)
    return out


def _sized_orientation(st, root, nodes):
    """Preorder, parent map, and subtree sizes of the piece rooted at root."""
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in _neighbors_in(st, x, nodes):
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    size = dict.fromkeys(order, 1)
    for x in reversed(order):
        p = parent[x]
        if p != -1:
            size[p] += size[x]
    return order, parent, size


def _best_split(st, root, nodes):
    """Deleted edge (parent side, child side) minimizing the worse side."""
    V = len(nodes)
    if V < 2:
        raise TriangulationError("cannot split a %d-vertex piece" % V)
    order, parent, size = _sized_orientation(st, root, nodes)
    if len(order) != V:
        raise TriangulationError("piece is not connected")
    best = None
    best_child = None
    for x in order[1:]:
        s = size[x]
        worse = s if s >= V - s else V - s
        p = parent[x]
        edge = (x, p) if x < p else (p, x)
        rank = (worse, edge)
        if best is None or rank < best:
            best = rank
            best_child = x
    return parent[best_child], best_child, size[best_child]


def _whole_tree(st):
    # lowest-numbered leaf plays the root of the initial piece
    return st.leaf_node(0), set(range(st.n_nodes))


def find_split_edge(st, piece=None):
    """Edge minimizing the larger side, with its two rooted sides.

    The worse side never exceeds (2/3)V + 2.  Deterministic: ties go to
    the smallest node pair.  piece defaults to the whole split tree.
    """
    if piece is None:
        root, nodes = _whole_tree(st)
    else:
        root, nodes = piece.root, piece.nodes
    u, v, _size_v = _best_split(st, root, nodes)
    side_v = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in _neighbors_in(st, x, nodes):
            if y != u and y not in side_v:
                side_v.add(y)
                stack.append(y)
    side_u = nodes - side_v
    return SplitResult((u, v), (Piece(u, side_u), Piece(v, side_v)),
                       (len(side_u), len(side_v)))


def centroid_diagnostic(st, piece=None):
    """(v, N_max, N_med, N_min) for the degree-3 vertex minimizing N_max.

    Deleting a degree-3 vertex leaves three components with
    N_max + N_med + N_min + 1 = V; at the minimizing vertex the bounds
    (V-1)/3 <= N_max <= (2/3)V + 1 hold.  Test-suite instrument; the
    splitter itself picks an edge directly.
    """
    if piece is None:
        root, nodes = _whole_tree(st)
    else:
        root, nodes = piece.root, piece.nodes
    V = len(nodes)
    order, parent, size = _sized_orientation(st, root, nodes)
    children = {}
    for x in order[1:]:
        children.setdefault(parent[x], []).append(x)
    best = None
    for x in order:
        if x >= st.n:
            continue
        parts = [size[c] for c in children.get(x, ())]
        if parent[x] != -1:
            parts.append(V - size[x])
        if len(parts) != 3:
            continue
        parts.sort(reverse=True)
        assert parts[0] + parts[1] + parts[2] + 1 == V
        rank = (parts[0], x)
        if best is None or rank < best:
            best = rank
            best_parts = parts
            best_vertex = x
    if best is None:
        raise NoInteriorVertex("piece of %d nodes has no degree-3 vertex" % V)
    n_max, n_med, n_min = best_parts
    assert 3 * n_max >= V - 1 and 3 * n_max <= 2 * V + 3
    return best_vertex, n_max, n_med, n_min


def _edge_darts(st, u, v):
    """(dart at u, dart at v) of the split-tree edge u-v; None on a leaf side."""
    n = st.n
    if u >= n:
        return None, st.leaf_dart[u - n]
    if v >= n:
        return st.leaf_dart[v - n], None
    twin = st.twin
    on_tree = st.on_tree
    for s in range(3):
        d = 3 * u + s
        if on_tree[d] and twin[d] // 3 == v:
            return d, twin[d]
    raise TriangulationError("no tree edge between %d and %d" % (u, v))


def _develop(st, root, member, stamp, PD, JD, A4, ACH, B4, BCH,
             need_up, need_down, want_words, want_matrices, stats):
    """Fill the per-node development arrays for one rooted side.

    Membership is member[x] == stamp.  For every interior node y below
    the root: PD[y] is the dart at y toward its parent, JD[y] the dart at
    the root toward y's subtree, A4/ACH the product and letter chain of
    the turns strictly above y on the way to the root, B4/BCH the same
    for the root-to-y direction.  One letter per node per direction;
    arrays are piece scratch, freely overwritten by later pieces.
    """
    n = st.n
    twin = st.twin
    on_tree = st.on_tree
    if root >= n:
        return
    stack = []
    for s in range(3):
        d = 3 * root + s
        if not on_tree[d]:
            continue
        y = twin[d] // 3
        if member[y] == stamp:
            PD[y] = twin[d]
            JD[y] = d
            A4[y] = _ID4
            ACH[y] = None
            B4[y] = _ID4
            BCH[y] = None
            stack.append(y)
    while stack:
        x = stack.pop()
        pd = PD[x]
        jd = JD[x]
        a4 = A4[x]
        ach = ACH[x]
        b4 = B4[x]
        bch = BCH[x]
        pslot = pd % 3
        base = 3 * x
        for s in range(3):
            d = base + s
            if d == pd or not on_tree[d]:
                continue
            y = twin[d] // 3
            if member[y] != stamp:
                continue
            # path y -> root turns at x: arrive from y at slot s, leave by
            # pslot; path root -> y: arrive at pslot, leave by slot s
            if need_up:
                t_up = (pslot - s) % 3
                if t_up == 0:
                    raise BacktrackNotAFork("degenerate turn at vertex %d" % x)
                if want_matrices:
                    A4[y] = _lmul_letter(t_up, a4)
                if want_words:
                    ACH[y] = ('L' if t_up == 1 else 'R', ach)
                stats.mults += 1
                stats.letters += 1
            if need_down:
                t_dn = (s - pslot) % 3
                if want_matrices:
                    B4[y] = _rmul_letter(b4, t_dn)
                if want_words:
                    BCH[y] = ('L' if t_dn == 1 else 'R', bch)
                stats.mults += 1
                stats.letters += 1
            PD[y] = twin[d]
            JD[y] = jd
            stack.append(y)


def _up_entry(st, leaf, root, PD, JD, A4, ACH, want_words, want_matrices, stats):
    """(matrix4, chain, junction dart) for leaf -> root, root's turn excluded."""
    ld = st.leaf_dart[leaf]
    vl = ld // 3
    if vl == root:
        return _ID4, None, ld
    pd = PD[vl]
    t = (pd - ld) % 3
    if t == 0:
        raise BacktrackNotAFork("degenerate turn at vertex %d" % vl)
    mat = _lmul_letter(t, A4[vl]) if want_matrices else None
    chain = ('L' if t == 1 else 'R', ACH[vl]) if want_words else None
    stats.mults += 1
    stats.letters += 1
    return mat, chain, JD[vl]


def _down_entry(st, leaf, root, PD, JD, B4, BCH, want_words, want_matrices, stats):
    """(matrix4, chain, junction dart) for root -> leaf, root's turn excluded.

    The chain carries the letters leafmost first; the materializer flips
    it back into travel order.
    """
    ld = st.leaf_dart[leaf]
    vl = ld // 3
    if vl == root:
        return _ID4, None, ld
    pd = PD[vl]
    t = (ld - pd) % 3
    if t == 0:
        raise BacktrackNotAFork("degenerate turn at vertex %d" % vl)
    mat = _rmul_letter(B4[vl], t) if want_matrices else None
    chain = ('L' if t == 1 else 'R', BCH[vl]) if want_words else None
    stats.mults += 1
    stats.letters += 1
    return mat, chain, JD[vl]


def _materialize(up_chain, mid, down_chain):
    parts = []
    cell = up_chain
    while cell is not None:
        parts.append(cell[0])
        cell = cell[1]
    parts.extend(mid)
    tail = []
    cell = down_chain
    while cell is not None:
        tail.append(cell[0])
        cell = cell[1]
    parts.extend(reversed(tail))
    return ''.join(parts)


def leaf_table(st, piece, root_dart=None):
    """Develop every leaf of a rooted piece in both directions.

    Inspection/testing view of the per-side tables the solver keeps in
    scratch arrays; matrices are boxed and words materialized.  The root
    must be an interior vertex (leaf-rooted pieces never feed a junction).
    """
    if piece.root >= st.n:
        raise TriangulationError("leaf table needs an interior root")
    size = st.n_nodes
    member = [0] * size
    for x in piece.nodes:
        member[x] = 1
    PD = [None] * size
    JD = [None] * size
    A4 = [None] * size
    ACH = [None] * size
    B4 = [None] * size
    BCH = [None] * size
    scratch = RunStats()
    _develop(st, piece.root, member, 1, PD, JD, A4, ACH, B4, BCH,
             True, True, True, True, scratch)
    up = {}
    down = {}
    for x in sorted(piece.nodes):
        if x < st.n:
            continue
        leaf = x - st.n
        m4, ch, jd = _up_entry(st, leaf, piece.root, PD, JD, A4, ACH,
                               True, True, scratch)
        up[leaf] = (_materialize(ch, (), None), Mat2Z(*m4), jd)
        m4, ch, jd = _down_entry(st, leaf, piece.root, PD, JD, B4, BCH,
                                 True, True, scratch)
        down[leaf] = (_materialize(None, (), ch), Mat2Z(*m4), jd)
    return LeafTable(piece.root, root_dart, up, down)


def all_generators_fast(st, stats=None, want_words=True, want_matrices=True):
    """All twin-pair generators by balanced recursion; order, words and
    matrices identical to all_generators_naive."""
    if stats is None:
        stats = RunStats()
    n = st.n
    npairs = st.n_pairs
    out = [None] * npairs
    size = st.n_nodes
    twin = st.twin
    on_tree = st.on_tree
    leaf_of = st.leaf_of
    leaf_dart = st.leaf_dart
    # whole-recursion scratch: membership stamps, orientation, development
    # tables; pieces alive at any moment are node-disjoint and each one is
    # fully consumed before its children run, so a single copy serves all
    member = [0] * size
    parent = [0] * size
    sizes = [0] * size
    order = [0] * size
    PD = [None] * size
    JD = [None] * size
    A4 = [None] * size
    ACH = [None] * size
    B4 = [None] * size
    BCH = [None] * size
    # nbr[d]: the split-tree node behind dart d (interior or leaf side)
    nbr = [twin[d] // 3 if on_tree[d] else n + leaf_of[d]
           for d in range(3 * n)]
    ticket = [0]

    def next_stamp():
        ticket[0] += 1
        return ticket[0]

    def orient(root, stamp):
        """DFS over member==stamp from root; fills order/parent/sizes,
        returns the node count.  A tree has no cross edges, so the parent
        check alone prevents revisits."""
        parent[root] = -1
        sizes[root] = 1
        order[0] = root
        m = 1
        stack = [root]
        while stack:
            x = stack.pop()
            px = parent[x]
            if x >= n:
                y = leaf_dart[x - n] // 3
                if y != px and member[y] == stamp:
                    parent[y] = x
                    sizes[y] = 1
                    order[m] = y
                    m += 1
                    stack.append(y)
                continue
            base = 3 * x
            for d in (base, base + 1, base + 2):
                y = nbr[d]
                if y != px and member[y] == stamp:
                    parent[y] = x
                    sizes[y] = 1
                    order[m] = y
                    m += 1
                    stack.append(y)
        for k in range(m - 1, 0, -1):
            x = order[k]
            sizes[parent[x]] += sizes[x]
        return m

    def solve(root, stamp, V, pairs, depth):
        if not pairs:
            return
        if depth > stats.max_depth:
            stats.max_depth = depth
        stats.visits += V
        if V < 2:
            raise TriangulationError("cannot split a %d-vertex piece" % V)
        m = orient(root, stamp)
        if m != V:
            raise TriangulationError("piece is not connected")
        best_worse = V + 1
        best_a = best_b = best_child = -1
        for k in range(1, m):
            x = order[k]
            s = sizes[x]
            worse = s if s >= V - s else V - s
            if worse > best_worse:
                continue
            p = parent[x]
            a, b = (x, p) if x < p else (p, x)
            if (worse < best_worse or a < best_a
                    or (a == best_a and b < best_b)):
                best_worse, best_a, best_b, best_child = worse, a, b, x
        v = best_child
        u = parent[v]
        size_v = sizes[v]
        size_u = V - size_v
        bigger = size_u if size_u >= size_v else size_v
        assert 3 * bigger <= 2 * V + 6, "split bound violated: %d of %d" % (bigger, V)
        # restamp side v by DFS from v avoiding u, then sweep the old
        # stamp's survivors into side u
        stamp_v = next_stamp()
        member[v] = stamp_v
        stack = [v]
        while stack:
            x = stack.pop()
            if x >= n:
                y = leaf_dart[x - n] // 3
                if y != u and member[y] == stamp:
                    member[y] = stamp_v
                    stack.append(y)
                continue
            base = 3 * x
            for d in (base, base + 1, base + 2):
                y = nbr[d]
                if y != u and member[y] == stamp:
                    member[y] = stamp_v
                    stack.append(y)
        stamp_u = next_stamp()
        for k in range(m):
            x = order[k]
            if member[x] == stamp:
                member[x] = stamp_u
        pairs_u = []
        pairs_v = []
        cross = []
        for i in pairs:
            a_in_u = member[n + 2 * i] == stamp_u
            b_in_u = member[n + 2 * i + 1] == stamp_u
            if a_in_u and b_in_u:
                pairs_u.append(i)
            elif not a_in_u and not b_in_u:
                pairs_v.append(i)
            else:
                cross.append(i)
        if cross:
            du, dv = _edge_darts(st, u, v)
            need_up_u = need_down_u = need_up_v = need_down_v = False
            for i in cross:
                if member[n + 2 * i] == stamp_u:
                    need_up_u = True
                    need_down_v = True
                else:
                    need_up_v = True
                    need_down_u = True
            if u < n and (need_up_u or need_down_u):
                _develop(st, u, member, stamp_u, PD, JD, A4, ACH, B4, BCH,
                         need_up_u, need_down_u, want_words, want_matrices, stats)
            if v < n and (need_up_v or need_down_v):
                _develop(st, v, member, stamp_v, PD, JD, A4, ACH, B4, BCH,
                         need_up_v, need_down_v, want_words, want_matrices, stats)
            for i in cross:
                c1 = 2 * i
                c2 = 2 * i + 1
                if member[n + c1] == stamp_u:
                    r1, d1, r2, d2 = u, du, v, dv
                else:
                    r1, d1, r2, d2 = v, dv, u, du
                mid = []
                if r1 >= n:
                    m_up, ch_up = _ID4, None
                else:
                    m_up, ch_up, j1 = _up_entry(st, c1, r1, PD, JD, A4, ACH,
                                                want_words, want_matrices, stats)
                    t1 = (d1 - j1) % 3
                    if t1 == 0:
                        raise BacktrackNotAFork("degenerate junction at %d" % r1)
                    mid.append(t1)
                if r2 >= n:
                    m_dn, ch_dn = _ID4, None
                else:
                    m_dn, ch_dn, j2 = _down_entry(st, c2, r2, PD, JD, B4, BCH,
                                                  want_words, want_matrices, stats)
                    t2 = (j2 - d2) % 3
                    if t2 == 0:
                        raise BacktrackNotAFork("degenerate junction at %d" % r2)
                    mid.append(t2)
                word = None
                if want_words:
                    chars = ['L' if t == 1 else 'R' for t in mid]
                    word = _materialize(ch_up, chars, ch_dn)
                stats.letters += len(mid)
                # _ID4 is compared by object identity: entries hand back
                # the shared tuple exactly when their side contributes
                # nothing, so counters agree across matrix/no-matrix runs
                mm = m_up
                for t in mid:
                    if want_matrices:
                        mm = _rmul_letter(mm, t)
                    stats.mults += 1
                if m_dn is not _ID4:
                    if want_matrices:
                        mm = _mul4(mm, m_dn)
                    stats.mults += 1
                matrix = Mat2Z(*mm) if want_matrices else None
                out[i] = Generator((c1, c2), word, matrix)
        solve(u, stamp_u, size_u, pairs_u, depth + 1)
        solve(v, stamp_v, size_v, pairs_v, depth + 1)

    root = st.leaf_node(0)
    first = next_stamp()
    for x in range(size):
        member[x] = first
    solve(root, first, size, list(range(npairs)), 1)
    return GeneratorSet(tuple(out))
