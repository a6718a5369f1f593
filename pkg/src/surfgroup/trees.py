"""Spanning tree of the dual 1-skeleton and the split tree it induces.

Every dual edge is either a tree edge or a co-tree edge.  Splitting each
co-tree edge into a pair of twin leaves C1, C2 turns the dual into a tree
whose interior vertices are the n triangles (still degree 3, still carrying
their slot order) and whose n+2 leaves pair up one twin pair per co-tree
edge.  Each twin pair contributes one free generator, so there are exactly
n/2 + 1 of them.

Edges are identified by their lower dart id (an edge is a dart plus its
twin).  Co-tree edges keep their breadth-first discovery order, and the
discovery dart marks the C1 side; this is what makes generator lists
reproducible across runs and across the two path engines.

Split-tree nodes are numbered: interior vertex v is node v, leaf j is node
n + j, with leaves 2i and 2i+1 the C1/C2 twins of co-tree edge i.
"""

from collections import deque, namedtuple

SpanningTree = namedtuple('SpanningTree',
                          'root parent tree_edges cotree_edges cotree_darts')
SpanningTree.__doc__ += """

root: start vertex (always 0).  parent: vertex -> (parent vertex, edge key)
for every non-root vertex.  tree_edges: frozenset of edge keys.
cotree_edges: edge keys in discovery order.  cotree_darts: the dart by
which each co-tree edge was first seen (its C1 side), same order.
"""


def spanning_tree(dual):
    """Breadth-first spanning tree from vertex 0, darts scanned in slot order."""
    twin = dual.graph.twin
    n = dual.n
    visited = [False] * n
    visited[0] = True
    parent = {}
    tree_edges = set()
    cotree_edges = []
    cotree_darts = []
    classified = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for s in range(3):
            d = 3 * v + s
            t = twin[d]
            key = d if d < t else t
            if key in classified:
                continue
            classified.add(key)
            w = t // 3
            if visited[w]:
                cotree_edges.append(key)
                cotree_darts.append(d)
            else:
                visited[w] = True
                tree_edges.add(key)
                parent[w] = (v, key)
                queue.append(w)
    return SpanningTree(0, parent, frozenset(tree_edges),
                        tuple(cotree_edges), tuple(cotree_darts))


class SplitTree(object):
    """The dual with every co-tree edge cut into a twin pair of leaves."""

    __slots__ = ('n', 'twin', 'on_tree', 'leaf_of', 'leaf_dart', 'n_nodes')

    def __init__(self, n, twin, on_tree, leaf_of, leaf_dart):
        self.n = n
        self.twin = twin
        self.on_tree = on_tree          # per dart: True iff its edge is in the tree
        self.leaf_of = leaf_of          # co-tree dart -> leaf id
        self.leaf_dart = leaf_dart      # leaf id -> the dart it replaced
        self.n_nodes = n + len(leaf_dart)

    @property
    def n_leaves(self):
        return len(self.leaf_dart)

    @property
    def n_pairs(self):
        return len(self.leaf_dart) // 2

    def leaf_node(self, j):
        return self.n + j

    def is_leaf_node(self, x):
        return x >= self.n

    def twin_leaf(self, j):
        return j ^ 1

    @property
    def twins(self):
        return [(2 * i, 2 * i + 1) for i in range(self.n_pairs)]

    def origin(self, j):
        """(edge key, end) for leaf j: end 1 is the C1 side, 2 the C2 side."""
        d = self.leaf_dart[j]
        t = self.twin[d]
        return (d if d < t else t, 1 + (j & 1))

    def neighbors(self, x):
        """Incident edges of node x as (neighbor node, dart at x, dart at neighbor).

        Dart fields are None on a leaf's own side.  Interior neighbors are
        listed in slot order, which fixes every traversal in the package.
        """
        if x >= self.n:
            d = self.leaf_dart[x - self.n]
            return [(d // 3, None, d)]
        out = []
        for s in range(3):
            d = 3 * x + s
            if self.on_tree[d]:
                t = self.twin[d]
                out.append((t // 3, d, t))
            else:
                out.append((self.n + self.leaf_of[d], d, None))
        return out


def split(dual, sptree):
    """Cut each co-tree edge of the spanning tree into twin leaves C1, C2.

    Leaf 2i replaces the discovery-dart side of co-tree edge i and leaf
    2i+1 the twin side; each leaf occupies the exact slot its edge end
    held, so turn letters are unaffected by the split.  A co-tree loop
    yields two leaves on the same interior vertex.
    """
    twin = dual.graph.twin
    n = dual.n
    on_tree = [False] * (3 * n)
    for key in sptree.tree_edges:
        on_tree[key] = True
        on_tree[twin[key]] = True
    leaf_of = {}
    leaf_dart = []
    for i, d in enumerate(sptree.cotree_darts):
        leaf_of[d] = 2 * i
        leaf_of[twin[d]] = 2 * i + 1
        leaf_dart.append(d)
        leaf_dart.append(twin[d])
    st = SplitTree(n, twin, tuple(on_tree), leaf_of, tuple(leaf_dart))
    assert st.n_leaves == n + 2, "a tree of %d degree-3 vertices must have %d leaves" % (n, n + 2)
    return st
