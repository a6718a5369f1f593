"""Exact 2x2 integer matrix arithmetic for SL(2,Z) and PSL(2,Z).

Turn words are plain strings over the alphabet {'L', 'R'}.  The two letters
act on the upper half-plane as z -> z+1 and as the parabolic fixing 0:

    L = [[1,1],[0,1]]        R = [[1,0],[1,1]]

Words are multiplied out left to right, in path order.  Both letters are
parabolic, so every turn contributes a shear about an ideal vertex; this is
what makes the cusp-holonomy check in the verifier come out parabolic.

Python integers are arbitrary precision, so products of long words are exact;
entries of an alternating word of length k grow like the Fibonacci numbers.
"""

from .errors import TriangulationError


class Mat2Z(object):
    """Immutable 2x2 integer matrix [[a,b],[c,d]], determinant 1."""

    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a, b, c, d):
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'c', c)
        object.__setattr__(self, 'd', d)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2Z is immutable")

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse(self):
        # valid because det = 1
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def transpose(self):
        return Mat2Z(self.a, self.c, self.b, self.d)

    def __mul__(self, other):
        return Mat2Z(self.a * other.a + self.b * other.c,
                     self.a * other.b + self.b * other.d,
                     self.c * other.a + self.d * other.c,
                     self.c * other.b + self.d * other.d)

    def __neg__(self):
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, other):
        if not isinstance(other, Mat2Z):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "[[%d,%d],[%d,%d]]" % (self.a, self.b, self.c, self.d)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))


IDENTITY = Mat2Z(1, 0, 0, 1)
MAT_L = Mat2Z(1, 1, 0, 1)
MAT_R = Mat2Z(1, 0, 1, 1)


def mat_of_letter(letter):
    if letter == 'L':
        return MAT_L
    if letter == 'R':
        return MAT_R
    raise TriangulationError("unknown letter %r" % (letter,))


def multiply(m, n):
    return m * n


def inverse(m):
    return m.inverse()


def trace(m):
    return m.trace()


def psl_equal(m, n):
    """Equality in PSL(2,Z): m == n or m == -n."""
    return m == n or (m.a == -n.a and m.b == -n.b
                      and m.c == -n.c and m.d == -n.d)


class MatrixAccumulator(object):
    """Streaming left-to-right word product, one letter at a time.

    Multiplying by a letter on the right only needs two integer additions
    per row, so the accumulator never forms a generic product:

        M * L = [[a, a+b], [c, c+d]]     M * R = [[a+b, b], [c+d, d]]

    Each push counts as one matrix multiplication in `stats` when given
    (any object with a `mults` attribute).
    """

    __slots__ = ('a', 'b', 'c', 'd', 'stats')

    def __init__(self, stats=None):
        self.a, self.b, self.c, self.d = 1, 0, 0, 1
        self.stats = stats

    def push(self, letter):
        if letter == 'L':
            self.b = self.a + self.b
            self.d = self.c + self.d
        elif letter == 'R':
            self.a = self.a + self.b
            self.c = self.c + self.d
        else:
            raise TriangulationError("unknown letter %r" % (letter,))
        if self.stats is not None:
            self.stats.mults += 1

    def push_word(self, word):
        for letter in word:
            self.push(letter)

    def value(self):
        return Mat2Z(self.a, self.b, self.c, self.d)


def mat_of_word(word, stats=None):
    """Product mat(w1) * mat(w2) * ... for a word string; '' -> identity."""
    acc = MatrixAccumulator(stats)
    acc.push_word(word)
    return acc.value()
