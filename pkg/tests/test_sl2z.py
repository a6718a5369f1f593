import pytest
from hypothesis import given, strategies as st

from surfgroup.sl2z import (IDENTITY, MAT_L, MAT_R, Mat2Z, MatrixAccumulator,
                            inverse, mat_of_letter, mat_of_word, multiply,
                            psl_equal, trace)
from surfgroup.words import RunStats

words = st.text(alphabet='LR', max_size=60)


def test_letter_matrices():
    assert MAT_L == Mat2Z(1, 1, 0, 1)
    assert MAT_R == Mat2Z(1, 0, 1, 1)
    assert mat_of_letter('L') == MAT_L
    assert mat_of_letter('R') == MAT_R
    assert MAT_L.det() == 1 and MAT_R.det() == 1
    # both letters are parabolic, which is what keeps cusps parabolic
    assert abs(MAT_L.trace()) == 2 and abs(MAT_R.trace()) == 2


def test_multiply_example():
    assert multiply(MAT_L, MAT_R) == Mat2Z(2, 1, 1, 1)
    assert MAT_L * MAT_R == Mat2Z(2, 1, 1, 1)


def test_identity_and_inverse():
    m = mat_of_word('LRRLRL')
    assert m * IDENTITY == m
    assert IDENTITY * m == m
    assert m * m.inverse() == IDENTITY
    assert inverse(m) == m.inverse()
    assert m.inverse().det() == 1


def _reverse_swap(w):
    return w[::-1].translate(str.maketrans('LR', 'RL'))


def test_transpose_swaps_letters():
    assert MAT_L.transpose() == MAT_R
    assert mat_of_word('LLR').transpose() == mat_of_word('LRR')


@given(words)
def test_transpose_is_reversed_swapped_word(w):
    assert mat_of_word(w).transpose() == mat_of_word(_reverse_swap(w))


def test_trace_and_rows():
    m = Mat2Z(2, 1, 1, 1)
    assert trace(m) == 3
    assert m.trace() == 3
    assert m.rows() == [[2, 1], [1, 1]]
    assert Mat2Z.from_rows(((2, 1), (1, 1))) == m


def test_repr_round_trip():
    m = mat_of_word('RLLRR')
    assert repr(m) == '[[%d,%d],[%d,%d]]' % (m.a, m.b, m.c, m.d)


def test_psl_equal():
    m = mat_of_word('LR')
    assert psl_equal(m, m)
    assert psl_equal(m, -m)
    assert not psl_equal(m, m.inverse())
    # an order-3 elliptic element cubes to the identity on the nose
    e = Mat2Z(0, -1, 1, -1)
    assert e.det() == 1
    assert e * e * e == IDENTITY
    # while the order-4 one squares to -I, identity only projectively
    s = Mat2Z(0, -1, 1, 0)
    assert s * s == -IDENTITY
    assert psl_equal(s * s, IDENTITY)
    assert psl_equal(e * e * e, IDENTITY)


@given(words, words)
def test_word_product_is_monoid_hom(w1, w2):
    assert mat_of_word(w1 + w2) == mat_of_word(w1) * mat_of_word(w2)


@given(words)
def test_word_matrices_unimodular_nonnegative(w):
    m = mat_of_word(w)
    assert m.det() == 1
    assert m.a >= 0 and m.b >= 0 and m.c >= 0 and m.d >= 0


def _decode_word(m):
    """Read the word back off its matrix by undoing column additions.

    Right-multiplying by R adds column two into column one, by L the
    reverse, and the entries stay nonnegative; so at every step exactly
    one subtraction is legal and the word is recovered from the right.
    Independent of the multiplication code under test.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    out = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a >= b and c >= d and (a > b or c > d):
            a -= b
            c -= d
            out.append('R')
        elif b >= a and d >= c and (b > a or d > c):
            b -= a
            d -= c
            out.append('L')
        else:
            raise AssertionError('not a word matrix: %r' % (m,))
    out.reverse()
    return ''.join(out)


@given(words)
def test_decode_recovers_word(w):
    assert _decode_word(mat_of_word(w)) == w


def test_decode_long_word():
    w = 'LRRLRLLRRRLL' * 25
    assert _decode_word(mat_of_word(w)) == w


def test_fibonacci_entries_frozen():
    # (LR)^n = [[F(2n+1), F(2n)], [F(2n), F(2n-1)]]; these literals are
    # the standard Fibonacci values, written down independently
    m = mat_of_word('LR' * 50)
    assert m.a == 573147844013817084101
    assert m.b == 354224848179261915075
    assert m.c == 354224848179261915075
    assert m.d == 218922995834555169026


def test_accumulator_matches_product():
    stats = RunStats()
    acc = MatrixAccumulator(stats)
    word = 'RLLRRRLLRL'
    for ch in word:
        acc.push(ch)
    assert acc.value() == mat_of_word(word)
    assert stats.mults == len(word)


def test_accumulator_push_word():
    acc = MatrixAccumulator()
    acc.push_word('LRLR')
    acc.push_word('RL')
    assert acc.value() == mat_of_word('LRLRRL')


def test_mat_of_word_counts(capsys):
    stats = RunStats()
    mat_of_word('LRL', stats)
    assert stats.mults == 3


def test_hashable_and_eq():
    assert len({mat_of_word('LR'), mat_of_word('LR'), mat_of_word('RL')}) == 2
    assert mat_of_word('LR') != mat_of_word('RL')


def test_neg():
    m = mat_of_word('LR')
    assert -m == Mat2Z(-m.a, -m.b, -m.c, -m.d)
    assert (-m).det() == 1
