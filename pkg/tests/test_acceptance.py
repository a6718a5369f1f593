"""Acceptance gate: one test, and one printed PASS/FAIL line, per criterion.

Run with -s (or read captured output on failure) to see the lines.  The
random-instance ladder is built once and shared by criteria 1 through 4.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from surfgroup.fastpaths import (Piece, all_generators_fast, find_split_edge,
                                 centroid_diagnostic)
from surfgroup.generate import gen_random, long_diameter_instance
from surfgroup.surface import build_dual, invariants_of
from surfgroup.trees import spanning_tree, split
from surfgroup.verify import (INFINITY, check_cusps, diff_generator_sets,
                              horocycle_ratio, shear, side_pairing)
from surfgroup.words import RunStats, all_generators_naive

from conftest import make_pipeline, SPHERE_TWIN, TORUS_TWIN

LADDER_NS = tuple(2 ** k for k in range(1, 12))  # 2, 4, ..., 2048
PER_SIZE = 100


def _criterion(num, ok, detail):
    print('criterion %d: %s  %s' % (num, 'PASS' if ok else 'FAIL', detail))
    assert ok, detail


@pytest.fixture(scope='module')
def ladder():
    t0 = time.perf_counter()
    records = []
    mismatches = []
    for n in LADDER_NS:
        for i in range(PER_SIZE):
            tri = gen_random(n, 1000 * n + i)
            dual = build_dual(tri)
            st = split(dual, spanning_tree(dual))
            fast = all_generators_fast(st)
            naive = all_generators_naive(st)
            d = diff_generator_sets(fast, naive)
            if d is not None:
                mismatches.append((n, i, d))
            records.append((n, dual, st, fast))
    elapsed = time.perf_counter() - t0
    return {'records': records, 'mismatches': mismatches, 'elapsed': elapsed}


def test_criterion_1_oracle_equivalence(ladder):
    n_inst = len(ladder['records'])
    ok = not ladder['mismatches'] and ladder['elapsed'] < 60.0
    _criterion(1, ok,
               'fast == naive exactly on %d instances (n=%d..%d) in %.1fs; '
               'mismatches: %r'
               % (n_inst, LADDER_NS[0], LADDER_NS[-1], ladder['elapsed'],
                  ladder['mismatches'][:3]))


def test_criterion_2_generator_count(ladder):
    bad = [(n, len(gens.generators))
           for n, _dual, _st, gens in ladder['records']
           if len(gens.generators) != n // 2 + 1]
    _criterion(2, not bad,
               'every instance yields n/2 + 1 generators; violations: %r'
               % bad[:3])


def test_criterion_3_unimodular(ladder):
    bad = []
    for n, _dual, _st, gens in ladder['records']:
        for g in gens.generators:
            m = g.matrix
            if m.det() != 1 or not all(
                    isinstance(x, int) for x in (m.a, m.b, m.c, m.d)):
                bad.append((n, g.pair))
    _criterion(3, not bad,
               'all generator matrices are integral with determinant 1; '
               'violations: %r' % bad[:3])


def test_criterion_4_cusps_parabolic(ladder):
    bad = []
    n_cusps = 0
    for n, dual, st, gens in ladder['records']:
        rep = check_cusps(dual, st, gens)
        n_cusps += len(rep.traces)
        if not rep.ok:
            bad.append((n, rep.failures[0]))
    _criterion(4, not bad,
               'all %d cusp holonomies across the ladder have |trace| = 2; '
               'violations: %r' % (n_cusps, bad[:3]))


def _adjacency(st):
    adj = {x: [] for x in range(st.n_nodes)}
    for v in range(st.n):
        for w, _dv, _dw in st.neighbors(v):
            adj[v].append(w)
            if w >= st.n:
                adj[w].append(v)
    return adj


def _part_sizes(adj, banned_vertex, start_set):
    sizes = []
    todo = set(start_set)
    while todo:
        comp = 0
        stack = [todo.pop()]
        seen = {stack[0]}
        while stack:
            x = stack.pop()
            comp += 1
            for y in adj[x]:
                if y != banned_vertex and y not in seen:
                    seen.add(y)
                    stack.append(y)
        todo -= seen
        sizes.append(comp)
    return sizes


def _brute_centroid(st):
    adj = _adjacency(st)
    everything = set(range(st.n_nodes))
    best = None
    for x in range(st.n):
        worst = max(_part_sizes(adj, x, everything - {x}))
        if best is None or (worst, x) < best:
            best = (worst, x)
    return best[1], best[0]


def test_criterion_5_split_balance():
    rng = random.Random(505)
    bad = []
    brute_checked = 0
    for trial in range(500):
        n = 2 * rng.randint(1, 249)
        dual = build_dual(gen_random(n, rng.randint(0, 10 ** 9)))
        st = split(dual, spanning_tree(dual))
        V = st.n_nodes
        v, n_max, n_med, n_min = centroid_diagnostic(st)
        if not (V - 1 <= 3 * n_max <= 2 * V + 3):
            bad.append(('vertex bound', n, V, n_max))
        res = find_split_edge(st)
        if 3 * max(res.sizes) > 2 * V + 6:
            bad.append(('edge bound', n, V, res.sizes))
        if V <= 200:
            brute_checked += 1
            bv, bmax = _brute_centroid(st)
            if (bv, bmax) != (v, n_max):
                bad.append(('brute mismatch', n, (v, n_max), (bv, bmax)))
    _criterion(5, not bad,
               '500 random split trees (V <= 1000) meet the balance bounds, '
               '%d brute-forced; violations: %r' % (brute_checked, bad[:3]))


def test_criterion_6_work_growth():
    fast_counts = []
    naive_counts = []
    for k in range(6, 14):
        n = 2 ** k
        dual = build_dual(long_diameter_instance(n))
        st = split(dual, spanning_tree(dual))
        sf = RunStats()
        all_generators_fast(st, sf, want_words=False, want_matrices=False)
        sn = RunStats()
        all_generators_naive(st, sn, want_words=False, want_matrices=False)
        fast_counts.append(sf.mults)
        naive_counts.append(sn.mults)
    fast_ratios = [fast_counts[i + 1] / fast_counts[i]
                   for i in range(len(fast_counts) - 1)]
    naive_ratios = [naive_counts[i + 1] / naive_counts[i]
                    for i in range(len(naive_counts) - 1)]
    t0 = time.perf_counter()
    tri = gen_random(100000, 0)
    dual = build_dual(tri)
    st = split(dual, spanning_tree(dual))
    gens = all_generators_fast(st)
    wall = time.perf_counter() - t0
    ok = (all(r <= 2.5 for r in fast_ratios)
          and all(r > 3.4 for r in naive_ratios[3:])
          and wall < 10.0
          and len(gens.generators) == 50001)
    _criterion(6, ok,
               'doubling ratios on the long-diameter family: fast %s (all '
               '<= 2.5), naive tail %s (all > 3.4); full run at n=100000 '
               'took %.1fs' % (['%.2f' % r for r in fast_ratios],
                               ['%.2f' % r for r in naive_ratios[3:]], wall))


def test_criterion_7_shear_consistency():
    rng = random.Random(77)
    bad = []
    for _ in range(50):
        den = rng.randint(1, 100)
        num = rng.randint(1, 100 * den - 1)
        z = Fraction(num, den)
        ratio = horocycle_ratio(z)
        s = shear(INFINITY, Fraction(0), Fraction(-1), z)
        if ratio != z or abs(math.log(ratio) - s) > 1e-12:
            bad.append((z, ratio, s))
    _criterion(7, not bad,
               '50 rational horocycle ratios in (0,100) are exact and agree '
               'with the shear to 1e-12; violations: %r' % bad[:3])


def test_criterion_8_named_fixtures():
    problems = []
    _tri, dual, st = make_pipeline(SPHERE_TWIN)
    inv = invariants_of(dual)
    gens = all_generators_fast(st)
    if (inv.cusps, inv.genus) != (3, 0):
        problems.append('sphere invariants %r' % (inv,))
    if len(gens.generators) != 2:
        problems.append('sphere generator count %d' % len(gens.generators))
    if not check_cusps(dual, st, gens).ok:
        problems.append('sphere cusp not parabolic')

    _tri, dual, st = make_pipeline(TORUS_TWIN)
    inv = invariants_of(dual)
    gens = all_generators_fast(st)
    if (inv.cusps, inv.genus) != (1, 1):
        problems.append('torus invariants %r' % (inv,))
    if len(gens.generators) != 2:
        problems.append('torus generator count %d' % len(gens.generators))
    a, b = (side_pairing(st, g) for g in gens.generators)
    comm = a * b * a.inverse() * b.inverse()
    if abs(comm.trace()) != 2:
        problems.append('torus commutator trace %d' % comm.trace())
    _criterion(8, not problems,
               'one-cusped torus and three-cusped sphere check out; '
               'problems: %r' % problems)
