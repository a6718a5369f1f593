"""Command-line front end.

Exit codes: 0 success, 1 invalid input or arguments, 2 verification
failure.  Output is byte-identical for identical input, flags and seed,
except for the wall-time entry under --stats, which is the one
deliberately nondeterministic field.
"""

import argparse
import json
import sys
import time
from collections import namedtuple

from .errors import TriangulationError
from .fastpaths import all_generators_fast
from .generate import gen_random
from .surface import build_dual, invariants_of, parse_tri
from .trees import spanning_tree, split
from .verify import check_cusps, check_generator_set
from .words import RunStats, all_generators_naive

RunConfig = namedtuple(
    'RunConfig',
    'input_path gen_n seed algorithm verify stats dump_faces dump_tree fmt')
RunConfig.__new__.__defaults__ = (None, None, 0, 'fast', False, False,
                                  False, False, 'text')


def _matrix_doc(m):
    # decimal strings: entries outgrow every fixed-width number format
    return [[str(m.a), str(m.b)], [str(m.c), str(m.d)]]


def _json_doc(tri, dual, inv, st, gens, config, checks, stats, wall):
    doc = {
        'triangles': tri.n,
        'algorithm': config.algorithm,
        'invariants': {
            'cusps': inv.cusps,
            'euler': inv.euler,
            'genus': inv.genus,
            'rank': inv.rank,
        },
        'generators': [
            {
                'pair': list(g.pair),
                'edge': [st.leaf_dart[g.pair[0]], st.leaf_dart[g.pair[1]]],
                'word': g.word,
                'matrix': _matrix_doc(g.matrix),
            }
            for g in gens.generators
        ],
    }
    if config.dump_faces:
        doc['faces'] = [list(f.darts) for f in dual.faces]
    if config.dump_tree:
        tree = spanning_tree(dual)
        twin = dual.graph.twin
        doc['tree'] = {
            'root': tree.root,
            'edges': [[k, k // 3, twin[k] // 3]
                      for k in sorted(tree.tree_edges)],
            'cotree_edges': [[k, twin[k]] for k in tree.cotree_edges],
        }
    if checks is not None:
        doc['checks'] = checks
    if config.stats:
        d = stats.as_dict()
        d['wall_time_s'] = wall
        doc['stats'] = d
    return json.dumps(doc, indent=2) + '\n'


def _text_doc(tri, dual, inv, st, gens, config, checks, stats, wall):
    lines = []
    lines.append('triangles %d  cusps %d  euler %d  genus %d  rank %d'
                 % (tri.n, inv.cusps, inv.euler, inv.genus, inv.rank))
    for i, g in enumerate(gens.generators):
        lines.append('generator %d: pair (%d,%d) edge (%d,%d) word %s matrix %s'
                     % (i, g.pair[0], g.pair[1],
                        st.leaf_dart[g.pair[0]], st.leaf_dart[g.pair[1]],
                        g.word, g.matrix))
    if config.dump_faces:
        for i, f in enumerate(dual.faces):
            lines.append('face %d: darts %s' % (i, ' '.join(map(str, f.darts))))
    if config.dump_tree:
        tree = spanning_tree(dual)
        twin = dual.graph.twin
        lines.append('tree root %d  edges %s' % (
            tree.root,
            ' '.join('%d-%d' % (k // 3, twin[k] // 3)
                     for k in sorted(tree.tree_edges))))
    if checks is not None:
        if checks['ok']:
            lines.append('checks: ok (%d cusps parabolic, %d generators)'
                         % (inv.cusps, inv.rank))
        else:
            for f in checks['failures']:
                lines.append('check failed: %s' % f)
    if config.stats:
        d = stats.as_dict()
        lines.append('stats: mults=%d letters=%d visits=%d depth=%d wall=%.3fs'
                     % (d['mults'], d['letters'], d['visits'],
                        d['max_depth'], wall))
    return '\n'.join(lines) + '\n'


def run(config):
    """Execute one pipeline pass; returns (exit code, stdout, stderr)."""
    if (config.input_path is None) == (config.gen_n is None):
        raise TriangulationError("need exactly one of an input file and --gen-random")
    if config.input_path is not None:
        with open(config.input_path) as fh:
            tri = parse_tri(fh.read())
    else:
        n = config.gen_n
        if n < 2 or n % 2:
            raise TriangulationError("--gen-random needs an even count >= 2, got %d" % n)
        tri = gen_random(n, config.seed)
    dual = build_dual(tri)
    inv = invariants_of(dual)
    st = split(dual, spanning_tree(dual))
    stats = RunStats()
    engine = all_generators_fast if config.algorithm == 'fast' else all_generators_naive
    t0 = time.perf_counter()
    gens = engine(st, stats)
    wall = time.perf_counter() - t0
    checks = None
    code = 0
    err = ''
    if config.verify:
        structural = check_generator_set(gens, inv)
        cusps = check_cusps(dual, st, gens)
        failures = list(structural.failures) + list(cusps.failures)
        checks = {
            'ok': not failures,
            'failures': failures,
            'cusp_traces': [int(t) for t in cusps.traces],
        }
        if failures:
            code = 2
            err = ''.join('verification failed: %s\n' % f for f in failures)
    render = _json_doc if config.fmt == 'json' else _text_doc
    out = render(tri, dual, inv, st, gens, config, checks, stats, wall)
    return code, out, err


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is taken by verification failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '%s: error: %s\n' % (self.prog, message))


def build_parser():
    p = _Parser(
        prog='surfgroup',
        description='Free generating set in PSL(2,Z) for the fundamental '
                    'group of an ideally triangulated cusped surface.')
    src = p.add_mutually_exclusive_group()
    src.add_argument('--input', metavar='FILE',
                     help='triangulation file (see README for the format)')
    src.add_argument('--gen-random', metavar='N', type=int,
                     help='generate a random instance with N triangles')
    p.add_argument('--seed', type=int, default=0,
                   help='random seed for --gen-random (default 0)')
    p.add_argument('--algorithm', choices=('fast', 'naive'), default='fast',
                   help='generator engine (default fast)')
    p.add_argument('--verify', action='store_true',
                   help='run structural and cusp-holonomy checks')
    p.add_argument('--stats', action='store_true',
                   help='report operation counters and wall time')
    p.add_argument('--dump-faces', action='store_true',
                   help='include the dual boundary faces')
    p.add_argument('--dump-tree', action='store_true',
                   help='include the spanning tree')
    p.add_argument('--format', choices=('json', 'text'), default='text',
                   dest='fmt', help='output format (default text)')
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = RunConfig(
        input_path=args.input,
        gen_n=args.gen_random,
        seed=args.seed,
        algorithm=args.algorithm,
        verify=args.verify,
        stats=args.stats,
        dump_faces=args.dump_faces,
        dump_tree=args.dump_tree,
        fmt=args.fmt,
    )
    try:
        code, out, err = run(config)
    except TriangulationError as e:
        sys.stderr.write('%s: %s\n' % (type(e).__name__, e))
        return 1
    except OSError as e:
        sys.stderr.write('%s\n' % e)
        return 1
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == '__main__':
    sys.exit(main())
