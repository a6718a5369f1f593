"""Free generating sets in PSL(2,Z) for ideally triangulated cusped surfaces.

Pipeline: a gluing of n ideal triangles -> its dual cubic graph with
boundary faces -> a spanning tree with the co-tree edges cut into leaf
twins -> one generator per twin pair, as an {L,R} turn word and its exact
integer matrix.  Two engines produce identical output: a naive per-pair
tree walk and a balanced divide-and-conquer that shares path segments.
A verification layer develops the triangles in the upper half plane and
checks cusp holonomies independently.
"""

from .errors import (BacktrackNotAFork, DegenerateConfiguration,
                     Disconnected, GenerationFailed, NoInteriorVertex,
                     NonIntegralGenus, NonPositive, NotTwins,
                     OddTriangleCount, SameSide, SlotPairedTwice,
                     SlotSelfPaired, SlotUnpaired, TriangulationError)
from .fastpaths import (LeafTable, Piece, SplitResult, all_generators_fast,
                        centroid_diagnostic, find_split_edge, leaf_table)
from .generate import gen_random, long_diameter_instance
from .rotation import Dart, FaceCycle, RotationGraph, trace_faces
from .sl2z import (IDENTITY, MAT_L, MAT_R, Mat2Z, MatrixAccumulator,
                   inverse, mat_of_letter, mat_of_word, multiply, psl_equal,
                   trace)
from .surface import (DualComplex, GluedTriangulation, SurfaceInvariants,
                      build_dual, format_tri, invariants_of, parse_tri,
                      validate)
from .trees import SpanningTree, SplitTree, spanning_tree, split
from .verify import (INFINITY, CuspReport, Report, check_cusps,
                     check_generator_set, cross_ratio, cusp_holonomy,
                     develop_step, full_check, horocycle_ratio,
                     oracle_compare, shear, side_pairing)
from .words import (Generator, GeneratorSet, RunStats, all_generators_naive,
                    path_word, turn_at)

__version__ = '0.1.0'

__all__ = [
    'BacktrackNotAFork', 'CuspReport', 'Dart', 'DegenerateConfiguration',
    'Disconnected', 'DualComplex', 'FaceCycle', 'GenerationFailed',
    'Generator', 'GeneratorSet', 'GluedTriangulation', 'IDENTITY',
    'INFINITY', 'LeafTable', 'MAT_L', 'MAT_R', 'Mat2Z', 'MatrixAccumulator',
    'NoInteriorVertex', 'NonIntegralGenus', 'NonPositive', 'NotTwins',
    'OddTriangleCount', 'Piece', 'Report', 'RotationGraph', 'RunStats',
    'SameSide', 'SlotPairedTwice', 'SlotSelfPaired', 'SlotUnpaired',
    'SpanningTree', 'SplitResult', 'SplitTree', 'SurfaceInvariants',
    'TriangulationError', 'all_generators_fast', 'all_generators_naive',
    'build_dual', 'check_cusps', 'check_generator_set', 'cross_ratio',
    'centroid_diagnostic', 'cusp_holonomy', 'develop_step',
    'find_split_edge', 'format_tri', 'full_check', 'gen_random',
    'horocycle_ratio', 'inverse', 'invariants_of', 'leaf_table',
    'long_diameter_instance', 'mat_of_letter', 'mat_of_word', 'multiply',
    'oracle_compare', 'parse_tri', 'path_word', 'psl_equal', 'shear',
    'side_pairing', 'spanning_tree', 'split', 'trace', 'trace_faces',
    'turn_at', 'validate',
]
