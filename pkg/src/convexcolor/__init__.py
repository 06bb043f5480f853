"""Optimal colorings of the disjointness graph of chords of a convex polygon."""

from .bounds import (ExhaustiveMaxReport, ThrackleFamily, UnionBoundReport,
                     exhaustive_union_max, extremal_family, union_edge_bound,
                     verify_union_bound)
from .coloring import (ColoringCertificate, CoverVerdict, CoveringPath, RestrictedPath,
                       TriangularBlock, block_of, chi_formula, column_coverage_witness,
                       covering_path, is_triangular, optimal_coloring, path_indices,
                       restrict_path, triangular_k, verify_coloring)
from .core import (DnGraph, all_segments, build_dn, cell_count, cell_to_segment, cross,
                   disjoint, disjoint_by_geometry, disjoint_pairs, in_lattice,
                   is_independent_set, lattice_cells, segment_to_cell, share_endpoint)
from .docio import (DocumentError, emit_certificate, emit_thrackles, parse_certificate,
                    parse_thrackles)
from .exact import (ChromaticResult, SmallGraph, chromatic_number_exact,
                    enumerate_maximal_independent_sets, enumerate_maximal_paths)
from .svgfig import render_certificate, render_chords, render_polyomino, render_thrackles
from .thrackles import (MaximalThrackle, ThracklePath, common_edge, conflict_triples,
                        decompose, from_cycle, is_maximal_thrackle, is_thrackle,
                        path_cycle_labels, path_from_thrackle, random_disjoint_cycle_pair,
                        random_family, random_maximal_thrackle, random_path, split_vertex,
                        thrackle_from_path, wedge_apex, wedge_contains)

__version__ = "0.1.0"
