"""Exact computations with min-plus (tropical) polynomial systems."""

from .bounds import (BoundReport, arrangement_bound, betti_l_bound, buck_bound,
                     connected_bound_finite, connected_bound_infinite,
                     isolated_bound_infinite, isolated_bound_overdetermined)
from .certify import (PairChoice, is_generalized_vertex, is_stable, is_stable_brute_force,
                      isolated_necessary, isolated_necessary_brute_force, pair_vectors,
                      vertex_to_stable_multisets)
from .core import (INF, Monomial, TropicalPolynomial, TropicalSystem, evaluate, is_zero,
                   membership)
from .generators import gen_system_A, gen_system_B, gen_system_C
from .io import dumps_dsl, dumps_json, load, loads, parse_point, parse_polynomial
from .linear import LinearConstraint, Polyhedron, affine_dim, feasible, rank, solve_square
from .prevariety import (Cell, CellCapExceeded, ComponentReport, StableSolutions, cells,
                         connected_components, generalized_vertices, isolated_points,
                         local_dim, stable_solutions)
from .stars import (StarTable, local_radius, normalize_at, separation_margin, star_table,
                    table_contains)
from .svg import RenderSpec, render_svg
from .transform import CompactifiedSystem, bounding_box, compactify

__version__ = "0.1.0"
