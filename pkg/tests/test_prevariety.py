import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import (BINOMIAL_PAIR, CORPUS, LINE_DIRECTED, ONE_VAR, TROPICAL_LINE, TWO_ROWS,
                    convex_lift_poly, random_finite_corpus, uniform_poly)
from oracles import member_by_definition, rank_sympy
from tropsys.bounds import arrangement_bound
from tropsys.certify import is_generalized_vertex, is_stable, is_stable_brute_force
from tropsys.core import TropicalPolynomial, TropicalSystem, membership
from tropsys.generators import gen_system_A
from tropsys.io import loads_dsl
from tropsys.prevariety import (CellCapExceeded, cells, connected_components,
                                generalized_vertices, isolated_points, local_dim,
                                stable_solutions)
from tropsys.stars import local_radius, star_table

F = Fraction


# -- cells ------------------------------------------------------------------------


def test_single_variable_cell():
    cs = cells(ONE_VAR)
    assert len(cs) == 1 and cs[0].dim == 0 and cs[0].witness == (0,)


def test_tropical_line_cells():
    cs = cells(TROPICAL_LINE)
    assert len(cs) == 3 and all(c.dim == 1 for c in cs)
    assert all(c.contains((0, 0)) for c in cs)
    assert all(not c.polyhedron.is_bounded() for c in cs)


def test_half_line_through_minus_one_zero():
    rays = [c for c in cells(TWO_ROWS)
            if c.dim == 1 and c.contains((-1, 0)) and c.contains((-3, -2))]
    assert len(rays) == 1
    assert not rays[0].polyhedron.is_bounded()
    assert rays[0].contains((-101, -100))
    assert not rays[0].contains((0, 1))


def test_empty_prevariety():
    S = loads_dsl("vars: x\npoly: 0 (+) inf*x\n")
    assert cells(S) == []
    rep = connected_components(S)
    assert rep.count == 0 and rep.isolated == []


def test_all_infinite_rows_are_ignored():
    S = loads_dsl("vars: x\npoly: inf (+) inf*x\npoly: 0 (+) x\n")
    assert [c.witness for c in cells(S)] == [(0,)]
    everything = loads_dsl("vars: x\npoly: inf (+) inf*x\n")
    cs = cells(everything)
    assert len(cs) == 1 and cs[0].dim == 1


def test_cell_cap(monkeypatch):
    with pytest.raises(CellCapExceeded):
        cells(LINE_DIRECTED, cap=50)
    monkeypatch.setenv("TROP_CELL_CAP", "5")
    with pytest.raises(CellCapExceeded):
        cells(LINE_DIRECTED)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_cells_are_sound_and_within_arrangement_bound(name):
    S = CORPUS[name]
    cs = cells(S)
    for c in cs:
        assert member_by_definition(S, c.witness)
        for v in c.polyhedron.vertices():
            assert member_by_definition(S, v)
    assert len(cs) <= arrangement_bound(S.k, S.n, max(S.d, 1)).value


def _sample_points(S, rng, count=40):
    pts = set()
    for _ in range(count):
        pts.add(tuple(F(rng.randint(-12, 12), rng.choice((1, 2))) for _ in range(S.n)))
    return pts


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_coverage_on_grid(name):
    """A point is in the prevariety exactly when some cell contains it."""
    S = CORPUS[name]
    cs = cells(S)
    rng = random.Random(7)
    pts = _sample_points(S, rng, 300)
    for c in cs:
        pts.add(c.witness)
        verts = c.polyhedron.vertices()
        for a, b in product(verts, repeat=2):
            pts.add(tuple((x + y) / 2 for x, y in zip(a, b)))
    for x in pts:
        assert member_by_definition(S, x) == any(c.contains(x) for c in cs)


# -- components -----------------------------------------------------------------------


def test_component_examples():
    assert connected_components(TROPICAL_LINE).count == 1
    rep = connected_components(ONE_VAR)
    assert rep.count == 1 and rep.isolated == [(0,)]
    rep = connected_components(gen_system_A(3))
    assert rep.count == 4
    assert len(rep.isolated) == 2
    (x1, y1), (x2, y2) = rep.isolated
    assert x1 == x2 and abs(y1 - y2) == 3


def test_two_rows_components():
    rep = connected_components(TWO_ROWS)
    assert rep.count == 2
    assert rep.isolated == [(1, 0)]
    assert rep.component_of((-1, 0)) != rep.component_of((1, 0))
    assert rep.component_of((-3, -2)) == rep.component_of((-1, 0))
    assert rep.component_of((5, 5)) is None


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_representatives_are_in_distinct_components(name):
    rep = connected_components(CORPUS[name])
    labels = [rep.component_of(p) for p in rep.representatives]
    assert labels == list(range(rep.count))
    for p in rep.representatives + rep.isolated + rep.generalized_vertices:
        assert member_by_definition(CORPUS[name], p)


def test_every_finite_component_has_a_generalized_vertex():
    for S in random_finite_corpus(25, seed=3):
        rep = connected_components(S)
        hit = {rep.component_of(v) for v in rep.generalized_vertices}
        assert hit >= set(range(rep.count))


def test_invariance_under_shift_and_scaling():
    S = TWO_ROWS
    y = (F(1, 2), F(-3))
    moved = S.shift(tuple(-v for v in y)).scale([F(7), F(-2)])
    a, b = connected_components(S), connected_components(moved)
    assert a.count == b.count
    shift = lambda p: tuple(u + v for u, v in zip(p, y))
    assert sorted(map(shift, a.isolated)) == b.isolated
    assert sorted(map(shift, a.generalized_vertices)) == b.generalized_vertices


# -- local dimension -------------------------------------------------------------------


def test_local_dim_examples():
    assert local_dim(LINE_DIRECTED, (0, 0)) == 1
    assert local_dim(ONE_VAR, (0,)) == 0
    assert local_dim(TROPICAL_LINE, (0, 0)) == 1
    with pytest.raises(ValueError):
        local_dim(TROPICAL_LINE, (1, 2))


def _probe_local_dim(S, x) -> int:
    """0 iff no segment leaving ``x`` stays in V (n = 2 only)."""
    r = local_radius(S, x)
    step = F(1) if not isinstance(r, Fraction) else r / 2
    directions = set()
    for p in S.polys:
        fin = [m.exponents for m in p.monomials if m.finite]
        for a, b in product(fin, repeat=2):
            w = (b[0] - a[0], b[1] - a[1])
            if w != (0, 0):
                directions.add((-w[1], w[0]))
    for u in directions:
        scale = step / max(abs(u[0]), abs(u[1]))
        if member_by_definition(S, (x[0] + scale * u[0], x[1] + scale * u[1])):
            return 1
    return 0


@pytest.mark.parametrize("S", random_finite_corpus(30, seed=11) + list(
    s for s in CORPUS.values() if s.n == 2))
def test_local_dim_zero_matches_direction_probe(S):
    best: dict = {}
    for c in cells(S):
        best[c.witness] = max(best.get(c.witness, -1), c.dim)
    for x, dim in best.items():
        ld = local_dim(S, x)
        assert (ld == 0) == (_probe_local_dim(S, x) == 0)
        assert ld >= dim


def test_isolated_points_examples():
    pts = isolated_points(gen_system_A(3))
    assert len(pts) == 2 and pts[1][1] - pts[0][1] == 3
    assert isolated_points(TROPICAL_LINE) == []
    assert isolated_points(TWO_ROWS) == [(1, 0)]


def test_zero_dimensional_cells_are_generalized_vertices():
    for S in list(CORPUS.values()) + random_finite_corpus(20, seed=5):
        for c in cells(S):
            if c.dim == 0:
                assert is_generalized_vertex(S, c.witness)[0]


# -- generalized vertices -----------------------------------------------------------------


def test_generalized_vertex_examples():
    gv = generalized_vertices(TWO_ROWS)
    assert (-1, 0) in gv and (1, 0) in gv and (-2, -1) not in gv
    assert generalized_vertices(TROPICAL_LINE) == [(0, 0)]
    assert (0, 0) in generalized_vertices(LINE_DIRECTED)


@pytest.mark.parametrize("S", list(CORPUS.values()) + random_finite_corpus(20, seed=9))
def test_vertex_methods_agree(S):
    assert generalized_vertices(S, "cells") == generalized_vertices(S, "pairs")


def test_unknown_vertex_method():
    with pytest.raises(ValueError):
        generalized_vertices(TWO_ROWS, "magic")


# -- stable solutions ------------------------------------------------------------------------


def test_binomial_pair():
    res = stable_solutions(BINOMIAL_PAIR)
    assert res.points == [(-2, -4)]
    assert not res.finite_coefficients
    with pytest.raises(ValueError):
        stable_solutions(BINOMIAL_PAIR, require_finite_coeffs=True)


def test_stable_requires_square():
    with pytest.raises(ValueError):
        stable_solutions(LINE_DIRECTED)


def test_generic_lines_meet_once():
    S = loads_dsl("vars: x y\npoly: 0 (+) 1*x (+) 3*y\npoly: 2 (+) -1*x (+) 1/2*y\n")
    res = stable_solutions(S)
    assert res.count == 1 and res.generic and res.bezout_number == 1


def test_generic_conic_and_cubic():
    rng = random.Random(4)
    S = TropicalSystem((convex_lift_poly(rng, 2), convex_lift_poly(rng, 3)), 2)
    res = stable_solutions(S)
    assert res.generic and res.count == 6 == res.bezout_number


def test_stable_points_are_certified():
    rng = random.Random(12)
    for _ in range(10):
        S = TropicalSystem((uniform_poly(rng, rng.randint(1, 3)),
                            uniform_poly(rng, rng.randint(1, 3))), 2)
        for x in stable_solutions(S).points:
            assert membership(S, x)
            assert is_stable(S, x)[0] and is_stable_brute_force(S, x)[0]


@pytest.mark.parametrize("seed", range(15))
def test_multiplicity_weighted_count_is_degree_product(seed):
    """Independent check with uniformly random coefficients: transversal
    intersection points weighted by |det| of their two pair vectors sum to d1 d2."""
    rng = random.Random(1000 + seed)
    d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
    S = TropicalSystem((uniform_poly(rng, d1), uniform_poly(rng, d2)), 2)
    res = stable_solutions(S)
    if not res.generic:
        pytest.skip("non-generic sample")
    total = 0
    for x in res.points:
        table = star_table(S, x)
        vecs = []
        for p, row in zip(S.polys, table.rows):
            a, b = sorted(row)
            vecs.append([v - u for u, v in zip(p.monomials[a].exponents, p.monomials[b].exponents)])
        total += abs(vecs[0][0] * vecs[1][1] - vecs[0][1] * vecs[1][0])
    assert total == d1 * d2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_stable_solutions_match_component_structure(seed):
    rng = random.Random(seed)
    S = TropicalSystem((uniform_poly(rng, rng.randint(1, 2)),
                        uniform_poly(rng, rng.randint(1, 2))), 2)
    res = stable_solutions(S)
    iso = set(isolated_points(S))
    for x in res.points:
        assert x in iso or local_dim(S, x) > 0
    # a finite generic square system has only isolated stable solutions
    if res.generic:
        assert set(res.points) <= iso
