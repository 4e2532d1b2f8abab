from fractions import Fraction

import pytest

from corpus import CORPUS, ONE_VAR, TWO_ROWS
from oracles import member_by_definition
from tropsys.core import TropicalSystem
from tropsys.io import loads_dsl
from tropsys.prevariety import cells, connected_components, generalized_vertices
from tropsys.transform import bounding_box, compactify, fill_infinite

F = Fraction


def test_bounding_box_single_variable():
    s = bounding_box(ONE_VAR)
    assert s == 3
    assert all(abs(c) <= s for v in generalized_vertices(ONE_VAR) for c in v)


def test_bounding_box_contains_vertices():
    s = bounding_box(TWO_ROWS)
    gv = generalized_vertices(TWO_ROWS)
    assert (-1, 0) in gv and (1, 0) in gv
    assert all(abs(c) < s for v in gv for c in v)


def test_bounding_box_grows_with_coefficients():
    sizes = [bounding_box(TWO_ROWS.scale([F(c), F(c)])) for c in (0, 5, 10, 20)]
    assert sizes == sorted(sizes) and sizes[0] < sizes[-1]


def test_bounding_box_needs_a_finite_coefficient():
    with pytest.raises(ValueError):
        bounding_box(loads_dsl("vars: x\npoly: inf (+) inf*x\n"))


def test_compactify_single_variable():
    comp = compactify(ONE_VAR, 5)
    assert comp.system.n == 3 and comp.system.k == 5
    rep = connected_components(comp.system)
    assert rep.count == 1
    assert rep.isolated == [(0, 0, -5)]
    assert comp.project(rep.isolated[0]) == (0,)


def test_compactify_rejects_nonpositive_side():
    with pytest.raises(ValueError):
        compactify(ONE_VAR, 0)
    with pytest.raises(ValueError):
        compactify(ONE_VAR, -2)


def test_variable_layout():
    comp = compactify(TWO_ROWS, 7)
    assert comp.system.variables == ("x", "y", "u1", "u2", "v1", "v2")
    assert comp.var_map == ((0, 2, 4), (1, 3, 5))
    assert comp.system.k == TWO_ROWS.k + 4 * TWO_ROWS.n


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_projection_property(name):
    S = CORPUS[name]
    comp = compactify(S)
    s = comp.s
    for c in cells(comp.system):
        w = c.witness
        x = comp.project(w)
        assert member_by_definition(S, x)
        assert all(-s <= v <= s for v in x)
        for i, (xi, ui, vi) in enumerate(comp.var_map):
            assert w[ui] == w[xi] and w[vi] == -s
        assert c.polyhedron.is_bounded()


@pytest.mark.parametrize("name", ["two_rows", "family_A3", "one_var", "tropical_line"])
@pytest.mark.parametrize("mode", [None, "linear", "power"])
def test_component_counts_survive(name, mode):
    S = CORPUS[name]
    comp = compactify(S, replace_inf=mode)
    assert connected_components(comp.system, with_vertices=False).count == \
        connected_components(S, with_vertices=False).count


def test_fill_infinite_completes_support():
    p = loads_dsl("vars: x y\npoly: 0 (+) inf*x (+) x*y\n").polys[0]
    q = fill_infinite(p, F(100))
    assert q.has_all_coefficients_finite()
    assert {m.exponents: m.coef for m in q.monomials} == {
        (0, 0): 0, (1, 0): 100, (0, 1): 100, (2, 0): 100, (1, 1): 0, (0, 2): 100}


def test_replacement_constants():
    S = loads_dsl("vars: x\npoly: 1 (+) inf*x (+) x^2\n")
    lin = compactify(S, 4, replace_inf="linear").system.polys[0]
    pw = compactify(S, 4, replace_inf="power").system.polys[0]
    coef = lambda p: next(m.coef for m in p.monomials if m.exponents[0] == 1 and sum(m.exponents) == 1)
    assert coef(lin) == 1 + 2 * 4 * 2
    assert coef(pw) == 1 + 2 * 4 ** 2
    with pytest.raises(ValueError):
        compactify(S, 4, replace_inf="other")
