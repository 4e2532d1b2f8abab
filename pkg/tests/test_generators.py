import pytest

from tropsys.certify import isolated_necessary, is_stable
from tropsys.generators import (expected_isolated, gen_system_A, gen_system_B, gen_system_C,
                                make_finite)
from tropsys.io import loads_dsl
from tropsys.prevariety import connected_components, isolated_points, local_dim
from tropsys.transform import bounding_box


def test_first_curve_coefficients():
    S = gen_system_A(3)
    first = loads_dsl("vars: x1 x2\npoly: 3 (+) 1*x1 (+) x1*x2 (+) 1*x2 (+) x1*x2^2 "
                      "(+) 2*x2^2\n").polys[0]
    assert S.polys[0] == first


def test_curves_are_vertical_translates():
    S = gen_system_A(4)
    for i, p in enumerate(S.polys):
        assert p == S.polys[0].shift((0, 3 * i))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_family_a_isolated_points(k):
    S = gen_system_A(k)
    pts = isolated_points(S)
    assert len(pts) == k - 1
    xs = {p[0] for p in pts}
    assert len(xs) == 1
    ys = sorted(p[1] for p in pts)
    assert all(b - a == 3 for a, b in zip(ys, ys[1:]))
    for x in pts:
        assert isolated_necessary(S, x)
    assert connected_components(S, with_vertices=False).count == k + 1


def test_family_b_small():
    S = gen_system_B(3, 1)
    assert S.degrees == [4, 4, 4]
    assert len(isolated_points(S)) == expected_isolated(2, 3, 1) == 4


@pytest.mark.slow
def test_family_b_two_layers():
    S = gen_system_B(3, 2)
    assert len(isolated_points(S)) == expected_isolated(2, 3, 2) == 16


def test_family_c_shape():
    S = gen_system_C(3, 3, 1)
    assert S.n == 3 and S.k == 6
    assert all(p.monomials[-1].exponents[1] == 0 for p in S.polys[3:])


def test_parameter_ranges():
    with pytest.raises(ValueError):
        gen_system_A(2)
    with pytest.raises(ValueError):
        gen_system_B(3, 0)
    with pytest.raises(ValueError):
        gen_system_C(1, 3, 1)


def test_finite_variant_agrees_inside_the_box():
    S = gen_system_A(3)
    T = gen_system_A(3, finite=True)
    assert T.has_all_coefficients_finite()
    s = bounding_box(S)
    inside = lambda pts: [p for p in pts if all(abs(c) <= s for c in p)]
    assert inside(isolated_points(T)) == isolated_points(S)
    assert make_finite(S) == T
