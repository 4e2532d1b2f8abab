"""Families of systems with many isolated solutions.

``gen_system_A(k)``: k cubics in two variables; curve i is curve 1 moved down
by 3(i-1).  Consecutive curves meet in one isolated point each, so the
prevariety is k-1 points plus two vertical half-lines.

``gen_system_B(k, d)``: k polynomials of degree 4d supported on the square
[0, 2d]^2.  The coefficient of x^i y^j is ``F(i) + G(j) - [i and j odd]``:
with the bump removed the curve is a grid of vertical lines (from the convex
sequence F) and horizontal lines (from G); the bump turns every odd/odd grid
box into a hexagon.  Vertical lines come in pairs one unit apart with period
4, horizontal lines in pairs one unit apart with a gap of 4k between pairs,
larger than the total shift 3(k-1) of the family.  Curve m is again curve 1
moved down by 3(m-1).

``gen_system_C(n, k, d)``: n-1 copies of B, copy j using the variables x1 and
x_{j+1}; isolated points multiply across copies.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import Monomial, TropicalPolynomial, TropicalSystem
from .transform import bounding_box, fill_infinite, max_abs_coefficient

__all__ = ["gen_system_A", "gen_system_B", "gen_system_C", "make_finite",
           "expected_isolated"]


def make_finite(system: TropicalSystem) -> TropicalSystem:
    """Replace absent/INF monomials (up to each degree) by ``M + 2 s d``."""
    s = bounding_box(system)
    big = max_abs_coefficient(system) + 2 * s * max(system.d, 1)
    return TropicalSystem(tuple(fill_infinite(p, big) for p in system.polys),
                          system.n, system.variables)


def expected_isolated(n: int, k: int, d: int) -> int:
    return 2 * (k - 1) ** (n - 1) * d ** n


def _check(k: int, d: int = 1, n: int = 2):
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def gen_system_A(k: int, finite: bool = False) -> TropicalSystem:
    _check(k)
    polys = []
    for i in range(1, k + 1):
        shift = 3 * (i - 1)
        terms = [
            (3, (0, 0)),
            (1, (1, 0)),
            (0 + shift, (1, 1)),
            (1 + shift, (0, 1)),
            (0 + 2 * shift, (1, 2)),
            (2 + 2 * shift, (0, 2)),
        ]
        polys.append(TropicalPolynomial.from_terms(
            [(Fraction(c), e) for c, e in terms], 2))
    system = TropicalSystem(tuple(polys), 2)
    return make_finite(system) if finite else system


def _convex_sequence(length: int, gap: int) -> list[Fraction]:
    """F(0..length-1) whose breakpoints F(i) - F(i+1) are 0, -1, -gap-1, -gap-2, ..."""
    values = [Fraction(0)]
    for i in range(length - 1):
        pair, odd = divmod(i, 2)
        breakpoint = -(gap + 1) * pair - odd
        values.append(values[-1] - breakpoint)
    return values


def _square_coefficients(k: int, d: int) -> dict[tuple[int, int], Fraction]:
    side = 2 * d + 1
    F = _convex_sequence(side, 3)
    G = _convex_sequence(side, 4 * k + 2)
    return {(i, j): F[i] + G[j] - (1 if i % 2 and j % 2 else 0)
            for i, j in product(range(side), repeat=2)}


def gen_system_B(k: int, d: int, finite: bool = False) -> TropicalSystem:
    _check(k, d)
    base = _square_coefficients(k, d)
    polys = []
    for m in range(k):
        monos = tuple(Monomial(c + 3 * m * e[1], e) for e, c in sorted(base.items()))
        polys.append(TropicalPolynomial(monos, 2))
    system = TropicalSystem(tuple(polys), 2)
    return make_finite(system) if finite else system


def gen_system_C(n: int, k: int, d: int, finite: bool = False) -> TropicalSystem:
    _check(k, d, n)
    B = gen_system_B(k, d)
    polys = []
    for j in range(1, n):
        polys.extend(p.pad(n, (0, j)) for p in B.polys)
    system = TropicalSystem(tuple(polys), n)
    return make_finite(system) if finite else system
