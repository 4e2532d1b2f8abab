"""Clamp a prevariety to a cube by adding box variables.

For every variable x_i two fresh variables u_i, v_i and four linear
polynomials are appended::

    x_i (+) u_i          forces u_i = x_i
    x_i (+) u_i (+) s    then forces x_i <= s
    v_i (+) -s           forces v_i = -s
    x_i (+) v_i (+) -s   then forces x_i >= -s

so the new prevariety projects onto V intersected with [-s, s]^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .core import INF, Monomial, TropicalPolynomial, TropicalSystem, to_point, to_scalar

__all__ = ["CompactifiedSystem", "bounding_box", "max_abs_coefficient", "compactify",
           "fill_infinite"]


def max_abs_coefficient(system: TropicalSystem) -> Fraction:
    coefs = system.finite_coefficients()
    if not coefs:
        raise ValueError("system has no finite coefficient")
    return max(abs(c) for c in coefs)


def bounding_box(system: TropicalSystem) -> Fraction:
    """Half-side ``s = 2 (M+1) n! d^n + 1`` of a cube holding every generalized vertex.

    A generalized vertex solves a square linear system whose rows are exponent
    differences and whose right side is a coefficient difference, so Cramer's
    rule bounds each coordinate by ``2 M n! d^n``.
    """
    M = max_abs_coefficient(system)
    d = max(system.d, 1)
    return 2 * (M + 1) * factorial(system.n) * d ** system.n + 1


def _exponents_up_to(n: int, d: int):
    for e in product(range(d + 1), repeat=n):
        if sum(e) <= d:
            yield e


def fill_infinite(poly: TropicalPolynomial, value: Fraction) -> TropicalPolynomial:
    """Give every monomial of trdeg <= degree that is INF or absent the coefficient ``value``."""
    finite = {m.exponents: m.coef for m in poly.monomials if m.finite}
    monos = [Monomial(finite.get(e, value), e) for e in _exponents_up_to(poly.n, poly.degree)]
    # keep monomials above the degree (only possible with INF coefficients) out
    return TropicalPolynomial(tuple(monos), poly.n)


@dataclass(frozen=True)
class CompactifiedSystem:
    system: TropicalSystem
    s: Fraction
    var_map: tuple[tuple[int, int, int], ...]
    original_n: int

    def project(self, point) -> tuple[Fraction, ...]:
        point = to_point(point)
        return tuple(point[x] for x, _, _ in self.var_map)


def compactify(system: TropicalSystem, s=None, replace_inf: str | None = None
               ) -> CompactifiedSystem:
    """Append the box polynomials; ``s`` defaults to :func:`bounding_box`.

    ``replace_inf`` fills INF or missing monomials of the original polynomials:
    ``"linear"`` uses ``M + 2 s d``, ``"power"`` uses ``M + 2 s^d``; ``None``
    leaves them alone.
    """
    s = bounding_box(system) if s is None else to_scalar(s)
    if s is INF or s <= 0:
        raise ValueError("box half-side must be a positive rational")
    n = system.n
    polys = list(system.polys)
    if replace_inf is not None:
        M = max_abs_coefficient(system)
        d = max(system.d, 1)
        if replace_inf == "linear":
            big = M + 2 * s * d
        elif replace_inf == "power":
            big = M + 2 * s ** d
        else:
            raise ValueError(f"unknown replacement {replace_inf!r}")
        polys = [fill_infinite(p, big) for p in polys]
    N = 3 * n
    out = [p.pad(N) for p in polys]
    zero = Fraction(0)

    def unit(i):
        return tuple(1 if j == i else 0 for j in range(N))

    const = (0,) * N
    for i in range(n):
        x, u, v = i, n + i, 2 * n + i
        rows = [
            [(zero, unit(x)), (zero, unit(u))],
            [(zero, unit(x)), (zero, unit(u)), (s, const)],
            [(zero, unit(v)), (-s, const)],
            [(zero, unit(x)), (zero, unit(v)), (-s, const)],
        ]
        out.extend(TropicalPolynomial.from_terms(r, N) for r in rows)
    names = system.variables
    variables = tuple(names) + tuple(f"u{i + 1}" for i in range(n)) \
        + tuple(f"v{i + 1}" for i in range(n))
    if len(set(variables)) != N:
        variables = None
    var_map = tuple((i, n + i, 2 * n + i) for i in range(n))
    return CompactifiedSystem(TropicalSystem(tuple(out), N, variables), s, var_map, n)
