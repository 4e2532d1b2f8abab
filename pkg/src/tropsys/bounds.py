"""Closed-form upper bounds on components and isolated points.

Every bound is returned as a :class:`BoundReport` holding the exact rational
value and its floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor, prod
from typing import Sequence

__all__ = [
    "BoundReport",
    "connected_bound_finite",
    "connected_bound_infinite",
    "isolated_bound_overdetermined",
    "isolated_bound_infinite",
    "arrangement_bound",
    "betti_l_bound",
    "buck_bound",
    "all_bounds",
]


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict
    value: Fraction

    @property
    def floor(self) -> int:
        return floor(self.value)

    def to_dict(self) -> dict:
        v = self.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return {"name": self.name, "params": dict(self.params), "value": text,
                "floor": self.floor}


def _check_positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def _top_product(degrees: Sequence[int], n: int) -> int:
    return prod(sorted(degrees, reverse=True)[:n])


def connected_bound_finite(k: int, n: int, d: int) -> BoundReport:
    """Components of a prevariety given by k finite-coefficient polynomials."""
    _check_positive(k=k, n=n, d=d)
    if k < n:
        raise ValueError(f"need k >= n, got k={k}, n={n}")
    value = Fraction(d ** n * comb(k + n - 1, n), k - n + 1)
    return BoundReport("connected_bound_finite", {"k": k, "n": n, "d": d}, value)


def connected_bound_infinite(k: int, n: int, d: int) -> BoundReport:
    """Components when coefficients may be INF (via the compactified system)."""
    _check_positive(k=k, n=n, d=d)
    value = Fraction(d ** (3 * n) * comb(k + 7 * n - 1, 3 * n), k + n + 1)
    return BoundReport("connected_bound_infinite", {"k": k, "n": n, "d": d}, value)


def isolated_bound_overdetermined(degrees: Sequence[int], n: int) -> BoundReport:
    """Isolated points of k >= n finite-coefficient polynomials of the given degrees."""
    degrees = list(degrees)
    k = len(degrees)
    _check_positive(k=k, n=n)
    if k < n:
        raise ValueError(f"need k >= n, got k={k}, n={n}")
    D = _top_product(degrees, n)
    value = Fraction(comb(k, n), k - n + 1) * D
    return BoundReport("isolated_bound_overdetermined", {"degrees": degrees, "n": n}, value)


def isolated_bound_infinite(k: int, n: int, d: int | None = None,
                            degrees: Sequence[int] | None = None) -> BoundReport:
    """Isolated points, coefficients possibly INF.  Pass ``d`` or ``degrees``."""
    if degrees is not None:
        degrees = list(degrees)
        if len(degrees) != k:
            raise ValueError("degrees must have k entries")
        D = _top_product(degrees, n)
        params = {"k": k, "n": n, "degrees": degrees}
    elif d is not None:
        D = d ** n
        params = {"k": k, "n": n, "d": d}
    else:
        raise ValueError("give d or degrees")
    _check_positive(k=k, n=n)
    value = Fraction(comb(k + 4 * n, 3 * n), k + n + 1) * D
    return BoundReport("isolated_bound_infinite", params, value)


def arrangement_bound(k: int, n: int, d: int) -> BoundReport:
    """Number of convex pieces (one monomial pair per row) covering the prevariety."""
    _check_positive(k=k, n=n)
    if d < 0:
        raise ValueError("d must be >= 0")
    value = Fraction(comb(d + n, d) ** (2 * k))
    return BoundReport("arrangement_bound", {"k": k, "n": n, "d": d}, value)


def betti_l_bound(k: int, n: int, d: int, l: int) -> BoundReport:
    """Bound on the l-th Betti number for finite coefficients."""
    if l < 0:
        raise ValueError("l must be >= 0")
    base = connected_bound_finite(k, n, d).value
    return BoundReport("betti_l_bound", {"k": k, "n": n, "d": d, "l": l}, base ** (l + 1))


def buck_bound(k: int, n: int, d: int) -> BoundReport:
    """Leading term of the face count of the hyperplane arrangement; the o() term is dropped."""
    _check_positive(k=k, n=n, d=d)
    value = Fraction(3 ** n + 2 ** n * comb(k * comb(n + d, n) ** 2, n))
    return BoundReport("buck_bound", {"k": k, "n": n, "d": d}, value)


def all_bounds(k: int, n: int, d: int, degrees: Sequence[int] | None = None,
               l: int = 0) -> list[BoundReport]:
    """Every bound that applies to the parameters (those raising on k < n are skipped)."""
    out = []
    if degrees is None:
        degrees = [d] * k
    for fn in (
        lambda: connected_bound_finite(k, n, d),
        lambda: connected_bound_infinite(k, n, d),
        lambda: isolated_bound_overdetermined(degrees, n),
        lambda: isolated_bound_infinite(k, n, degrees=degrees),
        lambda: arrangement_bound(k, n, d),
        lambda: betti_l_bound(k, n, d, l),
        lambda: buck_bound(k, n, d),
    ):
        try:
            out.append(fn())
        except ValueError:
            continue
    return out
