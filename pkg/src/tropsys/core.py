"""Min-plus scalars, monomials, polynomials and systems.

All arithmetic is exact: finite values are :class:`fractions.Fraction`
and the tropical zero is the singleton :data:`INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

__all__ = [
    "INF",
    "Infinity",
    "Scalar",
    "Monomial",
    "TropicalPolynomial",
    "TropicalSystem",
    "to_scalar",
    "to_point",
    "evaluate",
    "is_zero",
    "membership",
]


@total_ordering
class Infinity:
    """The tropical zero. Compares greater than every finite value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("tropsys.INF")

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INF - INF is undefined")
        return self

    def __neg__(self):
        raise ArithmeticError("-INF is not a tropical scalar")

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

Scalar = Union[Fraction, Infinity]


def to_scalar(value) -> Scalar:
    """Coerce ints, strings ("p/q", "1.5", "inf") and Fractions to a scalar."""
    if value is INF:
        return INF
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ("inf", "+inf", "infinity"):
            return INF
        return Fraction(text)
    if isinstance(value, float):
        if value == float("inf"):
            return INF
        raise TypeError("floats are not accepted; pass a Fraction or a string")
    return Fraction(value)


def to_point(coords: Iterable) -> tuple[Fraction, ...]:
    pt = []
    for c in coords:
        s = to_scalar(c)
        if s is INF:
            raise ValueError("points must have finite coordinates")
        pt.append(s)
    return tuple(pt)


@dataclass(frozen=True)
class Monomial:
    coef: Scalar
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coef", to_scalar(self.coef))
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def trdeg(self) -> int:
        return sum(self.exponents)

    @property
    def finite(self) -> bool:
        return self.coef is not INF

    def value(self, x: Sequence[Fraction]) -> Scalar:
        if self.coef is INF:
            return INF
        return self.coef + sum(e * xi for e, xi in zip(self.exponents, x) if e)


@dataclass(frozen=True)
class TropicalPolynomial:
    """A min over monomials, stored sorted by exponent vector."""

    monomials: tuple[Monomial, ...]
    n: int

    def __post_init__(self):
        monos = tuple(sorted(self.monomials, key=lambda m: m.exponents))
        if not monos:
            raise ValueError("a tropical polynomial needs at least one monomial")
        for m in monos:
            if len(m.exponents) != self.n:
                raise ValueError(
                    f"exponent vector {m.exponents} does not have length {self.n}"
                )
        for a, b in zip(monos, monos[1:]):
            if a.exponents == b.exponents:
                raise ValueError(f"duplicate exponent vector {a.exponents}")
        object.__setattr__(self, "monomials", monos)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple], n: int | None = None) -> "TropicalPolynomial":
        """Build from ``(coef, exponents)`` pairs."""
        monos = [Monomial(c, tuple(e)) for c, e in terms]
        if n is None:
            n = len(monos[0].exponents)
        return cls(tuple(monos), n)

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    @property
    def degree(self) -> int:
        finite = [m.trdeg for m in self.monomials if m.finite]
        return max(finite) if finite else 0

    def finite_indices(self) -> list[int]:
        return [i for i, m in enumerate(self.monomials) if m.finite]

    def has_all_coefficients_finite(self) -> bool:
        """True iff every exponent vector of trdeg <= degree has a finite coefficient."""
        present = {m.exponents for m in self.monomials if m.finite}
        return len(present) == _count_monomials(self.n, self.degree) and all(
            sum(e) <= self.degree for e in present
        )

    def evaluate(self, x: Sequence[Fraction]) -> tuple[Scalar, frozenset[int]]:
        if len(x) != self.n:
            raise ValueError(f"point has dimension {len(x)}, polynomial has {self.n}")
        values = [m.value(x) for m in self.monomials]
        best = min(values)
        return best, frozenset(i for i, v in enumerate(values) if v == best)

    def scale(self, c) -> "TropicalPolynomial":
        """Tropical multiplication by the constant ``c`` (adds c to every coefficient)."""
        c = to_scalar(c)
        return TropicalPolynomial(
            tuple(Monomial(m.coef + c, m.exponents) for m in self.monomials), self.n
        )

    def shift(self, y: Sequence) -> "TropicalPolynomial":
        """Return g with g(x) = f(x + y)."""
        y = to_point(y)
        if len(y) != self.n:
            raise ValueError("shift vector has the wrong dimension")
        return TropicalPolynomial(
            tuple(Monomial(m.value(y), m.exponents) for m in self.monomials), self.n
        )

    def pad(self, n: int, positions: Sequence[int] | None = None) -> "TropicalPolynomial":
        """Embed into ``n`` variables; old variable i goes to ``positions[i]``."""
        if positions is None:
            positions = range(self.n)
        monos = []
        for m in self.monomials:
            e = [0] * n
            for i, p in enumerate(positions):
                e[p] = m.exponents[i]
            monos.append(Monomial(m.coef, tuple(e)))
        return TropicalPolynomial(tuple(monos), n)

    def __str__(self) -> str:
        from .io import format_polynomial

        return format_polynomial(self)


def _count_monomials(n: int, d: int) -> int:
    from math import comb

    return comb(n + d, d)


@dataclass(frozen=True)
class TropicalSystem:
    polys: tuple[TropicalPolynomial, ...]
    n: int
    variables: tuple[str, ...] | None = None

    def __post_init__(self):
        polys = tuple(self.polys)
        if not polys:
            raise ValueError("a system needs at least one polynomial")
        for p in polys:
            if p.n != self.n:
                raise ValueError("all polynomials must have the same number of variables")
        object.__setattr__(self, "polys", polys)
        if self.variables is None:
            object.__setattr__(
                self, "variables", tuple(f"x{i + 1}" for i in range(self.n))
            )
        elif len(self.variables) != self.n:
            raise ValueError("variable names do not match n")
        else:
            object.__setattr__(self, "variables", tuple(self.variables))

    @classmethod
    def from_terms(cls, rows: Iterable[Iterable[tuple]], n: int | None = None,
                   variables=None) -> "TropicalSystem":
        polys = [TropicalPolynomial.from_terms(r, n) for r in rows]
        return cls(tuple(polys), polys[0].n, variables)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i: int) -> TropicalPolynomial:
        return self.polys[i]

    def __eq__(self, other) -> bool:
        # variable names are presentation only
        if not isinstance(other, TropicalSystem):
            return NotImplemented
        return self.n == other.n and self.polys == other.polys

    def __hash__(self) -> int:
        return hash((self.n, self.polys))

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def d(self) -> int:
        return max(p.degree for p in self.polys)

    @property
    def degrees(self) -> list[int]:
        return [p.degree for p in self.polys]

    def has_all_coefficients_finite(self) -> bool:
        return all(p.has_all_coefficients_finite() for p in self.polys)

    def finite_coefficients(self) -> list[Fraction]:
        return [m.coef for p in self.polys for m in p.monomials if m.finite]

    def subsystem(self, rows: Sequence[int]) -> "TropicalSystem":
        """Polynomials at ``rows``, repeats allowed (multiset subsystems)."""
        return TropicalSystem(tuple(self.polys[r] for r in rows), self.n, self.variables)

    def shift(self, y) -> "TropicalSystem":
        return TropicalSystem(tuple(p.shift(y) for p in self.polys), self.n, self.variables)

    def scale(self, constants) -> "TropicalSystem":
        return TropicalSystem(
            tuple(p.scale(c) for p, c in zip(self.polys, constants, strict=True)),
            self.n,
            self.variables,
        )

    def __str__(self) -> str:
        from .io import dumps_dsl

        return dumps_dsl(self)


def evaluate(poly: TropicalPolynomial, x) -> tuple[Scalar, frozenset[int]]:
    """Value of ``poly`` at ``x`` and the indices of the monomials attaining it.

    When every coefficient is INF the value is INF and every index attains it.
    """
    return poly.evaluate(to_point(x))


def is_zero(poly: TropicalPolynomial, x) -> bool:
    value, argmin = evaluate(poly, x)
    return value is INF or len(argmin) >= 2


def membership(system: TropicalSystem, x) -> bool:
    x = to_point(x)
    if len(x) != system.n:
        raise ValueError(f"point has dimension {len(x)}, system has {system.n}")
    return all(is_zero(p, x) for p in system.polys)
