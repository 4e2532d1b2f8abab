"""Star tables: which monomials attain each row minimum at a point."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import INF, Monomial, Scalar, TropicalPolynomial, TropicalSystem, to_point
from .io import format_monomial

__all__ = [
    "StarTable",
    "star_table",
    "table_contains",
    "normalize_at",
    "separation_margin",
    "local_radius",
    "format_star_table",
]


@dataclass(frozen=True)
class StarTable:
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        rows = tuple(frozenset(r) for r in self.rows)
        if any(not r for r in rows):
            raise ValueError("star table rows must be nonempty")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.rows[i]

    def contains(self, other: "StarTable") -> bool:
        return table_contains(self, other)

    def stars(self) -> int:
        return sum(len(r) for r in self.rows)


def star_table(system: TropicalSystem, x) -> StarTable:
    x = to_point(x)
    if len(x) != system.n:
        raise ValueError(f"point has dimension {len(x)}, system has {system.n}")
    return StarTable(tuple(p.evaluate(x)[1] for p in system.polys))


def table_contains(a: StarTable, b: StarTable) -> bool:
    """True iff every row of ``b`` is a subset of the same row of ``a``."""
    if len(a) != len(b):
        raise ValueError("star tables have different numbers of rows")
    return all(rb <= ra for ra, rb in zip(a.rows, b.rows))


def normalize_at(system: TropicalSystem, x) -> TropicalSystem:
    """Shift ``x`` to the origin and scale each row so its minimum is 0.

    Rows whose coefficients are all INF are only shifted.
    """
    x = to_point(x)
    polys = []
    for p in system.polys:
        q = p.shift(x)
        low = min(m.coef for m in q.monomials)
        if low is not INF:
            q = q.scale(-low)
        polys.append(q)
    return TropicalSystem(tuple(polys), system.n, system.variables)


def separation_margin(system: TropicalSystem, x) -> Scalar:
    """Smallest gap between a row minimum and a non-starred finite monomial.

    INF when no row has a non-starred finite monomial.
    """
    x = to_point(x)
    margin: Scalar = INF
    for p in system.polys:
        values = [m.value(x) for m in p.monomials]
        low = min(values)
        if low is INF:
            continue
        for v in values:
            if v is not INF and v != low:
                gap = v - low
                if margin is INF or gap < margin:
                    margin = gap
    return margin


def local_radius(system: TropicalSystem, x) -> Scalar:
    """``margin / (3 d)``: inside this sup-norm radius stars can only disappear."""
    margin = separation_margin(system, x)
    if margin is INF:
        return INF
    return margin / (3 * max(system.d, 1))


def format_star_table(system: TropicalSystem, table: StarTable) -> str:
    """Matrix layout: one column per exponent vector present, '*' where starred."""
    cols: list[tuple[int, ...]] = sorted(
        {m.exponents for p in system.polys for m in p.monomials},
        key=lambda e: (sum(e), tuple(-v for v in e)),
    )
    headers = [format_monomial(Monomial(Fraction(0), e), system.variables) for e in cols]
    width = max(len(h) for h in headers)
    lines = [" ".join(h.rjust(width) for h in headers)]
    lines.append("-" * len(lines[0]))
    for p, row in zip(system.polys, table.rows):
        starred = {p.monomials[i].exponents for i in row}
        lines.append(" ".join(("*" if e in starred else "").rjust(width) for e in cols))
    return "\n".join(lines)
