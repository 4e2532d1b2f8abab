"""Generalized-vertex, stability and isolation certificates.

All predicates look only at the exponent vectors of starred monomials: a pair
of monomials starred in the same row contributes the difference of their
exponent vectors, and the question is always whether some admissible choice
of such differences spans R^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import TropicalPolynomial, TropicalSystem, membership, to_point
from .linear import Echelon, solve_square
from .matroid import brute_force_transversal, max_common_independent
from .stars import StarTable, star_table

__all__ = [
    "PairChoice",
    "exponent_vector",
    "difference_vector",
    "pair_vectors",
    "is_generalized_vertex",
    "is_stable",
    "is_stable_brute_force",
    "isolated_necessary",
    "isolated_necessary_brute_force",
    "vertex_to_stable_multisets",
]


@dataclass(frozen=True)
class PairChoice:
    """Two starred monomials ``(first, second)`` of polynomial ``row``."""

    row: int
    first: int
    second: int
    vector: tuple[int, ...]


def exponent_vector(poly: TropicalPolynomial, index: int) -> tuple[int, ...]:
    return poly.monomials[index].exponents


def difference_vector(poly: TropicalPolynomial, a: int, b: int) -> tuple[int, ...]:
    """Exponent vector of monomial ``b`` minus that of monomial ``a``."""
    ea, eb = exponent_vector(poly, a), exponent_vector(poly, b)
    return tuple(y - x for x, y in zip(ea, eb))


def pair_vectors(system: TropicalSystem, table: StarTable) -> list[list[PairChoice]]:
    """Per row, every unordered pair of starred finite monomials.

    Monomials are stored in lexicographic exponent order, so ``first < second``
    puts the lexicographically smaller exponent vector first.
    """
    if len(table) != system.k:
        raise ValueError("star table does not match the system")
    out = []
    for r, (poly, row) in enumerate(zip(system.polys, table.rows)):
        idx = sorted(i for i in row if poly.monomials[i].finite)
        out.append([
            PairChoice(r, a, b, difference_vector(poly, a, b))
            for pos, a in enumerate(idx) for b in idx[pos + 1:]
        ])
    return out


def _table(system, x, table):
    x = to_point(x)
    if len(x) != system.n:
        raise ValueError(f"point has dimension {len(x)}, system has {system.n}")
    return x, (table if table is not None else star_table(system, x))


def is_generalized_vertex(system: TropicalSystem, x, table: StarTable | None = None):
    """``(True, basis)`` when the starred differences of all rows span R^n.

    ``basis`` is a list of n :class:`PairChoice` (rows may repeat) picked
    greedily in (row, pair) order; ``(False, None)`` otherwise.
    """
    x, table = _table(system, x, table)
    ech = Echelon(system.n)
    chosen = []
    for row in pair_vectors(system, table):
        for pc in row:
            nxt = ech.add(pc.vector)
            if nxt is not None:
                ech = nxt
                chosen.append(pc)
                if len(chosen) == system.n:
                    return True, chosen
    return False, None


def _require_solution(system, x):
    if not membership(system, x):
        raise ValueError("point is not a solution of the system")


def _transversal(system, table):
    rows = pair_vectors(system, table)
    flat = [pc for row in rows for pc in row]
    picked = max_common_independent([pc.vector for pc in flat], [pc.row for pc in flat],
                                     system.n)
    return [flat[i] for i in picked]


def is_stable(system: TropicalSystem, x, table: StarTable | None = None):
    """Stability of a solution of a square system, by matroid intersection.

    Returns ``(True, pairs)`` with one :class:`PairChoice` per row whose vectors
    form a basis of R^n, or ``(False, None)``.
    """
    if system.k != system.n:
        raise ValueError(f"stability needs a square system, got k={system.k}, n={system.n}")
    x, table = _table(system, x, table)
    _require_solution(system, x)
    picked = _transversal(system, table)
    if len(picked) < system.n:
        return False, None
    return True, sorted(picked, key=lambda pc: pc.row)


def is_stable_brute_force(system: TropicalSystem, x, table: StarTable | None = None):
    """Same contract as :func:`is_stable`, by enumerating every per-row choice."""
    if system.k != system.n:
        raise ValueError(f"stability needs a square system, got k={system.k}, n={system.n}")
    x, table = _table(system, x, table)
    _require_solution(system, x)
    rows = pair_vectors(system, table)
    choice = brute_force_transversal([[pc.vector for pc in row] for row in rows], system.n)
    if choice is None:
        return False, None
    return True, [rows[r][c] for r, c in enumerate(choice)]


def isolated_necessary(system: TropicalSystem, x, table: StarTable | None = None) -> bool:
    """Whether one starred pair per row can be picked so the k vectors span R^n.

    This holds at every isolated solution; rows without finite monomials are
    identically satisfied and are ignored.
    """
    if system.k < system.n:
        raise ValueError(f"need k >= n, got k={system.k}, n={system.n}")
    x, table = _table(system, x, table)
    _require_solution(system, x)
    return len(_transversal(system, table)) == system.n


def isolated_necessary_brute_force(system: TropicalSystem, x,
                                   table: StarTable | None = None) -> bool:
    if system.k < system.n:
        raise ValueError(f"need k >= n, got k={system.k}, n={system.n}")
    x, table = _table(system, x, table)
    _require_solution(system, x)
    rows = [row for row in pair_vectors(system, table) if row]
    return brute_force_transversal([[pc.vector for pc in row] for row in rows],
                                   system.n) is not None


def _spread_basis(system, table) -> list[PairChoice]:
    """A basis of starred pair vectors using as many distinct rows as possible."""
    basis = _transversal(system, table)
    ech = Echelon(system.n)
    for pc in basis:
        ech = ech.add(pc.vector)
    for row in pair_vectors(system, table):
        for pc in row:
            if len(basis) == system.n:
                return basis
            nxt = ech.add(pc.vector)
            if nxt is not None:
                ech = nxt
                basis.append(pc)
    return basis


def vertex_to_stable_multisets(system: TropicalSystem, x) -> list[tuple[int, ...]]:
    """Multisets of n row indices at whose subsystem ``x`` is a stable solution.

    Starts from the rows of a basis of starred pair vectors that uses as many
    distinct rows as possible (so a stable solution of a square system yields
    the full row set) and, for each row not in
    that multiset, swaps it in for a basis row whose coordinate in the new
    vector is nonzero.  Yields at least k - n + 1 distinct multisets, each
    re-checked with :func:`is_stable`.
    """
    x = to_point(x)
    if system.k < system.n:
        raise ValueError(f"need k >= n, got k={system.k}, n={system.n}")
    _require_solution(system, x)
    table = star_table(system, x)
    if not is_generalized_vertex(system, x, table)[0]:
        raise ValueError("point is not a generalized vertex")
    basis = _spread_basis(system, table)
    start = tuple(pc.row for pc in basis)
    results = [tuple(sorted(start))]
    columns = [list(col) for col in zip(*(pc.vector for pc in basis))]
    rows = pair_vectors(system, table)
    for p in range(system.k):
        if p in start or not rows[p]:
            continue
        w = rows[p][0].vector
        coords = solve_square(columns, w)
        i = next(j for j, c in enumerate(coords) if c != 0)
        swapped = list(start)
        swapped[i] = p
        cand = tuple(sorted(swapped))
        if cand not in results:
            results.append(cand)
    for m in results:
        if not is_stable(system.subsystem(m), x)[0]:
            raise AssertionError(f"exchange produced a non-stable multiset {m}")
    return results
