"""Exact rational linear algebra and polyhedral feasibility.

Everything works over :class:`fractions.Fraction`. Feasibility is decided by
eliminating the equality constraints (exact Gauss-Jordan) and running a
two-phase simplex with Bland's rule on the remaining inequalities, so results
are exact and deterministic for a fixed constraint order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Literal, Sequence

__all__ = [
    "rank",
    "solve_square",
    "Echelon",
    "LinearConstraint",
    "Polyhedron",
    "feasible",
    "affine_dim",
    "linprog_min",
    "EQ",
    "LE",
]

EQ: Literal["EQ"] = "EQ"
LE: Literal["LE"] = "LE"

_ZERO = Fraction(0)


def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in v)


class Echelon:
    """Incremental row-echelon basis, used to test linear independence one
    vector at a time.  Immutable: :meth:`add` returns a new object."""

    __slots__ = ("rows", "dim")

    def __init__(self, dim: int, rows: tuple = ()):
        self.dim = dim
        self.rows = rows  # tuples (pivot, vector) with vector[pivot] == 1

    def reduce(self, v) -> list[Fraction]:
        w = list(_frac_vec(v))
        for p, row in self.rows:
            c = w[p]
            if c:
                for j in range(p, self.dim):
                    if row[j]:
                        w[j] -= c * row[j]
        return w

    def add(self, v) -> "Echelon | None":
        """The extended basis, or ``None`` if ``v`` is in the current span."""
        w = self.reduce(v)
        for p, c in enumerate(w):
            if c:
                row = tuple(x / c for x in w)
                return Echelon(self.dim, self.rows + ((p, row),))
        return None

    def __len__(self) -> int:
        return len(self.rows)


def rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank of the span of ``vectors`` (0 for an empty list)."""
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors must have equal length")
    basis = Echelon(n)
    for v in vectors:
        nxt = basis.add(v)
        if nxt is not None:
            basis = nxt
            if len(basis) == n:
                break
    return len(basis)


def solve_square(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of ``A x = b`` or ``None`` when ``A`` is singular."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_square needs an n x n matrix and a length-n vector")
    M = [list(_frac_vec(row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pr = M[col]
        inv = 1 / pr[col]
        for j in range(col, n + 1):
            pr[j] *= inv
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                row = M[r]
                for j in range(col, n + 1):
                    if pr[j]:
                        row[j] -= f * pr[j]
    return tuple(M[i][n] for i in range(n))


@dataclass(frozen=True)
class LinearConstraint:
    """``coeffs . x  REL  rhs`` with REL one of EQ, LE."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    relation: Literal["EQ", "LE"] = LE

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frac_vec(self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if self.relation not in (EQ, LE):
            raise ValueError(f"unknown relation {self.relation!r}")

    def lhs(self, x) -> Fraction:
        return sum((a * xi for a, xi in zip(self.coeffs, x) if a), _ZERO)

    def satisfied_by(self, x) -> bool:
        v = self.lhs(x)
        return v == self.rhs if self.relation == EQ else v <= self.rhs

    def homogeneous(self) -> "LinearConstraint":
        return LinearConstraint(self.coeffs, _ZERO, self.relation)


# -- simplex ---------------------------------------------------------------


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    prow = T[r]
    inv = 1 / prow[c]
    if inv != 1:
        for j, v in enumerate(prow):
            if v:
                prow[j] = v * inv
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    basis[r] = c


def _run_simplex(T, basis, cost, allowed) -> bool:
    """Minimise ``cost`` over the tableau (last column = rhs) with Bland's rule.

    Returns False when the objective is unbounded below.
    """
    ncols = len(cost)
    while True:
        # reduced costs, entering column = smallest index with negative cost
        enter = -1
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            d = cost[j]
            for i, bi in enumerate(basis):
                cb = cost[bi]
                if cb and T[i][j]:
                    d -= cb * T[i][j]
            if d < 0:
                enter = j
                break
        if enter < 0:
            return True
        leave = -1
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return False
        _pivot(T, basis, leave, enter)


def _simplex_le(A: list[list[Fraction]], b: list[Fraction], c=None):
    """Solve ``min c.z  s.t.  A z <= b`` over free ``z``.

    Returns ``(status, z)`` with status in {"optimal", "infeasible", "unbounded"};
    with ``c=None`` any feasible point is returned as "optimal".
    """
    m = len(A)
    r = len(A[0]) if m else (len(c) if c is not None else 0)
    if r == 0:
        if all(bi >= 0 for bi in b):
            return "optimal", ()
        return "infeasible", None
    if m == 0:
        if c is not None and any(c):
            return "unbounded", None
        return "optimal", tuple(_ZERO for _ in range(r))
    # columns: z+ (r), z- (r), slack (m), artificial (one per negative rhs)
    neg_rows = [i for i in range(m) if b[i] < 0]
    nart = len(neg_rows)
    ncols = 2 * r + m + nart
    T = []
    basis = []
    art = 0
    for i in range(m):
        row = [_ZERO] * (ncols + 1)
        sign = -1 if b[i] < 0 else 1
        for j, a in enumerate(A[i]):
            if a:
                row[j] = sign * a
                row[r + j] = -sign * a
        row[2 * r + i] = Fraction(sign)
        row[-1] = sign * b[i]
        if sign < 0:
            col = 2 * r + m + art
            row[col] = Fraction(1)
            basis.append(col)
            art += 1
        else:
            basis.append(2 * r + i)
        T.append(row)
    allowed = [True] * ncols
    if nart:
        cost1 = [_ZERO] * (2 * r + m) + [Fraction(1)] * nart
        _run_simplex(T, basis, cost1, allowed)
        value = sum((T[i][-1] for i, bi in enumerate(basis) if bi >= 2 * r + m), _ZERO)
        if value > 0:
            return "infeasible", None
        # drive zero-level artificials out of the basis
        i = 0
        while i < len(T):
            if basis[i] >= 2 * r + m:
                col = next((j for j in range(2 * r + m) if T[i][j]), None)
                if col is None:
                    del T[i]
                    del basis[i]
                    continue
                _pivot(T, basis, i, col)
            i += 1
        for j in range(2 * r + m, ncols):
            allowed[j] = False
    status = "optimal"
    if c is not None:
        cost2 = [Fraction(v) for v in c] + [-Fraction(v) for v in c] + [_ZERO] * (m + nart)
        if not _run_simplex(T, basis, cost2, allowed):
            status = "unbounded"
    values = [_ZERO] * ncols
    for i, bi in enumerate(basis):
        values[bi] = T[i][-1]
    z = tuple(values[j] - values[r + j] for j in range(r))
    return status, (z if status == "optimal" else None)


def linprog_min(c, A_le, b_le):
    """Exact ``min c.z s.t. A_le z <= b_le`` (free z).

    Returns ``(status, z, value)``; ``z``/``value`` are None unless optimal.
    """
    A = [list(_frac_vec(row)) for row in A_le]
    b = list(_frac_vec(b_le))
    status, z = _simplex_le(A, b, list(_frac_vec(c)))
    if status != "optimal":
        return status, None, None
    return status, z, sum((ci * zi for ci, zi in zip(_frac_vec(c), z)), _ZERO)


# -- polyhedra -------------------------------------------------------------


@dataclass(frozen=True)
class _Reduced:
    """Equalities eliminated: x = x0 + N z, remaining rows G z <= h."""

    x0: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]  # columns of N, each of length n
    G: tuple[tuple[Fraction, ...], ...]
    h: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return len(self.basis)

    def lift(self, z) -> tuple[Fraction, ...]:
        x = list(self.x0)
        for zj, col in zip(z, self.basis):
            if zj:
                for i, v in enumerate(col):
                    if v:
                        x[i] += zj * v
        return tuple(x)


def _eliminate_equalities(n: int, eqs: list[LinearConstraint], les: list[LinearConstraint]):
    M = [list(c.coeffs) + [c.rhs] for c in eqs]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        pr = M[row]
        inv = 1 / pr[col]
        for j in range(col, n + 1):
            pr[j] *= inv
        for i in range(len(M)):
            if i != row and M[i][col]:
                f = M[i][col]
                for j in range(col, n + 1):
                    if pr[j]:
                        M[i][j] -= f * pr[j]
        pivots.append(col)
        row += 1
    for i in range(row, len(M)):
        if M[i][n]:
            return None
    free = [j for j in range(n) if j not in pivots]
    x0 = [_ZERO] * n
    for i, p in enumerate(pivots):
        x0[p] = M[i][n]
    basis = []
    for f in free:
        col = [_ZERO] * n
        col[f] = Fraction(1)
        for i, p in enumerate(pivots):
            col[p] = -M[i][f]
        basis.append(tuple(col))
    # rows equal up to a positive factor collapse to the tightest one
    tightest: dict[tuple[Fraction, ...], Fraction] = {}
    for c in les:
        g = [sum((a * v for a, v in zip(c.coeffs, col) if a and v), _ZERO) for col in basis]
        hj = c.rhs - c.lhs(x0)
        lead = next((abs(v) for v in g if v), None)
        if lead is None:
            if hj < 0:
                return None
            continue
        key = tuple(v / lead for v in g)
        hj /= lead
        if key not in tightest or hj < tightest[key]:
            tightest[key] = hj
    G = tuple(tightest)
    h = tuple(tightest[g] for g in G)
    return _Reduced(tuple(x0), tuple(basis), G, h)


@dataclass(frozen=True)
class Polyhedron:
    """Solution set of a finite list of EQ/LE constraints in R^n."""

    constraints: tuple[LinearConstraint, ...]
    n: int
    _hint: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        cons = tuple(self.constraints)
        for c in cons:
            if len(c.coeffs) != self.n:
                raise ValueError("constraint length does not match the dimension")
        object.__setattr__(self, "constraints", cons)

    @classmethod
    def from_rows(cls, n: int, eqs: Iterable = (), les: Iterable = ()) -> "Polyhedron":
        """``eqs``/``les`` are iterables of ``(coeffs, rhs)``."""
        cons = [LinearConstraint(a, b, EQ) for a, b in eqs]
        cons += [LinearConstraint(a, b, LE) for a, b in les]
        return cls(tuple(cons), n)

    @property
    def equalities(self) -> list[LinearConstraint]:
        return [c for c in self.constraints if c.relation == EQ]

    @property
    def inequalities(self) -> list[LinearConstraint]:
        return [c for c in self.constraints if c.relation == LE]

    def contains(self, x) -> bool:
        return all(c.satisfied_by(x) for c in self.constraints)

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return Polyhedron(self.constraints + other.constraints, self.n)

    def with_constraints(self, extra: Iterable[LinearConstraint], hint=None) -> "Polyhedron":
        return Polyhedron(self.constraints + tuple(extra), self.n, hint)

    def refine(self, extra: Iterable[LinearConstraint]) -> "Polyhedron":
        """Add constraints, reusing this polyhedron's witness when it still fits."""
        extra = tuple(extra)
        out = Polyhedron(self.constraints + extra, self.n)
        w = self.witness
        if w is not None and all(c.satisfied_by(w) for c in extra):
            out.__dict__["_feasibility"] = (True, w)
        elif w is None:
            out.__dict__["_feasibility"] = (False, None)
        return out

    def recession_cone(self) -> "Polyhedron":
        return Polyhedron(tuple(c.homogeneous() for c in self.constraints), self.n)

    @cached_property
    def _reduced(self) -> _Reduced | None:
        return _eliminate_equalities(self.n, self.equalities, self.inequalities)

    @cached_property
    def _feasibility(self) -> tuple[bool, tuple[Fraction, ...] | None]:
        if self._hint is not None and self.contains(self._hint):
            return True, tuple(self._hint)
        red = self._reduced
        if red is None:
            return False, None
        status, z = _simplex_le([list(g) for g in red.G], list(red.h))
        if status == "infeasible":
            return False, None
        x = red.lift(z)
        assert self.contains(x), "simplex witness violates a constraint"
        return True, x

    @property
    def is_feasible(self) -> bool:
        return self._feasibility[0]

    @property
    def witness(self) -> tuple[Fraction, ...] | None:
        return self._feasibility[1]

    @cached_property
    def dim(self) -> int:
        if not self.is_feasible:
            return -1
        red = self._reduced
        r = red.r
        if r == 0:
            return 0
        G = [list(g) for g in red.G]
        h = list(red.h)
        # witness in reduced coordinates
        status, z0 = _simplex_le(G, h)
        implicit: list[int] = []
        strict = set()
        for j, (g, hj) in enumerate(zip(G, h)):
            if not any(g):
                continue
            if _dot(g, z0) < hj:
                strict.add(j)
        for j, (g, hj) in enumerate(zip(G, h)):
            if not any(g) or j in strict:
                continue
            status, z = _simplex_le(G, h, g)
            if status == "unbounded" or _dot(g, z) < hj:
                strict.add(j)
                if z is not None:
                    for i, (gi, hi) in enumerate(zip(G, h)):
                        if i not in strict and any(gi) and _dot(gi, z) < hi:
                            strict.add(i)
            else:
                implicit.append(j)
        return r - rank([G[j] for j in implicit])

    def is_bounded(self) -> bool:
        """True for the empty set and for polytopes."""
        if not self.is_feasible:
            return True
        return self.recession_cone().dim == 0

    def vertices(self) -> list[tuple[Fraction, ...]]:
        """All vertices (0-dimensional faces), in a deterministic order.

        Brute force over choices of active inequalities; intended for the small
        cells met in this package.
        """
        from itertools import combinations

        if not self.is_feasible:
            return []
        red = self._reduced
        r = red.r
        if r == 0:
            return [red.x0]
        rows = [(g, hj) for g, hj in zip(red.G, red.h) if any(g)]
        found = []
        seen = set()
        for combo in combinations(range(len(rows)), r):
            A = [rows[i][0] for i in combo]
            z = solve_square(A, [rows[i][1] for i in combo])
            if z is None:
                continue
            x = red.lift(z)
            if x not in seen and self.contains(x):
                seen.add(x)
                found.append(x)
        return found


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b) if x and y), _ZERO)


def feasible(P: Polyhedron) -> tuple[bool, tuple[Fraction, ...] | None]:
    """``(True, witness)`` if ``P`` is nonempty, else ``(False, None)``."""
    return P.is_feasible, P.witness


def affine_dim(P: Polyhedron) -> int:
    """Dimension of the affine hull of ``P``; -1 when empty.

    Implicit equalities are found by minimising each tight inequality over ``P``
    (one LP per candidate), then ranked together with the explicit equalities.
    """
    return P.dim
