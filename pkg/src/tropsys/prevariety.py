"""Global structure of a tropical prevariety.

The prevariety is covered by *cells*: choose in every row one pair of finite
monomials, require the two to be equal and no larger than every other finite
monomial of that row.  Each choice gives a closed convex polyhedron; the
nonempty ones cover the prevariety.  Patterns are enumerated depth first,
dropping a prefix as soon as its polyhedron is empty.

Connected components are the classes of the cell intersection graph.  Two
disjoint closed polyhedra are at positive distance from each other, so a chain
of pairwise intersecting cells is exactly a path inside the union.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .certify import is_generalized_vertex
from .core import INF, TropicalPolynomial, TropicalSystem, membership, to_point
from .linear import EQ, LE, Echelon, LinearConstraint, Polyhedron, solve_square
from .stars import star_table

__all__ = [
    "CellCapExceeded",
    "Cell",
    "ComponentReport",
    "StableSolutions",
    "default_cell_cap",
    "cells",
    "connected_components",
    "local_dim",
    "stable_solutions",
    "generalized_vertices",
    "isolated_points",
]

DEFAULT_CELL_CAP = 200_000


class CellCapExceeded(RuntimeError):
    """Raised when pattern enumeration visits more patterns than allowed."""


def default_cell_cap() -> int:
    env = os.environ.get("TROP_CELL_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"TROP_CELL_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CELL_CAP


@dataclass(frozen=True)
class Cell:
    """``pattern[i]`` is the monomial pair equalised in row i (None for rows
    whose coefficients are all INF)."""

    pattern: tuple[tuple[int, int] | None, ...]
    polyhedron: Polyhedron

    @property
    def dim(self) -> int:
        return self.polyhedron.dim

    @property
    def witness(self) -> tuple[Fraction, ...]:
        return self.polyhedron.witness

    def contains(self, x) -> bool:
        return self.polyhedron.contains(x)


def _pair_constraints(poly: TropicalPolynomial, finite: Sequence[int], a: int, b: int,
                      n: int) -> list[LinearConstraint]:
    ma, mb = poly.monomials[a], poly.monomials[b]
    cons = [LinearConstraint(tuple(x - y for x, y in zip(ma.exponents, mb.exponents)),
                             mb.coef - ma.coef, EQ)]
    for c in finite:
        if c == a or c == b:
            continue
        mc = poly.monomials[c]
        cons.append(LinearConstraint(tuple(x - y for x, y in zip(ma.exponents, mc.exponents)),
                                     mc.coef - ma.coef, LE))
    return cons


def _active_rows(system: TropicalSystem):
    """``(row, finite indices)`` for rows that constrain anything.

    Returns None when some row has exactly one finite monomial (empty prevariety).
    """
    rows = []
    for r, p in enumerate(system.polys):
        fin = p.finite_indices()
        if not fin:
            continue
        if len(fin) == 1:
            return None
        rows.append((r, fin))
    return rows


def cells(system: TropicalSystem, cap: int | None = None) -> list[Cell]:
    """All nonempty cells, in lexicographic pattern order.

    Raises :class:`CellCapExceeded` after ``cap`` patterns (default: the
    ``TROP_CELL_CAP`` environment variable, else 200000).
    """
    if cap is None:
        cap = default_cell_cap()
    rows = _active_rows(system)
    if rows is None:
        return []
    # small rows first prunes earlier; the pattern keeps original row order
    order = sorted(rows, key=lambda rf: len(rf[1]))
    n = system.n
    options = [
        [(a, b, _pair_constraints(system.polys[r], fin, a, b, n))
         for i, a in enumerate(fin) for b in fin[i + 1:]]
        for r, fin in order
    ]
    out: list[tuple[tuple, Polyhedron]] = []
    visited = 0

    def walk(depth: int, poly: Polyhedron, chosen: dict[int, tuple[int, int]]):
        nonlocal visited
        if depth == len(order):
            pattern = tuple(chosen.get(r) for r in range(system.k))
            out.append((pattern, poly))
            return
        r = order[depth][0]
        for a, b, cons in options[depth]:
            visited += 1
            if visited > cap:
                raise CellCapExceeded(
                    f"cell enumeration exceeded {cap} patterns; raise TROP_CELL_CAP"
                )
            nxt = poly.refine(cons)
            if nxt.is_feasible:
                chosen[r] = (a, b)
                walk(depth + 1, nxt, chosen)
                del chosen[r]

    walk(0, Polyhedron((), n), {})
    out.sort(key=lambda item: tuple((-1, -1) if pr is None else pr for pr in item[0]))
    return [Cell(pattern, poly) for pattern, poly in out]


def _cells_meet(a: Cell, b: Cell) -> bool:
    if b.contains(a.witness) or a.contains(b.witness):
        return True
    if a.dim == 0 or b.dim == 0:
        return False
    return a.polyhedron.intersect(b.polyhedron).is_feasible


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def component_labels(cell_list: Sequence[Cell]) -> list[list[int]]:
    """Group cell indices into connected components (ordered by first cell)."""
    uf = _UnionFind(len(cell_list))
    for j in range(len(cell_list)):
        for i in range(j):
            if uf.find(i) == uf.find(j):
                continue
            if _cells_meet(cell_list[i], cell_list[j]):
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(cell_list)):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted(groups.values())


@dataclass
class ComponentReport:
    count: int
    representatives: list[tuple[Fraction, ...]]
    isolated: list[tuple[Fraction, ...]]
    generalized_vertices: list[tuple[Fraction, ...]] | None
    cells: list[Cell] = field(repr=False)
    components: list[list[int]] = field(repr=False)

    def component_of(self, x) -> int | None:
        """Index of the component containing ``x`` (None if x is not a point of V)."""
        x = to_point(x)
        for ci, members in enumerate(self.components):
            if any(self.cells[i].contains(x) for i in members):
                return ci
        return None


def connected_components(system: TropicalSystem, cap: int | None = None,
                         with_vertices: bool = True) -> ComponentReport:
    cell_list = cells(system, cap)
    groups = component_labels(cell_list)
    reps = [cell_list[g[0]].witness for g in groups]
    isolated = sorted(cell_list[g[0]].witness for g in groups
                      if all(cell_list[i].dim == 0 for i in g))
    verts = _vertices_from_cells(system, cell_list) if with_vertices else None
    return ComponentReport(len(groups), reps, isolated, verts, cell_list, groups)


def _local_fan_rows(system: TropicalSystem, x):
    table = star_table(system, x)
    rows = []
    for p, row in zip(system.polys, table.rows):
        fin = sorted(i for i in row if p.monomials[i].finite)
        if fin:
            rows.append((p, fin))
    return rows


def local_dim(system: TropicalSystem, x) -> int:
    """Local dimension of the prevariety at ``x`` (0 iff x is isolated).

    Computed on the tangent fan at x: only starred monomials matter there, so
    each cell through x corresponds to a cone cut out by starred pairs.  A
    branch-and-bound over those cones returns the largest dimension.
    """
    x = to_point(x)
    if not membership(system, x):
        raise ValueError("point is not in the prevariety")
    n = system.n
    rows = _local_fan_rows(system, x)
    best = -1

    def walk(depth: int, cone: Polyhedron):
        nonlocal best
        d = cone.dim
        if d <= best:
            return
        if depth == len(rows):
            best = d
            return
        p, fin = rows[depth]
        for i, a in enumerate(fin):
            for b in fin[i + 1:]:
                cons = [c.homogeneous() for c in _pair_constraints(p, fin, a, b, n)]
                walk(depth + 1, cone.refine(cons))
                if best == n:
                    return

    walk(0, Polyhedron((), n))
    return best


@dataclass
class StableSolutions:
    points: list[tuple[Fraction, ...]]
    generic: bool
    finite_coefficients: bool
    bezout_number: int
    degenerate: list[tuple[Fraction, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def count(self) -> int:
        return len(self.points)


def stable_solutions(system: TropicalSystem, require_finite_coeffs: bool = False
                     ) -> StableSolutions:
    """Stable solutions of a square system, as distinct points.

    Every choice of one finite pair per row whose difference vectors are
    independent determines a point by an exact linear solve; the point is kept
    when both monomials of every chosen pair attain their row minimum there.
    ``generic`` is True when every returned point has exactly two stars per
    row; otherwise those points are listed in ``degenerate``.
    """
    if system.k != system.n:
        raise ValueError(f"stable solutions need k == n, got k={system.k}, n={system.n}")
    finite = system.has_all_coefficients_finite()
    if require_finite_coeffs and not finite:
        raise ValueError("system does not have all coefficients finite")
    n = system.n
    options = []
    for p in system.polys:
        fin = p.finite_indices()
        pairs = []
        for i, a in enumerate(fin):
            for b in fin[i + 1:]:
                ma, mb = p.monomials[a], p.monomials[b]
                vec = tuple(u - v for u, v in zip(ma.exponents, mb.exponents))
                pairs.append((a, b, vec, mb.coef - ma.coef))
        options.append(pairs)
    found: set[tuple[Fraction, ...]] = set()

    def walk(row: int, ech: Echelon, A: list, b: list, chosen: list):
        if row == n:
            x = solve_square(A, b)
            ok = True
            for r, (ia, ib) in enumerate(chosen):
                value, argmin = system.polys[r].evaluate(x)
                if ia not in argmin or ib not in argmin:
                    ok = False
                    break
            if ok:
                found.add(x)
            return
        for a, bb, vec, rhs in options[row]:
            nxt = ech.add(vec)
            if nxt is None:
                continue
            walk(row + 1, nxt, A + [vec], b + [rhs], chosen + [(a, bb)])

    walk(0, Echelon(n), [], [], [])
    points = sorted(found)
    degenerate = []
    for x in points:
        table = star_table(system, x)
        if any(len(r) != 2 for r in table.rows):
            degenerate.append(x)
    bezout = 1
    for d in system.degrees:
        bezout *= d
    return StableSolutions(points, not degenerate, finite, bezout, degenerate)


def _filter_vertices(system: TropicalSystem, candidates) -> list[tuple[Fraction, ...]]:
    out = []
    for x in sorted(set(candidates)):
        if membership(system, x) and is_generalized_vertex(system, x)[0]:
            out.append(x)
    return out


def _vertices_from_cells(system: TropicalSystem, cell_list: Sequence[Cell]):
    candidates = []
    for c in cell_list:
        candidates.extend(c.polyhedron.vertices())
    return _filter_vertices(system, candidates)


def generalized_vertices(system: TropicalSystem, method: str = "cells",
                         cap: int | None = None) -> list[tuple[Fraction, ...]]:
    """Generalized vertices lying on the prevariety, sorted.

    ``method="pairs"`` solves every independent choice of n monomial pairs
    (rows may repeat).  ``method="cells"`` (default) takes the vertices of the
    cells instead: the set where a point's star table is kept is a face of
    every cell through the point, so a generalized vertex is a vertex of each
    such cell.
    """
    if method == "cells":
        return _vertices_from_cells(system, cells(system, cap))
    if method != "pairs":
        raise ValueError(f"unknown method {method!r}")
    n = system.n
    elements = []
    for p in system.polys:
        fin = p.finite_indices()
        for i, a in enumerate(fin):
            for b in fin[i + 1:]:
                ma, mb = p.monomials[a], p.monomials[b]
                vec = tuple(u - v for u, v in zip(ma.exponents, mb.exponents))
                elements.append((vec, mb.coef - ma.coef))
    candidates = set()

    def walk(start: int, ech: Echelon, A: list, b: list):
        if len(A) == n:
            candidates.add(solve_square(A, b))
            return
        for j in range(start, len(elements)):
            vec, rhs = elements[j]
            nxt = ech.add(vec)
            if nxt is not None:
                walk(j + 1, nxt, A + [vec], b + [rhs])

    walk(0, Echelon(n), [], [])
    return _filter_vertices(system, candidates)


def isolated_points(system: TropicalSystem, cap: int | None = None
                    ) -> list[tuple[Fraction, ...]]:
    """Isolated points of the prevariety, sorted.

    An isolated point is a 0-dimensional cell, so candidates are the points of
    such cells; each is kept iff its local dimension is 0.
    """
    candidates = sorted({c.witness for c in cells(system, cap) if c.dim == 0})
    return [x for x in candidates if local_dim(system, x) == 0]
