"""Text DSL and JSON readers/writers for tropical systems.

DSL::

    # comment
    vars: x1 x2
    poly: 0 (+) 1*x1 (+) x2
    poly: inf (+) 2*x1^2 (+) -1/3*x1*x2

A term is ``COEF ["*" FACTOR]*`` or just ``FACTOR ["*" FACTOR]*`` (coefficient 0).
``COEF`` is a decimal, ``p/q`` or ``inf``; ``FACTOR`` is ``var["^" int]``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .core import INF, Monomial, Scalar, TropicalPolynomial, TropicalSystem, to_scalar

__all__ = [
    "ParseError",
    "parse_polynomial",
    "loads_dsl",
    "dumps_dsl",
    "loads_json",
    "dumps_json",
    "system_to_dict",
    "system_from_dict",
    "loads",
    "load",
    "format_scalar",
    "format_polynomial",
    "format_monomial",
    "parse_point",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_COEF_RE = re.compile(r"[+-]?(?:inf|\d+/\d+|\d+(?:\.\d*)?|\.\d+)", re.IGNORECASE)
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\s*\^\s*([+-]?\d+))?")
_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


def format_scalar(c: Scalar) -> str:
    return "inf" if c is INF else str(c)


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _parse_term(text: str, offset: int, lineno: int, variables: dict[str, int] | None,
                seen: list[str]):
    """Parse one term. Returns (coef, {var: exponent})."""
    pos = 0
    s = text
    # skip leading whitespace
    while pos < len(s) and s[pos].isspace():
        pos += 1
    if pos == len(s):
        raise ParseError("empty term", lineno, offset + pos + 1)
    coef: Scalar = Fraction(0)
    m = _COEF_RE.match(s, pos)
    if m and not (m.group(0).lower().lstrip("+-") == "inf" and _is_ident_continuation(s, m.end())):
        coef = to_scalar(m.group(0))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            return coef, {}
        if s[pos] != "*":
            raise ParseError(f"expected '*' after coefficient, got {s[pos]!r}",
                             lineno, offset + pos + 1)
        pos += 1
    powers: dict[str, int] = {}
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        fm = _FACTOR_RE.match(s, pos)
        if not fm:
            raise ParseError("expected a variable", lineno, offset + pos + 1)
        name, exp = fm.group(1), fm.group(2)
        e = int(exp) if exp is not None else 1
        if e < 0:
            raise ParseError(f"negative exponent {e}", lineno, offset + fm.start(2) + 1)
        if e == 0:
            raise ParseError("exponents must be positive integers", lineno,
                             offset + fm.start(2) + 1)
        if variables is not None and name not in variables:
            raise ParseError(f"unknown variable {name!r}", lineno, offset + pos + 1)
        if name not in seen:
            seen.append(name)
        powers[name] = powers.get(name, 0) + e
        pos = fm.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            return coef, powers
        if s[pos] != "*":
            raise ParseError(f"unexpected {s[pos]!r}", lineno, offset + pos + 1)
        pos += 1


def _is_ident_continuation(s: str, pos: int) -> bool:
    return pos < len(s) and (s[pos].isalnum() or s[pos] == "_")


def _split_terms(body: str):
    """Yield (term_text, column_offset) for each '(+)'-separated term."""
    start = 0
    while True:
        idx = body.find("(+)", start)
        if idx < 0:
            yield body[start:], start
            return
        yield body[start:idx], start
        start = idx + 3


def _parse_poly_body(body: str, offset: int, lineno: int,
                     variables: dict[str, int] | None, seen: list[str]):
    terms = []
    for text, col in _split_terms(body):
        coef, powers = _parse_term(text, offset + col, lineno, variables, seen)
        terms.append((coef, powers, offset + col + 1))
    return terms


def _build_poly(terms, var_index: dict[str, int], lineno: int) -> TropicalPolynomial:
    n = len(var_index)
    monos = {}
    for coef, powers, col in terms:
        e = [0] * n
        for name, p in powers.items():
            e[var_index[name]] = p
        key = tuple(e)
        if key in monos:
            raise ParseError(f"duplicate exponent vector {key}", lineno, col)
        monos[key] = Monomial(coef, key)
    return TropicalPolynomial(tuple(monos.values()), n)


def parse_polynomial(text: str, variables: list[str] | None = None) -> TropicalPolynomial:
    """Parse a single polynomial such as ``"0 (+) 1*x1 (+) x2"``.

    Without ``variables`` the names are collected and sorted naturally (x1 < x2 < x10).
    """
    seen: list[str] = []
    index = {v: i for i, v in enumerate(variables)} if variables is not None else None
    terms = _parse_poly_body(text, 0, 1, index, seen)
    if index is None:
        index = {v: i for i, v in enumerate(sorted(seen, key=_natural_key))}
    return _build_poly(terms, index, 1)


def loads_dsl(text: str) -> TropicalSystem:
    variables: list[str] | None = None
    raw = []
    seen: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        if not content.strip():
            continue
        stripped = content.lstrip()
        lead = len(content) - len(stripped)
        if stripped.startswith("vars:"):
            if variables is not None:
                raise ParseError("duplicate 'vars:' header", lineno, lead + 1)
            if raw:
                raise ParseError("'vars:' must precede the polynomials", lineno, lead + 1)
            names = stripped[5:].split()
            for name in names:
                if not _VAR_RE.match(name):
                    raise ParseError(f"bad variable name {name!r}", lineno,
                                     content.find(name) + 1)
            if len(set(names)) != len(names):
                raise ParseError("repeated variable name", lineno, lead + 1)
            variables = names
        elif stripped.startswith("poly:"):
            body = stripped[5:]
            index = {v: i for i, v in enumerate(variables)} if variables is not None else None
            raw.append((_parse_poly_body(body, lead + 5, lineno, index, seen), lineno))
        else:
            raise ParseError("expected 'vars:' or 'poly:'", lineno, lead + 1)
    if not raw:
        raise ParseError("no polynomials found", 1, 1)
    if variables is None:
        variables = sorted(seen, key=_natural_key)
    if not variables:
        raise ParseError("a system needs at least one variable", 1, 1)
    index = {v: i for i, v in enumerate(variables)}
    polys = tuple(_build_poly(terms, index, lineno) for terms, lineno in raw)
    return TropicalSystem(polys, len(variables), tuple(variables))


def format_monomial(m: Monomial, variables) -> str:
    factors = []
    for name, e in zip(variables, m.exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return format_scalar(m.coef)
    if m.coef == 0:
        return "*".join(factors)
    return "*".join([format_scalar(m.coef)] + factors)


def format_polynomial(p: TropicalPolynomial, variables=None) -> str:
    if variables is None:
        variables = [f"x{i + 1}" for i in range(p.n)]
    return " (+) ".join(format_monomial(m, variables) for m in p.monomials)


def dumps_dsl(system: TropicalSystem) -> str:
    lines = ["vars: " + " ".join(system.variables)]
    for p in system.polys:
        lines.append("poly: " + format_polynomial(p, system.variables))
    return "\n".join(lines) + "\n"


def system_to_dict(system: TropicalSystem) -> dict[str, Any]:
    return {
        "n": system.n,
        "vars": list(system.variables),
        "polys": [
            {"terms": [{"c": format_scalar(m.coef), "e": list(m.exponents)}
                       for m in p.monomials]}
            for p in system.polys
        ],
    }


def system_from_dict(data: dict[str, Any]) -> TropicalSystem:
    try:
        n = int(data["n"])
        polys = []
        for p in data["polys"]:
            monos = []
            seen = set()
            for t in p["terms"]:
                e = tuple(int(v) for v in t["e"])
                if len(e) != n:
                    raise ValueError(f"exponent vector {list(e)} does not have length {n}")
                if any(v < 0 for v in e):
                    raise ValueError(f"negative exponent in {list(e)}")
                if e in seen:
                    raise ValueError(f"duplicate exponent vector {list(e)}")
                seen.add(e)
                monos.append(Monomial(to_scalar(str(t["c"])), e))
            polys.append(TropicalPolynomial(tuple(monos), n))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed system JSON: {exc}") from exc
    variables = data.get("vars")
    return TropicalSystem(tuple(polys), n, tuple(variables) if variables else None)


def loads_json(text: str) -> TropicalSystem:
    return system_from_dict(json.loads(text))


def dumps_json(system: TropicalSystem, **kwargs) -> str:
    return json.dumps(system_to_dict(system), **kwargs)


def loads(text: str) -> TropicalSystem:
    """Parse either format; JSON is recognised by a leading '{'."""
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_dsl(text)


def load(path: str) -> TropicalSystem:
    with open(path) as fh:
        return loads(fh.read())


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Parse ``"a/b,c/d"`` into a tuple of Fractions."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad point {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad point {text!r}: {exc}") from None
