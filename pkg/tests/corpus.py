"""Shared test systems."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from tropsys.core import Monomial, TropicalPolynomial, TropicalSystem
from tropsys.generators import gen_system_A
from tropsys.io import loads_dsl

TWO_ROWS = loads_dsl(
    """
    vars: x y
    poly: 0 (+) 1*x (+) y
    poly: 0 (+) -2*x (+) -2*y (+) -2*x^2 (+) -3*x*y (+) -1*y^2
    """
)

LINE_DIRECTED = loads_dsl(
    """
    vars: x y
    poly: 0 (+) x (+) y (+) x^2*y (+) x*y^2
    poly: 0 (+) x (+) x*y^2 (+) x^4*y^3 (+) x^4*y^5
    poly: 0 (+) y (+) x^2*y (+) x^3*y^4 (+) x^5*y^4
    """
)

TROPICAL_LINE = loads_dsl("vars: x y\npoly: 0 (+) x (+) y\n")

ONE_VAR = loads_dsl("vars: x\npoly: 0 (+) x\n")

SPARSE_STABLE = loads_dsl(
    """
    vars: x y
    poly: 0 (+) 3*x (+) x*y (+) x^2
    poly: 3 (+) x (+) y^3
    """
)

BINOMIAL_PAIR = loads_dsl(
    """
    vars: x1 x2
    poly: x1*x2 (+) x1^3
    poly: 6*x1^5 (+) 4*x2^2
    """
)

# name -> system; the regression corpus used by the bound and compactification checks
CORPUS = {
    "two_rows": TWO_ROWS,
    "line_directed": LINE_DIRECTED,
    "tropical_line": TROPICAL_LINE,
    "one_var": ONE_VAR,
    "sparse_stable": SPARSE_STABLE,
    "binomial_pair": BINOMIAL_PAIR,
    "family_A3": gen_system_A(3),
}


def exponents_up_to(n: int, d: int):
    return [e for e in product(range(d + 1), repeat=n) if sum(e) <= d]


def full_support(n: int, d: int, coef) -> TropicalPolynomial:
    """Every monomial of degree <= d, coefficients from ``coef(e)``."""
    return TropicalPolynomial(tuple(Monomial(Fraction(coef(e)), e) for e in exponents_up_to(n, d)), n)


def random_finite_system(rng: random.Random, n: int, k: int, degrees, low=0, high=3):
    polys = [full_support(n, d, lambda e: rng.randint(low, high)) for d in degrees]
    return TropicalSystem(tuple(polys), n)


def random_finite_corpus(count: int = 100, seed: int = 20240613):
    """Small-integer coefficients make ties common, so prevarieties are nonempty
    and frequently degenerate."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice((2, 3, 4))
        degrees = [rng.choice((1, 2)) for _ in range(k)]
        out.append(random_finite_system(rng, 2, k, degrees))
    return out


def random_star_system(rng: random.Random, n: int, max_stars: int = 5, degree: int = 3):
    """Square system whose solution 0 has 2..max_stars stars in every row."""
    pool = exponents_up_to(n, degree)
    polys = []
    for _ in range(n):
        stars = rng.randint(2, max_stars)
        extra = rng.randint(0, 3)
        chosen = rng.sample(pool, min(len(pool), stars + extra))
        terms = [(Fraction(0) if i < stars else Fraction(rng.randint(1, 5)), e)
                 for i, e in enumerate(chosen)]
        polys.append(TropicalPolynomial(tuple(Monomial(c, e) for c, e in terms), n))
    return TropicalSystem(tuple(polys), n)


def _noise(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(0, 999), 10000)


def convex_lift_poly(rng: random.Random, d: int) -> TropicalPolynomial:
    """Full-support bivariate polynomial whose subdivision is the unimodular
    triangulation with edge directions (1,0), (0,1), (1,-1).

    Coefficients ``s (i^2 + ij + j^2) + a i + b j + noise`` with noise below
    1/10: the lift folds by ``s >= 1`` across every interior edge, so the noise
    cannot flip an edge, while the random linear part and noise move the curve
    into general position.
    """
    s = rng.randint(1, 3)
    a = Fraction(rng.randint(-500, 500), 100)
    b = Fraction(rng.randint(-500, 500), 100)
    return full_support(2, d, lambda e: s * (e[0] ** 2 + e[0] * e[1] + e[1] ** 2)
                        + a * e[0] + b * e[1] + _noise(rng))


def uniform_poly(rng: random.Random, d: int) -> TropicalPolynomial:
    return full_support(2, d, lambda e: Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)))


def degenerate_star_system(rng: random.Random, n: int, max_stars: int = 5):
    """Square system whose stars at 0 mostly lie in a common proper sublattice,
    so stability often fails; some rows stay generic."""
    r = rng.randint(1, max(n - 1, 1))
    span = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(r)]
    base = tuple(6 for _ in range(n))
    pool = exponents_up_to(n, 3)
    polys = []
    for _ in range(n):
        stars = rng.randint(2, max_stars)
        if rng.random() < 0.75:
            exps = set()
            for _ in range(50):
                if len(exps) >= stars:
                    break
                combo = [rng.randint(-1, 1) for _ in span]
                exps.add(tuple(b + sum(c * v[i] for c, v in zip(combo, span))
                               for i, b in enumerate(base)))
            exps = sorted(exps)
        else:
            exps = rng.sample(pool, min(len(pool), stars))
        if len(exps) < 2:
            exps = [base, tuple(b + 1 for b in base)]
        terms = [Monomial(Fraction(0), e) for e in exps]
        zero = tuple(0 for _ in range(n))
        if zero not in exps:
            terms.append(Monomial(Fraction(rng.randint(1, 5)), zero))
        polys.append(TropicalPolynomial(tuple(terms), n))
    return TropicalSystem(tuple(polys), n)
