"""Independent oracles and randomized case generators shared by the tests.

Everything here deliberately avoids the library's own code paths: ranks are
recomputed by dense Gaussian elimination over fractions, graded pieces by
brute-force exponent products, and Hilbert counts by literal truncated
series multiplication.  Frozen expected values in the tests were produced
by these oracles.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from fano72 import Polynomial, enumerate_monomials, hilbert_count, multiplicity_along_line
from fano72.linsys import P3_VARS


def rand_fraction(rng: random.Random, zero_ok: bool = True) -> Fraction:
    numerator = rng.randint(-9, 9)
    if not zero_ok and numerator == 0:
        numerator = 1
    return Fraction(numerator, rng.randint(1, 9))


def rand_poly(rng: random.Random, ring, max_terms: int = 3, max_exp: int = 2,
              allow_zero: bool = True) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        exponents = tuple(rng.randint(0, max_exp) for _ in ring)
        terms[exponents] = rand_fraction(rng, zero_ok=False)
    p = Polynomial(ring, terms)
    if not allow_zero and p.is_zero:
        return Polynomial.constant(ring, 1)
    return p


# -- dense rational elimination, the rank oracle ---------------------------

def rref_rank(rows) -> int:
    matrix = [[Fraction(v) for v in row] for row in rows]
    if not matrix:
        return 0
    rank = 0
    for c in range(len(matrix[0])):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][c]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        scale = matrix[rank][c]
        matrix[rank] = [v / scale for v in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][c]:
                f = matrix[i][c]
                matrix[i] = [vi - f * vr for vi, vr in zip(matrix[i], matrix[rank])]
        rank += 1
    return rank


def poly_matrix(polys, degree: int):
    """Dense coefficient matrix of homogeneous polynomials over one graded piece."""
    columns = enumerate_monomials((1,) * len(polys[0].ring), degree)
    index = {e: i for i, e in enumerate(columns)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(columns)
        for e, c in p.items():
            row[index[e]] = c
        rows.append(row)
    return rows


# -- graded-piece oracles ---------------------------------------------------

def brute_force_monomials(weights, degree: int) -> set[tuple[int, ...]]:
    ranges = [range(degree // w + 1) for w in weights]
    return {e for e in product(*ranges)
            if sum(ei * wi for ei, wi in zip(e, weights)) == degree}


def series_coefficients(weights, depth: int) -> list[int]:
    """Coefficients of prod 1/(1 - t^w) up to t^depth by truncated multiplication."""
    coefficients = [1] + [0] * depth
    for w in weights:
        factor = [1 if k % w == 0 else 0 for k in range(depth + 1)]
        coefficients = [sum(coefficients[i] * factor[k - i] for i in range(k + 1))
                        for k in range(depth + 1)]
    return coefficients


# -- the randomized property suites (counts chosen by the caller) -----------

def ring_axiom_failures(seed: int, cases: int) -> list[str]:
    rng = random.Random(seed)
    ring = ("a", "b", "c")
    failures = []
    for case in range(cases):
        f = rand_poly(rng, ring)
        g = rand_poly(rng, ring)
        h = rand_poly(rng, ring)
        if (f + g) + h != f + (g + h):
            failures.append(f"associativity of + broke at case {case}")
        if f + g != g + f or f * g != g * f:
            failures.append(f"commutativity broke at case {case}")
        if (f * g) * h != f * (g * h):
            failures.append(f"associativity of * broke at case {case}")
        if f * (g + h) != f * g + f * h:
            failures.append(f"distributivity broke at case {case}")
        if Polynomial(ring, dict(f.items())) != f:
            failures.append(f"canonical form is not a fixpoint at case {case}")
    return failures


def substitution_failures(seed: int, cases: int) -> list[str]:
    rng = random.Random(seed)
    source = ("u", "v")
    target = ("a", "b")
    failures = []
    for case in range(cases):
        f = rand_poly(rng, source)
        g = rand_poly(rng, source)
        images = {"u": rand_poly(rng, target), "v": rand_poly(rng, target)}
        if (f * g).substitute(images) != f.substitute(images) * g.substitute(images):
            failures.append(f"substitution broke multiplication at case {case}")
        if (f + g).substitute(images) != f.substitute(images) + g.substitute(images):
            failures.append(f"substitution broke addition at case {case}")
    return failures


def pullback_multiplicativity_failures(seed: int, cases: int, phi) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        g = _rand_weighted_form(rng, phi)
        h = _rand_weighted_form(rng, phi)
        if phi.pullback(g * h) != phi.pullback(g) * phi.pullback(h):
            failures.append(f"pullback broke multiplication at case {case}")
    return failures


def _rand_weighted_form(rng: random.Random, phi) -> Polynomial:
    degree = rng.randint(1, 12)
    basis = enumerate_monomials(phi.target_weights, degree)
    terms = {}
    for _ in range(rng.randint(1, 2)):
        terms[rng.choice(basis)] = rand_fraction(rng, zero_ok=False)
    return Polynomial(phi.target_ring, terms)


def valuation_failures(seed: int, cases: int) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        f = rand_poly(rng, P3_VARS, max_terms=4, allow_zero=False)
        g = rand_poly(rng, P3_VARS, max_terms=4, allow_zero=False)
        total = multiplicity_along_line(f * g)
        if total != multiplicity_along_line(f) + multiplicity_along_line(g):
            failures.append(f"valuation additivity broke at case {case}")
    return failures


def hilbert_consistency_failures(seed: int, cases: int, max_degree: int = 40) -> list[str]:
    rng = random.Random(seed)
    failures = []
    jobs = [((1, 1, 4, 6), d) for d in range(max_degree + 1)]
    jobs += [((1, 1, 1, 3), d) for d in range(max_degree + 1)]
    while len(jobs) < cases:
        arity = rng.randint(2, 4)
        weights = tuple(rng.randint(2, 9) for _ in range(arity))
        jobs.append((weights, rng.randint(0, max_degree)))
    series_cache: dict[tuple[int, ...], list[int]] = {}
    for weights, degree in jobs[:cases]:
        if weights not in series_cache:
            series_cache[weights] = series_coefficients(weights, max_degree)
        counted = hilbert_count(weights, degree)
        listed = enumerate_monomials(weights, degree)
        if counted != len(listed):
            failures.append(f"count vs enumeration differ for {weights} degree {degree}")
        if counted != series_cache[weights][degree]:
            failures.append(f"count vs series differ for {weights} degree {degree}")
        if len(set(listed)) != len(listed):
            failures.append(f"enumeration has duplicates for {weights} degree {degree}")
    return failures
