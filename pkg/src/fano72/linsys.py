"""Linear systems of surfaces in P^3 built from a pencil cubic.

The geometric setup lives in coordinates [x1, x2, x3, x4]: the line
r = {x1 = x2 = 0}, the pencil of planes x2 = t*x1 through it, the two
coordinate planes x1 = 0 and x2 = 0, three further pencil planes cut out
by a binary cubic xi(x1, x2), and the distinguished point [0, 0, 0, 1].

Two systems are constructed over a pencil cubic: an 11-generator sextic
system (surfaces of degree 6 with multiplicity 5 along r) and a
39-generator degree-12 system (multiplicity 9 along r).  A third route
recovers the sextic system purely from its incidence constraints, which
gives an independent certification of its dimension.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .grading import ANY_DEGREE, enumerate_monomials, is_homogeneous
from .linalg import RowSpace, nullspace_basis
from .poly import (ArityError, ExactDivisionError, Exponents, Polynomial,
                   generators, parse_polynomial)

P3_VARS = ("x1", "x2", "x3", "x4")
PENCIL_VARS = ("t", "x1", "x3", "x4")

X1, X2, X3, X4 = generators(P3_VARS)


class InvalidPencilError(ValueError):
    """The supplied binary cubic does not define three admissible pencil planes."""


# -- rational root extraction for the pencil cubic ----------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted({d for s in small for d in (s, n // s)})


def _find_rational_root(coeffs: Sequence[Fraction]) -> Fraction | None:
    scale = reduce(lcm, (c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = reduce(gcd, ints)
    ints = [v // content for v in ints]
    if ints[0] == 0:
        return Fraction(0)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * candidate ** k for k, c in enumerate(ints)) == 0:
                    return candidate
    return None


def _deflate(coeffs: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    degree = len(coeffs) - 1
    quotient = [Fraction(0)] * degree
    b = coeffs[-1]
    for k in range(degree - 1, -1, -1):
        quotient[k] = b
        b = coeffs[k] + root * b
    return quotient


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots with multiplicity, found by root theorem plus deflation."""
    roots: list[Fraction] = []
    current = [Fraction(c) for c in coeffs]
    while len(current) > 1:
        root = _find_rational_root(current)
        if root is None:
            break
        roots.append(root)
        current = _deflate(current, root)
    return roots


class PencilCubic:
    """A binary cubic xi(x1, x2) splitting into three distinct pencil planes.

    The cubic factors exactly as scale * (x2 - t1*x1)(x2 - t2*x1)(x2 - t3*x1)
    with the roots t_i pairwise distinct, nonzero, and rational, so none of
    the three planes coincides with x1 = 0, x2 = 0, or each other.
    """

    __slots__ = ("cubic", "roots", "scale")

    def __init__(self, cubic: Polynomial, roots: Sequence[Fraction], scale: Fraction):
        object.__setattr__(self, "cubic", cubic)
        object.__setattr__(self, "roots", tuple(roots))
        object.__setattr__(self, "scale", scale)

    def __setattr__(self, name, value):
        raise AttributeError("PencilCubic is immutable")

    def __repr__(self) -> str:
        return f"PencilCubic({self.cubic})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PencilCubic):
            return NotImplemented
        return self.cubic == other.cubic

    def __hash__(self) -> int:
        return hash(self.cubic)

    @classmethod
    def from_roots(cls, roots: Sequence[Fraction | int], scale: Fraction | int = 1) -> PencilCubic:
        roots = tuple(Fraction(r) for r in roots)
        scale = Fraction(scale)
        if len(roots) != 3:
            raise InvalidPencilError(f"need exactly three pencil roots, got {len(roots)}")
        if len(set(roots)) != 3:
            raise InvalidPencilError(f"pencil roots must be pairwise distinct, got {roots}")
        if any(r == 0 for r in roots):
            raise InvalidPencilError("pencil roots must be nonzero (the plane x2 = 0 is reserved)")
        if scale == 0:
            raise InvalidPencilError("the pencil cubic must be nonzero")
        cubic = Polynomial.constant(P3_VARS, scale)
        for root in roots:
            cubic = cubic * (X2 - root * X1)
        return cls(cubic, tuple(sorted(roots)), scale)

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> PencilCubic:
        if f.ring != P3_VARS:
            raise InvalidPencilError(f"the pencil cubic must live in the ring {P3_VARS}")
        if f.uses_variable("x3") or f.uses_variable("x4"):
            raise InvalidPencilError("the pencil cubic may involve only x1 and x2")
        if is_homogeneous(f, (1, 1, 1, 1)) != 3:
            raise InvalidPencilError(f"the pencil cubic must be homogeneous of degree 3, got {f}")
        scale = f.coefficient((0, 3, 0, 0))
        if scale == 0:
            raise InvalidPencilError(
                "the coefficient of x2^3 vanishes, so the plane x1 = 0 would be a component")
        # roots of f(1, t) as a cubic in t; coefficient of t^k multiplies x1^(3-k) x2^k
        coeffs = [f.coefficient((3 - k, k, 0, 0)) for k in range(4)]
        roots = _rational_roots(coeffs)
        if len(roots) != 3:
            raise InvalidPencilError(f"the cubic {f} does not split into rational planes")
        pencil = cls.from_roots(roots, scale)
        assert pencil.cubic == f
        return pencil

    @classmethod
    def from_text(cls, text: str) -> PencilCubic:
        return cls.from_polynomial(parse_polynomial(text, P3_VARS))

    @classmethod
    def default(cls) -> PencilCubic:
        return cls.from_roots((1, 2, 3))


# -- linear systems ------------------------------------------------------

class LinearSystem:
    """A span of homogeneous degree-d forms in a fixed ring.

    Generators are rescaled to leading coefficient 1, deduplicated, and
    zero inputs dropped; the span is unchanged by any of this.  Rank data
    is computed lazily over the full monomial basis of the graded piece.
    """

    __slots__ = ("ring", "degree", "generators", "_columns", "_column_index", "_row_space")

    def __init__(self, ring: Sequence[str], degree: int, gens: Iterable[Polynomial]):
        ring = tuple(ring)
        unit = (1,) * len(ring)
        seen: set[Polynomial] = set()
        normalized: list[Polynomial] = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise ArityError("linear system generators must be Polynomials")
            if g.ring != ring:
                raise ArityError(f"generator ring {g.ring} does not match system ring {ring}")
            if g.is_zero:
                continue
            if is_homogeneous(g, unit) != degree:
                raise ValueError(f"generator {g} is not homogeneous of degree {degree}")
            monic = g / g.leading_term()[1]
            if monic not in seen:
                seen.add(monic)
                normalized.append(monic)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(normalized))
        object.__setattr__(self, "_columns", None)
        object.__setattr__(self, "_column_index", None)
        object.__setattr__(self, "_row_space", None)

    def __setattr__(self, name, value):
        raise AttributeError("LinearSystem is immutable")

    def __repr__(self) -> str:
        return (f"LinearSystem(degree={self.degree}, "
                f"generators={len(self.generators)}, ring={self.ring})")

    def columns(self) -> list[Exponents]:
        """All degree-d monomials of the ring, fixing the coefficient-matrix columns."""
        if self._columns is None:
            cols = enumerate_monomials((1,) * len(self.ring), self.degree)
            object.__setattr__(self, "_columns", cols)
            object.__setattr__(self, "_column_index", {e: i for i, e in enumerate(cols)})
        return self._columns

    def coefficient_vector(self, f: Polynomial) -> dict[int, Fraction]:
        self.columns()
        return {self._column_index[e]: c for e, c in f.items()}

    def row_space(self) -> RowSpace:
        if self._row_space is None:
            space = RowSpace(self.coefficient_vector(g) for g in self.generators)
            object.__setattr__(self, "_row_space", space)
        return self._row_space

    def projective_dim(self) -> int:
        """Rank of the generator matrix minus one; -1 for the empty system."""
        return self.row_space().rank - 1

    def member(self, f: Polynomial) -> bool:
        """Exact test for membership of f in the rational span of the generators."""
        if f.ring != self.ring:
            raise ArityError(f"ring mismatch: {f.ring} vs {self.ring}")
        degree = is_homogeneous(f, (1,) * len(self.ring))
        if degree is ANY_DEGREE:
            return True
        if degree != self.degree:
            warnings.warn(
                f"membership test on a polynomial that is not homogeneous of degree "
                f"{self.degree}; returning False", stacklevel=2)
            return False
        return self.row_space().contains(self.coefficient_vector(f))


def spans_equal(a: LinearSystem, b: LinearSystem) -> bool:
    if a.ring != b.ring or a.degree != b.degree:
        return False
    if a.projective_dim() != b.projective_dim():
        return False
    space = a.row_space()
    return all(space.contains(a.coefficient_vector(g)) for g in b.generators)


@dataclass(frozen=True)
class SpanIdentityReport:
    """Outcome of comparing two linear systems as subspaces of one graded piece."""

    label_a: str
    label_b: str
    rank_a: int
    rank_b: int
    missing_from_b: tuple[str, ...]
    missing_from_a: tuple[str, ...]
    passed: bool

    def summary(self) -> str:
        if self.passed:
            return (f"PASS: span({self.label_a}) = span({self.label_b}), "
                    f"rank {self.rank_a} = {self.rank_b}")
        lines = [f"FAIL: rank {self.rank_a} vs {self.rank_b}"]
        for g in self.missing_from_b:
            lines.append(f"  {self.label_a} generator not in span({self.label_b}): {g}")
        for g in self.missing_from_a:
            lines.append(f"  {self.label_b} generator not in span({self.label_a}): {g}")
        return "\n".join(lines)


def compare_spans(a: LinearSystem, b: LinearSystem,
                  label_a: str = "left", label_b: str = "right") -> SpanIdentityReport:
    """Mutual-membership and rank comparison of two systems, with offenders named."""
    if a.ring != b.ring or a.degree != b.degree:
        raise ArityError("compare_spans requires systems in one graded piece")
    space_a, space_b = a.row_space(), b.row_space()
    missing_from_b = tuple(str(g) for g in a.generators
                           if not space_b.contains(a.coefficient_vector(g)))
    missing_from_a = tuple(str(g) for g in b.generators
                           if not space_a.contains(b.coefficient_vector(g)))
    passed = space_a.rank == space_b.rank and not missing_from_b and not missing_from_a
    return SpanIdentityReport(label_a, label_b, space_a.rank, space_b.rank,
                              missing_from_b, missing_from_a, passed)


# -- pointwise geometry helpers ------------------------------------------

def multiplicity_along_line(f: Polynomial) -> int:
    """Multiplicity of {f = 0} along the line x1 = x2 = 0.

    Equals the largest m with f in the m-th power of the ideal (x1, x2),
    i.e. the minimum of (x1-degree + x2-degree) over the terms of f.
    """
    if f.is_zero:
        raise ValueError("multiplicity along the line is undefined for the zero polynomial")
    return f.min_degree_in(("x1", "x2"))


def restrict_to_pencil(f: Polynomial) -> Polynomial:
    """Substitute x2 = t*x1 with a symbolic pencil parameter t.

    The result lives in the ring (t, x1, x3, x4), so restrictions to the
    whole pencil of planes through the line x1 = x2 = 0 stay exact.
    """
    t, x1, x3, x4 = generators(PENCIL_VARS)
    return f.substitute({"x1": x1, "x2": t * x1, "x3": x3, "x4": x4})


def factor_out(f: Polynomial, name: str, power: int) -> Polynomial:
    """Divide f exactly by name**power, or raise ExactDivisionError."""
    i = f.ring.index(name) if name in f.ring else None
    if i is None:
        raise ArityError(f"variable {name!r} is not in the ring {f.ring}")
    shifted = {}
    for exponents, coefficient in f.items():
        if exponents[i] < power:
            raise ExactDivisionError(f"{name}^{power} does not divide {f}")
        e = list(exponents)
        e[i] -= power
        shifted[tuple(e)] = coefficient
    return Polynomial(f.ring, shifted)


def restrict_to_pencil_plane(f: Polynomial, tau: Fraction | int) -> Polynomial:
    """Restrict to the single pencil plane x2 = tau*x1 (stays in the P^3 ring)."""
    return f.replace("x2", Fraction(tau) * X1)


def coordinate_plane_residual(f: Polynomial, plane: str) -> Polynomial:
    """Residual of f on a coordinate plane of the pencil, off the line x1 = x2 = 0.

    For plane "x1": restrict to x1 = 0 and divide out x2^5 exactly (and
    symmetrically for "x2").  For the sextic system the residual is the
    linear form cutting the variable line of the plane section; it passes
    through [0, 0, 0, 1] exactly when it is free of x4.
    """
    if plane not in ("x1", "x2"):
        raise ValueError("the coordinate planes of the pencil are x1 = 0 and x2 = 0")
    other = "x2" if plane == "x1" else "x1"
    restricted = f.replace(plane, 0)
    if restricted.is_zero:
        return restricted
    return factor_out(restricted, other, 5)


def is_scalar_multiple(f: Polynomial, exponents: Exponents) -> bool:
    """True iff f is c * (monomial with the given exponents), allowing c = 0."""
    return f.is_zero or f.monomials() == (tuple(exponents),)


# -- the two systems and the constraint route ----------------------------

def _binary_monomials(degree: int) -> list[Polynomial]:
    """Monomials of the given degree in x1, x2 only, canonical order."""
    return [Polynomial.monomial(P3_VARS, (i, degree - i, 0, 0))
            for i in range(degree, -1, -1)]


def build_sextic_system(pencil: PencilCubic) -> LinearSystem:
    """The 11-generator system of sextic surfaces singular of order 5 along the line.

    Generators: x1*x2*x4*xi; x3*xi times each quadratic in (x1, x2); and
    every sextic monomial in (x1, x2).
    """
    xi = pencil.cubic
    gens = [X1 * X2 * X4 * xi]
    gens += [X3 * xi * m for m in _binary_monomials(2)]
    gens += _binary_monomials(6)
    return LinearSystem(P3_VARS, 6, gens)


def build_degree12_system(pencil: PencilCubic) -> LinearSystem:
    """The 39-generator system of degree-12 surfaces of multiplicity 9 along the line.

    Generator shapes (counts 1 + 3 + 7 + 1 + 5 + 9 + 13):
    (x1*x2*x4*xi)^2; x1*x2*x4*x3*xi^2 times quadratics; x1*x2*x4*xi times
    sextics; x3^3*xi^3; x3^2*xi^2 times quartics; x3*xi times octics; and
    every degree-12 monomial in (x1, x2).
    """
    xi = pencil.cubic
    base = X1 * X2 * X4 * xi
    x3xi = X3 * xi
    gens = [base * base]
    gens += [base * x3xi * m for m in _binary_monomials(2)]
    gens += [base * m for m in _binary_monomials(6)]
    gens += [x3xi ** 3]
    gens += [x3xi ** 2 * m for m in _binary_monomials(4)]
    gens += [x3xi * m for m in _binary_monomials(8)]
    gens += _binary_monomials(12)
    return LinearSystem(P3_VARS, 12, gens)


def sextic_constraint_monomials() -> list[Exponents]:
    """The 19 sextic monomials with (x1, x2)-degree at least 5, canonical order."""
    return [e for e in enumerate_monomials((1, 1, 1, 1), 6) if e[0] + e[1] >= 5]


def sextic_constraint_rows(pencil: PencilCubic) -> tuple[list[Exponents], list[list[Fraction]]]:
    """Linear conditions cutting the sextic system out of the multiplicity-5 space.

    Over the 19 monomials of (x1, x2)-degree >= 5 the conditions are:
    one per coordinate plane (the plane section's residual line must avoid
    x4, i.e. the x2^5*x4 resp. x1^5*x4 coefficient vanishes) and two per
    pencil root (the section by x2 = tau*x1 must collapse to the line,
    i.e. the x1^5*x3 and x1^5*x4 coefficients of the restriction vanish).
    """
    monomials = sextic_constraint_monomials()
    index = {e: i for i, e in enumerate(monomials)}
    width = len(monomials)

    def empty() -> list[Fraction]:
        return [Fraction(0)] * width

    rows = []
    alpha1 = empty()
    alpha1[index[(0, 5, 0, 1)]] = Fraction(1)
    rows.append(alpha1)
    alpha2 = empty()
    alpha2[index[(5, 0, 0, 1)]] = Fraction(1)
    rows.append(alpha2)
    for tau in pencil.roots:
        x3_row, x4_row = empty(), empty()
        for b in range(6):
            x3_row[index[(5 - b, b, 1, 0)]] = tau ** b
            x4_row[index[(5 - b, b, 0, 1)]] = tau ** b
        rows.append(x3_row)
        rows.append(x4_row)
    return monomials, rows


def solve_sextic_constraints(pencil: PencilCubic) -> LinearSystem:
    """Solve the incidence constraints exactly and return the cut-out system.

    This is the independent route to the sextic system: no generator shapes
    are assumed, only the vanishing conditions.  The two routes must agree.
    """
    monomials, rows = sextic_constraint_rows(pencil)
    basis = nullspace_basis(rows, len(monomials))
    gens = [Polynomial(P3_VARS, {m: c for m, c in zip(monomials, vector) if c})
            for vector in basis]
    return LinearSystem(P3_VARS, 6, gens)


def random_member(system: LinearSystem, rng) -> Polynomial:
    """A pseudo-random rational combination of the generators, all coefficients nonzero."""
    member = Polynomial.zero(system.ring)
    for g in system.generators:
        coefficient = Fraction(rng.randint(1, 9) * rng.choice((-1, 1)), rng.randint(1, 9))
        member = member + coefficient * g
    return member
