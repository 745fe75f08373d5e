"""Weighted degrees, homogeneity tests, and graded monomial enumeration.

A weight system assigns a positive integer degree to each ring variable.
``enumerate_monomials`` lists a graded piece explicitly by bounded descent
over exponents, while ``hilbert_count`` counts it through an independent
recurrence; the two serve as cross-checking routes to the same number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .poly import ArityError, Exponents, Polynomial, grlex_key


@dataclass(frozen=True)
class WeightSystem:
    """Strictly positive integer weights, one per variable."""

    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]):
        weights = tuple(weights)
        if not weights:
            raise ValueError("a weight system must be nonempty")
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise ValueError(f"weights must be integers >= 1, got {weights}")
        object.__setattr__(self, "weights", weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> int:
        return self.weights[index]


Weights = Union[WeightSystem, Sequence[int]]


def _weights_tuple(weights: Weights) -> tuple[int, ...]:
    if isinstance(weights, WeightSystem):
        return weights.weights
    return WeightSystem(weights).weights


class _AnyDegree:
    """Marker returned for the zero polynomial, homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


def weighted_degree(exponents: Sequence[int], weights: Weights) -> int:
    """Dot product of an exponent tuple with the weights."""
    weights = _weights_tuple(weights)
    exponents = tuple(exponents)
    if len(exponents) != len(weights):
        raise ArityError(
            f"monomial arity {len(exponents)} does not match weight arity {len(weights)}")
    return sum(e * w for e, w in zip(exponents, weights))


def is_homogeneous(f: Polynomial, weights: Weights) -> int | _AnyDegree | None:
    """Common weighted degree of all terms of f, ANY_DEGREE for 0, None if mixed."""
    weights = _weights_tuple(weights)
    if len(f.ring) != len(weights):
        raise ArityError(
            f"ring arity {len(f.ring)} does not match weight arity {len(weights)}")
    degrees = {weighted_degree(e, weights) for e in f.monomials()}
    if not degrees:
        return ANY_DEGREE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def enumerate_monomials(weights: Weights, degree: int) -> list[Exponents]:
    """All exponent tuples of weighted degree exactly ``degree``, leading first.

    Enumeration is by bounded descent (exponent of variable i at most
    degree / weight_i), then sorted into the canonical graded-lex order.
    """
    weights = _weights_tuple(weights)
    if degree < 0:
        raise ValueError("degree must be a natural number")
    found: list[Exponents] = []

    def descend(index: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if index == len(weights) - 1:
            w = weights[index]
            if remaining % w == 0:
                found.append(prefix + (remaining // w,))
            return
        w = weights[index]
        for e in range(remaining // w, -1, -1):
            descend(index + 1, remaining - e * w, prefix + (e,))

    descend(0, degree, ())
    found.sort(key=grlex_key, reverse=True)
    return found


@lru_cache(maxsize=None)
def _count(weights: tuple[int, ...], degree: int) -> int:
    if not weights:
        return 1 if degree == 0 else 0
    *rest, last = weights
    return sum(_count(tuple(rest), degree - j * last)
               for j in range(degree // last + 1))


def hilbert_count(weights: Weights, degree: int) -> int:
    """Number of monomials of weighted degree exactly ``degree``.

    Computed by the recurrence N(d; w1..wk) = sum_j N(d - j*wk; w1..w(k-1)),
    independently of :func:`enumerate_monomials`.
    """
    if degree < 0:
        raise ValueError("degree must be a natural number")
    return _count(_weights_tuple(weights), degree)
