"""Derived data of a weighted projective space.

Only well-formed spaces are representable: dropping any one weight must
leave a coprime tuple, so the space carries no hidden quasi-reflection.
The anticanonical sheaf is O(sum of weights); its self-intersection number
(sum)^dim / product is returned as an exact rational, which happens to be
the integer 72 for both P(1,1,4,6) and P(1,1,1,3).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, prod

from .grading import WeightSystem, Weights, enumerate_monomials, _weights_tuple
from .poly import Exponents


class WeightedProjectiveSpace:
    """A well-formed weighted projective space P(w0, ..., wn)."""

    __slots__ = ("weights",)

    def __init__(self, weights: Weights):
        ws = WeightSystem(_weights_tuple(weights))
        if len(ws) < 2:
            raise ValueError("a projective space needs at least two weights")
        for omit in range(len(ws)):
            others = [w for i, w in enumerate(ws) if i != omit]
            if reduce(gcd, others) != 1:
                raise ValueError(
                    f"weights {ws.weights} are not well-formed: "
                    f"omitting entry {omit} leaves gcd {reduce(gcd, others)}")
        object.__setattr__(self, "weights", ws)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedProjectiveSpace is immutable")

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedProjectiveSpace):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self) -> int:
        return hash(self.weights)

    def __repr__(self) -> str:
        return f"P{self.weights.weights}"

    def anticanonical_weight(self) -> int:
        """Weighted degree of the anticanonical sheaf: the sum of the weights."""
        return sum(self.weights)

    def anticanonical_selfintersection(self) -> Fraction:
        """(-K)^dim as an exact rational: (sum of weights)^dim / (product of weights)."""
        return Fraction(self.anticanonical_weight() ** self.dimension,
                        prod(self.weights))

    def anticanonical_basis(self) -> list[Exponents]:
        """Monomial basis of the anticanonical graded piece, canonical order."""
        return enumerate_monomials(self.weights, self.anticanonical_weight())
