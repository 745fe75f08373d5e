"""Split bundles on the projective line and the ruled-surface intersection form.

Every bundle handled here is a direct sum of line bundles O(d), stored as
the multiset of its twists.  Global sections on P^1 follow the closed form
h^0(O(d)) = max(0, d + 1), so symmetric powers, twists, and the dimensions
of tautological linear systems on the projectivized bundle reduce to
integer bookkeeping.  The intersection form on the Hirzebruch surface F_e
is the standard one: E^2 = -e, E.F = 1, F^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles on P^1, as the sorted multiset of twists."""

    twists: tuple[int, ...]

    def __init__(self, twists):
        twists = tuple(sorted(twists))
        if not twists:
            raise ValueError("a split bundle needs at least one summand")
        if any(not isinstance(t, int) for t in twists):
            raise ValueError(f"twists must be integers, got {twists}")
        object.__setattr__(self, "twists", twists)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def sym_power(self, m: int) -> SplitBundle:
        """m-th symmetric power: all sums of m twists with repetition."""
        if m < 0:
            raise ValueError("symmetric power requires a natural exponent")
        return SplitBundle(sum(choice) for choice
                           in combinations_with_replacement(self.twists, m))

    def twist(self, k: int) -> SplitBundle:
        """Tensor by O(k): add k to every summand."""
        return SplitBundle(t + k for t in self.twists)

    def h0(self) -> int:
        """Dimension of the space of global sections: sum of max(0, d + 1)."""
        return sum(max(0, t + 1) for t in self.twists)


@dataclass(frozen=True)
class BundleSystemSpec:
    """A class a*L + b*P on the projectivized bundle: a times the tautological
    class, b times the fibre class."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("the tautological multiple must be a natural number")


def system_dim(bundle: SplitBundle, spec: BundleSystemSpec) -> int:
    """Projective dimension of |a*L + b*P| on P(bundle); -1 means empty.

    Sections of a*L + b*P push down to Sym^a(bundle) twisted by b.
    """
    return bundle.sym_power(spec.a).twist(spec.b).h0() - 1


@dataclass(frozen=True)
class RuledClass:
    """An integer divisor class a*E + b*F on the Hirzebruch surface F_e."""

    e: int
    a: int
    b: int

    def __post_init__(self):
        if self.e < 0:
            raise ValueError("the Hirzebruch invariant e must be a natural number")

    def __add__(self, other: RuledClass) -> RuledClass:
        if not isinstance(other, RuledClass):
            return NotImplemented
        if self.e != other.e:
            raise ValueError(f"classes live on different surfaces: F_{self.e} vs F_{other.e}")
        return RuledClass(self.e, self.a + other.a, self.b + other.b)

    def __rmul__(self, scalar: int) -> RuledClass:
        if not isinstance(scalar, int):
            return NotImplemented
        return RuledClass(self.e, scalar * self.a, scalar * self.b)

    def intersect(self, other: RuledClass) -> int:
        """Intersection number, bilinear in both classes."""
        if not isinstance(other, RuledClass):
            raise TypeError("intersect expects another RuledClass")
        if self.e != other.e:
            raise ValueError(f"classes live on different surfaces: F_{self.e} vs F_{other.e}")
        return (-self.e) * self.a * other.a + self.a * other.b + self.b * other.a


def intersect(c1: RuledClass, c2: RuledClass) -> int:
    return c1.intersect(c2)
