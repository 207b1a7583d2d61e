"""Interval-valued intuitionistic fuzzy values and their scalar operators.

A value is a pair ``<mu, nu>`` of closed subintervals of [0, 1], the
membership and non-membership degrees, with ``mu.hi + nu.hi <= 1``.

The lattice operators (``+``, ``*``, complement, ordering) only ever select
one of their inputs, so they are exact on floats. The arithmetic operators
(``oplus``, ``odot`` and the four means) round like any float expression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Callable, Iterable, Tuple

from .errors import ValidationError

EPS = 1e-9

Bounds = Tuple[float, float, float, float]


def _as_degree(x, what):
    if isinstance(x, bool) or not isinstance(x, Real):
        raise ValidationError(f"{what} must be a real number, got {x!r}")
    x = float(x)
    if math.isnan(x):
        raise ValidationError(f"{what} is NaN")
    return x


@dataclass(frozen=True, slots=True)
class UnitInterval:
    """Closed interval ``[lo, hi]`` inside [0, 1]."""

    lo: float
    hi: float

    def __post_init__(self):
        lo = _as_degree(self.lo, "lower bound")
        hi = _as_degree(self.hi, "upper bound")
        if lo < -EPS or hi > 1 + EPS:
            raise ValidationError(f"[{lo!r}, {hi!r}] is not inside [0, 1]")
        if lo > hi + EPS:
            raise ValidationError(f"[{lo!r}, {hi!r}] has lower bound above upper bound")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self):
        return f"[{self.lo:g},{self.hi:g}]"


@dataclass(frozen=True, slots=True)
class IvifValue:
    """One matrix entry: membership interval ``mu`` and non-membership ``nu``.

    ``+`` and ``*`` are the max-min lattice operators; ``~`` is the
    complement and ``<=`` the (partial) order.
    """

    mu: UnitInterval
    nu: UnitInterval

    def __post_init__(self):
        if not isinstance(self.mu, UnitInterval):
            object.__setattr__(self, "mu", UnitInterval(*self.mu))
        if not isinstance(self.nu, UnitInterval):
            object.__setattr__(self, "nu", UnitInterval(*self.nu))
        if self.mu.hi + self.nu.hi > 1 + EPS:
            raise ValidationError(
                f"mu upper {self.mu.hi!r} + nu upper {self.nu.hi!r} exceeds 1"
            )

    @classmethod
    def from_bounds(cls, mu_lo, mu_hi, nu_lo, nu_hi) -> "IvifValue":
        return cls(UnitInterval(mu_lo, mu_hi), UnitInterval(nu_lo, nu_hi))

    @property
    def bounds(self) -> Bounds:
        return (self.mu.lo, self.mu.hi, self.nu.lo, self.nu.hi)

    def __repr__(self):
        return f"<{self.mu!r},{self.nu!r}>"

    def __add__(self, other):
        if not isinstance(other, IvifValue):
            return NotImplemented
        return value_add(self, other)

    def __mul__(self, other):
        if not isinstance(other, IvifValue):
            return NotImplemented
        return value_mul(self, other)

    def __invert__(self):
        return value_complement(self)

    def __le__(self, other):
        if not isinstance(other, IvifValue):
            return NotImplemented
        return value_le(self, other)

    def __ge__(self, other):
        if not isinstance(other, IvifValue):
            return NotImplemented
        return value_le(other, self)


def ivif(mu_lo, mu_hi, nu_lo, nu_hi) -> IvifValue:
    """Shorthand for ``IvifValue.from_bounds``."""
    return IvifValue.from_bounds(mu_lo, mu_hi, nu_lo, nu_hi)


# identity of ``+`` and absorbing element of ``*``: fully rejected
ZERO = ivif(0, 0, 1, 1)
# identity of ``*`` and absorbing element of ``+``: fully accepted
ONE = ivif(1, 1, 0, 0)
COMPLETE_NULL = ivif(0, 0, 0, 0)


def value_add(a: IvifValue, b: IvifValue) -> IvifValue:
    return IvifValue(
        UnitInterval(max(a.mu.lo, b.mu.lo), max(a.mu.hi, b.mu.hi)),
        UnitInterval(min(a.nu.lo, b.nu.lo), min(a.nu.hi, b.nu.hi)),
    )


def value_mul(a: IvifValue, b: IvifValue) -> IvifValue:
    return IvifValue(
        UnitInterval(min(a.mu.lo, b.mu.lo), min(a.mu.hi, b.mu.hi)),
        UnitInterval(max(a.nu.lo, b.nu.lo), max(a.nu.hi, b.nu.hi)),
    )


def _psum(x, y):
    return x + y - x * y


def value_oplus(a: IvifValue, b: IvifValue) -> IvifValue:
    """Probabilistic sum on membership, product on non-membership."""
    return IvifValue(
        UnitInterval(_psum(a.mu.lo, b.mu.lo), _psum(a.mu.hi, b.mu.hi)),
        UnitInterval(a.nu.lo * b.nu.lo, a.nu.hi * b.nu.hi),
    )


def value_odot(a: IvifValue, b: IvifValue) -> IvifValue:
    """Product on membership, probabilistic sum on non-membership."""
    return IvifValue(
        UnitInterval(a.mu.lo * b.mu.lo, a.mu.hi * b.mu.hi),
        UnitInterval(_psum(a.nu.lo, b.nu.lo), _psum(a.nu.hi, b.nu.hi)),
    )


def _boundwise(f: Callable[[float, float], float], a: IvifValue, b: IvifValue) -> IvifValue:
    return IvifValue.from_bounds(*(f(x, y) for x, y in zip(a.bounds, b.bounds)))


def _amean(x, y):
    return (x + y) / 2


def _gmean(x, y):
    return math.sqrt(x * y)


def _hmean(x, y):
    s = x + y
    # continuous extension at 0/0
    return 0.0 if s == 0 else 2 * x * y / s


def _star(x, y):
    return (x + y) / (2 * (x * y + 1))


def value_amean(a: IvifValue, b: IvifValue) -> IvifValue:
    return _boundwise(_amean, a, b)


def value_gmean(a: IvifValue, b: IvifValue) -> IvifValue:
    return _boundwise(_gmean, a, b)


def value_hmean(a: IvifValue, b: IvifValue) -> IvifValue:
    return _boundwise(_hmean, a, b)


def value_star(a: IvifValue, b: IvifValue) -> IvifValue:
    """Bound-wise ``(x + y) / (2 (x y + 1))``."""
    return _boundwise(_star, a, b)


def value_complement(a: IvifValue) -> IvifValue:
    return IvifValue(a.nu, a.mu)


def value_le(a: IvifValue, b: IvifValue) -> bool:
    """Exact partial order: membership bounds grow, non-membership shrink."""
    return (
        a.mu.lo <= b.mu.lo
        and a.mu.hi <= b.mu.hi
        and a.nu.lo >= b.nu.lo
        and a.nu.hi >= b.nu.hi
    )


def value_eq(a: IvifValue, b: IvifValue) -> bool:
    return value_le(a, b) and value_le(b, a)


def value_isclose(a: IvifValue, b: IvifValue, tol: float = EPS) -> bool:
    return all(abs(x - y) <= tol for x, y in zip(a.bounds, b.bounds))


def value_sum(values: Iterable[IvifValue]) -> IvifValue:
    """Fold ``+`` over ``values``; the empty sum is ``ZERO``."""
    acc = ZERO
    for v in values:
        acc = value_add(acc, v)
    return acc


def value_prod(values: Iterable[IvifValue]) -> IvifValue:
    """Fold ``*`` over ``values``; the empty product is ``ONE``."""
    acc = ONE
    for v in values:
        acc = value_mul(acc, v)
    return acc


BINARY_OPERATORS = {
    "add": value_add,
    "mul": value_mul,
    "oplus": value_oplus,
    "odot": value_odot,
    "amean": value_amean,
    "gmean": value_gmean,
    "hmean": value_hmean,
    "star": value_star,
}
