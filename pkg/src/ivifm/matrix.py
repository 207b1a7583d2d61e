"""Interval-valued intuitionistic fuzzy matrices.

Every binary matrix operator is the elementwise lift of a value operator;
in particular ``A * B`` is the entrywise ``min``/``max``, not a max-min
relational composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Tuple

from .errors import DimensionMismatch, ValidationError
from .values import (
    COMPLETE_NULL,
    EPS,
    ONE,
    ZERO,
    IvifValue,
    value_add,
    value_amean,
    value_complement,
    value_gmean,
    value_hmean,
    value_isclose,
    value_le,
    value_mul,
    value_odot,
    value_oplus,
    value_star,
)

ValueOp = Callable[[IvifValue, IvifValue], IvifValue]


@dataclass(frozen=True, slots=True)
class IvifMatrix:
    """Immutable ``rows x cols`` grid of :class:`IvifValue`, row-major.

    Indexing is zero-based: ``A[i, j]`` is the entry in row ``i``, column ``j``.
    """

    entries: Tuple[Tuple[IvifValue, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0]:
            raise ValidationError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValidationError(f"row {i} has {len(r)} entries, expected {width}")
            for j, v in enumerate(r):
                if not isinstance(v, IvifValue):
                    raise ValidationError(f"entry ({i}, {j}) is not an IvifValue: {v!r}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_bounds(cls, grid: Iterable[Iterable[Sequence[float]]]) -> "IvifMatrix":
        """Build from nested rows of ``(mu_lo, mu_hi, nu_lo, nu_hi)`` tuples."""
        return cls(tuple(tuple(IvifValue.from_bounds(*b) for b in row) for row in grid))

    @classmethod
    def filled(cls, rows: int, cols: int, value: IvifValue) -> "IvifMatrix":
        return cls(tuple((value,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> IvifValue:
        i, j = index
        return self.entries[i][j]

    def __iter__(self) -> Iterator[Tuple[IvifValue, ...]]:
        return iter(self.entries)

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(map(repr, r)) + "]" for r in self.entries)
        return f"IvifMatrix([{body}])"

    def values(self) -> Iterator[IvifValue]:
        for r in self.entries:
            yield from r

    def map(self, f: Callable[[IvifValue], IvifValue]) -> "IvifMatrix":
        return IvifMatrix(tuple(tuple(f(v) for v in r) for r in self.entries))

    def __add__(self, other):
        if not isinstance(other, IvifMatrix):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, IvifMatrix):
            return NotImplemented
        return mul(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        if not isinstance(other, IvifMatrix):
            return NotImplemented
        return matrix_le(self, other)

    def __ge__(self, other):
        if not isinstance(other, IvifMatrix):
            return NotImplemented
        return matrix_le(other, self)

    @property
    def T(self) -> "IvifMatrix":
        return transpose(self)


def _check_same_shape(a: IvifMatrix, b: IvifMatrix):
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")


def matrix_zip(op: ValueOp, a: IvifMatrix, b: IvifMatrix) -> IvifMatrix:
    """Apply the value operator ``op`` entry by entry."""
    _check_same_shape(a, b)
    return IvifMatrix(
        tuple(tuple(op(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries))
    )


def add(a, b):
    return matrix_zip(value_add, a, b)


def mul(a, b):
    return matrix_zip(value_mul, a, b)


def oplus(a, b):
    return matrix_zip(value_oplus, a, b)


def odot(a, b):
    return matrix_zip(value_odot, a, b)


def amean(a, b):
    return matrix_zip(value_amean, a, b)


def gmean(a, b):
    return matrix_zip(value_gmean, a, b)


def hmean(a, b):
    return matrix_zip(value_hmean, a, b)


def star(a, b):
    return matrix_zip(value_star, a, b)


MATRIX_OPERATORS = {
    "add": add,
    "mul": mul,
    "oplus": oplus,
    "odot": odot,
    "amean": amean,
    "gmean": gmean,
    "hmean": hmean,
    "star": star,
}


def transpose(a: IvifMatrix) -> IvifMatrix:
    return IvifMatrix(tuple(zip(*a.entries)))


def complement(a: IvifMatrix) -> IvifMatrix:
    return a.map(value_complement)


def matrix_le(a: IvifMatrix, b: IvifMatrix) -> bool:
    _check_same_shape(a, b)
    return all(value_le(x, y) for x, y in zip(a.values(), b.values()))


def matrix_eq(a: IvifMatrix, b: IvifMatrix) -> bool:
    return matrix_le(a, b) and matrix_le(b, a)


def matrix_isclose(a: IvifMatrix, b: IvifMatrix, tol: float = EPS) -> bool:
    _check_same_shape(a, b)
    return all(value_isclose(x, y, tol) for x, y in zip(a.values(), b.values()))


def is_symmetric(a: IvifMatrix) -> bool:
    return a.is_square and a == transpose(a)


SPECIAL_KINDS = ("a-unit", "r-unit", "c-null", "a-null", "r-null")

# kind -> (diagonal, off-diagonal)
_PATTERNS = {
    "a-unit": (ONE, ZERO),
    "r-unit": (ZERO, ONE),
    "c-null": (COMPLETE_NULL, COMPLETE_NULL),
    "a-null": (ZERO, ZERO),
    "r-null": (ONE, ONE),
}


def make_special(kind: str, n: int) -> IvifMatrix:
    """Square unit or null matrix of order ``n``.

    ``a-unit`` has ``<[1,1],[0,0]>`` on the diagonal and ``<[0,0],[1,1]>``
    elsewhere; ``r-unit`` is its complement. ``c-null``, ``a-null`` and
    ``r-null`` are constant ``<[0,0],[0,0]>``, ``<[0,0],[1,1]>`` and
    ``<[1,1],[0,0]>``.
    """
    try:
        diag, off = _PATTERNS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {SPECIAL_KINDS}") from None
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    return IvifMatrix(tuple(tuple(diag if i == j else off for j in range(n)) for i in range(n)))
