"""Permutation-expansion determinant, cofactors and the adjoint matrix.

The determinant is a sum over every permutation of a product of entries,
with ``+`` and ``*`` the max-min operators. The structure has no
subtraction, so there are no signs and the expansion is a permanent.
Expanding all ``n!`` terms is the definition itself; orders above
``MAX_ORDER`` are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Tuple

from .errors import IndexOutOfRange, NotSquare, OrderTooLarge, ShapeError
from .matrix import IvifMatrix
from .values import IvifValue, value_add, value_mul, value_prod

MAX_ORDER = 9


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on ``{0, ..., n-1}``; ``p(i) == p.mapping[i]``."""

    mapping: Tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.mapping)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"{m!r} is not a permutation of 0..{len(m) - 1}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def all(cls, n: int) -> Iterator["Permutation"]:
        """Every permutation of order ``n``, in lexicographic order."""
        for m in permutations(range(n)):
            yield cls(m)

    def __len__(self):
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) == self(other(i))``."""
        return Permutation(tuple(self.mapping[j] for j in other.mapping))


def _order(a: IvifMatrix) -> int:
    if not a.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows > MAX_ORDER:
        raise OrderTooLarge(f"order {a.rows} exceeds the expansion limit {MAX_ORDER}")
    return a.rows


def expansion_terms(a: IvifMatrix) -> Iterator[Tuple[Permutation, IvifValue]]:
    """Yield ``(sigma, prod_i a[i, sigma(i)])`` for every permutation."""
    n = _order(a)
    for sigma in Permutation.all(n):
        yield sigma, value_prod(a.entries[i][sigma.mapping[i]] for i in range(n))


def determinant(a: IvifMatrix) -> IvifValue:
    """Sum over all permutations of the product along each permutation.

    Works on the raw bounds: each of the four components is folded on its
    own, which is exactly what the componentwise ``+`` and ``*`` do.
    """
    n = _order(a)
    grid = [[v.bounds for v in row] for row in a.entries]
    mu_lo = mu_hi = 0.0
    nu_lo = nu_hi = 1.0
    for sigma in permutations(range(n)):
        t_mu_lo = t_mu_hi = 1.0
        t_nu_lo = t_nu_hi = 0.0
        for i, j in enumerate(sigma):
            b = grid[i][j]
            if b[0] < t_mu_lo:
                t_mu_lo = b[0]
            if b[1] < t_mu_hi:
                t_mu_hi = b[1]
            if b[2] > t_nu_lo:
                t_nu_lo = b[2]
            if b[3] > t_nu_hi:
                t_nu_hi = b[3]
        if t_mu_lo > mu_lo:
            mu_lo = t_mu_lo
        if t_mu_hi > mu_hi:
            mu_hi = t_mu_hi
        if t_nu_lo < nu_lo:
            nu_lo = t_nu_lo
        if t_nu_hi < nu_hi:
            nu_hi = t_nu_hi
    return IvifValue.from_bounds(mu_lo, mu_hi, nu_lo, nu_hi)


def minor(a: IvifMatrix, row: int, col: int) -> IvifMatrix:
    """``a`` with ``row`` and ``col`` removed."""
    if not (0 <= row < a.rows and 0 <= col < a.cols):
        raise IndexOutOfRange(f"({row}, {col}) outside a {a.rows}x{a.cols} matrix")
    if a.rows < 2 or a.cols < 2:
        raise ShapeError("a minor of a matrix with a single row or column is empty")
    return IvifMatrix(
        tuple(
            tuple(v for j, v in enumerate(r) if j != col)
            for i, r in enumerate(a.entries)
            if i != row
        )
    )


def cofactor(a: IvifMatrix, row: int, col: int) -> IvifValue:
    """Determinant of the minor obtained by suppressing ``row`` and ``col``."""
    if not a.is_square:
        raise NotSquare(f"cofactor needs a square matrix, got {a.rows}x{a.cols}")
    return determinant(minor(a, row, col))


def adjoint(a: IvifMatrix) -> IvifMatrix:
    """Adjoint matrix: entry ``(i, j)`` is ``cofactor(a, j, i)``."""
    n = _order(a)
    if n < 2:
        raise ShapeError("the adjoint is defined for order 2 and above")
    return IvifMatrix(tuple(tuple(cofactor(a, j, i) for j in range(n)) for i in range(n)))


def laplace_determinant(a: IvifMatrix) -> IvifValue:
    """Reference determinant by recursive first-row expansion.

    ``det A = sum_j a[0, j] * det(minor(A, 0, j))``. Without signs and with
    ``*`` distributing over ``+`` this equals the permutation expansion, so
    it serves as an independent cross-check of :func:`determinant`.
    """
    n = _order(a)
    if n == 1:
        return a.entries[0][0]
    acc = None
    for j in range(n):
        term = value_mul(a.entries[0][j], laplace_determinant(minor(a, 0, j)))
        acc = term if acc is None else value_add(acc, term)
    return acc
