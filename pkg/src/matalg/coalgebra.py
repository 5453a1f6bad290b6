"""The matrix coalgebra: comultiplication, coideals, and duality.

The coordinate space of n x n matrices carries a coalgebra structure
dual to matrix multiplication: on the basis of matrix units,

    comultiply(e_{i,j}) = sum_k e_{i,k} (x) e_{k,j}
    counit(e_{i,j})     = 1 if i == j else 0.

A subspace X is a coideal when the counit vanishes on X and
comultiply(X) lies in X (x) C + C (x) X (C the whole coordinate space).
`is_coideal` checks both axioms directly in the n^4-dimensional tensor
space; it deliberately does not route through duality, so the classical
bijection "X is a coideal iff its annihilator is a subalgebra" stays an
independently testable statement.

Tensor coordinates: e_{a,b} (x) e_{c,d} sits at flat index
(a*n + b) * n^2 + (c*n + d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    Matrix,
    SpanBuilder,
    Subspace,
    Vector,
    full_space,
    null_space,
    rref_basis,
)
from .algebra import Composition

__all__ = [
    "CoalgebraElement",
    "Coideal",
    "CoidealRejection",
    "comultiply",
    "counit",
    "is_coideal",
    "perp",
    "parabolic_coideal",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CoalgebraElement:
    """An element of the matrix coalgebra: n plus the coefficient vector
    over the matrix-unit basis (row-major, length n^2)."""

    n: int
    coefficients: Vector

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.n * self.n:
            raise ValueError(
                f"expected {self.n * self.n} coefficients, got {len(self.coefficients)}"
            )

    @classmethod
    def from_matrix(cls, m: Matrix) -> "CoalgebraElement":
        if m.rows != m.cols:
            raise ValueError("coalgebra elements come from square matrices")
        return cls(n=m.rows, coefficients=m.flatten())

    def to_matrix(self) -> Matrix:
        return Matrix.from_flat(self.coefficients, self.n)


def comultiply(x: CoalgebraElement) -> tuple[Vector, Fraction]:
    """The pair (comultiplication of x, counit of x).

    The comultiplication is returned as a flat vector in the n^4 tensor
    coordinates; the counit is the trace of the coefficient matrix.
    """
    n = x.n
    n2 = n * n
    tensor = [_ZERO] * (n2 * n2)
    coeffs = x.coefficients
    for i in range(n):
        for j in range(n):
            c = coeffs[i * n + j]
            if not c:
                continue
            for k in range(n):
                tensor[(i * n + k) * n2 + (k * n + j)] += c
    eps = sum((coeffs[i * n + i] for i in range(n)), _ZERO)
    return tuple(tensor), eps


def counit(x: CoalgebraElement) -> Fraction:
    return sum((x.coefficients[i * x.n + i] for i in range(x.n)), _ZERO)


@dataclass(frozen=True)
class Coideal:
    """A certified coideal: counit zero on the space and comultiplication
    mapping it into X (x) C + C (x) X."""

    n: int
    space: Subspace
    certified: bool = True

    @property
    def dimension(self) -> int:
        return self.space.dimension


@dataclass(frozen=True)
class CoidealRejection:
    """Certificate of failure: which axiom broke, and a basis element
    witnessing the failure."""

    n: int
    space: Subspace
    axiom: str
    element: Vector
    certified: bool = False


def _matrix_side(s: Subspace) -> int:
    n = math.isqrt(s.ambient_dim)
    if n * n != s.ambient_dim:
        raise ValueError(f"ambient dimension {s.ambient_dim} is not a square")
    return n


def is_coideal(s: Subspace) -> Coideal | CoidealRejection:
    """Certify the two coideal axioms for a subspace of the coalgebra.

    Checks counit vanishing on every basis element, then builds the
    tensor-space span of {x (x) e_q} and {e_q (x) x} (x over the basis of
    s, e_q over all matrix units) and tests membership of each
    comultiplied basis element.  Returns a `Coideal` on success; on
    failure a `CoidealRejection` naming the broken axiom ("counit" or
    "comultiplication") and a failing element.
    """
    n = _matrix_side(s)
    n2 = n * n
    if s.dimension == 0:
        return Coideal(n=n, space=s)
    for row in s.basis:
        eps = sum((row[i * n + i] for i in range(n)), _ZERO)
        if eps:
            return CoidealRejection(n=n, space=s, axiom="counit", element=row)
    mixed = SpanBuilder(n2 * n2)
    for row in s.basis:
        nonzeros = [(p, c) for p, c in enumerate(row) if c]
        for q in range(n2):
            left = [_ZERO] * (n2 * n2)
            for p, c in nonzeros:
                left[p * n2 + q] = c
            mixed.add(left)
            right = [_ZERO] * (n2 * n2)
            for p, c in nonzeros:
                right[q * n2 + p] = c
            mixed.add(right)
    for row in s.basis:
        tensor, _ = comultiply(CoalgebraElement(n=n, coefficients=row))
        if not mixed.contains(tensor):
            return CoidealRejection(
                n=n, space=s, axiom="comultiplication", element=row
            )
    return Coideal(n=n, space=s)


def perp(s: Subspace) -> Subspace:
    """Annihilator under the dual-basis pairing.

    In matrix-unit coordinates the pairing of A and B is the plain dot
    product of their flattenings, equivalently Tr(A B^T).  The annihilator
    of a d-dimensional subspace has dimension n^2 - d, and perp(perp(s))
    equals s.
    """
    if s.dimension == 0:
        return full_space(s.ambient_dim)
    return null_space(Matrix(s.basis))


def parabolic_coideal(comp: Composition) -> Coideal:
    """The span of the units e_{i,j} with block(i) > block(j): the
    annihilator of the block upper-triangular algebra of the same type,
    certified here through `is_coideal`.  Dimension (n^2 - sum n_i^2)/2;
    for the type (1, n-1) this is the minimal value n - 1."""
    n = comp.n
    blocks = [comp.block_of(i) for i in range(n)]
    vectors = []
    for i in range(n):
        for j in range(n):
            if blocks[i] > blocks[j]:
                vectors.append(Matrix.unit(n, i, j).flatten())
    space = rref_basis(vectors, n * n)
    result = is_coideal(space)
    if isinstance(result, CoidealRejection):
        raise RuntimeError("block-lower pattern failed coideal certification")
    return result
