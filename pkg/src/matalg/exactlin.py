"""Exact linear algebra over the rationals.

Every scalar in this package is an arbitrary-precision rational
(`fractions.Fraction`), so all computations here are exact: no floating
point, no rounding, no tolerances.  Equality questions (membership,
subspace equality, nilpotency, ...) are therefore decided, not estimated.

Conventions used throughout the package:

* Vectors are tuples of rationals; matrices are immutable dense grids.
* The space of n x n matrices is identified with coordinate space of
  dimension n*n by row-major flattening: entry (i, j) lives at coordinate
  i*n + j (0-based).
* A `Subspace` is stored canonically as a reduced row-echelon basis with
  strictly increasing pivot columns.  Two subspaces are equal as sets if
  and only if their representations compare equal, so `==` on `Subspace`
  is set equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "QQ",
    "Vector",
    "Matrix",
    "Subspace",
    "SpanBuilder",
    "as_scalar",
    "as_vector",
    "rref_basis",
    "zero_space",
    "full_space",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "solve_linear",
    "null_space",
    "random_matrix",
    "random_invertible",
    "random_subspace",
]

QQ = Fraction

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce `value` to an exact rational.

    Accepts integers, `Fraction` instances and strings like "2", "-1/3".
    Floats are rejected on purpose: admitting binary floating point would
    silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int, but means nothing here
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def as_vector(values: Iterable[int | str | Fraction], ambient_dim: int | None = None) -> Vector:
    """Coerce an iterable of scalars to a vector, optionally checking length."""
    vec = tuple(as_scalar(v) for v in values)
    if ambient_dim is not None and len(vec) != ambient_dim:
        raise ValueError(f"expected vector of length {ambient_dim}, got {len(vec)}")
    return vec


class Matrix:
    """Immutable dense matrix with exact rational entries.

    Supports the usual ring operations plus transpose, trace, powers and
    exact inversion.  Instances hash and compare by entries, so matrices
    can be used as dictionary keys and set members.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence[int | str | Fraction]]):
        grid = tuple(tuple(as_scalar(e) for e in row) for row in rows)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("rows have inconsistent lengths")
        self.entries: tuple[tuple[Fraction, ...], ...] = grid
        self.rows: int = len(grid)
        self.cols: int = width

    @classmethod
    def _make(cls, grid: tuple[tuple[Fraction, ...], ...]) -> "Matrix":
        # Internal fast path: trusts that `grid` is a rectangular tuple grid
        # of Fractions.
        m = object.__new__(cls)
        m.entries = grid
        m.rows = len(grid)
        m.cols = len(grid[0])
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._make(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        )

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._make(tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """Matrix unit e_{i,j}: a single 1 at row i, column j (0-based)."""
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"unit position ({i}, {j}) out of range for n={n}")
        return cls._make(
            tuple(
                tuple(_ONE if (r, c) == (i, j) else _ZERO for c in range(n))
                for r in range(n)
            )
        )

    @classmethod
    def from_flat(cls, vec: Sequence[int | str | Fraction], n: int) -> "Matrix":
        """Rebuild an n x n matrix from its row-major flattening."""
        if len(vec) != n * n:
            raise ValueError(f"expected {n * n} coordinates, got {len(vec)}")
        flat = tuple(as_scalar(v) for v in vec)
        return cls._make(tuple(flat[r * n : (r + 1) * n] for r in range(n)))

    def flatten(self) -> Vector:
        """Row-major flattening: entry (i, j) goes to coordinate i*cols + j."""
        return tuple(e for row in self.entries for e in row)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._make(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._make(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "Matrix":
        return Matrix._make(tuple(tuple(-a for a in row) for row in self.entries))

    def __mul__(self, other: "Matrix | int | Fraction") -> "Matrix":
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            cols = tuple(zip(*other.entries))
            return Matrix._make(
                tuple(
                    tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                    for row in self.entries
                )
            )
        scale = as_scalar(other)
        return Matrix._make(tuple(tuple(scale * a for a in row) for row in self.entries))

    def __rmul__(self, other: int | Fraction) -> "Matrix":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("powers need a square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported; invert explicitly")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result * self
        return result

    def transpose(self) -> "Matrix":
        return Matrix._make(tuple(zip(*self.entries)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def inverse(self) -> "Matrix":
        """Exact inverse via Gauss-Jordan; raises ValueError when singular."""
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        work = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            lead = work[col][col]
            if lead != 1:
                work[col] = [e / lead for e in work[col]]
            prow = work[col]
            for r in range(n):
                if r != col:
                    f = work[r][col]
                    if f:
                        work[r] = [a - f * b for a, b in zip(work[r], prow)]
        return Matrix._make(tuple(tuple(row[n:]) for row in work))

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"Matrix([{body}])"


def _rref_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Fully reduced row-echelon form of the given rows.

    Returns the nonzero rows (leading entry 1, zeros above and below each
    pivot) and the sorted list of pivot columns.  Pure Gauss-Jordan over
    Fractions; rows are not assumed independent.
    """
    work = [list(row) for row in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [e / lead for e in work[r]]
        prow = work[r]
        for i in range(nrows):
            if i != r:
                f = work[i][c]
                if f:
                    row = work[i]
                    work[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of coordinate space, in canonical form.

    The basis is a reduced row-echelon basis with strictly increasing
    pivots, so equal subspaces have identical representations.  Build
    instances through `rref_basis` (or the helpers below), never by hand.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return subspace_contains(self, vec)

    def basis_matrices(self, n: int) -> list[Matrix]:
        """Interpret the basis vectors as n x n matrices (ambient must be n*n)."""
        if self.ambient_dim != n * n:
            raise ValueError(f"ambient dimension {self.ambient_dim} is not {n}*{n}")
        return [Matrix.from_flat(v, n) for v in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dimension}, ambient={self.ambient_dim})"


def rref_basis(vectors: Iterable[Sequence[int | str | Fraction]], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by `vectors` inside Q^ambient_dim."""
    rows = []
    for vec in vectors:
        rows.append(as_vector(vec, ambient_dim))
    reduced, pivots = _rref_rows(rows)
    return Subspace(
        ambient_dim=ambient_dim,
        basis=tuple(tuple(row) for row in reduced),
        pivots=tuple(pivots),
    )


def zero_space(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim=ambient_dim, basis=(), pivots=())


def full_space(ambient_dim: int) -> Subspace:
    basis = tuple(
        tuple(_ONE if i == j else _ZERO for j in range(ambient_dim))
        for i in range(ambient_dim)
    )
    return Subspace(ambient_dim=ambient_dim, basis=basis, pivots=tuple(range(ambient_dim)))


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}"
        )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Canonical basis of a + b."""
    _check_same_ambient(a, b)
    return rref_basis(list(a.basis) + list(b.basis), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Canonical basis of the intersection, by the Zassenhaus block trick.

    Row-reduce [v | v] for v in basis(a) stacked over [w | 0] for w in
    basis(b); rows whose left half vanishes carry a spanning set of the
    intersection in their right half.
    """
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.dimension == 0 or b.dimension == 0:
        return zero_space(n)
    rows: list[list[Fraction]] = []
    for v in a.basis:
        rows.append(list(v) + list(v))
    zero_tail = [_ZERO] * n
    for w in b.basis:
        rows.append(list(w) + zero_tail)
    reduced, _ = _rref_rows(rows)
    carriers = [row[n:] for row in reduced if all(not e for e in row[:n])]
    return rref_basis(carriers, n)


def _residual(space: Subspace, vec: Sequence[Fraction]) -> list[Fraction]:
    """Remainder of `vec` after eliminating the pivot coordinates of `space`.

    The result is zero exactly when `vec` lies in the subspace.  Relies on
    the basis being fully reduced: each basis row is zero at every other
    pivot, so a single pass in pivot order is complete.
    """
    r = list(vec)
    for row, p in zip(space.basis, space.pivots):
        f = r[p]
        if f:
            r = [a - f * b for a, b in zip(r, row)]
    return r


def subspace_contains(space: Subspace, vec: Sequence[int | str | Fraction]) -> bool:
    v = as_vector(vec, space.ambient_dim)
    return all(not e for e in _residual(space, v))


def solve_linear(m: Matrix, rhs: Sequence[int | str | Fraction]) -> Vector | None:
    """One exact solution of m @ x = rhs, or None when inconsistent.

    Free variables are fixed at zero, so the answer is deterministic.
    """
    b = as_vector(rhs, m.rows)
    augmented = [list(row) + [val] for row, val in zip(m.entries, b)]
    reduced, pivots = _rref_rows(augmented)
    ncols = m.cols
    solution = [_ZERO] * ncols
    for row, p in zip(reduced, pivots):
        if p == ncols:
            return None  # pivot in the constant column: 0 = 1
        solution[p] = row[ncols]
    return tuple(solution)


def null_space(m: Matrix) -> Subspace:
    """Canonical basis of {x : m @ x = 0} inside Q^cols."""
    reduced, pivots = _rref_rows(m.entries)
    ncols = m.cols
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = _ONE
        for row, p in zip(reduced, pivots):
            coeff = row[f]
            if coeff:
                vec[p] = -coeff
        basis.append(vec)
    return rref_basis(basis, ncols)


class SpanBuilder:
    """Incremental span accumulator for rank and membership queries.

    Keeps a row-echelon (not fully reduced) set of rows keyed by leading
    coordinate, so adding a vector or testing membership costs one forward
    reduction.  Useful inside closure loops where a subspace grows vector
    by vector; call `to_subspace` for the canonical form at the end.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence[Fraction]) -> tuple[int, list[Fraction]]:
        """Forward-reduce `vec`; returns (leading index, residual) with
        leading index -1 when the residual is zero."""
        row = list(vec)
        rows = self._rows
        j = 0
        ambient = self.ambient_dim
        while j < ambient:
            if row[j]:
                pivot_row = rows.get(j)
                if pivot_row is None:
                    return j, row
                f = row[j]
                row = [a - f * b for a, b in zip(row, pivot_row)]
            j += 1
        return -1, row

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Adjoin a vector; returns True when the span grew."""
        lead, row = self._reduce(vec)
        if lead < 0:
            return False
        f = row[lead]
        if f != 1:
            # multiply by the exact inverse; plain / would go float on ints
            inv = _ONE / f
            row = [e * inv for e in row]
        self._rows[lead] = row
        return True

    def contains(self, vec: Sequence[Fraction]) -> bool:
        lead, _ = self._reduce(vec)
        return lead < 0

    def to_subspace(self) -> Subspace:
        rows = [self._rows[k] for k in sorted(self._rows)]
        return rref_basis(rows, self.ambient_dim)


def random_matrix(
    rng: random.Random, rows: int, cols: int | None = None, *, lo: int = -3, hi: int = 3
) -> Matrix:
    """Random integer matrix with entries drawn uniformly from [lo, hi]."""
    cols = rows if cols is None else cols
    return Matrix._make(
        tuple(
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(cols))
            for _ in range(rows)
        )
    )


def random_invertible(rng: random.Random, n: int, *, lo: int = -3, hi: int = 3) -> Matrix:
    """Random invertible n x n integer matrix (rejection sampling)."""
    while True:
        m = random_matrix(rng, n, lo=lo, hi=hi)
        try:
            m.inverse()
        except ValueError:
            continue
        return m


def random_subspace(
    rng: random.Random, ambient_dim: int, dim: int, *, lo: int = -3, hi: int = 3
) -> Subspace:
    """Random subspace of exactly the requested dimension (rejection sampling)."""
    if not 0 <= dim <= ambient_dim:
        raise ValueError(f"dimension {dim} out of range for ambient {ambient_dim}")
    while True:
        vectors = [
            [Fraction(rng.randint(lo, hi)) for _ in range(ambient_dim)] for _ in range(dim)
        ]
        space = rref_basis(vectors, ambient_dim)
        if space.dimension == dim:
            return space
