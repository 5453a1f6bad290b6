"""Unital subalgebras of the n x n matrix algebra over Q.

The central objects are spans of matrices that are closed under the
matrix product and contain the identity.  This module builds them
(multiplicative closure, block upper-triangular patterns), analyses their
structure (radical, semisimple block sizes, invariant flags) and decides
whether a given algebra is conjugate to a block upper-triangular one.

Block conventions.  A `Composition` (n_1, ..., n_s) of n partitions the
coordinates 0..n-1 into consecutive blocks; the block upper-triangular
algebra of that type is the span of the matrix units e_{i,j} with
block(i) <= block(j).  Its dimension is (n^2 + sum n_i^2) / 2.

Everything is exact; randomized routines (block-size extraction, probe
helpers) take explicit seeds and draw small integer entries so results
are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exactlin import (
    Matrix,
    SpanBuilder,
    Subspace,
    Vector,
    full_space,
    null_space,
    rref_basis,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
    zero_space,
)

__all__ = [
    "Composition",
    "MatrixAlgebra",
    "Flag",
    "WedderburnData",
    "compositions",
    "parabolic_dimension",
    "algebra_from_basis",
    "closure",
    "conjugate",
    "conjugate_space",
    "multiply_spaces",
    "radical",
    "semisimple_blocks",
    "parabolic_subalgebra",
    "upper_triangular_algebra",
    "invariant_flag",
    "flag_stabilizer",
    "is_parabolic",
    "absorption_probe",
    "optimal_composition",
    "schur_commutative_check",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts; the block sizes of a partition
    of the coordinates 0..n-1 into consecutive intervals."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        object.__setattr__(self, "parts", tuple(int(p) for p in parts))
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def block_of(self, index: int) -> int:
        """Block number (0-based) of coordinate `index`."""
        if not 0 <= index < self.n:
            raise ValueError(f"index {index} out of range for n={self.n}")
        upper = 0
        for b, p in enumerate(self.parts):
            upper += p
            if index < upper:
                return b
        raise AssertionError("unreachable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Composition({self.parts})"


def compositions(n: int, *, min_parts: int = 1) -> Iterator[Composition]:
    """All ordered compositions of n, by choosing cut points."""
    if n < 1:
        raise ValueError("n must be positive")
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
            if len(parts) >= min_parts:
                yield Composition(parts)


def parabolic_dimension(comp: Composition) -> int:
    """Dimension of the block upper-triangular algebra of the given type:
    (n^2 + sum n_i^2) / 2, always an integer."""
    n = comp.n
    total = n * n + sum(p * p for p in comp.parts)
    return total // 2


@dataclass(frozen=True)
class MatrixAlgebra:
    """A unital subalgebra of M_n(Q), stored as a canonical subspace of
    the flattened matrix space.

    Constructors in this module guarantee the span is multiplicatively
    closed and contains the identity; `algebra_from_basis` checks both for
    spans of unknown provenance.  Equality is subspace equality.
    """

    n: int
    space: Subspace
    unital: bool = True

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def basis_matrices(self) -> list[Matrix]:
        return self.space.basis_matrices(self.n)

    def contains(self, m: Matrix) -> bool:
        if m.rows != self.n or m.cols != self.n:
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        return subspace_contains(self.space, m.flatten())

    def __repr__(self) -> str:
        return f"MatrixAlgebra(n={self.n}, dim={self.dimension})"


def _check_square(m: Matrix, n: int) -> None:
    if m.rows != n or m.cols != n:
        raise ValueError(f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}")


def algebra_from_basis(
    n: int, matrices: Sequence[Matrix], *, check: bool = True
) -> MatrixAlgebra:
    """Wrap a spanning set as a `MatrixAlgebra`.

    With `check=True` (the default) the span is verified to contain the
    identity and to be closed under products of basis pairs; a span that
    fails either check raises ValueError.  Pass `check=False` only when
    closure holds by construction.
    """
    for m in matrices:
        _check_square(m, n)
    space = rref_basis([m.flatten() for m in matrices], n * n)
    algebra = MatrixAlgebra(n=n, space=space)
    if check:
        if not subspace_contains(space, Matrix.identity(n).flatten()):
            raise ValueError("span does not contain the identity matrix")
        basis = algebra.basis_matrices()
        for a in basis:
            for b in basis:
                if not subspace_contains(space, (a * b).flatten()):
                    raise ValueError("span is not closed under multiplication")
    return algebra


def closure(n: int, generators: Sequence[Matrix]) -> MatrixAlgebra:
    """Smallest unital subalgebra of M_n containing the generators.

    Fixed-point iteration: adjoin products of spanning pairs until the
    span stabilizes.  The identity is always adjoined.  Terminates because
    the dimension strictly increases each round and is bounded by n^2.
    """
    for g in generators:
        _check_square(g, n)
    full = n * n
    builder = SpanBuilder(full)
    builder.add(Matrix.identity(n).flatten())
    # The identity is left out of the product lists: its products add nothing.
    mats: list[Matrix] = []
    for g in generators:
        if builder.add(g.flatten()):
            mats.append(g)
    frontier = list(mats)
    while frontier and builder.dimension < full:
        fresh: list[Matrix] = []
        for x in frontier:
            for y in mats:
                for p in (x * y, y * x):
                    if builder.add(p.flatten()):
                        fresh.append(p)
                if builder.dimension == full:
                    break
            if builder.dimension == full:
                break
        if builder.dimension == full:
            break
        mats.extend(fresh)
        frontier = fresh
    return MatrixAlgebra(n=n, space=builder.to_subspace())


def conjugate(a: MatrixAlgebra, c: Matrix) -> MatrixAlgebra:
    """The algebra {c b c^-1 : b in a}; raises ValueError when c is singular."""
    _check_square(c, a.n)
    cinv = c.inverse()
    vecs = [(c * b * cinv).flatten() for b in a.basis_matrices()]
    return MatrixAlgebra(n=a.n, space=rref_basis(vecs, a.n * a.n))


def conjugate_space(space: Subspace, c: Matrix) -> Subspace:
    """Conjugate a subspace of flattened n x n matrices by c."""
    n = c.rows
    if space.ambient_dim != n * n:
        raise ValueError("subspace ambient does not match the conjugating matrix")
    cinv = c.inverse()
    vecs = [(c * m * cinv).flatten() for m in space.basis_matrices(n)]
    return rref_basis(vecs, n * n)


def multiply_spaces(x: Subspace, y: Subspace, n: int) -> Subspace:
    """Span of all products a*b with a in x, b in y (as matrix subspaces)."""
    if x.ambient_dim != n * n or y.ambient_dim != n * n:
        raise ValueError("ambient dimensions must equal n*n")
    builder = SpanBuilder(n * n)
    ymats = y.basis_matrices(n)
    for a in x.basis_matrices(n):
        for b in ymats:
            builder.add((a * b).flatten())
    return builder.to_subspace()


def radical(a: MatrixAlgebra) -> Subspace:
    """The set of x in a with Tr(x b) = 0 for every basis element b.

    Over Q this trace-form kernel is exactly the maximal nilpotent ideal,
    and the result is certified as such before being returned: both ideal
    conditions and vanishing of an iterated product chain are checked, and
    a failure raises RuntimeError (it would mean the arithmetic is wrong,
    not the input).
    """
    basis = a.basis_matrices()
    d = len(basis)
    n = a.n
    if d == 0:
        return zero_space(n * n)
    gram = Matrix._make(
        tuple(
            tuple((basis[i] * basis[j]).trace() for i in range(d))
            for j in range(d)
        )
    )
    coeff_kernel = null_space(gram)
    rad_vectors: list[list[Fraction]] = []
    flat_basis = [b.flatten() for b in basis]
    for coeffs in coeff_kernel.basis:
        acc = [_ZERO] * (n * n)
        for t, vec in zip(coeffs, flat_basis):
            if t:
                acc = [u + t * v for u, v in zip(acc, vec)]
        rad_vectors.append(acc)
    rad = rref_basis(rad_vectors, n * n)
    _certify_nilpotent_ideal(a, rad)
    return rad


def _certify_nilpotent_ideal(a: MatrixAlgebra, ideal: Subspace) -> None:
    """Internal consistency check for `radical`."""
    if ideal.dimension == 0:
        return
    n = a.n
    ideal_mats = ideal.basis_matrices(n)
    for b in a.basis_matrices():
        for r in ideal_mats:
            if not subspace_contains(ideal, (b * r).flatten()) or not subspace_contains(
                ideal, (r * b).flatten()
            ):
                raise RuntimeError("radical candidate is not a two-sided ideal")
    power = ideal
    for _ in range(min(n, ideal.dimension + 1)):
        if power.dimension == 0:
            return
        power = multiply_spaces(power, ideal, n)
    if power.dimension != 0:
        raise RuntimeError("radical candidate is not nilpotent")


# ---------------------------------------------------------------------------
# Quotient by the radical: structure constants, center, block extraction.
# ---------------------------------------------------------------------------


class _QuotientAlgebra:
    """A/R in coordinates, for R the radical inside the algebra A.

    The coset basis is the set of canonical basis rows of A whose pivots
    are not pivots of R (pivots of a subspace are pivots of any enclosing
    one, so these rows represent a complement).  Elements are coordinate
    tuples; multiplication goes through a precomputed structure table.
    """

    def __init__(self, algebra: MatrixAlgebra, rad: Subspace):
        self.n = algebra.n
        space = algebra.space
        rad_pivots = set(rad.pivots)
        self._rad = rad
        self._section_rows: list[Vector] = [
            row for row, p in zip(space.basis, space.pivots) if p not in rad_pivots
        ]
        self._coset_pivots: list[int] = [p for p in space.pivots if p not in rad_pivots]
        self.dim = len(self._section_rows)
        self._section_mats = [Matrix.from_flat(v, self.n) for v in self._section_rows]
        self._table: list[list[tuple[Fraction, ...]]] = [
            [
                self.coords((x * y).flatten())
                for y in self._section_mats
            ]
            for x in self._section_mats
        ]
        self.one = self.coords(Matrix.identity(self.n).flatten())

    def coords(self, flat: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of the coset of a flattened element of A."""
        from .exactlin import _residual  # reduced-basis remainder

        r = _residual(self._rad, flat)
        return tuple(r[p] for p in self._coset_pivots)

    def section(self, coords: Sequence[Fraction]) -> Matrix:
        """A representative matrix for the given coset coordinates."""
        acc = [_ZERO] * (self.n * self.n)
        for c, row in zip(coords, self._section_rows):
            if c:
                acc = [u + c * v for u, v in zip(acc, row)]
        return Matrix.from_flat(acc, self.n)

    def mult(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        m = self.dim
        acc = [_ZERO] * m
        table = self._table
        for i in range(m):
            ui = u[i]
            if not ui:
                continue
            row = table[i]
            for j in range(m):
                vj = v[j]
                if not vj:
                    continue
                cell = row[j]
                f = ui * vj
                acc = [a + f * c for a, c in zip(acc, cell)]
        return tuple(acc)

    def scale_add(
        self, u: Sequence[Fraction], f: Fraction, v: Sequence[Fraction]
    ) -> tuple[Fraction, ...]:
        return tuple(a + f * b for a, b in zip(u, v))

    def center(self) -> list[tuple[Fraction, ...]]:
        """Basis (in coordinates) of the center of the quotient."""
        m = self.dim
        rows: list[list[Fraction]] = []
        for j in range(m):
            for k in range(m):
                rows.append([self._table[i][j][k] - self._table[j][i][k] for i in range(m)])
        kernel = null_space(Matrix(rows))
        return [tuple(v) for v in kernel.basis]

    def min_poly(self, z: Sequence[Fraction]) -> list[Fraction]:
        """Monic minimal polynomial of z, low-degree coefficients first."""
        m = self.dim
        powers: list[tuple[Fraction, ...]] = [self.one]
        builder = SpanBuilder(m)
        builder.add(self.one)
        current = self.one
        while True:
            current = self.mult(current, z)
            if not builder.add(current):
                break
            powers.append(current)
        k = len(powers)
        system = Matrix._make(
            tuple(tuple(powers[i][r] for i in range(k)) for r in range(m))
        )
        from .exactlin import solve_linear

        solution = solve_linear(system, current)
        if solution is None:
            raise RuntimeError("minimal polynomial solve failed")
        return [-c for c in solution] + [_ONE]


def _divisors(value: int) -> list[int]:
    value = abs(value)
    divs = []
    d = 1
    while d * d <= value:
        if value % d == 0:
            divs.append(d)
            divs.append(value // d)
        d += 1
    return sorted(set(divs))


def _eval_poly(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    """Synthetic division of a polynomial by (t - root)."""
    out: list[Fraction] = []
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    # `out` holds the Horner partials; drop the remainder, reverse to low-first.
    out = out[:-1]
    out.reverse()
    return out


def _rational_roots(coeffs: Sequence[Fraction]) -> tuple[list[Fraction], int]:
    """All rational roots of the polynomial (with multiplicity), plus the
    degree of the rational-root-free factor that remains."""
    work = list(coeffs)
    while len(work) > 1 and not work[-1]:
        work.pop()
    roots: list[Fraction] = []
    while len(work) > 1 and not work[0]:
        roots.append(_ZERO)
        work.pop(0)
    while len(work) > 1:
        denom_lcm = 1
        for c in work:
            denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in work]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        found = None
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _eval_poly(work, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        work = _deflate(work, found)
    return roots, len(work) - 1


@dataclass(frozen=True)
class WedderburnData:
    """Radical plus semisimple block structure of a unital algebra.

    `block_sizes` lists the matrix block sizes of the semisimple quotient
    in ascending order, or is None when the quotient does not decompose
    into full matrix blocks over Q (or the randomized extraction exhausted
    its retry budget).  When present, sum of squares equals
    `semisimple_dim`.
    """

    radical_space: Subspace
    radical_dim: int
    semisimple_dim: int
    block_sizes: tuple[int, ...] | None

    @property
    def split(self) -> bool:
        return self.block_sizes is not None


def semisimple_blocks(
    a: MatrixAlgebra, *, retries: int = 8, seed: int = 0x5EED
) -> WedderburnData:
    """Radical dimension and the block sizes of the semisimple quotient.

    The quotient A/rad A is analysed through its center: a random central
    element whose minimal polynomial splits into distinct linear factors
    over Q and has degree equal to the center's dimension yields the
    primitive central idempotents by Lagrange interpolation, and each
    idempotent cuts out one block whose dimension must be a perfect
    square.  A nonlinear irreducible factor proves the center contains a
    field extension of Q, so the non-split marker is returned
    immediately; an unlucky (non-separating) draw is retried with a wider
    coefficient range, up to `retries` times.
    """
    rad = radical(a)
    r = rad.dimension
    d = a.dimension
    ss_dim = d - r
    quotient = _QuotientAlgebra(a, rad)
    center = quotient.center()
    z_dim = len(center)
    rng = random.Random(seed)

    def data(sizes: tuple[int, ...] | None) -> WedderburnData:
        return WedderburnData(
            radical_space=rad,
            radical_dim=r,
            semisimple_dim=ss_dim,
            block_sizes=sizes,
        )

    for attempt in range(retries):
        bound = 3 + 2 * attempt
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in center]
        z = tuple(
            sum((f * c[k] for f, c in zip(coeffs, center)), _ZERO)
            for k in range(quotient.dim)
        )
        if not any(z):
            continue
        poly = quotient.min_poly(z)
        roots, leftover_degree = _rational_roots(poly)
        if leftover_degree > 0:
            return data(None)
        if len(set(roots)) != len(roots):
            raise RuntimeError("minimal polynomial of a central element not squarefree")
        if len(roots) < z_dim:
            continue  # z does not generate the center; redraw
        sizes = []
        for lam in roots:
            idem = quotient.one
            for mu in roots:
                if mu == lam:
                    continue
                shifted = quotient.scale_add(z, -mu, quotient.one)
                idem = quotient.mult(idem, shifted)
                idem = tuple(c / (lam - mu) for c in idem)
            block = SpanBuilder(quotient.dim)
            for k in range(quotient.dim):
                basis_vec = tuple(
                    _ONE if i == k else _ZERO for i in range(quotient.dim)
                )
                block.add(quotient.mult(idem, basis_vec))
            block_dim = block.dimension
            s = math.isqrt(block_dim)
            if s * s != block_dim:
                return data(None)
            sizes.append(s)
        if sum(s * s for s in sizes) != ss_dim:
            raise RuntimeError("block dimensions do not add up to the quotient")
        return data(tuple(sorted(sizes)))
    return data(None)


# ---------------------------------------------------------------------------
# Block upper-triangular algebras and flag machinery.
# ---------------------------------------------------------------------------


def parabolic_subalgebra(comp: Composition) -> MatrixAlgebra:
    """Block upper-triangular algebra of the given type: the span of the
    units e_{i,j} with block(i) <= block(j).  Closed by transitivity of
    the block order, so no closure check is needed."""
    n = comp.n
    blocks = [comp.block_of(i) for i in range(n)]
    vectors = []
    for i in range(n):
        for j in range(n):
            if blocks[i] <= blocks[j]:
                vectors.append(Matrix.unit(n, i, j).flatten())
    return MatrixAlgebra(n=n, space=rref_basis(vectors, n * n))


def upper_triangular_algebra(n: int) -> MatrixAlgebra:
    """The full upper-triangular algebra: type (1, 1, ..., 1)."""
    return parabolic_subalgebra(Composition((1,) * n))


@dataclass(frozen=True)
class Flag:
    """A strictly increasing chain of nonzero subspaces of Q^n ending at
    the full space.  The zero subspace is left implicit."""

    n: int
    subspaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if not self.subspaces:
            raise ValueError("a flag needs at least the full space")
        previous: Subspace | None = None
        for v in self.subspaces:
            if v.ambient_dim != self.n:
                raise ValueError("flag member has wrong ambient dimension")
            if v.dimension == 0:
                raise ValueError("flag members must be nonzero")
            if previous is not None:
                if v.dimension <= previous.dimension:
                    raise ValueError("flag dimensions must strictly increase")
                if subspace_sum(previous, v) != v:
                    raise ValueError("flag members must be nested")
            previous = v
        if self.subspaces[-1].dimension != self.n:
            raise ValueError("a flag must end at the full space")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(v.dimension for v in self.subspaces)

    @property
    def gaps(self) -> tuple[int, ...]:
        """Successive dimension jumps; a composition of n."""
        dims = self.dims
        return tuple(b - a for a, b in zip((0,) + dims, dims))


def _joint_kernel(mats: Sequence[Matrix], n: int) -> Subspace:
    kernel = full_space(n)
    for m in mats:
        kernel = subspace_intersect(kernel, null_space(m))
        if kernel.dimension == 0:
            break
    return kernel


class _ModuleQuotient:
    """Coordinates on Q^n / V for an invariant subspace V.

    The coset basis is the set of standard basis vectors at non-pivot
    coordinates of V, which completes any reduced echelon basis.
    """

    def __init__(self, sub: Subspace):
        self.sub = sub
        self.n = sub.ambient_dim
        pivot_set = set(sub.pivots)
        self.coset_coords = [p for p in range(self.n) if p not in pivot_set]
        self.dim = len(self.coset_coords)

    def project(self, vec: Sequence[Fraction]) -> list[Fraction]:
        from .exactlin import _residual

        r = _residual(self.sub, vec)
        return [r[p] for p in self.coset_coords]

    def lift(self, coords: Sequence[Fraction]) -> list[Fraction]:
        vec = [_ZERO] * self.n
        for c, p in zip(coords, self.coset_coords):
            vec[p] = c
        return vec

    def induced_matrix(self, m: Matrix) -> Matrix:
        cols = []
        for p in self.coset_coords:
            column = [row[p] for row in m.entries]
            cols.append(self.project(column))
        entries = tuple(
            tuple(cols[c][r] for c in range(self.dim)) for r in range(self.dim)
        )
        return Matrix._make(entries)


def _induced_algebra(a: MatrixAlgebra, sub: Subspace) -> tuple[MatrixAlgebra, _ModuleQuotient]:
    """The image of `a` acting on Q^n / sub (sub must be a-invariant)."""
    quotient = _ModuleQuotient(sub)
    m = quotient.dim
    vecs = [quotient.induced_matrix(b).flatten() for b in a.basis_matrices()]
    algebra = MatrixAlgebra(n=m, space=rref_basis(vecs, m * m))
    return algebra, quotient


def invariant_flag(a: MatrixAlgebra) -> Flag:
    """The chain of subspaces obtained by repeatedly taking the joint
    kernel of the radical of the induced action.

    Each step: compute the radical N of the algebra acting on the current
    quotient; if N = 0 the chain ends at the full space, otherwise the
    joint kernel of N is nonzero and proper, is invariant, and is lifted
    back to Q^n as the next member.  For a block upper-triangular algebra
    this recovers exactly the standard coordinate flag of its type.
    """
    n = a.n
    members: list[Subspace] = []
    current = zero_space(n)
    while True:
        if current.dimension == 0:
            acting, quotient = a, _ModuleQuotient(current)
        else:
            acting, quotient = _induced_algebra(a, current)
        rad = radical(acting)
        if rad.dimension == 0:
            break
        kernel = _joint_kernel(rad.basis_matrices(acting.n), acting.n)
        if kernel.dimension == 0 or kernel.dimension == acting.n:
            raise RuntimeError("joint kernel of a nonzero nilpotent ideal is improper")
        lifted = [quotient.lift(v) for v in kernel.basis]
        current = subspace_sum(current, rref_basis(lifted, n))
        members.append(current)
    members.append(full_space(n))
    return Flag(n=n, subspaces=tuple(members))


def flag_stabilizer(f: Flag) -> MatrixAlgebra:
    """All matrices x with x V <= V for every member V of the flag.

    For each proper member, x V <= V is the bilinear condition
    q . (x v) = 0 over basis vectors v of V and basis covectors q of the
    annihilator of V; the stabilizer is the null space of the stacked
    constraints.  Always a unital algebra, so no closure check is run.
    """
    n = f.n
    rows: list[list[Fraction]] = []
    for v_space in f.subspaces:
        if v_space.dimension == n:
            continue
        annihilator = null_space(Matrix(v_space.basis))
        for v in v_space.basis:
            for q in annihilator.basis:
                rows.append([q[i] * v[j] for i in range(n) for j in range(n)])
    if not rows:
        return MatrixAlgebra(n=n, space=full_space(n * n))
    return MatrixAlgebra(n=n, space=null_space(Matrix(rows)))


def is_parabolic(
    a: MatrixAlgebra,
) -> tuple[bool, Composition | None, Matrix | None]:
    """Decide whether `a` is conjugate to a block upper-triangular algebra.

    Computes the invariant flag and compares `a` with the flag's full
    stabilizer.  On success returns (True, type, c) where the flag gaps
    give the type and `c b c^-1` maps `a` onto the standard algebra of
    that type; the witness is verified before being returned.  Otherwise
    (False, None, None).
    """
    flag = invariant_flag(a)
    stab = flag_stabilizer(flag)
    if stab.space != a.space:
        return False, None, None
    comp = Composition(flag.gaps)
    if a.dimension != parabolic_dimension(comp):
        return False, None, None
    n = a.n
    chosen: list[Vector] = []
    builder = SpanBuilder(n)
    for member in flag.subspaces:
        for row in member.basis:
            if builder.add(row):
                chosen.append(row)
    if len(chosen) != n:
        raise RuntimeError("flag refinement did not produce a full basis")
    adapted = Matrix._make(tuple(zip(*chosen)))  # columns are the chosen vectors
    witness = adapted.inverse()
    if conjugate(a, witness).space != parabolic_subalgebra(comp).space:
        raise RuntimeError("adapted basis failed to standardize the algebra")
    return True, comp, witness


def absorption_probe(a: MatrixAlgebra, x: Matrix) -> MatrixAlgebra:
    """Closure of basis(a) together with one extra matrix.

    For a maximal proper `a`, any x outside `a` makes this the full
    matrix algebra; for x inside, it returns `a` itself.
    """
    _check_square(x, a.n)
    return closure(a.n, a.basis_matrices() + [x])


def optimal_composition(n: int) -> tuple[frozenset[Composition], int]:
    """Among proper block types (at least two parts), the set of types of
    maximal dimension together with that dimension.

    The maximum is n^2 - n + 1, attained exactly by (1, n-1) and
    (n-1, 1); for n = 2 the two coincide.
    """
    if n < 2:
        raise ValueError("need n >= 2 for a proper block type")
    best = -1
    argmax: list[Composition] = []
    for comp in compositions(n, min_parts=2):
        dim = parabolic_dimension(comp)
        if dim > best:
            best = dim
            argmax = [comp]
        elif dim == best:
            argmax.append(comp)
    return frozenset(argmax), best


def schur_commutative_check(a: MatrixAlgebra) -> tuple[bool, bool | None]:
    """(is commutative, bound holds) where the bound is the maximal
    commutative dimension floor(n^2/4) + 1; the second slot is None when
    the algebra is not commutative (bound not applicable)."""
    basis = a.basis_matrices()
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if x * y != y * x:
                return False, None
    bound = (a.n * a.n) // 4 + 1
    return True, a.dimension <= bound
