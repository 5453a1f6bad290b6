"""Nilpotent subspaces of the n x n matrix algebra.

A subspace is "nil" when every element is a nilpotent matrix.  Over Q
this is a polynomial identity: x is nilpotent iff Tr(x^k) = 0 for
k = 1..n (Newton's identities), so a subspace with basis b_1..b_d is nil
iff the polynomial Tr((t_1 b_1 + ... + t_d b_d)^k) vanishes identically
for each k.  `is_nil_subspace` decides this by expanding the polynomials
symbolically, which is exact but exponential in k, hence the term budget.

The dimension of a nil subspace is at most n(n-1)/2, with equality
exactly for conjugates of the strictly upper-triangular space;
`triangularize_nil` produces the conjugating matrix through the kernel
flag of the generated (non-unital) algebra.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    Matrix,
    SpanBuilder,
    Subspace,
    full_space,
    null_space,
    rref_basis,
    subspace_intersect,
)
from .algebra import multiply_spaces

__all__ = [
    "ALL_NILPOTENT",
    "WITNESS_FOUND",
    "UNDETERMINED",
    "DEFAULT_TERM_BUDGET",
    "PowerReport",
    "NilCertificate",
    "is_nil_subspace",
    "nonnil_witness_search",
    "triangularize_nil",
    "strictly_upper_space",
    "nil_bound",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

ALL_NILPOTENT = "all-nilpotent"
WITNESS_FOUND = "witness-found"
UNDETERMINED = "undetermined"

DEFAULT_TERM_BUDGET = 500_000


def nil_bound(n: int) -> int:
    """Largest possible dimension of a nil subspace of M_n: n(n-1)/2."""
    return n * (n - 1) // 2


def strictly_upper_space(n: int) -> Subspace:
    """Span of the units e_{i,j} with i < j; the extremal nil subspace."""
    vectors = [
        Matrix.unit(n, i, j).flatten() for i in range(n) for j in range(i + 1, n)
    ]
    return rref_basis(vectors, n * n)


@dataclass(frozen=True)
class PowerReport:
    """One trace power sum: the polynomial Tr(x^power) on the subspace,
    with the number of coefficients examined and whether all vanished."""

    power: int
    monomial_count: int
    vanished: bool


@dataclass(frozen=True)
class NilCertificate:
    """Outcome of the nil-subspace decision.

    verdict is one of `ALL_NILPOTENT`, `WITNESS_FOUND`, `UNDETERMINED`;
    a witness (an element of the subspace with some Tr(witness^k) != 0)
    accompanies `WITNESS_FOUND`, and `checked_powers` records each trace
    power sum that was fully expanded.
    """

    verdict: str
    witness: Matrix | None
    checked_powers: tuple[PowerReport, ...]


def _validate_matrix_space(s: Subspace) -> int:
    n = math.isqrt(s.ambient_dim)
    if n * n != s.ambient_dim:
        raise ValueError(f"ambient dimension {s.ambient_dim} is not a square")
    return n


def is_nil_subspace(s: Subspace, *, budget: int = DEFAULT_TERM_BUDGET) -> NilCertificate:
    """Decide whether every element of the subspace is nilpotent.

    Expands Tr((t_1 b_1 + ... + t_d b_d)^k) for k = 1..n as a polynomial
    in the coefficients: the coefficient of each degree-k monomial is a
    sum of traces of basis words, accumulated here by depth-first walk
    over all d^k words with zero running products pruned.  All
    coefficients vanish for every k iff the subspace is nil (infinite
    field, characteristic zero).  When the nominal word count
    sum(d^k, k=1..n) exceeds `budget`, the verdict is `UNDETERMINED`.
    """
    n = _validate_matrix_space(s)
    d = s.dimension
    if d == 0:
        reports = tuple(PowerReport(k, 0, True) for k in range(1, n + 1))
        return NilCertificate(ALL_NILPOTENT, None, reports)
    nominal_terms = sum(d**k for k in range(1, n + 1))
    if nominal_terms > budget:
        return NilCertificate(UNDETERMINED, None, ())
    basis = s.basis_matrices(n)
    coefficients: dict[tuple[int, tuple[int, ...]], Fraction] = {}

    def walk(product: Matrix, word: tuple[int, ...]) -> None:
        key = (len(word), tuple(sorted(word)))
        tr = product.trace()
        if tr:
            coefficients[key] = coefficients.get(key, _ZERO) + tr
        if len(word) == n:
            return
        for i, b in enumerate(basis):
            nxt = product * b
            if nxt.is_zero():
                continue  # the whole sub-tree contributes zero traces
            walk(nxt, word + (i,))

    for i, b in enumerate(basis):
        if not b.is_zero():
            walk(b, (i,))

    nonzero_powers = {k for (k, _), value in coefficients.items() if value}
    reports = tuple(
        PowerReport(
            power=k,
            monomial_count=math.comb(d + k - 1, k),
            vanished=k not in nonzero_powers,
        )
        for k in range(1, n + 1)
    )
    if not nonzero_powers:
        return NilCertificate(ALL_NILPOTENT, None, reports)
    witness = _find_witness(s, basis)
    if witness is None:
        raise RuntimeError("nonzero trace polynomial but no witness found")
    return NilCertificate(WITNESS_FOUND, witness, reports)


def _trace_powers_nonzero(x: Matrix, n: int) -> bool:
    power = x
    for _ in range(n):
        if power.trace():
            return True
        power = power * x
    return False


def _find_witness(s: Subspace, basis: Sequence[Matrix]) -> Matrix | None:
    """Explicit non-nilpotent element, by seeded sampling with a slowly
    growing coefficient range.  Some element has a nonzero trace power,
    so the search terminates with probability one; the seed is fixed to
    keep results reproducible."""
    n = basis[0].rows
    rng = random.Random(0x0B57)
    for trial in range(4096):
        bound = 1 + trial // 32
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        if not any(coeffs):
            continue
        x = _combination(coeffs, basis, n)
        if _trace_powers_nonzero(x, n):
            return x
    return None


def _combination(
    coeffs: Sequence[int | Fraction], basis: Sequence[Matrix], n: int
) -> Matrix:
    acc = [_ZERO] * (n * n)
    for c, b in zip(coeffs, basis):
        if c:
            acc = [u + c * v for u, v in zip(acc, b.flatten())]
    return Matrix.from_flat(acc, n)


def nonnil_witness_search(
    s: Subspace, seed: int = 0, trials: int = 64, *, lo: int = -3, hi: int = 3
) -> Matrix | None:
    """Random search for a non-nilpotent element of the subspace.

    Draws `trials` integer combinations of the basis and returns the
    first with a nonzero trace power Tr(x^k), k <= n; None when the
    search is exhausted.  The element returned always lies in the
    subspace and is certified non-nilpotent exactly.
    """
    n = _validate_matrix_space(s)
    if s.dimension == 0:
        return None
    basis = s.basis_matrices(n)
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [rng.randint(lo, hi) for _ in basis]
        if not any(coeffs):
            continue
        x = _combination(coeffs, basis, n)
        if _trace_powers_nonzero(x, n):
            return x
    return None


def triangularize_nil(s: Subspace) -> Matrix | None:
    """Conjugator c with c x c^-1 strictly upper triangular for all x in s.

    Builds the (non-unital) algebra N generated by the subspace and the
    kernel flag V_k = {v : N^k v = 0}.  When N is nilpotent the flag is
    complete, any refinement of it to a full flag orders a basis under
    which every element of N is strictly upper triangular, and the
    inverse of that basis matrix is returned (verified before return).
    When N is not nilpotent -- possible even for nil subspaces -- the
    failure marker None is returned.
    """
    n = _validate_matrix_space(s)
    if s.dimension == 0:
        return Matrix.identity(n)
    # Non-unital multiplicative closure of the subspace.
    builder = SpanBuilder(n * n)
    mats: list[Matrix] = []
    for m in s.basis_matrices(n):
        if builder.add(m.flatten()):
            mats.append(m)
    frontier = list(mats)
    while frontier:
        fresh: list[Matrix] = []
        for x in frontier:
            for y in mats:
                for p in (x * y, y * x):
                    if builder.add(p.flatten()):
                        fresh.append(p)
        mats.extend(fresh)
        frontier = fresh
    generated = builder.to_subspace()
    # Power spaces N, N^2, ...; nilpotent iff zero within n steps.
    powers: list[Subspace] = [generated]
    while powers[-1].dimension != 0 and len(powers) <= n:
        powers.append(multiply_spaces(powers[-1], generated, n))
    if powers[-1].dimension != 0:
        return None
    powers.pop()  # drop the zero space; powers[k-1] spans N^k != 0
    # Kernel flag, refined greedily to a full basis.
    chosen: list[Sequence[Fraction]] = []
    flag_builder = SpanBuilder(n)
    for power_space in powers:
        kernel = _power_kernel(power_space, n)
        for row in kernel.basis:
            if flag_builder.add(row):
                chosen.append(row)
    for row in full_space(n).basis:
        if flag_builder.add(row):
            chosen.append(row)
    if len(chosen) != n:
        raise RuntimeError("kernel flag refinement did not fill the space")
    adapted = Matrix._make(tuple(zip(*(tuple(v) for v in chosen))))
    conjugator = adapted.inverse()
    cinv = adapted
    for m in s.basis_matrices(n):
        moved = conjugator * m * cinv
        for i in range(n):
            for j in range(i + 1):
                if moved.entries[i][j]:
                    raise RuntimeError("triangularization check failed")
    return conjugator


def _power_kernel(power_space: Subspace, n: int) -> Subspace:
    kernel = full_space(n)
    for m in power_space.basis_matrices(n):
        kernel = subspace_intersect(kernel, null_space(m))
        if kernel.dimension == 0:
            break
    return kernel
