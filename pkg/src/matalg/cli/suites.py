"""Verification suites: exhaustive and randomized checks with reports.

Each suite replays a family of structural facts at small n -- extremal
dimensions of proper unital subalgebras, the block dimension formula,
maximality of two-block types, nil-subspace bounds, radical/block
consistency, coideal duality and minimality, the commutative dimension
bound -- and records one pass/fail line per check.

Reports are deterministic: given the same (suite, n range, seed, trials,
budget) the rendered text is byte-identical, so reports can be diffed
across runs and machines.  Wall time is measured but kept out of the
canonical text.

The exhaustive corpus at n = 2, 3 is the family of unit-pattern
subalgebras: spans of matrix units containing all diagonal units whose
off-diagonal position set is transitively closed.  These are exactly the
spans closed under multiplication, so they exhaust a natural finite
testbed (4 algebras at n = 2, 29 at n = 3).  At n = 4 a fixed corpus of
block-triangular, diagonal, commutative-extremal and seeded random
closure algebras stands in, since exhaustive enumeration is no longer
practical.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from ..algebra import (
    Composition,
    MatrixAlgebra,
    absorption_probe,
    closure,
    compositions,
    conjugate_space,
    flag_stabilizer,
    invariant_flag,
    is_parabolic,
    optimal_composition,
    parabolic_dimension,
    parabolic_subalgebra,
    radical,
    schur_commutative_check,
    semisimple_blocks,
)
from ..coalgebra import is_coideal, parabolic_coideal, perp
from ..exactlin import (
    Matrix,
    random_invertible,
    random_matrix,
    random_subspace,
    rref_basis,
)
from ..nilpotent import (
    ALL_NILPOTENT,
    DEFAULT_TERM_BUDGET,
    is_nil_subspace,
    nil_bound,
    nonnil_witness_search,
    strictly_upper_space,
    triangularize_nil,
)

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "SUITE_NAMES",
    "suite_supported_ns",
    "enumerate_unit_pattern_subalgebras",
    "corpus_algebras",
    "run_verification",
]


@dataclass(frozen=True)
class CheckRecord:
    """One verification line: an identifier, the statement being checked,
    and the expected/observed values."""

    check_id: str
    claim: str
    expected: str
    observed: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    n_lo: int
    n_hi: int
    seed: int
    trials: int | None
    budget: int | None
    records: tuple[CheckRecord, ...]
    wall_time_s: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_text(self) -> str:
        """Canonical report text; deterministic for fixed inputs (wall
        time is deliberately excluded)."""
        lines = [
            f"suite: {self.suite}",
            f"n: {self.n_lo}..{self.n_hi}",
            f"seed: {self.seed}",
            f"trials: {'default' if self.trials is None else self.trials}",
            f"budget: {'default' if self.budget is None else self.budget}",
            "checks:",
        ]
        for r in self.records:
            status = "pass" if r.passed else "FAIL"
            lines.append(
                f"  [{status}] {r.check_id} expected={r.expected} observed={r.observed} :: {r.claim}"
            )
        failed = sum(1 for r in self.records if not r.passed)
        lines.append(
            f"summary: {len(self.records)} checks, {len(self.records) - failed} passed, {failed} failed"
        )
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _add(
    records: list[CheckRecord],
    check_id: str,
    claim: str,
    expected: object,
    observed: object,
) -> None:
    records.append(
        CheckRecord(
            check_id=check_id,
            claim=claim,
            expected=str(expected),
            observed=str(observed),
            passed=str(expected) == str(observed),
        )
    )


def _rng(seed: int, *tags: object) -> random.Random:
    """Deterministic child generator; string seeding is stable across
    platforms and Python versions."""
    return random.Random(":".join(str(t) for t in (seed,) + tags))


# ---------------------------------------------------------------------------
# Corpora.
# ---------------------------------------------------------------------------


def enumerate_unit_pattern_subalgebras(n: int) -> list[MatrixAlgebra]:
    """All unit-pattern subalgebras of M_n, for n in {2, 3}.

    A pattern is a set of off-diagonal positions; together with all
    diagonal positions it spans a unital multiplicatively closed algebra
    exactly when it is transitively closed ((i,j) and (j,k) present force
    (i,k)).  The list is free of duplicates (distinct patterns span
    distinct subspaces) and sorted by dimension, then by pattern.
    """
    if n not in (2, 3):
        raise ValueError("exhaustive enumeration is supported for n in {2, 3}")
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    diagonal = [Matrix.unit(n, i, i).flatten() for i in range(n)]
    found: list[tuple[int, tuple[tuple[int, int], ...], MatrixAlgebra]] = []
    for mask in range(1 << len(off)):
        chosen = {off[k] for k in range(len(off)) if mask >> k & 1}
        transitive = True
        for i, j in chosen:
            for j2, k in chosen:
                if j2 == j and i != k and (i, k) not in chosen:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            continue
        vectors = diagonal + [Matrix.unit(n, i, j).flatten() for i, j in sorted(chosen)]
        algebra = MatrixAlgebra(n=n, space=rref_basis(vectors, n * n))
        found.append((algebra.dimension, tuple(sorted(chosen)), algebra))
    found.sort(key=lambda item: (item[0], item[1]))
    return [algebra for _, _, algebra in found]


def corpus_algebras(n: int, seed: int = 0) -> list[tuple[str, MatrixAlgebra]]:
    """Labeled corpus for the structural suites.

    n = 2, 3: the exhaustive unit-pattern family.  n = 4: all block
    upper-triangular types, the diagonal algebra, the commutative
    algebra of extremal dimension, and six seeded random closures.
    """
    if n in (2, 3):
        return [
            (f"pattern-{idx:02d}", algebra)
            for idx, algebra in enumerate(enumerate_unit_pattern_subalgebras(n))
        ]
    if n != 4:
        raise ValueError("corpus is defined for n in {2, 3, 4}")
    entries: list[tuple[str, MatrixAlgebra]] = []
    for comp in compositions(n):
        label = "blocks-" + "-".join(str(p) for p in comp.parts)
        entries.append((label, parabolic_subalgebra(comp)))
    diagonal = MatrixAlgebra(
        n=n,
        space=rref_basis([Matrix.unit(n, i, i).flatten() for i in range(n)], n * n),
    )
    entries.append(("diagonal", diagonal))
    # span{I, e_{0,2}, e_{0,3}, e_{1,2}, e_{1,3}}: commutative of dimension
    # n^2/4 + 1, the largest a commutative subalgebra can be.
    extremal_units = [Matrix.identity(n).flatten()] + [
        Matrix.unit(n, i, j).flatten() for i in (0, 1) for j in (2, 3)
    ]
    entries.append(
        ("commutative-extremal", MatrixAlgebra(n=n, space=rref_basis(extremal_units, n * n)))
    )
    rng = _rng(seed, "corpus", n)
    for t in range(3):
        entries.append((f"cyclic-{t}", closure(n, [random_matrix(rng, n)])))
    for t in range(3):
        gens = [random_matrix(rng, n) for _ in range(2)]
        entries.append((f"generated-{t}", closure(n, gens)))
    return entries


# ---------------------------------------------------------------------------
# Suite runners.  Each returns a list of records for the requested ns.
# ---------------------------------------------------------------------------

_CORPUS_SIZES = {2: 4, 3: 29}  # transitively closed patterns, counted exhaustively
_NIL_PATTERN_COUNT_N3 = 24  # nonzero acyclic patterns on three points (25 labeled DAGs minus the empty one)


def _run_max_subalgebra(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        target = n * n - n + 1
        if n <= 3:
            corpus = enumerate_unit_pattern_subalgebras(n)
            _add(
                records,
                f"max-subalgebra/corpus-size/n={n}",
                "count of transitively closed unit patterns",
                _CORPUS_SIZES[n],
                len(corpus),
            )
            proper = [a.dimension for a in corpus if a.dimension < n * n]
            _add(
                records,
                f"max-subalgebra/exhaustive-max/n={n}",
                "largest proper unital dimension over the exhaustive corpus is n^2 - n + 1",
                target,
                max(proper),
            )
        _add(
            records,
            f"max-subalgebra/parabolic-attains/n={n}",
            "the block type (1, n-1) reaches dimension n^2 - n + 1",
            target,
            parabolic_subalgebra(Composition((1, n - 1))).dimension,
        )
        if n >= 4:
            t = 200 if trials is None else trials
            rng = _rng(seed, "closures", n)
            violations = 0
            for _ in range(t):
                k = rng.randint(1, 3)
                gens = [random_matrix(rng, n) for _ in range(k)]
                dim = closure(n, gens).dimension
                if target < dim < n * n:
                    violations += 1
            _add(
                records,
                f"max-subalgebra/random-closures/n={n}",
                f"no closure of up to three random generators lands strictly between n^2-n+1 and n^2 ({t} draws)",
                "0 violations",
                f"{violations} violations",
            )
    return records


def _run_dimension_formula(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        total = 0
        matches = 0
        for comp in compositions(n):
            total += 1
            if parabolic_subalgebra(comp).dimension == parabolic_dimension(comp):
                matches += 1
        _add(
            records,
            f"dimension-formula/n={n}",
            "every block type (n_1..n_s) spans dimension (n^2 + sum n_i^2)/2",
            f"{total}/{total}",
            f"{matches}/{total}",
        )
    return records


def _run_split_bound(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        corpus = corpus_algebras(n, seed)
        violations = 0
        split_total = 0
        equality_cases: list[MatrixAlgebra] = []
        for _, a in corpus:
            data = semisimple_blocks(a)
            if not data.split:
                continue
            split_total += 1
            bound = (n * n + sum(s * s for s in data.block_sizes)) // 2
            if a.dimension > bound:
                violations += 1
            elif a.dimension == bound:
                equality_cases.append(a)
        _add(
            records,
            f"split-bound/dimension/n={n}",
            f"dim <= (n^2 + sum n_i^2)/2 for every split corpus algebra ({split_total} checked)",
            "0 violations",
            f"{violations} violations",
        )
        recognized = 0
        for a in equality_cases:
            ok, _, _ = is_parabolic(a)
            if ok:
                recognized += 1
        _add(
            records,
            f"split-bound/equality/n={n}",
            "every algebra meeting the bound is conjugate to its block type",
            f"{len(equality_cases)}/{len(equality_cases)}",
            f"{recognized}/{len(equality_cases)}",
        )
    return records


def _run_maximality(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        for left in range(1, n):
            comp = Composition((left, n - left))
            algebra = parabolic_subalgebra(comp)
            t = 100 if trials is None else trials
            rng = _rng(seed, "absorb", n, left)
            absorbed = 0
            for _ in range(t):
                while True:
                    x = random_matrix(rng, n)
                    if not algebra.contains(x):
                        break
                if absorption_probe(algebra, x).dimension == n * n:
                    absorbed += 1
            _add(
                records,
                f"maximality/n={n}/type=({left},{n - left})",
                "adjoining any element outside a two-block algebra closes to all of M_n",
                f"{t}/{t}",
                f"{absorbed}/{t}",
            )
    return records


def _run_optimal_type(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        argmax, best = optimal_composition(n)
        observed = sorted(comp.parts for comp in argmax)
        expected = sorted({(1, n - 1), (n - 1, 1)})
        _add(
            records,
            f"optimal-type/argmax/n={n}",
            "the proper block types of maximal dimension are exactly (1, n-1) and (n-1, 1)",
            expected,
            observed,
        )
        _add(
            records,
            f"optimal-type/value/n={n}",
            "their dimension is n^2 - n + 1",
            n * n - n + 1,
            best,
        )
    return records


def _run_gerstenhaber(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    nil_budget = DEFAULT_TERM_BUDGET if budget is None else budget
    for n in ns:
        if n == 3:
            positions = [(i, j) for i in range(n) for j in range(n)]
            nil_dims: list[int] = []
            for mask in range(1, 1 << len(positions)):
                vectors = [
                    Matrix.unit(n, i, j).flatten()
                    for k, (i, j) in enumerate(positions)
                    if mask >> k & 1
                ]
                space = rref_basis(vectors, n * n)
                cert = is_nil_subspace(space, budget=nil_budget)
                if cert.verdict == ALL_NILPOTENT:
                    nil_dims.append(space.dimension)
            _add(
                records,
                f"gerstenhaber/nil-pattern-count/n={n}",
                "count of nonzero unit patterns spanning nil subspaces (acyclic patterns)",
                _NIL_PATTERN_COUNT_N3,
                len(nil_dims),
            )
            _add(
                records,
                f"gerstenhaber/exhaustive-nil-max/n={n}",
                "every nil unit-pattern subspace has dimension at most n(n-1)/2",
                nil_bound(n),
                max(nil_dims),
            )
        t = 100 if trials is None else trials
        rng = _rng(seed, "witness", n)
        target_dim = nil_bound(n) + 1
        found = 0
        for _ in range(t):
            space = random_subspace(rng, n * n, target_dim)
            witness = nonnil_witness_search(
                space, seed=rng.randint(0, 2**31 - 1), trials=64
            )
            if witness is not None:
                found += 1
        _add(
            records,
            f"gerstenhaber/random-witness/n={n}",
            "a subspace of dimension n(n-1)/2 + 1 always contains a non-nilpotent element",
            f"{t}/{t}",
            f"{found}/{t}",
        )
        t2 = 50 if trials is None else trials
        rng2 = _rng(seed, "triangularize", n)
        upper = strictly_upper_space(n)
        recovered = 0
        for _ in range(t2):
            c = random_invertible(rng2, n)
            moved = conjugate_space(upper, c)
            back = triangularize_nil(moved)
            if back is not None and conjugate_space(moved, back) == upper:
                recovered += 1
        _add(
            records,
            f"gerstenhaber/triangularize/n={n}",
            "conjugates of the strictly upper-triangular space are triangularized back exactly",
            f"{t2}/{t2}",
            f"{recovered}/{t2}",
        )
    return records


def _run_wedderburn(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        corpus = corpus_algebras(n, seed)
        split_total = 0
        identity_ok = 0
        for _, a in corpus:
            data = semisimple_blocks(a)
            if not data.split:
                continue
            split_total += 1
            if data.radical_dim + sum(s * s for s in data.block_sizes) == a.dimension:
                identity_ok += 1
        _add(
            records,
            f"wedderburn/identity/n={n}",
            "radical dimension plus sum of squared block sizes equals the dimension (split corpus)",
            f"{split_total}/{split_total}",
            f"{identity_ok}/{split_total}",
        )
        certified = 0
        for _, a in corpus:
            try:
                radical(a)
                certified += 1
            except RuntimeError:
                pass
        _add(
            records,
            f"wedderburn/radical-certified/n={n}",
            "the trace-form kernel certifies as a nilpotent two-sided ideal on the whole corpus",
            f"{len(corpus)}/{len(corpus)}",
            f"{certified}/{len(corpus)}",
        )
        full = MatrixAlgebra(
            n=n, space=rref_basis([Matrix.unit(n, i, j).flatten() for i in range(n) for j in range(n)], n * n)
        )
        _add(
            records,
            f"wedderburn/full-radical/n={n}",
            "the full matrix algebra has zero radical",
            0,
            radical(full).dimension,
        )
    return records


def _run_min_coideal(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        corpus = corpus_algebras(n, seed)
        certified = 0
        for _, a in corpus:
            if is_coideal(perp(a.space)).certified:
                certified += 1
        _add(
            records,
            f"min-coideal/perp-certifies/n={n}",
            "the annihilator of every corpus subalgebra certifies as a coideal",
            f"{len(corpus)}/{len(corpus)}",
            f"{certified}/{len(corpus)}",
        )
        rng = _rng(seed, "perp", n)
        t = 25 if trials is None else trials
        checks = 0
        involution_ok = 0
        for _, a in corpus:
            checks += 1
            if perp(perp(a.space)) == a.space:
                involution_ok += 1
        for _ in range(t):
            dim = rng.randint(0, n * n)
            s = random_subspace(rng, n * n, dim)
            checks += 1
            if perp(perp(s)) == s:
                involution_ok += 1
        _add(
            records,
            f"min-coideal/perp-involution/n={n}",
            "perp is an involution (corpus plus random subspaces)",
            f"{checks}/{checks}",
            f"{involution_ok}/{checks}",
        )
        _add(
            records,
            f"min-coideal/parabolic-coideal-dim/n={n}",
            "the block-lower coideal of type (1, n-1) has dimension n - 1",
            n - 1,
            parabolic_coideal(Composition((1, n - 1))).dimension,
        )
        sub_certified = 0
        sub_candidates = 0
        for left in range(1, n):
            comp = Composition((left, n - left))
            blocks = [comp.block_of(i) for i in range(n)]
            positions = [
                (i, j) for i in range(n) for j in range(n) if blocks[i] > blocks[j]
            ]
            for mask in range(1, (1 << len(positions)) - 1):
                vectors = [
                    Matrix.unit(n, i, j).flatten()
                    for k, (i, j) in enumerate(positions)
                    if mask >> k & 1
                ]
                sub_candidates += 1
                if is_coideal(rref_basis(vectors, n * n)).certified:
                    sub_certified += 1
        _add(
            records,
            f"min-coideal/two-block-minimal/n={n}",
            f"no proper nonzero unit sub-pattern of a two-block coideal certifies ({sub_candidates} candidates)",
            "0 certified",
            f"{sub_certified} certified",
        )
        if n <= 3:
            certified_dims: list[int] = []
            positions = [(i, j) for i in range(n) for j in range(n)]
            for mask in range(1, 1 << len(positions)):
                vectors = [
                    Matrix.unit(n, i, j).flatten()
                    for k, (i, j) in enumerate(positions)
                    if mask >> k & 1
                ]
                if is_coideal(rref_basis(vectors, n * n)).certified:
                    certified_dims.append(bin(mask).count("1"))
            _add(
                records,
                f"min-coideal/minimal-dimension/n={n}",
                "the smallest certified nonzero unit-pattern coideal has dimension n - 1",
                n - 1,
                min(certified_dims),
            )
    return records


def _run_schur(
    ns: Sequence[int], seed: int, trials: int | None, budget: int | None
) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for n in ns:
        corpus = corpus_algebras(n, seed)
        bound = (n * n) // 4 + 1
        commutative_total = 0
        violations = 0
        attained = False
        for _, a in corpus:
            commutative, bound_holds = schur_commutative_check(a)
            if not commutative:
                continue
            commutative_total += 1
            if not bound_holds:
                violations += 1
            if a.dimension == bound:
                attained = True
        _add(
            records,
            f"schur/bound/n={n}",
            f"every commutative corpus algebra has dimension at most n^2/4 + 1 ({commutative_total} checked)",
            "0 violations",
            f"{violations} violations",
        )
        _add(
            records,
            f"schur/attained/n={n}",
            "the commutative bound is attained in the corpus",
            True,
            attained,
        )
    return records


_Runner = Callable[[Sequence[int], int, "int | None", "int | None"], "list[CheckRecord]"]

_SUITES: dict[str, tuple[frozenset[int], _Runner]] = {
    "max-subalgebra": (frozenset({2, 3, 4, 5}), _run_max_subalgebra),
    "dimension-formula": (frozenset(range(2, 9)), _run_dimension_formula),
    "split-bound": (frozenset({2, 3, 4}), _run_split_bound),
    "maximality": (frozenset({2, 3, 4}), _run_maximality),
    "optimal-type": (frozenset(range(2, 9)), _run_optimal_type),
    "gerstenhaber": (frozenset({3, 4}), _run_gerstenhaber),
    "wedderburn": (frozenset({2, 3, 4}), _run_wedderburn),
    "min-coideal": (frozenset({2, 3, 4}), _run_min_coideal),
    "schur": (frozenset({2, 3, 4}), _run_schur),
}

SUITE_NAMES = tuple(sorted(_SUITES)) + ("all",)


def suite_supported_ns(suite: str) -> frozenset[int]:
    if suite == "all":
        out: set[int] = set()
        for supported, _ in _SUITES.values():
            out |= supported
        return frozenset(out)
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    return _SUITES[suite][0]


def run_verification(
    suite: str,
    n_range: tuple[int, int],
    seed: int = 0,
    *,
    trials: int | None = None,
    budget: int | None = None,
) -> VerificationReport:
    """Run one suite (or "all") over an inclusive n range.

    Individual suites reject n outside their supported set; "all" runs
    every suite on the part of the range it supports.  `trials`
    overrides the per-check draw counts (default: each check's own
    count); `budget` caps the symbolic expansion in nil certification.
    """
    n_lo, n_hi = n_range
    if n_lo > n_hi:
        raise ValueError(f"empty n range {n_lo}..{n_hi}")
    ns = list(range(n_lo, n_hi + 1))
    start = time.perf_counter()
    records: list[CheckRecord] = []
    if suite == "all":
        covered = suite_supported_ns("all")
        missing = [n for n in ns if n not in covered]
        if missing:
            raise ValueError(f"n={missing[0]} is not covered by any suite")
        for name in sorted(_SUITES):
            supported, runner = _SUITES[name]
            sub_ns = [n for n in ns if n in supported]
            if sub_ns:
                records.extend(runner(sub_ns, seed, trials, budget))
    else:
        if suite not in _SUITES:
            raise ValueError(
                f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}"
            )
        supported, runner = _SUITES[suite]
        unsupported = [n for n in ns if n not in supported]
        if unsupported:
            allowed = ", ".join(str(v) for v in sorted(supported))
            raise ValueError(
                f"suite {suite!r} does not support n={unsupported[0]} (supported: {allowed})"
            )
        records = runner(ns, seed, trials, budget)
    records.sort(key=lambda r: r.check_id)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        suite=suite,
        n_lo=n_lo,
        n_hi=n_hi,
        seed=seed,
        trials=trials,
        budget=budget,
        records=tuple(records),
        wall_time_s=elapsed,
    )
