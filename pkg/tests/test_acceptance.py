"""Acceptance gate: every structural claim at its full verification scale.

Each test runs one verification suite over its complete supported range
with a fixed seed and prints a single summary line.  Run with `pytest -v
-s tests/test_acceptance.py` to see one line per claim.
"""

from matalg.cli.suites import run_verification

SEED = 7


def _run(name, n_range, **kwargs):
    report = run_verification(name, n_range, seed=SEED, **kwargs)
    status = "PASS" if report.passed else "FAIL"
    lo, hi = n_range
    print(
        f"[{status}] {name} (n={lo}..{hi}): "
        f"{sum(1 for r in report.records if r.passed)}/{len(report.records)} checks"
    )
    failing = [r for r in report.records if not r.passed]
    detail = "; ".join(
        f"{r.check_id}: expected {r.expected}, observed {r.observed}" for r in failing
    )
    assert report.passed, f"{name} failed: {detail}"
    return report


def test_proper_subalgebra_dimension_extremality():
    # exhaustive pattern corpus at n = 2, 3; 200 random closures at n = 4, 5
    _run("max-subalgebra", (2, 5))


def test_block_type_dimension_formula():
    # all 2^(n-1) block types for every n up to 8
    _run("dimension-formula", (2, 8))


def test_split_dimension_bound_and_equality_recognition():
    report = _run("split-bound", (2, 4))
    # the equality cases must actually have been exercised
    for n in (2, 3):
        rec = next(
            r for r in report.records if r.check_id == f"split-bound/equality/n={n}"
        )
        checked = int(rec.observed.split("/")[1])
        assert checked > 0


def test_two_block_algebras_are_maximal():
    # 100 absorption probes per two-block type
    _run("maximality", (2, 4))


def test_optimal_block_type_is_thin_thick():
    _run("optimal-type", (2, 8))


def test_nil_subspace_dimension_bound():
    # exhaustive patterns at n = 3; 100 random above-bound subspaces and
    # 50 triangularization round trips per n
    _run("gerstenhaber", (3, 4))


def test_radical_block_decomposition_consistency():
    _run("wedderburn", (2, 4))


def test_minimal_coideal_dimension_and_duality():
    _run("min-coideal", (2, 4))


def test_commutative_subalgebra_dimension_bound():
    _run("schur", (2, 4))
