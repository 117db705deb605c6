"""Acceptance suite: every release-gating criterion at its stated scale.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail line per
criterion, or `parhom selfcheck` for the same checks from the CLI.
"""

import pytest

from parhom.selfcheck import (
    CHECKS,
    FULL_SIZES,
    QUICK_SIZES,
    run_check,
    run_selfcheck,
)

# stated runtime bounds (seconds) where the criteria pin them
TIME_LIMITS = {
    "fixpoint_congruence": 60.0,
    "gadget_coverage": 600.0,
    "reduction_congruence": 300.0,
}


@pytest.mark.parametrize("name", [name for name, _ in CHECKS])
def test_criterion(name):
    result = run_check(name, seed=0, sizes=FULL_SIZES)
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} {name} ({result.seconds:.2f}s): {result.details}")
    assert result.ok, f"{name}: {result.details}"
    if name in TIME_LIMITS:
        assert result.seconds < TIME_LIMITS[name], (
            f"{name} took {result.seconds:.1f}s, limit {TIME_LIMITS[name]}s"
        )


def test_seed_reproducibility():
    a = run_selfcheck(seed=11, sizes=QUICK_SIZES)
    b = run_selfcheck(seed=11, sizes=QUICK_SIZES)
    assert [(r.name, r.ok, r.details) for r in a] == [
        (r.name, r.ok, r.details) for r in b
    ]


def test_parallel_run_matches_serial():
    serial = run_selfcheck(seed=5, sizes=QUICK_SIZES, jobs=1)
    parallel = run_selfcheck(seed=5, sizes=QUICK_SIZES, jobs=2)
    assert [(r.name, r.ok, r.details) for r in serial] == [
        (r.name, r.ok, r.details) for r in parallel
    ]


def test_corrupted_verifier_surfaces_failure(monkeypatch):
    # a verifier that waves everything through must make the coverage check,
    # which cross-examines constructed gadgets, fail loudly when paired with a
    # finder that emits garbage; corrupt the finder and watch the check go red
    import parhom.selfcheck as sc
    from parhom.gadgets import HardnessGadget

    def bogus_finder(g):
        return HardnessGadget(beta=1, s=0, t=0, i=0, O=frozenset(), K=frozenset(), k={}, w={})

    monkeypatch.setattr(sc, "find_hardness_gadget", bogus_finder)
    result = run_check("gadget_coverage", seed=0, sizes=QUICK_SIZES)
    assert not result.ok
