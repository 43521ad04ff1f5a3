import numpy as np
import pytest

from normcontrol import (
    AlgebraKind,
    Family,
    Group,
    HypothesisViolated,
    SampleSpec,
    SamplingExhausted,
    Strategy,
    Theorem,
    certified_bound_value,
    certify_campaign,
    extremal_search,
    gap_report,
    sample_admissible,
    sweep,
)

Z8 = Group((8,))
AP2 = AlgebraKind.ap(2.0)


def test_spec_validates_delta():
    with pytest.raises(ValueError):
        SampleSpec(Z8, AP2, 1.5, seed=0)
    with pytest.raises(ValueError):
        SampleSpec(Z8, AP2, 0.0, seed=0)


def test_sampling_is_bit_reproducible():
    spec = SampleSpec(Z8, AP2, 0.5, seed=42, strategy=Strategy.BOUNDARY_BIASED)
    a = sample_admissible(spec)
    b = sample_admissible(spec)
    assert a.lam == b.lam
    assert np.array_equal(a.f.values, b.f.values)
    c = sample_admissible(spec, trial=1)
    assert not np.array_equal(a.f.values, c.f.values)


@pytest.mark.parametrize("strategy", list(Strategy), ids=lambda s: s.value)
@pytest.mark.parametrize("delta", [0.05, 0.3, 0.7, 0.95])
@pytest.mark.parametrize("kind", [AP2, AlgebraKind.ap(3.0), AlgebraKind.lp(1.5)],
                         ids=str)
def test_samples_are_admissible(strategy, delta, kind):
    spec = SampleSpec(Z8, kind, delta, seed=7, strategy=strategy)
    for trial in range(25):
        x = sample_admissible(spec, trial=trial)
        rep = gap_report(x, kind)
        assert rep.norm_x <= 1.0 + 1e-12
        assert rep.delta >= delta - 1e-12
        assert rep.lambda_abs >= delta - 1e-12


def test_delta_one_forces_scalar():
    spec = SampleSpec(Z8, AP2, 1.0, seed=3)
    x = sample_admissible(spec)
    assert abs(abs(x.lam) - 1.0) < 1e-12
    assert np.allclose(x.f.values, 0)


def test_sampling_budget_exhaustion():
    spec = SampleSpec(Z8, AP2, 0.5, seed=0)
    with pytest.raises(SamplingExhausted):
        sample_admissible(spec, max_rejections=0)


def test_campaign_zero_violations_and_bound():
    spec = SampleSpec(Z8, AP2, 0.5, seed=11, strategy=Strategy.BOUNDARY_BIASED)
    report = certify_campaign(spec, Theorem.THM5, trials=200, cross_check=True)
    assert report.violations == 0
    assert report.certified_bound == pytest.approx(6.0)
    assert report.max_actual_norm <= 6.0 + 1e-9
    assert report.min_slack >= -1e-9
    assert report.max_residual < 1e-9
    assert report.max_oracle_deviation < 1e-9
    assert report.breakdown["Thm5"]["violations"] == 0


def test_campaign_rejects_unrepresentable_config():
    spec = SampleSpec(Z8, AlgebraKind.ap(3.0), 0.3, seed=0)
    with pytest.raises(HypothesisViolated, match="delta > 1/3"):
        certify_campaign(spec, Theorem.THM6, trials=10)
    with pytest.raises(HypothesisViolated, match="AP family"):
        certify_campaign(SampleSpec(Z8, AlgebraKind.lp(2.0), 0.5, seed=0),
                         Theorem.THM5, trials=10)


def test_campaign_parallel_matches_serial():
    spec = SampleSpec(Z8, AP2, 0.6, seed=13, strategy=Strategy.BOUNDARY_BIASED)
    serial = certify_campaign(spec, Theorem.SPLITTING, trials=60, jobs=1)
    parallel = certify_campaign(spec, Theorem.SPLITTING, trials=60, jobs=2)
    assert serial == parallel


def test_extremal_search_properties():
    est = extremal_search(AP2, 0.6, Z8, iterations=400, seed=5)
    assert est.lower_bound > 0
    # best-so-far trace is monotone nondecreasing
    assert all(b >= a for a, b in zip(est.history, est.history[1:]))
    # witness is feasible
    rep = gap_report(est.witness, AP2)
    assert rep.norm_x <= 1.0 + 1e-10
    assert rep.delta >= 0.6 - 1e-10
    # lower bound cannot exceed any applicable certified bound
    cap = min(certified_bound_value(Theorem.SPLITTING, 0.6),
              certified_bound_value(Theorem.THM5, 0.6))
    assert est.lower_bound <= cap + 1e-9


def test_extremal_search_rejects_endpoint_delta():
    with pytest.raises(ValueError):
        extremal_search(AP2, 1.0, Z8, iterations=10, seed=0)


def test_sweep_rows_and_skips():
    cells = sweep(
        [Family.AP], deltas=["0.6", "0.3"], ps=["3"], groups=[Z8],
        trials=20, seed=1, theorems=[Theorem.THM6, Theorem.SPLITTING])
    by_key = {(c.theorem, c.delta_text): c for c in cells}
    assert by_key[(Theorem.THM6, "0.3")].status == "skipped"
    assert by_key[(Theorem.THM6, "0.3")].reason == "requires delta > 1/3"
    assert by_key[(Theorem.SPLITTING, "0.3")].status == "skipped"
    ok = by_key[(Theorem.THM6, "0.6")]
    assert ok.status == "ok"
    assert ok.report.violations == 0


def test_sweep_splitting_bounds_match_formula():
    cells = sweep([Family.AP], deltas=["0.6", "0.75"], ps=["2"], groups=[Z8],
                  trials=10, seed=2, theorems=[Theorem.SPLITTING])
    bounds = {c.delta_text: c.certified_bound for c in cells}
    assert bounds["0.6"] == pytest.approx(5.0)
    assert bounds["0.75"] == pytest.approx(2.0)
