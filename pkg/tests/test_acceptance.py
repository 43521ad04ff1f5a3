"""Acceptance gate: one test per criterion, at the stated sizes and
tolerances, each printing a PASS line when it completes.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they stream.
"""

import math

import numpy as np
import pytest

from normcontrol import (
    AlgebraKind,
    Family,
    FunctionOnG,
    Group,
    SampleSpec,
    Strategy,
    Theorem,
    UnitizedElement,
    bezout_solve,
    certified_bound_value,
    certify_campaign,
    extremal_search,
    forward,
    gap_report,
    hy_reduce_power,
    inverse,
    invert_ap_general,
    invert_ap_large_p_third,
    invert_ap_small_p,
    invert_lp_large_p,
    invert_lp_small_p,
    norm,
    norm_lp_dual,
    norm_lp_group,
    oracle_invert,
    sample_admissible,
    unit_one,
    unitized_involution,
    unitized_multiply,
)
from normcontrol.cli import main
from normcontrol.inversion import _norm_el, splitting_bound

GROUPS = [Group((8,)), Group((64,)), Group((256,)), Group((3, 4)), Group((2, 2, 5))]
Z8 = Group((8,))
AP2 = AlgebraKind.ap(2.0)


def _announce(num: int, text: str) -> None:
    print(f"criterion {num:02d} PASS: {text}")


def _rand_fn(g: Group, rng) -> FunctionOnG:
    return FunctionOnG(g, rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size))


def test_criterion_01_fourier_exactness():
    rng = np.random.default_rng(101)
    for g in GROUPS:
        for _ in range(200):
            f = _rand_fn(g, rng)
            back = inverse(forward(f))
            rel = float(np.max(np.abs(back.values - f.values))) / float(
                np.max(np.abs(f.values)))
            assert rel <= 1e-12
            assert abs(norm_lp_group(f, 2) - norm_lp_dual(forward(f), 2)) <= 1e-12
    _announce(1, "round-trip and Plancherel exact to 1e-12 on all five groups")


def test_criterion_02_hausdorff_young_suite():
    rng = np.random.default_rng(102)
    ps = (1.0, 1.25, 1.5, 2.0)
    for g in GROUPS:
        for _ in range(200):
            f = _rand_fn(g, rng)
            fhat = forward(f)
            for p in ps:
                p_conj = math.inf if p == 1.0 else p / (p - 1.0)
                assert norm_lp_dual(fhat, p_conj) - norm_lp_group(f, p) <= 1e-12
            b = forward(_rand_fn(g, rng))
            for r in ps:
                r_conj = math.inf if r == 1.0 else r / (r - 1.0)
                assert norm_lp_group(inverse(b), r_conj) - norm_lp_dual(b, r) <= 1e-12
    # power-reduction inequality ||g^{*m}||_2 <= ||g||_p^m, normalized inputs
    for g in GROUPS:
        for _ in range(100):
            for p in (1.25, 1.5):
                h = _rand_fn(g, rng)
                h = FunctionOnG(g, h.values / norm_lp_group(h, p))
                m, hm = hy_reduce_power(h, p)
                assert norm_lp_group(hm, 2.0) - norm_lp_group(h, p) ** m <= 1e-12
    _announce(2, "forward/inverse inequalities and the power reduction hold "
                 "with slack >= -1e-12")


def test_criterion_03_oracle_correctness():
    rng = np.random.default_rng(103)
    groups = [Z8, Group((3, 4)), Group((2, 2, 5))]
    kinds = [AP2, AlgebraKind.lp(2.0), AlgebraKind.ap(1.0)]
    for trial in range(1000):
        g = groups[trial % 3]
        kind = kinds[trial % 3]
        delta = 0.2 + 0.8 * rng.random()
        spec = SampleSpec(g, kind, delta, seed=103)
        x = sample_admissible(spec, trial=trial)
        ci = oracle_invert(x, kind)
        resid = norm(unitized_multiply(x, ci.inverse) - unit_one(g), kind)
        assert resid <= 1e-10
    _announce(3, "1000 oracle inverses with residual <= 1e-10")


def test_criterion_04_splitting_reproduction():
    expected = {0.6: 5.0, 0.75: 2.0, 0.9: 1.25}
    for delta, value in expected.items():
        spec = SampleSpec(Z8, AP2, delta, seed=104, strategy=Strategy.BOUNDARY_BIASED)
        report = certify_campaign(spec, Theorem.SPLITTING, trials=1000)
        assert report.violations == 0
        assert report.max_actual_norm <= 1.0 / (2 * delta - 1) + 1e-9
        assert report.certified_bound == splitting_bound(delta)
        assert report.certified_bound == pytest.approx(value, abs=1e-9)
    _announce(4, "splitting bound holds over 3000 boundary-biased samples; "
                 "certified values {5, 2, 1.25} match the formula")


def test_criterion_05_small_p_reproduction():
    for p in (1.0, 1.5, 2.0):
        kind = AlgebraKind.ap(p)
        for delta in (0.1, 0.25, 0.5, 0.9):
            cap = (1.0 - delta) / delta**2
            bound = certified_bound_value(Theorem.THM5, delta)
            spec = SampleSpec(Z8, kind, delta, seed=105,
                              strategy=Strategy.BOUNDARY_BIASED)
            for trial in range(1000):
                x = sample_admissible(spec, trial=trial)
                ci = invert_ap_small_p(x, p, delta=delta)
                assert ci.actual_norm <= bound + 1e-9
                assert ci.diagnostics.spectral_norm_g <= cap + 1e-10
    assert certified_bound_value(Theorem.THM5, 0.5) == pytest.approx(6.0)
    _announce(5, "zero bound violations for p in {1, 1.5, 2} x delta in "
                 "{0.1, 0.25, 0.5, 0.9} (1000 samples/cell); reciprocal "
                 "spectral norms below (1-delta)/delta^2")


def test_criterion_06_large_p_third_reproduction():
    for p in (2.5, 3.0, 4.0):
        kind = AlgebraKind.ap(p)
        for delta in (0.4, 0.5, 0.75):
            bound = certified_bound_value(Theorem.THM6, delta, p)
            spec = SampleSpec(Z8, kind, delta, seed=106,
                              strategy=Strategy.BOUNDARY_BIASED)
            for trial in range(500):
                x = sample_admissible(spec, trial=trial)
                ci = invert_ap_large_p_third(x, p, delta=delta)
                assert ci.actual_norm <= bound + 1e-9
                assert ci.diagnostics.sup_u <= (1 - delta) / 2 + 1e-10
                orc = oracle_invert(x, kind)
                assert _norm_el(ci.inverse - orc.inverse, Family.AP, p) <= 1e-9
    _announce(6, "odd-power certificate: oracle agreement within 1e-9, zero "
                 "violations, sup |f_hat| <= (1-delta)/2 per sample")


def test_criterion_07_symmetrization_reproduction():
    for p in (2.5, 3.0, 5.0):
        kind = AlgebraKind.ap(p)
        for delta in (0.05, 0.1, 0.2, 0.5):
            bound = certified_bound_value(Theorem.THM7, delta, p)
            spec = SampleSpec(Z8, kind, delta, seed=107,
                              strategy=Strategy.BOUNDARY_BIASED)
            for trial in range(500):
                x = sample_admissible(spec, trial=trial)
                ci = invert_ap_general(x, p, delta=delta)
                assert ci.actual_norm <= bound + 1e-9
                assert ci.diagnostics.khat_dev <= 1e-11
                if trial % 10 == 0:
                    n = ci.diagnostics.n
                    dn = ci.diagnostics.delta_n
                    xs = unitized_involution(x)
                    a = unitized_multiply(x, xs)
                    ahat = a.lam + forward(a.f).values
                    assert float(np.max(np.abs(ahat.imag))) <= 1e-12
                    assert float(np.min(ahat.real)) >= delta**2 - 1e-12
                    a_norm = abs(a.lam) + _norm_el(
                        UnitizedElement(0.0, a.f), Family.AP, p)
                    assert a_norm <= 1.0 + 1e-10
                    lam2 = abs(x.lam) ** 2
                    yhat = lam2**n + (ahat.real - lam2) ** n
                    assert float(np.min(np.abs(yhat))) >= dn - 1e-12
    _announce(7, "symmetrization certificate: zero violations down to "
                 "delta = 0.05; nonnegative transform, norm carry-over and "
                 "power-floor checks hold")


def test_criterion_08_lp_suite():
    from normcontrol import choose_odd_m_lp, choose_odd_n_lp

    assert choose_odd_m_lp(1.5) == 3
    assert choose_odd_m_lp(2.0) == 1
    assert choose_odd_n_lp(3.0) == 3
    assert choose_odd_n_lp(4.0) == 3
    deltas = (0.05, 0.1, 0.2, 0.5)
    for p in (1.2, 1.5, 2.0):
        kind = AlgebraKind.lp(p)
        for delta in deltas:
            bound = certified_bound_value(Theorem.LP1, delta, p)
            spec = SampleSpec(Z8, kind, delta, seed=108,
                              strategy=Strategy.BOUNDARY_BIASED)
            for trial in range(500):
                x = sample_admissible(spec, trial=trial)
                ci = invert_lp_small_p(x, p, delta=delta)
                assert ci.actual_norm <= bound + 1e-9
                orc = oracle_invert(x, kind)
                assert _norm_el(ci.inverse - orc.inverse, Family.LP, p) <= 1e-9
    for p in (2.5, 3.0, 4.0):
        kind = AlgebraKind.lp(p)
        for delta in deltas:
            bound = certified_bound_value(Theorem.LP2, delta, p)
            spec = SampleSpec(Z8, kind, delta, seed=109,
                              strategy=Strategy.BOUNDARY_BIASED)
            for trial in range(500):
                x = sample_admissible(spec, trial=trial)
                ci = invert_lp_large_p(x, p, delta=delta)
                assert ci.actual_norm <= bound + 1e-9
                assert ci.diagnostics.coeff_norm_b <= ci.diagnostics.coeff_norm_cap
                orc = oracle_invert(x, kind)
                assert _norm_el(ci.inverse - orc.inverse, Family.LP, p) <= 1e-9
    _announce(8, "LP certificates: selector values as stated, oracle "
                 "agreement within 1e-9, zero violations on both exponent "
                 "ranges")


def test_criterion_09_bezout_systems():
    rng = np.random.default_rng(110)
    kinds = [AP2, AlgebraKind.lp(2.0), AlgebraKind.ap(3.0), AlgebraKind.lp(3.0)]
    for sys_idx in range(200):
        kind = kinds[sys_idx % len(kinds)]
        k = int(rng.integers(2, 5))
        spec = SampleSpec(Z8, kind, 0.35, seed=110,
                          strategy=Strategy.SPECTRAL_REJECTION)
        xs = [sample_admissible(spec, trial=sys_idx * 8 + i).scale(1 / math.sqrt(k))
              for i in range(k)]
        sol = bezout_solve(xs, kind)
        assert sol.residual <= 1e-9
    _announce(9, "200 random 2-4 element systems solved with residual <= 1e-9")


def test_criterion_10_sandwich_consistency():
    cells = [
        (AlgebraKind.ap(1.5), 0.4, [Theorem.THM5]),
        (AlgebraKind.ap(3.0), 0.4, [Theorem.THM6, Theorem.THM7]),
        (AlgebraKind.ap(2.0), 0.7, [Theorem.SPLITTING, Theorem.THM5]),
        (AlgebraKind.lp(1.5), 0.4, [Theorem.LP1]),
        (AlgebraKind.lp(3.0), 0.4, [Theorem.LP2]),
        (AlgebraKind.lp(2.0), 0.7, [Theorem.SPLITTING, Theorem.LP1]),
    ]
    for kind, delta, theorems in cells:
        est = extremal_search(kind, delta, Z8, iterations=5000, seed=111)
        cap = min(certified_bound_value(t, delta, kind.p) for t in theorems)
        assert est.lower_bound <= cap + 1e-9
        rep = gap_report(est.witness, kind)
        assert rep.norm_x <= 1.0 + 1e-10
        assert rep.delta >= delta - 1e-10
    _announce(10, "extremal lower bounds stay below every applicable "
                  "certified bound after 5000 iterations")


def test_criterion_11_determinism(tmp_path):
    args = ["certify", "--theorem", "thm5", "--kind", "ap", "--p", "2",
            "--delta", "0.5", "--group", "8", "--trials", "200", "--seed", "7"]
    paths = [tmp_path / name for name in ("a.csv", "b.csv", "c.csv")]
    assert main(args + ["--out", str(paths[0])]) == 0
    assert main(args + ["--out", str(paths[1])]) == 0
    assert main(args + ["--jobs", "2", "--out", str(paths[2])]) == 0
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1], "repeat run must reproduce the CSV byte-for-byte"
    assert blobs[0] == blobs[2], "parallel run must reproduce the serial CSV"
    spec = SampleSpec(Z8, AP2, 0.5, seed=42, strategy=Strategy.BOUNDARY_BIASED)
    x1 = sample_admissible(spec)
    x2 = sample_admissible(spec)
    assert x1.lam == x2.lam and np.array_equal(x1.f.values, x2.f.values)
    _announce(11, "campaign CSV reproduces byte-for-byte across repeats and "
                  "serial vs parallel execution")
