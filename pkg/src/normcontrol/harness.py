"""Randomized certification harness.

Provides constrained generation of admissible elements (unit norm ball,
spectral gap at least delta, |lambda| >= delta), bound-certification
campaigns over (delta, p, group) grids, and a hill-climbing extremal search
that estimates the norm-controlled inversion constant from below.

Randomness is numpy PCG64; every trial derives its own stream from
SeedSequence((seed, trial)), so serial and parallel campaign runs aggregate
identical numbers in identical order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import AlgebraKind, Family, FunctionOnG, UnitizedElement
from .errors import HypothesisViolated, SamplingExhausted
from .fourier import _lp_counting, _lp_mean, forward_values, inverse_values
from .group import Group
from .inversion import (
    Theorem,
    _norm_el,
    applicability,
    certified_bound_value,
    invert_with,
    oracle_invert,
)

DEFAULT_REJECTION_BUDGET = 10_000
VIOLATION_TOL = 1e-9


class Strategy(Enum):
    SPECTRAL_REJECTION = "SpectralRejection"
    BOUNDARY_BIASED = "BoundaryBiased"


@dataclass(frozen=True)
class SampleSpec:
    """Deterministic description of one sampling distribution."""

    group: Group
    kind: AlgebraKind
    delta: float
    seed: int
    strategy: Strategy = Strategy.SPECTRAL_REJECTION

    def __post_init__(self):
        if not 0.0 < self.delta <= 1.0:
            raise ValueError(
                f"delta must lie in (0, 1] (gap <= norm <= 1 forces this), "
                f"got {self.delta}")


@dataclass(frozen=True)
class CertificationReport:
    spec: SampleSpec
    theorem: Theorem
    trials: int
    violations: int
    max_actual_norm: float
    min_slack: float
    certified_bound: float
    max_residual: float
    max_oracle_deviation: float | None
    breakdown: dict
    status: str = "ok"


@dataclass(frozen=True)
class ExtremalEstimate:
    delta: float
    kind: AlgebraKind
    lower_bound: float
    witness: UnitizedElement
    iterations: int
    history: tuple = field(default_factory=tuple, repr=False)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, trial))))


def _function_norm_arrays(fvals: np.ndarray, fhat: np.ndarray, kind: AlgebraKind) -> float:
    if kind.family is Family.AP:
        return _lp_mean(fvals, 1.0) + _lp_counting(fhat, kind.p)
    return _lp_mean(fvals, kind.p)


def sample_admissible(spec: SampleSpec, trial: int = 0,
                      max_rejections: int = DEFAULT_REJECTION_BUDGET) -> UnitizedElement:
    """Draw one admissible element; bit-reproducible given (spec, trial).

    Construction: draw |lambda| in [delta, 1] with a random phase, draw a
    spectral direction, scale the function part into the norm budget
    1 - |lambda|, and reject until the effective gap clears delta. The
    BoundaryBiased strategy uses the full norm budget, biases |lambda|
    toward delta, and radially projects small Gelfand values onto the
    delta circle so samples stress the bounds.
    """
    rng = _trial_rng(spec.seed, trial)
    return _draw(spec, rng, max_rejections)


def _draw(spec: SampleSpec, rng: np.random.Generator,
          max_rejections: int) -> UnitizedElement:
    group, kind, delta = spec.group, spec.kind, spec.delta
    n = group.size
    boundary = spec.strategy is Strategy.BOUNDARY_BIASED
    for _ in range(max_rejections):
        phase = rng.uniform(0.0, 2.0 * np.pi)
        u = rng.random()
        lam_mag = delta + (1.0 - delta) * (u * u if boundary else u)
        lam = lam_mag * complex(math.cos(phase), math.sin(phase))
        cap = 1.0 - lam_mag
        budget = cap if boundary else cap * rng.random()

        fhat = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        fvals = inverse_values(group, fhat)
        fn = _function_norm_arrays(fvals, fhat, kind)
        if budget <= 0.0 or fn == 0.0:
            fhat = np.zeros(n, dtype=np.complex128)
            fvals = np.zeros(n, dtype=np.complex128)
        else:
            scale = budget / fn
            fhat = scale * fhat
            fvals = scale * fvals

        accepted = False
        for _ in range(8):
            v = lam + fhat
            gap_ok = float(np.min(np.abs(v))) >= delta - 1e-13
            fn = _function_norm_arrays(fvals, fhat, kind)
            norm_ok = lam_mag + fn <= 1.0 + 1e-13
            if gap_ok and norm_ok:
                accepted = True
                break
            if not boundary:
                break  # plain rejection: no projection, just redraw
            if not gap_ok:
                mag = np.abs(v)
                bad = mag < delta
                dirs = np.where(mag[bad] > 0, v[bad] / np.where(mag[bad] > 0, mag[bad], 1.0), 1.0)
                fhat = fhat.copy()
                fhat[bad] = dirs * delta - lam
                fvals = inverse_values(group, fhat)
            elif fn > 0.0:
                scale = cap / fn
                fhat = scale * fhat
                fvals = scale * fvals
        if accepted:
            return UnitizedElement(lam, FunctionOnG(group, fvals))
    raise SamplingExhausted(
        f"no admissible sample for delta={delta:g} on {group} after "
        f"{max_rejections} attempts")


# ---------------------------------------------------------------------------
# certification campaigns


def _trial_worker(args) -> tuple:
    spec, theorem, trial, cross_check = args
    x = sample_admissible(spec, trial=trial)
    ci = invert_with(theorem, x, spec.kind, delta=spec.delta)
    dev = None
    if cross_check:
        orc = oracle_invert(x, spec.kind)
        dev = _norm_el(ci.inverse - orc.inverse, spec.kind.family, spec.kind.p)
    return ci.actual_norm, ci.certified_bound, ci.diagnostics.residual, dev


def certify_campaign(spec: SampleSpec, theorem: Theorem, trials: int,
                     jobs: int = 1, cross_check: bool = False) -> CertificationReport:
    """Sample, invert and tally bound slack over ``trials`` independent draws.

    Raises HypothesisViolated before any sampling when the theorem cannot
    represent the configuration (wrong family, exponent or delta range).
    A violation is a trial with actual_norm > certified_bound + 1e-9;
    zero are expected. ``cross_check`` also measures the distance of each
    pipeline inverse from the oracle inverse.
    """
    reason = applicability(theorem, spec.kind, spec.delta)
    if reason is not None:
        raise HypothesisViolated(
            f"{theorem.value} {reason} (kind={spec.kind}, delta={spec.delta:g})")

    tasks = [(spec, theorem, t, cross_check) for t in range(trials)]
    if jobs > 1:
        chunk = max(1, trials // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial_worker, tasks, chunksize=chunk))
    else:
        results = [_trial_worker(t) for t in tasks]

    violations = 0
    max_actual = 0.0
    min_slack = math.inf
    max_resid = 0.0
    max_dev = 0.0 if cross_check else None
    for actual, bound, resid, dev in results:
        if actual > bound + VIOLATION_TOL:
            violations += 1
        max_actual = max(max_actual, actual)
        min_slack = min(min_slack, bound - actual)
        max_resid = max(max_resid, resid)
        if cross_check:
            max_dev = max(max_dev, dev)
    cell_bound = certified_bound_value(theorem, spec.delta, spec.kind.p)
    breakdown = {
        theorem.value: {
            "trials": trials,
            "violations": violations,
            "max_actual_norm": max_actual,
            "min_slack": min_slack,
        }
    }
    return CertificationReport(
        spec=spec, theorem=theorem, trials=trials, violations=violations,
        max_actual_norm=max_actual, min_slack=min_slack,
        certified_bound=cell_bound, max_residual=max_resid,
        max_oracle_deviation=max_dev, breakdown=breakdown)


# ---------------------------------------------------------------------------
# extremal search


def _constrained_inverse_norm(lam: complex, fhat: np.ndarray, group: Group,
                              kind: AlgebraKind) -> float:
    ghat = -fhat / (lam * (lam + fhat))
    gvals = inverse_values(group, ghat)
    return abs(1.0 / lam) + _function_norm_arrays(gvals, ghat, kind)


def _project_state(lam: complex, fhat: np.ndarray, group: Group,
                   kind: AlgebraKind, delta: float):
    """Project (lambda, f_hat) onto the admissible set; None if it fails."""
    mag = abs(lam)
    if mag == 0.0:
        lam = complex(delta)
    elif mag < delta:
        lam *= delta / mag
    elif mag > 1.0:
        lam /= mag
    lam_mag = abs(lam)
    cap = 1.0 - lam_mag
    fvals = inverse_values(group, fhat)
    for _ in range(8):
        v = lam + fhat
        vmag = np.abs(v)
        gap_ok = float(vmag.min()) >= delta - 1e-13
        fn = _function_norm_arrays(fvals, fhat, kind)
        norm_ok = lam_mag + fn <= 1.0 + 1e-13
        if gap_ok and norm_ok:
            return lam, fhat, fvals
        if not gap_ok:
            bad = vmag < delta
            dirs = np.where(vmag[bad] > 0, v[bad] / np.where(vmag[bad] > 0, vmag[bad], 1.0), 1.0)
            fhat = fhat.copy()
            fhat[bad] = dirs * delta - lam
            fvals = inverse_values(group, fhat)
        elif fn > 0.0:
            scale = cap / fn
            fhat = scale * fhat
            fvals = scale * fvals
        else:
            return None
    return None


def extremal_search(kind: AlgebraKind, delta: float, group: Group,
                    iterations: int, seed: int, restarts: int = 8) -> ExtremalEstimate:
    """Hill-climb a lower bound for the inversion constant at level delta.

    Random perturbations of (lambda, f_hat) are projected back onto the
    admissible set (norm <= 1, gap >= delta, |lambda| >= delta) and accepted
    when the oracle inverse norm increases. Step size cools multiplicatively
    from 0.1 to 1e-4 over each restart's budget. No optimality is claimed;
    the result is a certified-feasible witness and its inverse norm.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"extremal search needs delta in (0, 1), got {delta}")
    best_val = -math.inf
    best_state = None
    history = []
    done = 0
    for restart in range(restarts):
        budget = iterations // restarts + (1 if restart < iterations % restarts else 0)
        if budget == 0:
            continue
        rng = _trial_rng(seed, restart)
        start_spec = SampleSpec(group, kind, delta, seed=0,
                                strategy=Strategy.BOUNDARY_BIASED)
        x0 = _draw(start_spec, rng, DEFAULT_REJECTION_BUDGET)
        lam = x0.lam
        fhat = forward_values(group, x0.f.values)
        cur = _constrained_inverse_norm(lam, fhat, group, kind)
        if cur > best_val:
            best_val = cur
            best_state = (lam, fhat)
        n = group.size
        for i in range(budget):
            frac = i / max(1, budget - 1)
            step = 0.1 * (1e-4 / 0.1) ** frac
            cand_lam = lam + step * complex(rng.standard_normal(), rng.standard_normal())
            cand_fhat = fhat + step * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
            projected = _project_state(cand_lam, cand_fhat, group, kind, delta)
            done += 1
            if projected is not None:
                p_lam, p_fhat, _ = projected
                val = _constrained_inverse_norm(p_lam, p_fhat, group, kind)
                if val > cur:
                    lam, fhat, cur = p_lam, p_fhat, val
                if val > best_val:
                    best_val = val
                    best_state = (p_lam, p_fhat)
            history.append(best_val)
    lam, fhat = best_state
    witness = UnitizedElement(lam, FunctionOnG(group, inverse_values(group, fhat)))
    return ExtremalEstimate(delta=delta, kind=kind, lower_bound=best_val,
                            witness=witness, iterations=done,
                            history=tuple(history))


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepCell:
    kind: AlgebraKind
    p_text: str
    delta_text: str
    group: Group
    theorem: Theorem
    status: str
    reason: str | None
    report: CertificationReport | None
    certified_bound: float | None


def _family_theorems(family: Family) -> list[Theorem]:
    if family is Family.AP:
        return [Theorem.SPLITTING, Theorem.THM5, Theorem.THM6, Theorem.THM7]
    return [Theorem.SPLITTING, Theorem.LP1, Theorem.LP2]


def _as_text_value(item) -> tuple[str, float]:
    if isinstance(item, str):
        return item, float(item)
    return repr(float(item)), float(item)


def sweep(families, deltas, ps, groups, trials: int, seed: int = 0,
          strategy: Strategy = Strategy.BOUNDARY_BIASED,
          theorems=None, jobs: int = 1) -> list[SweepCell]:
    """Cross-product certification campaign.

    One cell per (family, p, delta, group, theorem); cells whose hypotheses
    are unrepresentable come back with status "skipped" and the reason.
    delta/p entries may be given as strings, which are echoed verbatim in
    reports.
    """
    cells = []
    idx = 0
    for family in families:
        for p_item in ps:
            p_text, p_val = _as_text_value(p_item)
            kind = AlgebraKind(family, p_val)
            for d_item in deltas:
                d_text, d_val = _as_text_value(d_item)
                for group in groups:
                    for theorem in _family_theorems(family):
                        if theorems is not None and theorem not in theorems:
                            continue
                        reason = applicability(theorem, kind, d_val)
                        if reason is not None:
                            cells.append(SweepCell(
                                kind, p_text, d_text, group, theorem,
                                status="skipped", reason=reason, report=None,
                                certified_bound=None))
                            idx += 1
                            continue
                        cell_seed = int(np.random.SeedSequence((seed, idx)).generate_state(1)[0])
                        spec = SampleSpec(group, kind, d_val, cell_seed, strategy)
                        report = certify_campaign(spec, theorem, trials, jobs=jobs)
                        cells.append(SweepCell(
                            kind, p_text, d_text, group, theorem,
                            status="ok", reason=None, report=report,
                            certified_bound=report.certified_bound))
                        idx += 1
    return cells
