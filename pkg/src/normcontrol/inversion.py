"""Certified inversion procedures in the unitized convolution algebras.

Every public pipeline checks its hypotheses (unit norm ball, spectral gap,
exponent range), computes the inverse constructively, evaluates the
certified norm bound as stated by the corresponding theorem, and returns a
CertifiedInverse carrying the inverse, the bound, the measured norm, and
diagnostics (selector values, intermediate inequalities, residual).

Available certificates, keyed by the theorem tags used on the wire:

  Splitting  gap > 1/2, any family:    ||x^-1|| <= 1/(2d - 1)
  Thm5       AP, p <= 2, any gap d:    ||x^-1|| <= 1/d + 2(1-d)/d^2
  Thm6       AP, p > 2, d > 1/3:       d^-n + 2(1-d)^n / (d^2n * eta_n)
  Thm7       AP, p > 2, any gap d:     1/d^2n + 2(1-D_n)/D_n^2
  ThmLp1     LP, 1 < p <= 2:           1/d^2m + 2(1-D_m)/D_m^2
  ThmLp2     LP, p > 2:                d^-2n + d^-4n / c_n
  Oracle     exact spectral reciprocal, bound = measured norm

with r = (1-d)/(2d), eta_n = 1 - r^n, D_n = d^2n (1 - (1-d^2)^n) and
c_n = 1 - (1-d^2)^n. The gap d is the effective one: the infimum of the
Gelfand modulus over the dual group *and* the point at infinity, i.e.
min(inf |x_hat|, |lambda|); on a finite group |lambda| >= d does not follow
from the dual-side infimum, so it is part of the hypothesis.

Numerical note: the symmetrization pipelines (Thm7, ThmLp1, ThmLp2) build
their auxiliary elements k, k^{*n}, y_n, Q_n in the time domain for every
norm check, but evaluate the composition Q_n * y_n^-1 * x* through
pointwise Gelfand products with k_hat taken as |x_hat|^2 - |lambda|^2.
Re-transforming materialized convolution powers loses absolute accuracy
~eps/d^4 near the gap floor, which at d = 0.05 would exceed the 1e-9
agreement tolerances; the pointwise route keeps errors relative. The two
routes are tied together by an explicit consistency check on k_hat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import (
    AlgebraKind,
    Family,
    FunctionOnG,
    UnitizedElement,
    conv_power,
    unit_one,
    unitized_involution,
    unitized_multiply,
)
from .algebra import convolve as _convolve
from .errors import ConsistencyError, HypothesisViolated, NotInvertible
from .fourier import _lp_counting, _lp_mean, forward_values, inverse_values

ZERO_TOL = 1e-13          # Gelfand modulus below this counts as zero
NORM_TOL = 1e-12          # slack on the unit-ball hypothesis
GAP_TOL = 1e-12           # slack on the gap hypothesis
IMPLIED_TOL = 1e-10       # slack on inequalities implied by the hypotheses
KHAT_TOL = 1e-11          # agreement between materialized and pointwise k_hat
SERIES_TOL = 1e-12        # a-priori tail bound cutoff for the splitting series


class Theorem(Enum):
    SPLITTING = "Splitting"
    THM5 = "Thm5"
    THM6 = "Thm6"
    THM7 = "Thm7"
    LP1 = "ThmLp1"
    LP2 = "ThmLp2"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class Diagnostics:
    """Per-inversion bookkeeping; fields are None when not applicable."""

    n: int | None = None                    # chosen odd power n (or m)
    delta_n: float | None = None            # D_n = d^2n (1 - (1-d^2)^n)
    eta_n: float | None = None              # 1 - r^n
    c_n: float | None = None                # 1 - (1-d^2)^n
    residual: float | None = None           # ||x * inverse - 1|| in the algebra norm
    series_terms: int | None = None         # terms kept by the splitting series
    oracle_deviation: float | None = None   # distance to the oracle inverse
    spectral_norm_g: float | None = None    # measured ell^p norm of the reciprocal part
    spectral_norm_cap: float | None = None  # its certified cap (1-d)/d^2
    sup_u: float | None = None              # ||f_hat||_inf (odd-power route)
    sup_u_cap: float | None = None          # its cap (1-d)/2
    coeff_norm_b: float | None = None       # ||b||_{ell^p'} (large-p coefficient route)
    coeff_norm_cap: float | None = None     # its cap d^-4n / c_n
    khat_dev: float | None = None           # materialized vs pointwise k_hat


@dataclass(frozen=True)
class CertifiedInverse:
    inverse: UnitizedElement
    certified_bound: float
    actual_norm: float
    theorem: Theorem
    diagnostics: Diagnostics = field(default_factory=Diagnostics)


@dataclass(frozen=True)
class GapReport:
    """Effective spectral gap of an element: min(inf |x_hat|, |lambda|)."""

    delta: float
    lambda_abs: float
    norm_x: float


# ---------------------------------------------------------------------------
# norms and gap measurement


def _norm_parts(lam: complex, fvals: np.ndarray, family: Family, p: float,
                fhat: np.ndarray | None = None, group=None) -> float:
    # Internal norm evaluator accepting any exponent p > 0 (the odd-power
    # reduction tracks ell^q quantities with q < 1 at finite size).
    if family is Family.AP:
        if fhat is None:
            fhat = forward_values(group, fvals)
        return abs(lam) + _lp_mean(fvals, 1.0) + _lp_counting(fhat, p)
    return abs(lam) + _lp_mean(fvals, p)


def _norm_el(x: UnitizedElement, family: Family, p: float) -> float:
    return _norm_parts(x.lam, x.f.values, family, p, group=x.group)


def _residual(x: UnitizedElement, inv: UnitizedElement, family: Family, p: float) -> float:
    r = unitized_multiply(x, inv) - unit_one(x.group)
    return _norm_parts(r.lam, r.f.values, family, p, group=x.group)


def gap_report(x: UnitizedElement, kind: AlgebraKind) -> GapReport:
    xhat = x.lam + forward_values(x.group, x.f.values)
    gap = min(float(np.min(np.abs(xhat))), abs(x.lam))
    return GapReport(delta=gap, lambda_abs=abs(x.lam),
                     norm_x=_norm_el(x, kind.family, kind.p))


def _effective_gap(lam: complex, xhat: np.ndarray) -> float:
    return min(float(np.min(np.abs(xhat))), abs(lam))


def _require_gap(name: str, measured: float, delta: float | None,
                 gap_tol: float, zero_tol: float) -> float:
    if measured <= zero_tol:
        raise NotInvertible(
            f"{name}: a Gelfand value has modulus {measured:.3e} (treated as zero)")
    if delta is None:
        return measured
    if measured < delta - gap_tol:
        raise HypothesisViolated(
            f"{name} requires effective gap >= delta "
            f"(gap {measured:.12g} < delta {delta:.12g})")
    return float(delta)


def _require_unit_norm(name: str, nx: float, norm_tol: float) -> None:
    if nx > 1.0 + norm_tol:
        raise HypothesisViolated(
            f"{name} requires norm(x) <= 1 (got {nx:.12g})")


# ---------------------------------------------------------------------------
# selectors and bound formulas


def choose_odd_n_ap(p: float) -> int:
    """Smallest odd n with p/n <= 2."""
    n = 1
    while p / n > 2.0 + 1e-9:
        n += 2
    return n


def choose_odd_m_lp(p: float) -> int:
    """Smallest odd m with m >= ceil(p'/2), p' = p/(p-1); m = 1 at p = 2."""
    p_conj = p / (p - 1.0)
    # nudge before ceil: p/(p-1) in floats can overshoot the exact value
    m_req = math.ceil(p_conj / 2.0 - 1e-9)
    m = max(1, m_req)
    return m if m % 2 == 1 else m + 1


def choose_odd_n_lp(p: float) -> int:
    """Smallest odd n with n >= p - 1."""
    n = 1
    while n < p - 1.0 - 1e-9:
        n += 2
    return n


def splitting_bound(delta: float) -> float:
    return 1.0 / (2.0 * delta - 1.0)


def small_p_bound(delta: float) -> float:
    return 1.0 / delta + 2.0 * (1.0 - delta) / delta**2


def large_p_third_bound(delta: float, n: int) -> float:
    r = (1.0 - delta) / (2.0 * delta)
    eta = 1.0 - r**n
    return delta ** (-n) + 2.0 * (1.0 - delta) ** n / (delta ** (2 * n) * eta)


def symmetrized_bound(delta: float, n: int) -> float:
    dn = delta ** (2 * n) * (1.0 - (1.0 - delta**2) ** n)
    return 1.0 / delta ** (2 * n) + 2.0 * (1.0 - dn) / dn**2


def lp_large_bound(delta: float, n: int) -> float:
    cn = 1.0 - (1.0 - delta**2) ** n
    return delta ** (-2 * n) + delta ** (-4 * n) / cn


def certified_bound_value(theorem: Theorem, delta: float, p: float | None = None) -> float:
    """Evaluate a theorem's bound formula at hypothesis level delta."""
    if theorem is Theorem.SPLITTING:
        return splitting_bound(delta)
    if theorem is Theorem.THM5:
        return small_p_bound(delta)
    if theorem is Theorem.THM6:
        return large_p_third_bound(delta, choose_odd_n_ap(p))
    if theorem is Theorem.THM7:
        return symmetrized_bound(delta, choose_odd_n_ap(p))
    if theorem is Theorem.LP1:
        return symmetrized_bound(delta, choose_odd_m_lp(p))
    if theorem is Theorem.LP2:
        return lp_large_bound(delta, choose_odd_n_lp(p))
    raise ValueError(f"{theorem} has no a-priori bound formula")


def applicability(theorem: Theorem, kind: AlgebraKind, delta: float) -> str | None:
    """Reason this theorem cannot run for (kind, delta), or None if it can."""
    if not 0.0 < delta <= 1.0:
        return "requires delta in (0, 1]"
    if theorem is Theorem.SPLITTING:
        return None if delta > 0.5 else "requires delta > 1/2"
    if theorem in (Theorem.THM5, Theorem.THM6, Theorem.THM7):
        if kind.family is not Family.AP:
            return "requires the AP family"
        if theorem is Theorem.THM5:
            return None if kind.p <= 2.0 else "requires p in [1, 2]"
        if kind.p <= 2.0:
            return "requires p > 2"
        if theorem is Theorem.THM6 and delta <= 1.0 / 3.0:
            return "requires delta > 1/3"
        return None
    if theorem in (Theorem.LP1, Theorem.LP2):
        if kind.family is not Family.LP:
            return "requires the LP family"
        if theorem is Theorem.LP1:
            return None if 1.0 < kind.p <= 2.0 else "requires p in (1, 2]"
        return None if kind.p > 2.0 else "requires p > 2"
    return None  # Oracle


# ---------------------------------------------------------------------------
# the exact spectral oracle


def oracle_invert(x: UnitizedElement, kind: AlgebraKind | None = None,
                  *, zero_tol: float = ZERO_TOL) -> CertifiedInverse:
    """Exact inverse from the spectral reciprocal.

    (lam, f)^-1 = (1/lam, g) with g_hat = -f_hat / (lam (lam + f_hat)).
    The certified bound is simply the measured norm (tag Oracle). ``kind``
    selects the reporting norm; defaults to AP with p = 2.
    """
    if kind is None:
        kind = AlgebraKind.ap(2.0)
    lam = x.lam
    if abs(lam) <= zero_tol:
        raise NotInvertible(
            f"scalar part has modulus {abs(lam):.3e} (phi_inf value is zero)",
            where="phi_inf", value=lam)
    fhat = forward_values(x.group, x.f.values)
    xhat = lam + fhat
    worst = int(np.argmin(np.abs(xhat)))
    if abs(xhat[worst]) <= zero_tol:
        raise NotInvertible(
            f"Gelfand value at character {x.group.character_at(worst).coords} "
            f"has modulus {abs(xhat[worst]):.3e}",
            where=x.group.character_at(worst).coords, value=complex(xhat[worst]))
    ghat = -fhat / (lam * xhat)
    inv = UnitizedElement(1.0 / lam, FunctionOnG(x.group, inverse_values(x.group, ghat)))
    actual = _norm_el(inv, kind.family, kind.p)
    resid = _residual(x, inv, kind.family, kind.p)
    return CertifiedInverse(inv, certified_bound=actual, actual_norm=actual,
                            theorem=Theorem.ORACLE, diagnostics=Diagnostics(residual=resid))


# ---------------------------------------------------------------------------
# splitting (Neumann series) certificate, gap > 1/2


def invert_splitting(x: UnitizedElement, kind: AlgebraKind,
                     delta: float | None = None, *,
                     norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                     series_tol: float = SERIES_TOL) -> CertifiedInverse:
    """Neumann-series inverse with bound 1/(2 delta - 1), valid for gap > 1/2.

    x^-1 = sum_k (-1)^k f^{*k} / lambda^{k+1}, truncated once the a-priori
    geometric tail (||f||/|lambda|)^{k+1} / (|lambda| - ||f||) drops below
    ``series_tol``; the result is residual-checked against the oracle.
    """
    lam = x.lam
    fnorm = _norm_parts(0.0, x.f.values, kind.family, kind.p, group=x.group)
    nx = abs(lam) + fnorm
    _require_unit_norm("Splitting", nx, norm_tol)
    xhat = lam + forward_values(x.group, x.f.values)
    d = _require_gap("Splitting", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)
    if d <= 0.5:
        raise HypothesisViolated(f"Splitting requires delta > 1/2 (got delta={d:.6g})")
    alam = abs(lam)
    if alam <= fnorm:
        raise HypothesisViolated(
            f"Splitting requires |lambda| > ||f|| (got {alam:.6g} <= {fnorm:.6g})")

    gvals = np.zeros(x.group.size, dtype=np.complex128)
    terms = 0
    if fnorm > 0.0:
        ratio = fnorm / alam
        power = x.f
        k = 1
        coef = 1.0 / lam
        while True:
            coef *= -1.0 / lam
            gvals = gvals + coef * power.values
            terms = k
            if ratio ** (k + 1) / (alam - fnorm) < series_tol or k > 10_000:
                break
            power = _convolve(power, x.f)
            k += 1
    inv = UnitizedElement(1.0 / lam, FunctionOnG(x.group, gvals))

    orc = oracle_invert(x, kind)
    dev = _norm_el(inv - orc.inverse, kind.family, kind.p)
    actual = _norm_el(inv, kind.family, kind.p)
    resid = _residual(x, inv, kind.family, kind.p)
    return CertifiedInverse(
        inv, certified_bound=splitting_bound(d), actual_norm=actual,
        theorem=Theorem.SPLITTING,
        diagnostics=Diagnostics(residual=resid, series_terms=terms, oracle_deviation=dev))


# ---------------------------------------------------------------------------
# AP family, p <= 2


def invert_ap_small_p(x: UnitizedElement, p: float,
                      delta: float | None = None, *,
                      norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                      implied_tol: float = IMPLIED_TOL) -> CertifiedInverse:
    """AP-family inverse for p <= 2 with bound 1/d + 2(1-d)/d^2.

    The public contract is p in [1, 2]; exponents in (0, 1) are accepted
    because the odd-power reduction calls this at q = p/n, which drops
    below 1 for p in (2, 3) (the ell^q quantity is still the correct
    bookkeeping at finite size and the bound survives via ell^q inside
    ell^1).
    """
    if p > 2.0:
        raise HypothesisViolated(f"Thm5 requires p in [1, 2] (got p={p:g})")
    if not p > 0.0:
        raise ValueError(f"p must be positive, got {p}")
    lam = x.lam
    fhat = forward_values(x.group, x.f.values)
    nx = _norm_parts(lam, x.f.values, Family.AP, p, fhat=fhat)
    _require_unit_norm("Thm5", nx, norm_tol)
    xhat = lam + fhat
    d = _require_gap("Thm5", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)

    ghat = -fhat / (lam * xhat)
    inv = UnitizedElement(1.0 / lam, FunctionOnG(x.group, inverse_values(x.group, ghat)))

    gnorm = _lp_counting(ghat, p)
    cap = (1.0 - d) / d**2
    if gnorm > cap + implied_tol:
        raise ConsistencyError(
            f"reciprocal spectral norm {gnorm:.12g} exceeds its certified cap "
            f"{cap:.12g} (delta={d:g}, p={p:g})")

    actual = _norm_el(inv, Family.AP, p)
    resid = _residual(x, inv, Family.AP, p)
    return CertifiedInverse(
        inv, certified_bound=small_p_bound(d), actual_norm=actual,
        theorem=Theorem.THM5,
        diagnostics=Diagnostics(residual=resid, spectral_norm_g=gnorm,
                                spectral_norm_cap=cap))


# ---------------------------------------------------------------------------
# AP family, p > 2, gap > 1/3: odd-power reduction without involution


def invert_ap_large_p_third(x: UnitizedElement, p: float,
                            delta: float | None = None, *,
                            norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                            implied_tol: float = IMPLIED_TOL) -> CertifiedInverse:
    """AP-family inverse for p > 2 requiring gap > 1/3.

    Raises x to the smallest odd power n with p/n <= 2, inverts
    y_n = (lambda^n, f^{*n}) by the p <= 2 certificate at gap d^n eta_n,
    and recovers x^-1 = Q_n(f) * y_n^-1 with
    Q_n(f) = sum_{k<n} (-1)^k lambda^{n-1-k} f^{*k}.
    """
    if p <= 2.0:
        raise HypothesisViolated(f"Thm6 requires p > 2 (got p={p:g})")
    lam = x.lam
    fhat = forward_values(x.group, x.f.values)
    nx = _norm_parts(lam, x.f.values, Family.AP, p, fhat=fhat)
    _require_unit_norm("Thm6", nx, norm_tol)
    xhat = lam + fhat
    d = _require_gap("Thm6", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)
    if d <= 1.0 / 3.0:
        raise HypothesisViolated(f"Thm6 requires delta > 1/3 (got delta={d:.6g})")

    n = choose_odd_n_ap(p)
    q = p / n
    r = (1.0 - d) / (2.0 * d)
    eta = 1.0 - r**n

    sup_u = float(np.max(np.abs(fhat)))
    cap_u = (1.0 - d) / 2.0
    if sup_u > cap_u + implied_tol:
        raise HypothesisViolated(
            f"Thm6 requires ||f_hat||_inf <= (1-delta)/2 "
            f"(got {sup_u:.12g} > {cap_u:.12g}; implied by the norm and gap "
            f"hypotheses)")

    powers = _power_list(x.f, n)
    y = UnitizedElement(lam**n, powers[n])
    sub = invert_ap_small_p(y, q, delta=d**n * eta, norm_tol=1e-9, gap_tol=1e-9)

    q_el = _q_polynomial(lam, powers, n)
    inv = unitized_multiply(q_el, sub.inverse)

    actual = _norm_el(inv, Family.AP, p)
    resid = _residual(x, inv, Family.AP, p)
    return CertifiedInverse(
        inv, certified_bound=large_p_third_bound(d, n), actual_norm=actual,
        theorem=Theorem.THM6,
        diagnostics=Diagnostics(n=n, eta_n=eta, residual=resid,
                                sup_u=sup_u, sup_u_cap=cap_u))


def _power_list(f: FunctionOnG, n: int) -> list[FunctionOnG]:
    """[f^{*0}, f^{*1}, ..., f^{*n}] by repeated convolution."""
    powers = [conv_power(f, 0), f]
    for _ in range(n - 1):
        powers.append(_convolve(powers[-1], f))
    return powers


def _q_polynomial(lam: complex, powers: list[FunctionOnG], n: int) -> UnitizedElement:
    """Q_n = sum_{k=0}^{n-1} (-1)^k lam^{n-1-k} f^{*k} as a unitized element.

    Satisfies (lam 1 + f) * Q_n = lam^n 1 + f^{*n} for odd n.
    """
    group = powers[1].group
    gvals = np.zeros(group.size, dtype=np.complex128)
    for k in range(1, n):
        gvals = gvals + (-1) ** k * lam ** (n - 1 - k) * powers[k].values
    return UnitizedElement(lam ** (n - 1), FunctionOnG(group, gvals))


# ---------------------------------------------------------------------------
# symmetrization core shared by Thm7 / ThmLp1 / ThmLp2


@dataclass(frozen=True)
class _Symmetrized:
    x_star: UnitizedElement
    k: FunctionOnG          # a = x x* = (|lam|^2, k), materialized
    abs_lam2: float
    khat: np.ndarray        # pointwise |x_hat|^2 - |lam|^2, exactly real
    khat_dev: float         # agreement of forward(k) with the pointwise form
    xhat: np.ndarray
    a_norm: float           # |lam|^2 + ||k|| in the calling family/exponent


def _symmetrize(x: UnitizedElement, family: Family, p: float,
                xhat: np.ndarray, name: str, implied_tol: float) -> _Symmetrized:
    x_star = unitized_involution(x)
    a_el = unitized_multiply(x, x_star)
    abs_lam2 = a_el.lam.real  # lam * conj(lam) has exactly zero imaginary part
    k = a_el.f

    a_norm = abs_lam2 + _norm_parts(0.0, k.values, family, p, group=x.group)
    if a_norm > 1.0 + implied_tol:
        raise HypothesisViolated(
            f"{name} requires |lambda|^2 + ||k|| <= 1 (got {a_norm:.12g}; "
            f"implied by norm(x) <= 1)")

    khat = np.abs(xhat) ** 2 - abs_lam2
    khat_mat = forward_values(x.group, k.values)
    dev = float(np.max(np.abs(khat_mat - khat)))
    if dev > KHAT_TOL:
        raise ConsistencyError(
            f"{name}: materialized k_hat deviates from |x_hat|^2 - |lambda|^2 "
            f"by {dev:.3e}")
    return _Symmetrized(x_star, k, abs_lam2, khat, dev, xhat, a_norm)


def _recover_from_symmetrized(x: UnitizedElement, sym: _Symmetrized,
                              yhat: np.ndarray, n: int) -> UnitizedElement:
    """x^-1 = x* * Q_n(k) * y_n^-1 evaluated through pointwise Gelfand data."""
    abs_lam2 = sym.abs_lam2
    qhat = np.zeros_like(yhat)
    for j in range(n):
        qhat = qhat + (-1) ** j * abs_lam2 ** (n - 1 - j) * sym.khat**j
    a_inv_hat = qhat / yhat                       # = 1 / a_hat pointwise
    a_inv_lam = abs_lam2 ** (n - 1) / abs_lam2**n  # = 1 / |lambda|^2
    inv_gelf = np.conj(sym.xhat) * a_inv_hat
    inv_lam = np.conj(x.lam) * a_inv_lam
    inv_fhat = inv_gelf - inv_lam
    return UnitizedElement(inv_lam, FunctionOnG(x.group, inverse_values(x.group, inv_fhat)))


# ---------------------------------------------------------------------------
# AP family, p > 2, arbitrary gap: symmetrization


def invert_ap_general(x: UnitizedElement, p: float,
                      delta: float | None = None, *,
                      norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                      implied_tol: float = IMPLIED_TOL) -> CertifiedInverse:
    """AP-family inverse for p > 2 and any gap d > 0.

    Symmetrizes a = x x* (nonnegative transform >= d^2), raises to the
    smallest odd n with p/n <= 2, inverts y_n = (|lambda|^2n, k^{*n}) by the
    p <= 2 certificate at gap D_n = d^2n (1 - (1-d^2)^n), and recovers
    x^-1 = x* * Q_n(k) * y_n^-1. Bound: 1/d^2n + 2(1-D_n)/D_n^2.
    """
    if p <= 2.0:
        raise HypothesisViolated(f"Thm7 requires p > 2 (got p={p:g})")
    lam = x.lam
    fhat = forward_values(x.group, x.f.values)
    nx = _norm_parts(lam, x.f.values, Family.AP, p, fhat=fhat)
    _require_unit_norm("Thm7", nx, norm_tol)
    xhat = lam + fhat
    d = _require_gap("Thm7", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)

    sym = _symmetrize(x, Family.AP, p, xhat, "Thm7", implied_tol)
    n = choose_odd_n_ap(p)
    q = p / n
    dn = d ** (2 * n) * (1.0 - (1.0 - d**2) ** n)

    yhat = sym.abs_lam2**n + sym.khat**n
    ymin = float(np.min(np.abs(yhat)))
    if ymin < dn - 1e-12:
        raise ConsistencyError(
            f"Thm7: inf |y_hat| = {ymin:.12g} fell below Delta_n = {dn:.12g}; "
            f"k_hat is real so this indicates a bug")

    # materialized y_n for the norm-hypothesis check at exponent q
    k_pow_n = conv_power(sym.k, n)
    ny = _norm_parts(sym.abs_lam2**n, k_pow_n.values, Family.AP, q, group=x.group)
    if ny > 1.0 + implied_tol:
        raise ConsistencyError(
            f"Thm7: ||y_n|| = {ny:.12g} exceeds 1 despite ||a|| <= 1")

    bhat = -(sym.khat**n) / (sym.abs_lam2**n * yhat)
    bq = _lp_counting(bhat, q)
    cap = (1.0 - dn) / dn**2
    if bq > cap + implied_tol * max(1.0, cap):
        raise ConsistencyError(
            f"Thm7: reciprocal spectral norm {bq:.12g} exceeds cap {cap:.12g}")

    inv = _recover_from_symmetrized(x, sym, yhat, n)
    actual = _norm_el(inv, Family.AP, p)
    resid = _residual(x, inv, Family.AP, p)
    return CertifiedInverse(
        inv, certified_bound=symmetrized_bound(d, n), actual_norm=actual,
        theorem=Theorem.THM7,
        diagnostics=Diagnostics(n=n, delta_n=dn, residual=resid,
                                spectral_norm_g=bq, spectral_norm_cap=cap,
                                khat_dev=sym.khat_dev))


# ---------------------------------------------------------------------------
# LP family


def hy_reduce_power(g: FunctionOnG, p: float) -> tuple[int, FunctionOnG]:
    """Power reduction into L^2: m = ceil(p'/2) gives ||g^{*m}||_2 <= ||g||_p^m.

    Valid for 1 < p < 2 (p' = p/(p-1)).
    """
    if not 1.0 < p < 2.0:
        raise ValueError(f"power reduction requires p in (1, 2), got {p}")
    p_conj = p / (p - 1.0)
    m = math.ceil(p_conj / 2.0 - 1e-9)
    gm = conv_power(g, m)
    lhs = _lp_mean(gm.values, 2.0)
    rhs = _lp_mean(g.values, p) ** m
    if lhs > rhs + 1e-10:
        raise ConsistencyError(
            f"power reduction inequality failed: ||g^*{m}||_2 = {lhs:.12g} > "
            f"||g||_p^{m} = {rhs:.12g}")
    return m, gm


def invert_lp_small_p(x: UnitizedElement, p: float,
                      delta: float | None = None, *,
                      norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                      implied_tol: float = IMPLIED_TOL) -> CertifiedInverse:
    """LP-family inverse for 1 < p <= 2.

    Symmetrizes, raises to the smallest odd m >= ceil(p'/2) so that k^{*m}
    lands in L^2 (m = 1 at p = 2), inverts y_m there (Plancherel case), and
    recovers x^-1. Bound: 1/d^2m + 2(1-D_m)/D_m^2.
    """
    if not 1.0 < p <= 2.0:
        raise HypothesisViolated(f"ThmLp1 requires p in (1, 2] (got p={p:g})")
    lam = x.lam
    nx = _norm_parts(lam, x.f.values, Family.LP, p)
    _require_unit_norm("ThmLp1", nx, norm_tol)
    xhat = lam + forward_values(x.group, x.f.values)
    d = _require_gap("ThmLp1", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)

    sym = _symmetrize(x, Family.LP, p, xhat, "ThmLp1", implied_tol)
    m = choose_odd_m_lp(p)
    dm = d ** (2 * m) * (1.0 - (1.0 - d**2) ** m)

    # L^2 reduction inequality for the materialized power
    k_pow_m = conv_power(sym.k, m)
    l2 = _lp_mean(k_pow_m.values, 2.0)
    lp_pow = _lp_mean(sym.k.values, p) ** m
    if l2 > lp_pow + implied_tol:
        raise ConsistencyError(
            f"ThmLp1: ||k^*{m}||_2 = {l2:.12g} exceeds ||k||_p^{m} = {lp_pow:.12g}")
    ny2 = sym.abs_lam2**m + l2
    if ny2 > 1.0 + implied_tol:
        raise ConsistencyError(
            f"ThmLp1: ||y_m|| in the L^2 unitization is {ny2:.12g} > 1")

    yhat = sym.abs_lam2**m + sym.khat**m
    ymin = float(np.min(np.abs(yhat)))
    if ymin < dm - 1e-12:
        raise ConsistencyError(
            f"ThmLp1: inf |y_hat| = {ymin:.12g} fell below Delta_m = {dm:.12g}")

    inv = _recover_from_symmetrized(x, sym, yhat, m)
    actual = _norm_el(inv, Family.LP, p)
    resid = _residual(x, inv, Family.LP, p)
    return CertifiedInverse(
        inv, certified_bound=symmetrized_bound(d, m), actual_norm=actual,
        theorem=Theorem.LP1,
        diagnostics=Diagnostics(n=m, delta_n=dm, residual=resid,
                                khat_dev=sym.khat_dev))


def invert_lp_large_p(x: UnitizedElement, p: float,
                      delta: float | None = None, *,
                      norm_tol: float = NORM_TOL, gap_tol: float = GAP_TOL,
                      implied_tol: float = IMPLIED_TOL) -> CertifiedInverse:
    """LP-family inverse for p > 2.

    Symmetrizes, takes the smallest odd n >= p - 1, and inverts y_n through
    its Fourier coefficients: with t = (k_hat/|lambda|^2)^n bounded below by
    |1 + t| >= c_n = 1 - (1-d^2)^n, the coefficients
    b = -|lambda|^{-2n} t/(1+t) satisfy ||b||_{p'} <= d^{-4n}/c_n and the
    inverse Fourier series lands in L^p. Bound: d^-2n + d^-4n / c_n.
    """
    if p <= 2.0:
        raise HypothesisViolated(f"ThmLp2 requires p > 2 (got p={p:g})")
    lam = x.lam
    nx = _norm_parts(lam, x.f.values, Family.LP, p)
    _require_unit_norm("ThmLp2", nx, norm_tol)
    xhat = lam + forward_values(x.group, x.f.values)
    d = _require_gap("ThmLp2", _effective_gap(lam, xhat), delta, gap_tol, ZERO_TOL)

    sym = _symmetrize(x, Family.LP, p, xhat, "ThmLp2", implied_tol)
    n = choose_odd_n_lp(p)
    cn = 1.0 - (1.0 - d**2) ** n
    dn = d ** (2 * n) * cn

    t = (sym.khat / sym.abs_lam2) ** n
    tmin = float(np.min(np.abs(1.0 + t)))
    if tmin < cn - 1e-12:
        raise ConsistencyError(
            f"ThmLp2: inf |1 + t| = {tmin:.12g} fell below c_n = {cn:.12g}")

    p_conj = p / (p - 1.0)
    bhat = -t / (sym.abs_lam2**n * (1.0 + t))
    bnorm = _lp_counting(bhat, p_conj)
    cap_b = d ** (-4 * n) / cn
    if bnorm > cap_b + implied_tol * max(1.0, cap_b):
        raise ConsistencyError(
            f"ThmLp2: ||b||_p' = {bnorm:.12g} exceeds cap {cap_b:.12g}")

    yhat = sym.abs_lam2**n * (1.0 + t)
    inv = _recover_from_symmetrized(x, sym, yhat, n)
    actual = _norm_el(inv, Family.LP, p)
    resid = _residual(x, inv, Family.LP, p)
    return CertifiedInverse(
        inv, certified_bound=lp_large_bound(d, n), actual_norm=actual,
        theorem=Theorem.LP2,
        diagnostics=Diagnostics(n=n, c_n=cn, delta_n=dn, residual=resid,
                                coeff_norm_b=bnorm, coeff_norm_cap=cap_b,
                                khat_dev=sym.khat_dev))


# ---------------------------------------------------------------------------
# dispatch, auto mode, Bezout


def invert_with(theorem: Theorem, x: UnitizedElement, kind: AlgebraKind,
                delta: float | None = None, *,
                norm_tol: float = NORM_TOL,
                gap_tol: float = GAP_TOL) -> CertifiedInverse:
    """Run one named pipeline for an element of the given kind."""
    if theorem is Theorem.ORACLE:
        return oracle_invert(x, kind)
    tols = {"norm_tol": norm_tol, "gap_tol": gap_tol}
    if theorem is Theorem.SPLITTING:
        return invert_splitting(x, kind, delta, **tols)
    if theorem is Theorem.THM5:
        _expect_family(theorem, kind, Family.AP)
        return invert_ap_small_p(x, kind.p, delta, **tols)
    if theorem is Theorem.THM6:
        _expect_family(theorem, kind, Family.AP)
        return invert_ap_large_p_third(x, kind.p, delta, **tols)
    if theorem is Theorem.THM7:
        _expect_family(theorem, kind, Family.AP)
        return invert_ap_general(x, kind.p, delta, **tols)
    if theorem is Theorem.LP1:
        _expect_family(theorem, kind, Family.LP)
        return invert_lp_small_p(x, kind.p, delta, **tols)
    if theorem is Theorem.LP2:
        _expect_family(theorem, kind, Family.LP)
        return invert_lp_large_p(x, kind.p, delta, **tols)
    raise ValueError(f"unknown theorem {theorem}")


def _expect_family(theorem: Theorem, kind: AlgebraKind, family: Family) -> None:
    if kind.family is not family:
        raise HypothesisViolated(
            f"{theorem.value} requires the {family.value} family "
            f"(got {kind.family.value})")


def auto_invert(x: UnitizedElement, kind: AlgebraKind,
                delta: float | None = None) -> CertifiedInverse:
    """Try pipelines in order Splitting, Thm5/ThmLp1, Thm6, Thm7/ThmLp2, Oracle.

    Returns the first certificate whose hypotheses hold, labeled with its
    theorem tag. Never silently falls back inside a pipeline: each either
    applies or refuses.
    """
    order = [Theorem.SPLITTING]
    if kind.family is Family.AP:
        order += [Theorem.THM5, Theorem.THM6, Theorem.THM7]
    else:
        order += [Theorem.LP1, Theorem.LP2]
    for theorem in order:
        try:
            return invert_with(theorem, x, kind, delta)
        except HypothesisViolated:
            continue
    return oracle_invert(x, kind)


@dataclass(frozen=True)
class BezoutSolution:
    solutions: list[UnitizedElement]
    sum_square_norms: float
    residual: float
    theorem: Theorem


def bezout_solve(xs: list[UnitizedElement], kind: AlgebraKind, *,
                 norm_tol: float = NORM_TOL) -> BezoutSolution:
    """Solve sum_k x_k y_k = 1 with norm control.

    Requires sum ||x_k||^2 <= 1 and inf over the Gelfand space (dual group
    plus phi_inf) of sum |x_k_hat|^2 >= delta^2 > 0. The solution is
    y_k = x_k* * s^-1 with s = sum x_k x_k*; s has a real transform bounded
    below by delta^2 (the symmetrization is already built in), and s^-1 is
    produced by the theorem pipeline applicable to the kind.
    """
    if not xs:
        raise HypothesisViolated("Bezout requires a nonempty element list")
    group = xs[0].group
    for xk in xs[1:]:
        if xk.group != group:
            raise HypothesisViolated("Bezout requires a common group")
    total = sum(_norm_el(xk, kind.family, kind.p) ** 2 for xk in xs)
    if total > 1.0 + norm_tol:
        raise HypothesisViolated(
            f"Bezout requires sum ||x_k||^2 <= 1 (got {total:.12g})")

    stars = [unitized_involution(xk) for xk in xs]
    s = unitized_multiply(xs[0], stars[0])
    for xk, xsk in zip(xs[1:], stars[1:]):
        s = s + unitized_multiply(xk, xsk)

    gap_s = _effective_gap(s.lam, s.lam + forward_values(group, s.f.values))
    if gap_s <= ZERO_TOL:
        raise NotInvertible(
            f"Bezout: sum |x_k_hat|^2 has infimum {gap_s:.3e} (the joint gap "
            f"hypothesis fails)")

    if kind.family is Family.AP:
        s_inv = (invert_ap_small_p(s, kind.p) if kind.p <= 2.0
                 else invert_ap_general(s, kind.p))
    elif kind.p > 2.0:
        s_inv = invert_lp_large_p(s, kind.p)
    elif kind.p > 1.0:
        s_inv = invert_lp_small_p(s, kind.p)
    elif gap_s > 0.5:
        # no certified pipeline covers LP with p = 1 (the classical negative
        # case); the splitting certificate applies when the gap allows it
        s_inv = invert_splitting(s, kind)
    else:
        s_inv = oracle_invert(s, kind)

    ys = [unitized_multiply(xsk, s_inv.inverse) for xsk in stars]
    acc = unitized_multiply(xs[0], ys[0])
    for xk, yk in zip(xs[1:], ys[1:]):
        acc = acc + unitized_multiply(xk, yk)
    resid = _norm_el(acc - unit_one(group), kind.family, kind.p)
    sum_sq = sum(_norm_el(yk, kind.family, kind.p) ** 2 for yk in ys)
    return BezoutSolution(solutions=ys, sum_square_norms=sum_sq,
                          residual=resid, theorem=s_inv.theorem)
