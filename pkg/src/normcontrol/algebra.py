"""Unitized convolution algebras on a finite abelian group.

An element is a pair (lambda, f) representing lambda * 1 + f, where 1 is an
adjoined identity. Two norm families are supported:

  * AP(p):  |lambda| + ||f||_{L^1} + ||f_hat||_{ell^p}
  * LP(p):  |lambda| + ||f||_{L^p}

Products use the unitization rule (a, lam) * (b, mu) = (ab + lam*b + mu*a,
lam*mu) with ab the normalized convolution (f * g)(t) = (1/|G|) sum_s
f(s) g(t-s). Even though every algebra here is unital at finite size (the
function |G| * delta_0 is a convolution identity), all norms and bounds are
taken in the abstract unitization, which is what the certified inversion
formulas require.

The Gelfand transform of (lambda, f) is lambda + f_hat on the dual group,
plus the value lambda at the extra functional phi_inf attached to the
adjoined identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._backend import kernels
from .errors import GroupMismatchError
from .fourier import (
    FunctionOnG,
    SpectralVector,
    _lp_counting,
    _lp_mean,
    forward,
    forward_values,
)
from .group import Group, _structure


class Family(Enum):
    AP = "AP"
    LP = "LP"


@dataclass(frozen=True)
class AlgebraKind:
    """Norm family and exponent selecting which algebra an element lives in."""

    family: Family
    p: float

    def __post_init__(self):
        p = float(self.p)
        if not (p >= 1 and math.isfinite(p)):
            raise ValueError(f"p must be finite and >= 1, got {self.p}")
        object.__setattr__(self, "p", p)

    @staticmethod
    def ap(p: float) -> "AlgebraKind":
        return AlgebraKind(Family.AP, p)

    @staticmethod
    def lp(p: float) -> "AlgebraKind":
        return AlgebraKind(Family.LP, p)

    def __str__(self) -> str:
        return f"{self.family.value}(p={self.p:g})"


@dataclass(frozen=True)
class UnitizedElement:
    """lambda * 1 + f with complex scalar part lambda and function part f."""

    lam: complex
    f: FunctionOnG

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))

    @property
    def group(self) -> Group:
        return self.f.group

    def __add__(self, other: "UnitizedElement") -> "UnitizedElement":
        _same_group(self.f, other.f)
        return UnitizedElement(
            self.lam + other.lam, FunctionOnG(self.group, self.f.values + other.f.values)
        )

    def __sub__(self, other: "UnitizedElement") -> "UnitizedElement":
        _same_group(self.f, other.f)
        return UnitizedElement(
            self.lam - other.lam, FunctionOnG(self.group, self.f.values - other.f.values)
        )

    def scale(self, c: complex) -> "UnitizedElement":
        return UnitizedElement(c * self.lam, FunctionOnG(self.group, c * self.f.values))


def zero_function(group: Group) -> FunctionOnG:
    return FunctionOnG(group, np.zeros(group.size, dtype=np.complex128))


def identity_function(group: Group) -> FunctionOnG:
    """Convolution identity: mass |G| at the origin (transform is constant 1)."""
    e = np.zeros(group.size, dtype=np.complex128)
    e[0] = group.size
    return FunctionOnG(group, e)


def unit_one(group: Group) -> UnitizedElement:
    """The adjoined identity (1, 0)."""
    return UnitizedElement(1.0, zero_function(group))


def _same_group(f: FunctionOnG, g: FunctionOnG) -> None:
    if f.group != g.group:
        raise GroupMismatchError(f"group mismatch: {f.group} vs {g.group}")


def convolve(f: FunctionOnG, g: FunctionOnG) -> FunctionOnG:
    """Normalized convolution (f * g)(t) = (1/|G|) sum_s f(s) g(t - s)."""
    _same_group(f, g)
    st = _structure(f.group.orders)
    raw = kernels.cyclic_convolve(f.values, g.values, st.diff_table)
    return FunctionOnG(f.group, raw / st.size)


def involution(f: FunctionOnG) -> FunctionOnG:
    """f*(t) = conj(f(-t)); its transform is the conjugate of f_hat."""
    st = _structure(f.group.orders)
    return FunctionOnG(f.group, np.conj(f.values[st.neg_perm]))


def unitized_involution(x: UnitizedElement) -> UnitizedElement:
    """(lambda, f)* = (conj(lambda), f*)."""
    return UnitizedElement(np.conj(x.lam), involution(x.f))


def unitized_multiply(x: UnitizedElement, y: UnitizedElement) -> UnitizedElement:
    """(lam, f) * (mu, g) = (lam*mu, lam*g + mu*f + f conv g)."""
    _same_group(x.f, y.f)
    fg = convolve(x.f, y.f)
    vals = x.lam * y.f.values + y.lam * x.f.values + fg.values
    return UnitizedElement(x.lam * y.lam, FunctionOnG(x.group, vals))


def conv_power(f: FunctionOnG, n: int) -> FunctionOnG:
    """n-fold convolution power; n = 0 gives the convolution identity."""
    if n < 0:
        raise ValueError(f"convolution power needs n >= 0, got {n}")
    if n == 0:
        return identity_function(f.group)
    out = f
    for _ in range(n - 1):
        out = convolve(out, f)
    return out


def norm(x: UnitizedElement, kind: AlgebraKind) -> float:
    """Unitization norm |lambda| + ||f|| in the requested family."""
    return abs(x.lam) + function_norm(x.f, kind)


def function_norm(f: FunctionOnG, kind: AlgebraKind) -> float:
    """Norm of the function part alone (the non-unitized algebra norm)."""
    if kind.family is Family.AP:
        fhat = forward_values(f.group, f.values)
        return _lp_mean(f.values, 1.0) + _lp_counting(fhat, kind.p)
    return _lp_mean(f.values, kind.p)


def gelfand_transform(x: UnitizedElement) -> tuple[SpectralVector, complex]:
    """Gelfand values (lambda + f_hat on the dual, lambda at phi_inf).

    The spectrum of x is exactly the set of these values.
    """
    fhat = forward(x.f)
    return SpectralVector(x.group, x.lam + fhat.values), x.lam


def gelfand_values(x: UnitizedElement) -> np.ndarray:
    """Array of Gelfand values on the dual group only (phi_inf excluded)."""
    return x.lam + forward_values(x.group, x.f.values)
