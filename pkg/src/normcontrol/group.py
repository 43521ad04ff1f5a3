"""Finite abelian groups as products of cyclic factors, with their duals.

A group Z_{n1} x ... x Z_{nk} is described by its factor orders. Elements
and dual characters are coordinate tuples reduced modulo the orders. Both
sides share one canonical row-major enumeration (last coordinate fastest),
so functions on G and spectral vectors on the dual are plain length-|G|
complex arrays.

The character pairing is

    chi_a(t) = exp(2*pi*i * sum_j a_j t_j / n_j),

computed from the exact integer phase sum_j a_j t_j (|G| / n_j) mod |G|
before a single trigonometric call, which keeps rounding drift minimal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GroupMismatchError


@dataclass(frozen=True)
class Group:
    """Product of cyclic groups; ``orders`` are the factor sizes n_1..n_k.

    Haar measure is normalized to total mass 1, so each point weighs
    1/size. The dual group is structurally identical and reuses the same
    enumeration.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        if len(self.orders) == 0:
            raise ValueError("a group needs at least one cyclic factor")
        orders = tuple(int(n) for n in self.orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return _structure(self.orders).size

    def element(self, coords) -> "GroupElement":
        """Build an element, reducing coordinates modulo the factor orders."""
        return GroupElement(self._reduce(coords))

    def character(self, coords) -> "DualCharacter":
        """Build a dual character, reducing coordinates modulo the orders."""
        return DualCharacter(self._reduce(coords))

    def _reduce(self, coords) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.orders):
            raise GroupMismatchError(
                f"expected {len(self.orders)} coordinates, got {len(coords)}"
            )
        return tuple(c % n for c, n in zip(coords, self.orders))

    def add(self, s: "GroupElement", t: "GroupElement") -> "GroupElement":
        self._check(s)
        self._check(t)
        return GroupElement(
            tuple((a + b) % n for a, b, n in zip(s.coords, t.coords, self.orders))
        )

    def negate(self, t: "GroupElement") -> "GroupElement":
        self._check(t)
        return GroupElement(tuple((-a) % n for a, n in zip(t.coords, self.orders)))

    def index_of(self, t) -> int:
        """Flat index of an element or character in the canonical enumeration."""
        self._check(t)
        idx = 0
        for c, n in zip(t.coords, self.orders):
            idx = idx * n + c
        return idx

    def element_at(self, index: int) -> "GroupElement":
        return GroupElement(self._coords_at(index))

    def character_at(self, index: int) -> "DualCharacter":
        return DualCharacter(self._coords_at(index))

    def elements(self) -> tuple["GroupElement", ...]:
        """All elements in canonical row-major order (last coordinate fastest)."""
        return tuple(GroupElement(c) for c in _structure(self.orders).coord_tuples)

    def characters(self) -> tuple["DualCharacter", ...]:
        """All dual characters, enumerated in the same canonical order."""
        return tuple(DualCharacter(c) for c in _structure(self.orders).coord_tuples)

    def _coords_at(self, index: int) -> tuple[int, ...]:
        n = self.size
        if not 0 <= index < n:
            raise IndexError(f"index {index} out of range for group of size {n}")
        return _structure(self.orders).coord_tuples[index]

    def _check(self, t) -> None:
        if len(t.coords) != len(self.orders):
            raise GroupMismatchError(
                f"{t!r} has {len(t.coords)} coordinates, group has "
                f"{len(self.orders)} factors"
            )

    def to_json(self) -> list[int]:
        return list(self.orders)

    @staticmethod
    def from_json(data) -> "Group":
        return Group(tuple(int(n) for n in data))

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.orders)


@dataclass(frozen=True)
class GroupElement:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class DualCharacter:
    coords: tuple[int, ...]


def pairing(g: Group, a: DualCharacter, t: GroupElement) -> complex:
    """Value chi_a(t) of the character a at the point t; always on the unit circle."""
    g._check(a)
    g._check(t)
    size = g.size
    phase = 0
    for aj, tj, nj in zip(a.coords, t.coords, g.orders):
        phase = (phase + aj * tj * (size // nj)) % size
    return cmath.exp(2j * math.pi * phase / size)


class _Structure:
    """Cached per-orders tables shared by the transform and convolution paths."""

    def __init__(self, orders: tuple[int, ...]):
        self.orders = orders
        self.orders_arr = np.asarray(orders, dtype=np.int64)
        self.size = int(np.prod(self.orders_arr))
        # N x k coordinate matrix in canonical row-major order
        grids = np.indices(orders).reshape(len(orders), self.size)
        self.coords = grids.T.astype(np.int64).copy()
        self.coord_tuples = tuple(tuple(int(c) for c in row) for row in self.coords)
        self._diff_table = None
        self._neg_perm = None
        self._char_phase = None
        self._twiddles = {}

    def _flatten(self, coords: np.ndarray) -> np.ndarray:
        idx = np.zeros(coords.shape[:-1], dtype=np.int64)
        for j, n in enumerate(self.orders):
            idx = idx * n + coords[..., j]
        return idx

    @property
    def diff_table(self) -> np.ndarray:
        """diff_table[t, s] = flat index of t - s (componentwise mod orders)."""
        if self._diff_table is None:
            d = (self.coords[:, None, :] - self.coords[None, :, :]) % self.orders_arr
            self._diff_table = np.ascontiguousarray(self._flatten(d), dtype=np.int64)
        return self._diff_table

    @property
    def neg_perm(self) -> np.ndarray:
        """neg_perm[t] = flat index of -t."""
        if self._neg_perm is None:
            d = (-self.coords) % self.orders_arr
            self._neg_perm = self._flatten(d)
        return self._neg_perm

    @property
    def char_phase(self) -> np.ndarray:
        """Integer phase matrix P[a, t] with chi_a(t) = exp(2*pi*i*P[a,t]/size).

        Built by exact integer accumulation; the basis of the O(|G|^2)
        direct-transform oracle, independent of the factorwise kernels.
        """
        if self._char_phase is None:
            weights = self.size // self.orders_arr
            p = np.zeros((self.size, self.size), dtype=np.int64)
            for j in range(len(self.orders)):
                p += np.outer(self.coords[:, j] * weights[j], self.coords[:, j])
            self._char_phase = p % self.size
        return self._char_phase

    def twiddles(self, sign: int) -> tuple[np.ndarray, np.ndarray]:
        """Concatenated per-factor root tables exp(sign*2*pi*i*m/n_j), with offsets."""
        if sign not in self._twiddles:
            tables = []
            offsets = [0]
            for n in self.orders:
                m = np.arange(n)
                tables.append(np.exp(sign * 2j * np.pi * m / n))
                offsets.append(offsets[-1] + n)
            self._twiddles[sign] = (
                np.concatenate(tables).astype(np.complex128),
                np.asarray(offsets, dtype=np.int64),
            )
        return self._twiddles[sign]


@lru_cache(maxsize=None)
def _structure(orders: tuple[int, ...]) -> _Structure:
    return _Structure(orders)
