"""Membership in principal and annihilator one-sided ideals, and one-sided
division ``s*g == x`` / ``g*s == x`` with least-code solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Literal, Union

import numpy as np

from .errors import InconsistencyError
from .kernels import tables_for
from .ring import Element, Mat, Prod, RingHandle, ZMod, same_ring
from .smith import LinearSystemMod, solve_linear_mod

Side = Literal["left", "right"]

__all__ = [
    "PrincipalIdeal",
    "AnnihilatorIdeal",
    "solve_left_factor",
    "solve_right_factor",
    "scan_left_factor",
    "scan_right_factor",
    "annihilator_subset",
    "ideal_eq_rb_rcab",
    "ideal_eq_cr_cabr",
    "unit_sum_decomposition",
    "unit_sum_decomposition_right",
    "trivial_intersection",
    "solve_linear_mod",
]


# -- least-code factor solving, per carrier ------------------------------------


def _zmod_least(n: int, g: int, x: int) -> int | None:
    d = gcd(g, n)
    if x % d:
        return None
    m = n // d
    if m == 1:
        return 0
    return (x // d) * pow(g // d, -1, m) % m


@lru_cache(maxsize=4096)
def _mat_system(n: int, k: int, side: str, g_entries: tuple) -> LinearSystemMod:
    G = np.array(g_entries, dtype=np.int64).reshape(k, k)
    eye = np.eye(k, dtype=np.int64)
    # unknown s is vectorized row-major
    A = np.kron(eye, G.T) if side == "left" else np.kron(G, eye)
    return LinearSystemMod(A.tolist(), n)


def _least_factor(ring: RingHandle, x: int, g: int, side: str) -> int | None:
    spec = ring.spec
    if isinstance(spec, ZMod):
        return _zmod_least(spec.n, g, x)
    if isinstance(spec, Prod):
        lx, rx = ring._split(x)
        lg, rg = ring._split(g)
        lo = _least_factor(ring._left, int(lx), int(lg), side)
        if lo is None:
            return None
        ro = _least_factor(ring._right, int(rx), int(rg), side)
        if ro is None:
            return None
        return int(ring._join(lo, ro))
    if isinstance(spec, Mat):
        return _mat_least(ring, x, g, side)
    raise TypeError(spec)


@lru_cache(maxsize=1 << 16)
def _mat_least(ring: RingHandle, x: int, g: int, side: str) -> int | None:
    spec = ring.spec
    n, k = spec.base.n, spec.k
    g_entries = tuple(ring._decode_mat(g).reshape(-1).tolist())
    system = _mat_system(n, k, side, g_entries)
    coset = system.coset(ring._decode_mat(x).reshape(-1).tolist())
    if coset is None:
        return None
    # mixed-radix code is lexicographic on entries, so min code = least solution
    return int((coset.all() @ ring._weights).min())


def solve_left_factor(x: Element, g: Element) -> Element | None:
    """Least-code ``s`` with ``s*g == x`` (so ``x`` lies in ``R g``)."""
    ring = same_ring(x, g)
    s = _least_factor(ring, x.code, g.code, "left")
    if s is None:
        return None
    out = ring.element(s)
    if out * g != x:
        raise InconsistencyError(f"solver returned {out} but {out}*{g} != {x}")
    return out


def solve_right_factor(x: Element, g: Element) -> Element | None:
    """Least-code ``s`` with ``g*s == x`` (so ``x`` lies in ``g R``)."""
    ring = same_ring(x, g)
    s = _least_factor(ring, x.code, g.code, "right")
    if s is None:
        return None
    out = ring.element(s)
    if g * out != x:
        raise InconsistencyError(f"solver returned {out} but {g}*{out} != {x}")
    return out


def scan_left_factor(x: Element, g: Element) -> Element | None:
    """Exhaustive-scan version of :func:`solve_left_factor`."""
    ring = same_ring(x, g)
    hits = np.flatnonzero(tables_for(ring).col(g.code) == x.code)
    return ring.element(hits[0]) if hits.size else None


def scan_right_factor(x: Element, g: Element) -> Element | None:
    ring = same_ring(x, g)
    hits = np.flatnonzero(tables_for(ring).row(g.code) == x.code)
    return ring.element(hits[0]) if hits.size else None


# -- ideal descriptors -------------------------------------------------------


@dataclass(frozen=True)
class PrincipalIdeal:
    """``R g`` (side="left") or ``g R`` (side="right")."""

    side: Side
    generator: Element

    def __contains__(self, x: Element) -> bool:
        if self.side == "left":
            return solve_left_factor(x, self.generator) is not None
        return solve_right_factor(x, self.generator) is not None

    def members(self) -> np.ndarray:
        t = tables_for(self.generator.ring)
        g = self.generator.code
        vals = t.col(g) if self.side == "left" else t.row(g)
        return np.unique(vals)

    def __str__(self) -> str:
        g = self.generator
        return f"R{g}" if self.side == "left" else f"{g}R"


@dataclass(frozen=True)
class AnnihilatorIdeal:
    """``g°`` (side="right": ``g x == 0``) or ``°g`` (side="left": ``x g == 0``)."""

    side: Side
    generator: Element

    def __contains__(self, x: Element) -> bool:
        same_ring(x, self.generator)
        g = self.generator
        prod = g * x if self.side == "right" else x * g
        return prod.is_zero()

    def members(self) -> np.ndarray:
        t = tables_for(self.generator.ring)
        g = self.generator.code
        return t.right_ann(g) if self.side == "right" else t.left_ann(g)

    def __str__(self) -> str:
        g = self.generator
        return f"{g}°" if self.side == "right" else f"°{g}"


Ideal = Union[PrincipalIdeal, AnnihilatorIdeal]


def annihilator_subset(g1: Element, g2: Element, side: Side) -> bool:
    """``g1° ⊆ g2°`` for side="right", ``°g1 ⊆ °g2`` for side="left"."""
    ring = same_ring(g1, g2)
    t = tables_for(ring)
    if side == "right":
        ann = t.right_ann(g1.code)
        return bool((t.mul(g2.code, ann) == 0).all())
    ann = t.left_ann(g1.code)
    return bool((t.mul(ann, g2.code) == 0).all())


def trivial_intersection(i1: Ideal, i2: Ideal) -> bool:
    """Whether ``i1 ∩ i2 == {0}``."""
    same_ring(i1.generator, i2.generator)
    small, other = sorted((i1, i2), key=lambda i: i.members().size)
    ring = i1.generator.ring
    return all(ring.element(x) not in other for x in small.members() if x != 0)


# -- criteria and constructive decompositions ------------------------------------


def ideal_eq_rb_rcab(a: Element, b: Element, c: Element) -> Element | None:
    """Least ``s`` with ``s*c*a*b == b``, deciding ``R b == R cab``."""
    same_ring(a, b, c)
    return solve_left_factor(b, c * a * b)


def ideal_eq_cr_cabr(a: Element, b: Element, c: Element) -> Element | None:
    """Least ``t`` with ``c*a*b*t == c``, deciding ``c R == cab R``."""
    same_ring(a, b, c)
    return solve_right_factor(c, c * a * b)


def unit_sum_decomposition(ca: Element, b: Element) -> tuple[Element, Element] | None:
    """``(t, u)`` with ``1 == t*ca + u`` and ``u*b == 0``: realizes ``R = R ca + °b``."""
    ring = same_ring(ca, b)
    s = solve_left_factor(b, ca * b)
    if s is None:
        return None
    u = ring.one - s * ca
    if (s * ca + u) != ring.one or not (u * b).is_zero():
        raise InconsistencyError("unit-sum certificate failed its recheck")
    return s, u


def unit_sum_decomposition_right(ab: Element, c: Element) -> tuple[Element, Element] | None:
    """``(t, u)`` with ``1 == ab*t + u`` and ``c*u == 0``: realizes ``R = ab R + c°``."""
    ring = same_ring(ab, c)
    t = solve_right_factor(c, c * ab)
    if t is None:
        return None
    u = ring.one - ab * t
    if (ab * t + u) != ring.one or not (c * u).is_zero():
        raise InconsistencyError("unit-sum certificate failed its recheck")
    return t, u
