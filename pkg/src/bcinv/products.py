"""One-sided (b,c)-invertibility of a product ``p a q``.

Each operation decides the stated equivalence both ways, builds the witness
maps ``x = q y``, ``z = y p``, ``y = z a x`` and ``w = q y p``, and rechecks
every element it returns against the definition of its claimed kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import InconsistencyError, PreconditionError, TheoremViolation
from .ideals import solve_left_factor, solve_right_factor
from .inverses import InverseKind, is_witness, left_bc, right_bc, two_sided_bc
from .ring import Element, same_ring


@dataclass(frozen=True)
class SplitResult:
    exists: bool
    y: Element | None = None
    x: Element | None = None
    z: Element | None = None


@dataclass(frozen=True)
class TransferResult:
    exists: bool
    w: Element | None = None
    q_prime: Element | None = None
    p_prime: Element | None = None


@dataclass(frozen=True)
class MixedResult:
    exists: bool
    y: Element | None = None
    x: Element | None = None
    z: Element | None = None
    q_prime: Element | None = None
    p_prime: Element | None = None


def _require(kind: InverseKind, y: Element, a: Element, b: Element, c: Element, what: str) -> None:
    if not is_witness(kind, y, a, b, c):
        raise InconsistencyError(f"constructed {what} = {y} is not a {kind} of {a} for (b,c)=({b},{c})")


def _split(side: str, p, a, q, b, c) -> SplitResult:
    same_ring(p, a, q, b, c)
    route = left_bc if side == "left" else right_bc
    kind = InverseKind.LEFT_BC if side == "left" else InverseKind.RIGHT_BC
    paq, pa, aq = p * a * q, p * a, a * q
    whole = route(paq, b, c)
    x_w = route(pa, q * b, c)
    z_w = route(aq, b, c * p)
    if (whole is not None) != (x_w is not None and z_w is not None):
        raise TheoremViolation(
            f"{side} split equivalence fails",
            {"p": str(p), "a": str(a), "q": str(q), "b": str(b), "c": str(c),
             "paq": whole is not None, "pa": x_w is not None, "aq": z_w is not None},
        )
    if whole is None:
        return SplitResult(False)
    y = whole.y
    x, z = q * y, y * p
    _require(kind, x, pa, q * b, c, "x = q y")
    _require(kind, z, aq, b, c * p, "z = y p")
    # converse direction from the independently found witnesses
    _require(kind, z_w.y * a * x_w.y, paq, b, c, "z a x")
    return SplitResult(True, y, x, z)


def split_left(p: Element, a: Element, q: Element, b: Element, c: Element) -> SplitResult:
    """``paq`` left (b,c)-invertible iff ``pa`` is left (qb,c)- and ``aq`` left (b,cp)-invertible."""
    return _split("left", p, a, q, b, c)


def split_right(p: Element, a: Element, q: Element, b: Element, c: Element) -> SplitResult:
    """``paq`` right (b,c)-invertible iff ``pa`` is right (qb,c)- and ``aq`` right (b,cp)-invertible."""
    return _split("right", p, a, q, b, c)


def _transfer_left(p, a, q, b, c, q_prime):
    paq = p * a * q
    whole = left_bc(paq, b, c)
    inner = left_bc(a, q * b, c * p)
    if (whole is None) != (inner is None):
        raise TheoremViolation("left transfer equivalence fails",
                               {"p": str(p), "a": str(a), "q": str(q), "b": str(b), "c": str(c)})
    if whole is None:
        return None
    w = q * whole.y * p
    _require(InverseKind.LEFT_BC, w, a, q * b, c * p, "w = q y p")
    # back: w = r c p gives y = q' r c
    r = solve_left_factor(inner.y, c * p)
    _require(InverseKind.LEFT_BC, q_prime * r * c, paq, b, c, "q' r c")
    return w


def _transfer_right(p, a, q, b, c, p_prime):
    paq = p * a * q
    whole = right_bc(paq, b, c)
    inner = right_bc(a, q * b, c * p)
    if (whole is None) != (inner is None):
        raise TheoremViolation("right transfer equivalence fails",
                               {"p": str(p), "a": str(a), "q": str(q), "b": str(b), "c": str(c)})
    if whole is None:
        return None
    w = q * whole.y * p
    _require(InverseKind.RIGHT_BC, w, a, q * b, c * p, "w = q y p")
    # back: w = q b r gives y = b r p'
    r = solve_right_factor(inner.y, q * b)
    _require(InverseKind.RIGHT_BC, b * r * p_prime, paq, b, c, "b r p'")
    return w


def transfer(
    p: Element, a: Element, q: Element, b: Element, c: Element,
    side: Literal["left", "right", "both"] = "left",
) -> TransferResult:
    """Move side-(b,c)-invertibility of ``paq`` to side-(qb,cp)-invertibility of ``a``.

    Needs ``q'`` with ``q' q b == b`` (left) and/or ``p'`` with
    ``c p p' == c`` (right); raises :class:`PreconditionError` otherwise.
    """
    same_ring(p, a, q, b, c)
    q_prime = p_prime = None
    if side in ("left", "both"):
        q_prime = solve_left_factor(b, q * b)
        if q_prime is None:
            raise PreconditionError(f"no q' with q'*q*b == b for q={q}, b={b}")
    if side in ("right", "both"):
        p_prime = solve_right_factor(c, c * p)
        if p_prime is None:
            raise PreconditionError(f"no p' with c*p*p' == c for c={c}, p={p}")

    if side == "left":
        w = _transfer_left(p, a, q, b, c, q_prime)
    elif side == "right":
        w = _transfer_right(p, a, q, b, c, p_prime)
    else:
        whole = two_sided_bc(p * a * q, b, c)
        inner = two_sided_bc(a, q * b, c * p)
        if (whole is None) != (inner is None):
            raise TheoremViolation("two-sided transfer equivalence fails",
                                   {"p": str(p), "a": str(a), "q": str(q), "b": str(b), "c": str(c)})
        w = None
        if whole is not None:
            w = q * whole.y * p
            if w != inner.y:
                raise InconsistencyError(f"q y p = {w} differs from the (qb,cp)-inverse {inner.y}")
    return TransferResult(w is not None, w, q_prime, p_prime)


def mixed_transfer(p: Element, a: Element, q: Element, b: Element, c: Element) -> MixedResult:
    """``paq`` (b,c)-invertible iff ``pa`` right (qb,qc)- and ``aq`` left (bp,cp)-invertible.

    Needs ``q'`` with ``q' q c == c`` and ``p'`` with ``b p p' == b``.
    """
    same_ring(p, a, q, b, c)
    q_prime = solve_left_factor(c, q * c)
    if q_prime is None:
        raise PreconditionError(f"no q' with q'*q*c == c for q={q}, c={c}")
    p_prime = solve_right_factor(b, b * p)
    if p_prime is None:
        raise PreconditionError(f"no p' with b*p*p' == b for b={b}, p={p}")
    paq = p * a * q
    whole = two_sided_bc(paq, b, c)
    x_w = right_bc(p * a, q * b, q * c)
    z_w = left_bc(a * q, b * p, c * p)
    if (whole is not None) != (x_w is not None and z_w is not None):
        raise TheoremViolation(
            "mixed product equivalence fails",
            {"p": str(p), "a": str(a), "q": str(q), "b": str(b), "c": str(c),
             "paq": whole is not None, "pa": x_w is not None, "aq": z_w is not None},
        )
    if whole is None:
        return MixedResult(False, q_prime=q_prime, p_prime=p_prime)
    x, z = x_w.y, z_w.y
    y = z * a * x
    _require(InverseKind.LEFT_BC, y, paq, b, c, "z a x")
    _require(InverseKind.RIGHT_BC, y, paq, b, c, "z a x")
    if y != whole.y:
        raise InconsistencyError(f"z a x = {y} differs from the (b,c)-inverse {whole.y} of paq")
    return MixedResult(True, y, x, z, q_prime, p_prime)
