"""Jacobson's lemma and one-sided (b,c)-invertibility of a perturbed element."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import PreconditionError, TheoremViolation
from .inverses import InverseKind, is_witness, left_ann_bc, left_bc, right_ann_bc, right_bc
from .ring import Element, left_invertible, right_invertible, same_ring


def jacobson_left(a: Element, b: Element, y: Element) -> Element:
    """From ``y (1 + a b) == 1`` return ``1 - b y a``, a left inverse of ``1 + b a``."""
    ring = same_ring(a, b, y)
    one = ring.one
    if y * (one + a * b) != one:
        raise PreconditionError(f"{y} is not a left inverse of 1 + ab")
    out = one - b * y * a
    if out * (one + b * a) != one:
        raise TheoremViolation("(1 - bya)(1 + ba) != 1", {"a": str(a), "b": str(b), "y": str(y)})
    return out


def jacobson_right(a: Element, b: Element, x: Element) -> Element:
    """From ``(1 + a b) x == 1`` return ``1 - b x a``, a right inverse of ``1 + b a``."""
    ring = same_ring(a, b, x)
    one = ring.one
    if (one + a * b) * x != one:
        raise PreconditionError(f"{x} is not a right inverse of 1 + ab")
    out = one - b * x * a
    if (one + b * a) * out != one:
        raise TheoremViolation("(1 + ba)(1 - bxa) != 1", {"a": str(a), "b": str(b), "x": str(x)})
    return out


def jacobson_inverse(a: Element, b: Element, inv: Element) -> Element:
    """``(1 + b a)^-1 == 1 - b (1 + a b)^-1 a``."""
    ring = same_ring(a, b, inv)
    one = ring.one
    u = one + a * b
    if inv * u != one or u * inv != one:
        raise PreconditionError(f"{inv} is not the inverse of 1 + ab = {u}")
    out = one - b * inv * a
    v = one + b * a
    if out * v != one or v * out != one:
        raise TheoremViolation("1 - b(1+ab)^-1 a is not the inverse of 1 + ba",
                               {"a": str(a), "b": str(b), "inv": str(inv)})
    return out


@dataclass(frozen=True)
class PerturbationResult:
    invertible: bool
    equivalents: tuple[bool, bool, bool, bool]


def perturbed_one_sided(
    a: Element, b: Element, c: Element, a_bc: Element, alpha: Element,
    side: Literal["left", "right"] = "left",
) -> PerturbationResult:
    """Evaluate the four equivalent conditions for ``alpha`` near ``a``.

    left: (i) alpha left (b,c)-invertible, (ii) alpha right annihilator
    (b,c)-invertible, (iii) ``1 + (alpha - a) a_bc`` left invertible,
    (iv) ``1 + a_bc (alpha - a)`` left invertible.  The right version swaps
    every side.  ``a_bc`` must be the (b,c)-inverse of ``a``.
    """
    ring = same_ring(a, b, c, a_bc, alpha)
    if not is_witness(InverseKind.TWO_SIDED_BC, a_bc, a, b, c):
        raise PreconditionError(f"{a_bc} is not the ({b},{c})-inverse of {a}")
    one = ring.one
    u = one + (alpha - a) * a_bc
    v = one + a_bc * (alpha - a)
    if side == "left":
        conds = (
            left_bc(alpha, b, c) is not None,
            right_ann_bc(alpha, b, c) is not None,
            left_invertible(u) is not None,
            left_invertible(v) is not None,
        )
    else:
        conds = (
            right_bc(alpha, b, c) is not None,
            left_ann_bc(alpha, b, c) is not None,
            right_invertible(u) is not None,
            right_invertible(v) is not None,
        )
    if len(set(conds)) != 1:
        raise TheoremViolation(
            f"{side} perturbation conditions disagree",
            {"ring": ring.name, "a": str(a), "b": str(b), "c": str(c), "a_bc": str(a_bc),
             "alpha": str(alpha), "conditions": list(conds)},
        )
    return PerturbationResult(conds[0], conds)
