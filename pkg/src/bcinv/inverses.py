"""Decision procedures and witnesses for (b,c)-type generalized inverses.

Two kinds of routine live here:

* criterion routes (``left_bc``, ``right_bc``, ``two_sided_bc`` ...) decide
  existence through one-sided division and build the witness from the
  division certificate;
* definitional masks (``*_mask``) evaluate the defining conditions for every
  candidate ``y`` at once.  They back the exhaustive searches, the ``--all``
  witness listings, and :meth:`Witness.verify`.

Every returned :class:`Witness` has been rechecked against its definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Literal

import numpy as np

from .errors import InconsistencyError
from .ideals import ideal_eq_cr_cabr, ideal_eq_rb_rcab, solve_left_factor, solve_right_factor
from .kernels import TABLE_LIMIT, Tables, tables_for
from .ring import Element, RingHandle, same_ring

Side = Literal["left", "right"]


class InverseKind(str, Enum):
    LEFT_BC = "left_bc"
    RIGHT_BC = "right_bc"
    RIGHT_ANN_BC = "right_ann_bc"
    LEFT_ANN_BC = "left_ann_bc"
    TWO_SIDED_BC = "two_sided_bc"
    HYBRID_BC = "hybrid_bc"
    ANN_BC = "ann_bc"
    MARY_LEFT = "mary_left"
    MARY_RIGHT = "mary_right"
    MARY = "mary"
    DELTA = "delta"
    MOORE_PENROSE = "moore_penrose"
    GROUP = "group"
    DRAZIN = "drazin"

    def __str__(self) -> str:
        return self.value


_BC_KINDS = {
    InverseKind.LEFT_BC,
    InverseKind.RIGHT_BC,
    InverseKind.RIGHT_ANN_BC,
    InverseKind.LEFT_ANN_BC,
    InverseKind.TWO_SIDED_BC,
    InverseKind.HYBRID_BC,
    InverseKind.ANN_BC,
}
_MARY_KINDS = {InverseKind.MARY_LEFT, InverseKind.MARY_RIGHT, InverseKind.MARY}


def parse_delta(delta) -> frozenset[int]:
    """Normalise ``"1,3"`` / ``{1, 3}`` to a validated frozenset."""
    if isinstance(delta, str):
        delta = [int(p) for p in delta.replace("{", "").replace("}", "").split(",") if p.strip()]
    out = frozenset(int(i) for i in delta)
    if not out or not out <= {1, 2, 3, 4}:
        raise ValueError(f"delta must be a nonempty subset of {{1,2,3,4}}, got {sorted(out)}")
    return out


@dataclass
class Witness:
    """An inverse ``y`` of kind ``kind`` for ``inputs``, with its certificate.

    ``certificate`` maps auxiliary names (``s``, ``t``, ``u``, ``v``,
    ``index`` ...) to the elements or integers that prove the defining
    equations.
    """

    kind: InverseKind
    y: Element
    inputs: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)

    def verify(self) -> bool:
        if not is_witness(self.kind, self.y, **self.inputs):
            return False
        return _certificate_holds(self)

    def to_json(self) -> dict:
        cert = {k: (str(v) if isinstance(v, Element) else v) for k, v in self.certificate.items()}
        return {"kind": self.kind.value, "y": str(self.y), "certificate": cert}


def _certificate_holds(w: Witness) -> bool:
    cert, y, inp = w.certificate, w.y, w.inputs
    kind = w.kind
    if kind in (InverseKind.LEFT_BC, InverseKind.MARY_LEFT) and "s" in cert:
        c = inp.get("c", inp.get("d"))
        return cert["s"] * c == y
    if kind in (InverseKind.RIGHT_BC, InverseKind.MARY_RIGHT) and "t" in cert:
        b = inp.get("b", inp.get("d"))
        return b * cert["t"] == y
    if kind in (InverseKind.TWO_SIDED_BC, InverseKind.MARY) and "u" in cert:
        b = inp.get("b", inp.get("d"))
        c = inp.get("c", inp.get("d"))
        return b * cert["u"] * y == y and y * cert["v"] * c == y
    return True


def _checked(w: Witness) -> Witness:
    if not w.verify():
        raise InconsistencyError(f"{w.kind} witness {w.y} failed its recheck for {w.inputs}")
    return w


def _least(ring: RingHandle, mask: np.ndarray) -> Element | None:
    hits = np.flatnonzero(mask)
    return ring.element(hits[0]) if hits.size else None


def _elements(ring: RingHandle, mask: np.ndarray) -> list[Element]:
    return [ring.element(i) for i in np.flatnonzero(mask)]


# -- definitional masks over all candidate y -------------------------------------


def _yab_eq_b(t: Tables, a: Element, b: Element) -> np.ndarray:
    return t.mul(t.col(a.code), b.code) == b.code


def _cay_eq_c(t: Tables, a: Element, c: Element) -> np.ndarray:
    return t.row((c * a).code) == c.code


def _yay_eq_y(t: Tables, a: Element) -> np.ndarray:
    return t.mul(t.col(a.code), t.codes) == t.codes


def left_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``R y ⊆ R c`` and ``y a b == b``."""
    t = tables_for(same_ring(a, b, c))
    return t.in_left_ideal(c.code) & _yab_eq_b(t, a, b)


def right_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``y R ⊆ b R`` and ``c a y == c``."""
    t = tables_for(same_ring(a, b, c))
    return t.in_right_ideal(b.code) & _cay_eq_c(t, a, c)


def right_ann_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``c° ⊆ y°`` and ``y a b == b``."""
    t = tables_for(same_ring(a, b, c))
    return _yab_eq_b(t, a, b) & t.right_ann_contains(c.code)


def left_ann_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``°b ⊆ °y`` and ``c a y == c``."""
    t = tables_for(same_ring(a, b, c))
    return _cay_eq_c(t, a, c) & t.left_ann_contains(b.code)


def two_sided_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``y ∈ bRy ∩ yRc``, ``y a b == b`` and ``c a y == c``."""
    ring = same_ring(a, b, c)
    t = tables_for(ring)
    mask = _yab_eq_b(t, a, b) & _cay_eq_c(t, a, c)
    rb = t.row(b.code)  # b*r over r
    for y in np.flatnonzero(mask):
        in_bry = bool((t.mul(rb, y) == y).any())
        in_yrc = bool((t.mul(t.row(int(y)), c.code) == y).any())
        mask[y] = in_bry and in_yrc
    return mask


def hybrid_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``y a y == y``, ``y R == b R`` and ``y° == c°``."""
    t = tables_for(same_ring(a, b, c))
    mask = _yay_eq_y(t, a) & t.in_right_ideal(b.code)
    mask &= t.right_ann_contains(c.code) & t.right_ann_within(c.code)
    return mask & t.right_ideal_contains(b.code)


def ann_bc_mask(a: Element, b: Element, c: Element) -> np.ndarray:
    """``y a y == y``, ``°b == °y`` and ``y° == c°``."""
    t = tables_for(same_ring(a, b, c))
    mask = _yay_eq_y(t, a)
    mask &= t.left_ann_contains(b.code) & t.left_ann_within(b.code)
    return mask & t.right_ann_contains(c.code) & t.right_ann_within(c.code)


def delta_mask(a: Element, delta) -> np.ndarray:
    """Candidates satisfying the selected Penrose equations.

    (1) a y a == a, (2) y a y == y, (3) (a y)* == a y, (4) (y a)* == y a.
    """
    delta = parse_delta(delta)
    t = tables_for(a.ring)
    mask = np.ones(t.n, dtype=bool)
    ay = t.row(a.code)
    ya = t.col(a.code)
    if 1 in delta:
        mask &= t.mul(ay, a.code) == a.code
    if 2 in delta:
        mask &= _yay_eq_y(t, a)
    if 3 in delta:
        mask &= t.star[ay] == ay
    if 4 in delta:
        mask &= t.star[ya] == ya
    return mask


def group_mask(a: Element) -> np.ndarray:
    t = tables_for(a.ring)
    ay, ya = t.row(a.code), t.col(a.code)
    return (ay == ya) & (t.mul(ay, a.code) == a.code) & _yay_eq_y(t, a)


def drazin_mask(a: Element, k: int) -> np.ndarray:
    """``y a == a y``, ``y a y == y``, ``a^(k+1) y == a^k``."""
    t = tables_for(a.ring)
    ay, ya = t.row(a.code), t.col(a.code)
    ak = a**k
    return (ay == ya) & _yay_eq_y(t, a) & (t.row((ak * a).code) == ak.code)


_MASKS = {
    InverseKind.LEFT_BC: left_bc_mask,
    InverseKind.RIGHT_BC: right_bc_mask,
    InverseKind.RIGHT_ANN_BC: right_ann_bc_mask,
    InverseKind.LEFT_ANN_BC: left_ann_bc_mask,
    InverseKind.TWO_SIDED_BC: two_sided_bc_mask,
    InverseKind.HYBRID_BC: hybrid_bc_mask,
    InverseKind.ANN_BC: ann_bc_mask,
}


def witness_mask(kind, a: Element, b=None, c=None, d=None, delta=None) -> np.ndarray:
    """Definition-level mask of every ``y`` that is a ``kind``-inverse."""
    kind = InverseKind(kind)
    if kind in _BC_KINDS:
        return _MASKS[kind](a, b, c)
    if kind in _MARY_KINDS:
        if kind is InverseKind.MARY_LEFT:
            return left_bc_mask(a, d, d)
        if kind is InverseKind.MARY_RIGHT:
            return right_bc_mask(a, d, d)
        # y a d == d == d a y, y R ⊆ d R, R y ⊆ R d
        return left_bc_mask(a, d, d) & right_bc_mask(a, d, d)
    if kind is InverseKind.DELTA:
        return delta_mask(a, delta)
    if kind is InverseKind.MOORE_PENROSE:
        return delta_mask(a, {1, 2, 3, 4})
    if kind is InverseKind.GROUP:
        return group_mask(a)
    if kind is InverseKind.DRAZIN:
        return drazin_mask(a, drazin_index(a))
    raise ValueError(kind)


def witness_set(kind, a: Element, b=None, c=None, d=None, delta=None) -> list[Element]:
    """All ``kind``-inverses by exhaustive scan, sorted by code."""
    return _elements(a.ring, witness_mask(kind, a, b, c, d, delta))


def is_witness(kind, y: Element, a: Element, b=None, c=None, d=None, delta=None) -> bool:
    mask = witness_mask(kind, a, b, c, d, delta)
    same_ring(y, a)
    return bool(mask[y.code])


# -- regularity ------------------------------------------------------------------


def is_regular(x: Element) -> bool:
    """``x y x == x`` for some ``y``."""
    return bool(delta_mask(x, {1}).any())


def delta_inverses(a: Element, delta) -> list[Element]:
    """Every ``y`` satisfying the Penrose equations in ``delta``, sorted by code.

    For ``{1,3}`` and ``{1,4}`` existence is also decided through the
    one-sided (b,c) criterion and the two answers must agree.
    """
    delta = parse_delta(delta)
    found = witness_set(InverseKind.DELTA, a, delta=delta)
    ring, one, astar = a.ring, a.ring.one, a.star()
    if delta == {1, 3}:
        route = right_bc(a, one, astar) is not None
        lemma = solve_right_factor(astar, astar * a) is not None
        if route != bool(found) or lemma != bool(found):
            raise InconsistencyError(f"{{1,3}} existence disagrees for {a} in {ring.spec}")
    elif delta == {1, 4}:
        route = left_bc(a, astar, one) is not None
        lemma = solve_right_factor(a, a * astar) is not None
        if route != bool(found) or lemma != bool(found):
            raise InconsistencyError(f"{{1,4}} existence disagrees for {a} in {ring.spec}")
    return found


# -- one-sided (b,c)-inverses by criterion ----------------------------------------------


def left_bc(a: Element, b: Element, c: Element) -> Witness | None:
    """A left (b,c)-inverse ``y = s c`` where ``b = s c a b``."""
    s = ideal_eq_rb_rcab(a, b, c)
    if s is None:
        return None
    return _checked(Witness(InverseKind.LEFT_BC, s * c, {"a": a, "b": b, "c": c}, {"s": s}))


def right_bc(a: Element, b: Element, c: Element) -> Witness | None:
    """A right (b,c)-inverse ``y = b t`` where ``c = c a b t``."""
    t = ideal_eq_cr_cabr(a, b, c)
    if t is None:
        return None
    return _checked(Witness(InverseKind.RIGHT_BC, b * t, {"a": a, "b": b, "c": c}, {"t": t}))


def _big(ring: RingHandle) -> bool:
    return ring.cardinality > TABLE_LIMIT


def right_ann_bc(a: Element, b: Element, c: Element) -> Witness | None:
    """Least-code ``y`` with ``c° ⊆ y°`` and ``y a b == b``."""
    ring = same_ring(a, b, c)
    inputs = {"a": a, "b": b, "c": c}
    if _big(ring) and is_regular(c):
        # regular c: these are exactly the left (b,c)-inverses
        w = left_bc(a, b, c)
        return None if w is None else _checked(Witness(InverseKind.RIGHT_ANN_BC, w.y, inputs))
    y = _least(ring, right_ann_bc_mask(a, b, c))
    return None if y is None else _checked(Witness(InverseKind.RIGHT_ANN_BC, y, inputs))


def left_ann_bc(a: Element, b: Element, c: Element) -> Witness | None:
    """Least-code ``y`` with ``°b ⊆ °y`` and ``c a y == c``."""
    ring = same_ring(a, b, c)
    inputs = {"a": a, "b": b, "c": c}
    if _big(ring) and is_regular(b):
        w = right_bc(a, b, c)
        return None if w is None else _checked(Witness(InverseKind.LEFT_ANN_BC, w.y, inputs))
    y = _least(ring, left_ann_bc_mask(a, b, c))
    return None if y is None else _checked(Witness(InverseKind.LEFT_ANN_BC, y, inputs))


def two_sided_bc(a: Element, b: Element, c: Element) -> Witness | None:
    """The (b,c)-inverse, which exists iff both one-sided criteria hold.

    With ``b = s c a b`` and ``c = c a b t`` the candidates ``s c`` and ``b t``
    coincide; ``u = t a`` and ``v = a s`` certify ``y = b u y = y v c``.
    """
    s = ideal_eq_rb_rcab(a, b, c)
    if s is None:
        return None
    t = ideal_eq_cr_cabr(a, b, c)
    if t is None:
        return None
    y = s * c
    if y != b * t:
        raise InconsistencyError(f"s*c = {y} but b*t = {b * t} for a={a}, b={b}, c={c}")
    cert = {"s": s, "t": t, "u": t * a, "v": a * s}
    return _checked(Witness(InverseKind.TWO_SIDED_BC, y, {"a": a, "b": b, "c": c}, cert))


def hybrid_bc(a: Element, b: Element, c: Element) -> Witness | None:
    ring = same_ring(a, b, c)
    y = _least(ring, hybrid_bc_mask(a, b, c))
    return None if y is None else _checked(Witness(InverseKind.HYBRID_BC, y, {"a": a, "b": b, "c": c}))


def ann_bc(a: Element, b: Element, c: Element) -> Witness | None:
    ring = same_ring(a, b, c)
    y = _least(ring, ann_bc_mask(a, b, c))
    return None if y is None else _checked(Witness(InverseKind.ANN_BC, y, {"a": a, "b": b, "c": c}))


def inverse_along(a: Element, d: Element, side: Literal["left", "right", "both"] = "both") -> Witness | None:
    """Inverse of ``a`` along ``d``: the (d,d) case of the (b,c)-inverse."""
    route = {"left": left_bc, "right": right_bc, "both": two_sided_bc}[side]
    w = route(a, d, d)
    if w is None:
        return None
    kind = {"left": InverseKind.MARY_LEFT, "right": InverseKind.MARY_RIGHT, "both": InverseKind.MARY}[side]
    y = w.y
    if side == "both" and not (y * a * d == d == d * a * y):
        raise InconsistencyError(f"inverse of {a} along {d} fails y a d = d = d a y")
    return _checked(Witness(kind, y, {"a": a, "d": d}, w.certificate))


# -- classical special cases ---------------------------------------------------------


def moore_penrose(a: Element) -> Witness | None:
    """``a†`` by exhaustive search, with existence also decided by the route
    "left (a*,1)-invertible and right (1,a*)-invertible"."""
    one, astar = a.ring.one, a.star()
    left_route = left_bc(a, astar, one)
    right_route = right_bc(a, one, astar)
    found = witness_set(InverseKind.MOORE_PENROSE, a)
    routed = left_route is not None and right_route is not None
    if routed != bool(found) or len(found) > 1:
        raise InconsistencyError(f"Moore-Penrose routes disagree for {a}: route={routed}, search={found}")
    if not found:
        return None
    cert = {"left_route": left_route.y, "right_route": right_route.y}
    return _checked(Witness(InverseKind.MOORE_PENROSE, found[0], {"a": a}, cert))


def pi_regular(a: Element, side: Side) -> tuple[int, Element] | None:
    """Least ``n`` and least-code ``x`` with ``a^n = x a^(n+1)`` (left) or
    ``a^n = a^(n+1) x`` (right)."""
    ring, one = a.ring, a.ring.one
    an = a
    for n in range(1, ring.cardinality + 1):
        an1 = an * a
        if side == "left":
            x = solve_left_factor(an, an1)
            bridge = left_bc(a, an, one) is not None
        else:
            x = solve_right_factor(an, an1)
            bridge = right_bc(a, one, an) is not None
        if bridge != (x is not None):
            raise InconsistencyError(f"{side} pi-regularity bridge disagrees at n={n} for {a}")
        if x is not None:
            return n, x
        an = an1
    return None


def drazin_index(a: Element) -> int:
    """Least ``k`` at which ``a`` is both left and right pi-regular."""
    an = a
    for k in range(1, a.ring.cardinality + 1):
        an1 = an * a
        if solve_left_factor(an, an1) is not None and solve_right_factor(an, an1) is not None:
            return k
        an = an1
    raise InconsistencyError(f"{a} is not strongly pi-regular within |R| steps")


def drazin(a: Element) -> Witness | None:
    k = drazin_index(a)
    found = _elements(a.ring, drazin_mask(a, k))
    ak = a**k
    if len(found) != 1 or two_sided_bc(a, ak, ak) is None:
        raise InconsistencyError(f"Drazin inverse of {a} at index {k}: candidates {found}")
    return _checked(Witness(InverseKind.DRAZIN, found[0], {"a": a}, {"index": k}))


def group(a: Element) -> Witness | None:
    """Group inverse: ``a y a == a``, ``y a y == y``, ``a y == y a``."""
    found = witness_set(InverseKind.GROUP, a)
    if bool(found) != (drazin_index(a) == 1):
        raise InconsistencyError(f"group inverse of {a} disagrees with its Drazin index")
    if not found:
        return None
    return _checked(Witness(InverseKind.GROUP, found[0], {"a": a}, {"index": 1}))


def star_regular(a: Element, side: Side) -> Element | None:
    """Least ``x`` with ``a = a a* a x`` (left) or ``a = x a a* a`` (right)."""
    astar = a.star()
    core = a * astar * a
    if side == "left":
        x = solve_right_factor(a, core)
        bridge = left_bc(a, astar, astar) is not None
    else:
        x = solve_left_factor(a, core)
        bridge = right_bc(a, astar, astar) is not None
    if bridge != (x is not None):
        raise InconsistencyError(f"{side} *-regularity bridge disagrees for {a}")
    return x


# -- dispatch ----------------------------------------------------------------------


def solve(kind, a: Element, b=None, c=None, d=None, delta=None) -> Witness | None:
    """One witness of ``kind`` for the given inputs, or ``None``."""
    kind = InverseKind(kind)
    simple = {
        InverseKind.LEFT_BC: left_bc,
        InverseKind.RIGHT_BC: right_bc,
        InverseKind.RIGHT_ANN_BC: right_ann_bc,
        InverseKind.LEFT_ANN_BC: left_ann_bc,
        InverseKind.TWO_SIDED_BC: two_sided_bc,
        InverseKind.HYBRID_BC: hybrid_bc,
        InverseKind.ANN_BC: ann_bc,
    }
    if kind in simple:
        if b is None or c is None:
            raise ValueError(f"{kind} needs both b and c")
        return simple[kind](a, b, c)
    if kind in _MARY_KINDS:
        if d is None:
            raise ValueError(f"{kind} needs d")
        side = {InverseKind.MARY_LEFT: "left", InverseKind.MARY_RIGHT: "right", InverseKind.MARY: "both"}[kind]
        return inverse_along(a, d, side)
    if kind is InverseKind.DELTA:
        if delta is None:
            raise ValueError("delta needs a set of Penrose equations")
        delta = parse_delta(delta)
        found = delta_inverses(a, delta)
        if not found:
            return None
        return Witness(InverseKind.DELTA, found[0], {"a": a, "delta": delta}, {"delta": sorted(delta)})
    return {InverseKind.MOORE_PENROSE: moore_penrose, InverseKind.GROUP: group, InverseKind.DRAZIN: drazin}[kind](a)


def iter_triples(ring: RingHandle) -> Iterable[tuple[Element, Element, Element]]:
    els = list(ring.enumerate())
    for a in els:
        for b in els:
            for c in els:
                yield a, b, c
