"""Registry of executable claims.

Each predicate receives a :class:`Context` and a tuple of element codes and
returns ``(ok, conditions)`` where ``conditions`` is the truth table of the
sub-statements that were compared.  Criterion routes from the library are
checked against definitional sets computed from the bulk tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from ..errors import PreconditionError
from ..inverses import (
    drazin, drazin_index, group, hybrid_bc, inverse_along, left_bc, moore_penrose,
    pi_regular, right_bc, star_regular, two_sided_bc,
)
from ..ideals import unit_sum_decomposition, unit_sum_decomposition_right
from ..perturbation import jacobson_inverse, jacobson_left, jacobson_right, perturbed_one_sided
from ..products import mixed_transfer, split_left, split_right, transfer
from .context import Context

Predicate = Callable[[Context, tuple], "tuple[bool, dict]"]


@dataclass(frozen=True)
class Claim:
    id: str
    arity: int
    predicate: Predicate
    expected: Literal["holds", "fails-somewhere"]
    anchor: str
    names: tuple[str, ...]

    @property
    def is_hunt(self) -> bool:
        return self.expected == "fails-somewhere"


_REGISTRY: dict[str, Claim] = {}


def claim(cid: str, names: str, anchor: str, expected="holds"):
    names_t = tuple(names.split(","))

    def deco(fn):
        if cid in _REGISTRY:
            raise ValueError(f"duplicate claim id {cid}")
        _REGISTRY[cid] = Claim(cid, len(names_t), fn, expected, anchor, names_t)
        return fn

    return deco


def registry() -> list[Claim]:
    return list(_REGISTRY.values())


def get_claim(cid: str) -> Claim:
    try:
        return _REGISTRY[cid]
    except KeyError:
        raise KeyError(f"unknown claim {cid!r}") from None


def _all_equal(conds: dict) -> bool:
    return len(set(conds.values())) <= 1


def _subset(x: np.ndarray, y: np.ndarray) -> bool:
    return not (x & ~y).any()


# -- existence and the two-sided case -------------------------------------------------


@claim("existence-left-bc", "a,b,c", "left (b,c)-invertible iff Rb = Rcab")
def _existence_left(ctx: Context, t):
    a, b, c = t
    w = left_bc(ctx.e(a), ctx.e(b), ctx.e(c))
    defn = ctx.exists("left_bc", a, b, c)
    conds = {"criterion": w is not None, "definition": defn}
    if w is not None:
        conds["witness_valid"] = bool(ctx.left_set(a, b, c)[w.y.code])
        return conds["witness_valid"] and defn, conds
    return not defn, conds


@claim("existence-right-bc", "a,b,c", "right (b,c)-invertible iff cR = cabR")
def _existence_right(ctx: Context, t):
    a, b, c = t
    w = right_bc(ctx.e(a), ctx.e(b), ctx.e(c))
    defn = ctx.exists("right_bc", a, b, c)
    conds = {"criterion": w is not None, "definition": defn}
    if w is not None:
        conds["witness_valid"] = bool(ctx.right_set(a, b, c)[w.y.code])
        return conds["witness_valid"] and defn, conds
    return not defn, conds


@claim("twosided-iff-left-and-right", "a,b,c", "(b,c)-invertible iff left and right (b,c)-invertible")
def _twosided(ctx: Context, t):
    a, b, c = t
    dset = np.flatnonzero(ctx.drazin_def_set(a, b, c))
    both = ctx.exists("left_bc", a, b, c) and ctx.exists("right_bc", a, b, c)
    w = two_sided_bc(ctx.e(a), ctx.e(b), ctx.e(c))
    conds = {"definition": dset.size > 0, "left_and_right": both, "constructed": w is not None,
             "unique": dset.size <= 1}
    ok = _all_equal({k: conds[k] for k in ("definition", "left_and_right", "constructed")})
    ok = ok and conds["unique"]
    if w is not None and dset.size:
        conds["matches_constructed"] = int(dset[0]) == w.y.code
        ok = ok and conds["matches_constructed"]
    return ok, conds


@claim("twosided-iff-regular-and-ann", "a,b,c",
       "(b,c)-invertible iff b, c regular and both one-sided annihilator inverses exist")
def _twosided_ann(ctx: Context, t):
    a, b, c = t
    R = ctx.bulk.regular
    conds = {
        "two_sided": ctx.exists("left_bc", a, b, c) and ctx.exists("right_bc", a, b, c),
        "regular_and_ann": bool(R[b] and R[c]) and ctx.exists("right_ann_bc", a, b, c)
        and ctx.exists("left_ann_bc", a, b, c),
    }
    return _all_equal(conds), conds


@claim("uniqueness-twosided-hybrid-ann", "a,b,c", "two-sided, hybrid and annihilator inverses are unique")
def _uniqueness(ctx: Context, t):
    a, b, c = t
    conds = {
        "two_sided": int((ctx.left_set(a, b, c) & ctx.right_set(a, b, c)).sum()) <= 1,
        "hybrid": int(ctx.hybrid_set(a, b, c).sum()) <= 1,
        "annihilator": int(ctx.ann_set(a, b, c).sum()) <= 1,
    }
    return all(conds.values()), conds


# -- regularity bridge and annihilator forms -----------------------------------------------


@claim("left-implies-rightann", "a,b,c",
       "left (b,c)-inverses are right annihilator ones; right ones are left annihilator ones")
def _left_implies_rann(ctx: Context, t):
    a, b, c = t
    conds = {
        "left_in_rightann": _subset(ctx.left_set(a, b, c), ctx.rann_set(a, b, c)),
        "right_in_leftann": _subset(ctx.right_set(a, b, c), ctx.lann_set(a, b, c)),
    }
    return all(conds.values()), conds


@claim("prop-regular-bridge", "a,b,c",
       "c regular: left = right annihilator (b,c)-inverses; b regular: right = left annihilator")
def _regular_bridge(ctx: Context, t):
    a, b, c = t
    R = ctx.bulk.regular
    conds = {"c_regular": bool(R[c]), "b_regular": bool(R[b])}
    ok = True
    if R[c]:
        conds["left_eq_rightann"] = bool((ctx.left_set(a, b, c) == ctx.rann_set(a, b, c)).all())
        ok = ok and conds["left_eq_rightann"]
    if R[b]:
        conds["right_eq_leftann"] = bool((ctx.right_set(a, b, c) == ctx.lann_set(a, b, c)).all())
        ok = ok and conds["right_eq_leftann"]
    return ok, conds


@claim("regular-ann-iff-ideal", "c,y", "c regular: c° ⊆ y° iff Ry ⊆ Rc, and dually")
def _regular_ann_ideal(ctx: Context, t):
    c, y = t
    B = ctx.bulk
    conds = {"regular": bool(B.regular[c])}
    if not B.regular[c]:
        return True, conds
    conds["right_ann"] = bool(B.rsub[c, y])
    conds["left_ideal"] = bool(B.in_left[y, c])
    conds["left_ann"] = bool(B.lsub[c, y])
    conds["right_ideal"] = bool(B.in_right[y, c])
    ok = conds["right_ann"] == conds["left_ideal"] and conds["left_ann"] == conds["right_ideal"]
    return ok, conds


@claim("star-duality-left-right", "a,b,c", "y left (b,c)-inverse of a iff y* right (c*,b*)-inverse of a*")
def _star_duality(ctx: Context, t):
    a, b, c = t
    S = ctx.star
    left = ctx.left_set(a, b, c)
    right = ctx.right_set(S[a], S[c], S[b])
    starred = np.zeros_like(left)
    starred[S[np.flatnonzero(left)]] = True
    e = ctx.e
    conds = {
        "witness_sets": bool((starred == right).all()),
        "left_route": left_bc(e(a), e(b), e(c)) is not None,
        "right_route_dual": right_bc(e(a).star(), e(c).star(), e(b).star()) is not None,
    }
    return conds["witness_sets"] and conds["left_route"] == conds["right_route_dual"], conds


@claim("star-duality-ann", "a,b,c",
       "b, c regular: left annihilator (b,c)-invertible iff a* right annihilator (c*,b*)-invertible")
def _star_duality_ann(ctx: Context, t):
    a, b, c = t
    R, S = ctx.bulk.regular, ctx.star
    if not (R[b] and R[c]):
        return True, {"regular": False}
    conds = {
        "left_ann": ctx.exists("left_ann_bc", a, b, c),
        "right_ann_dual": ctx.exists("right_ann_bc", S[a], S[c], S[b]),
    }
    return _all_equal(conds), conds


@claim("rightann-implies-bcirc-eq", "a,b,c", "right annihilator (b,c)-invertible implies b° = (cab)°")
def _rann_bcirc(ctx: Context, t):
    a, b, c = t
    exists = ctx.exists("right_ann_bc", a, b, c)
    eq = bool((ctx.right_ann_mask(b) == ctx.right_ann_mask(ctx.m(c, a, b))).all())
    return (not exists) or eq, {"right_ann_bc": exists, "bcirc_eq": eq}


@claim("leftann-implies-circc-eq", "a,b,c", "left annihilator (b,c)-invertible implies °c = °(cab)")
def _lann_circc(ctx: Context, t):
    a, b, c = t
    exists = ctx.exists("left_ann_bc", a, b, c)
    eq = bool((ctx.left_ann_mask(c) == ctx.left_ann_mask(ctx.m(c, a, b))).all())
    return (not exists) or eq, {"left_ann_bc": exists, "circc_eq": eq}


@claim("hybrid-iff-right-and-rightann", "a,b,c",
       "hybrid (b,c)-inverses = right (b,c)-inverses that are right annihilator ones")
def _hybrid(ctx: Context, t):
    a, b, c = t
    hyb = ctx.hybrid_set(a, b, c)
    both = ctx.right_set(a, b, c) & ctx.rann_set(a, b, c)
    w = hybrid_bc(ctx.e(a), ctx.e(b), ctx.e(c))
    conds = {
        "sets_equal": bool((hyb == both).all()),
        "at_most_one": int(hyb.sum()) <= 1,
        "route_agrees": (w is not None) == bool(hyb.any()),
    }
    return all(conds.values()), conds


@claim("leftpair-iff-annihilator-form", "a,b,c",
       "left and left annihilator (b,c)-inverse iff yay = y, °b = °y, Ry = Rc")
def _leftpair(ctx: Context, t):
    a, b, c = t
    B = ctx.bulk
    lhs = ctx.left_set(a, b, c) & ctx.lann_set(a, b, c)
    rhs = ctx.yay(a) & B.lsub[b, :] & B.lsub[:, b] & B.in_left[:, c] & B.in_left[c, :]
    eq = bool((lhs == rhs).all())
    return eq, {"sets_equal": eq}


@claim("ann-inverse-is-one-sided-ann", "a,b,c",
       "the annihilator (b,c)-inverse is a left and right annihilator (b,c)-inverse")
def _ann_is_onesided(ctx: Context, t):
    a, b, c = t
    ok = _subset(ctx.ann_set(a, b, c), ctx.rann_set(a, b, c) & ctx.lann_set(a, b, c))
    return ok, {"subset": ok}


@claim("onesided-pairs-are-ann-inverse", "a,b,c",
       "left+left-annihilator or right+right-annihilator inverses are annihilator inverses")
def _pairs_are_ann(ctx: Context, t):
    a, b, c = t
    ann = ctx.ann_set(a, b, c)
    conds = {
        "left_pair": _subset(ctx.left_set(a, b, c) & ctx.lann_set(a, b, c), ann),
        "right_pair": _subset(ctx.right_set(a, b, c) & ctx.rann_set(a, b, c), ann),
    }
    return all(conds.values()), conds


@claim("ann-inverse-converses-regular", "a,b,c",
       "b, c regular: annihilator inverse = both annihilator one-sided = each one-sided pair")
def _ann_regular(ctx: Context, t):
    a, b, c = t
    R = ctx.bulk.regular
    if not (R[b] and R[c]):
        return True, {"regular": False}
    ann = ctx.ann_set(a, b, c)
    conds = {
        "both_ann": bool((ann == (ctx.rann_set(a, b, c) & ctx.lann_set(a, b, c))).all()),
        "left_pair": bool((ann == (ctx.left_set(a, b, c) & ctx.lann_set(a, b, c))).all()),
        "right_pair": bool((ann == (ctx.right_set(a, b, c) & ctx.rann_set(a, b, c))).all()),
    }
    return all(conds.values()), conds


# -- five-way and direct-sum equivalences ------------------------------------------------------


def _left_conditions(ctx: Context, a, b, c) -> dict:
    B = ctx.bulk
    ca = ctx.m(c, a)
    ab = ctx.m(a, b)
    a1 = ctx.only_zero(ctx.right_ann_mask(a) & B.in_right[:, b])
    a2 = ctx.only_zero(B.in_right[:, ab] & ctx.right_ann_mask(c))
    s = ctx.one_in_left_sum(ca, b)
    return {"i": left_bc(ctx.e(a), ctx.e(b), ctx.e(c)) is not None,
            "ii": a1 and a2 and s, "iii": a1 and s, "iv": a2 and s, "v": s,
            "unit_sum": unit_sum_decomposition(ctx.e(ca), ctx.e(b)) is not None,
            "definition": ctx.exists("left_bc", a, b, c)}


def _right_conditions(ctx: Context, a, b, c) -> dict:
    B = ctx.bulk
    ca = ctx.m(c, a)
    ab = ctx.m(a, b)
    b1 = ctx.only_zero(ctx.left_ann_mask(a) & B.in_left[:, c])
    b2 = ctx.only_zero(B.in_left[:, ca] & ctx.left_ann_mask(b))
    s = ctx.one_in_right_sum(ab, c)
    return {"i": right_bc(ctx.e(a), ctx.e(b), ctx.e(c)) is not None,
            "ii": b1 and b2 and s, "iii": b1 and s, "iv": b2 and s, "v": s,
            "unit_sum": unit_sum_decomposition_right(ctx.e(ab), ctx.e(c)) is not None,
            "definition": ctx.exists("right_bc", a, b, c)}


@claim("fiveway-left", "a,b,c", "left (b,c)-invertible iff R = Rca + °b, with four equivalent forms")
def _fiveway_left(ctx: Context, t):
    conds = _left_conditions(ctx, *t)
    return _all_equal(conds), conds


@claim("fiveway-right", "a,b,c", "right (b,c)-invertible iff R = abR + c°, with four equivalent forms")
def _fiveway_right(ctx: Context, t):
    conds = _right_conditions(ctx, *t)
    return _all_equal(conds), conds


@claim("direct-sum-twosided", "a,b,c", "(b,c)-invertible iff R = abR ⊕ c° and R = Rca ⊕ °b")
def _direct_sum(ctx: Context, t):
    a, b, c = t
    B = ctx.bulk
    ca, ab = ctx.m(c, a), ctx.m(a, b)
    a1 = ctx.only_zero(ctx.right_ann_mask(a) & B.in_right[:, b])
    b1 = ctx.only_zero(ctx.left_ann_mask(a) & B.in_left[:, c])
    s1 = ctx.one_in_right_sum(ab, c)
    s2 = ctx.one_in_left_sum(ca, b)
    ds1 = s1 and ctx.only_zero(B.in_right[:, ab] & ctx.right_ann_mask(c))
    ds2 = s2 and ctx.only_zero(B.in_left[:, ca] & ctx.left_ann_mask(b))
    conds = {"i": two_sided_bc(ctx.e(a), ctx.e(b), ctx.e(c)) is not None,
             "ii": a1 and b1 and ds1 and ds2, "iii": a1 and b1 and s1 and s2,
             "iv": ds1 and ds2, "v": s1 and s2}
    return _all_equal(conds), conds


# -- involution specializations ---------------------------------------------------------------


@claim("inverse-13-criteria", "a", "{1,3}-invertible iff a*R = a*aR iff Ra = Ra*a iff R = Ra* + °a iff R = aR + (a*)°")
def _lemma13(ctx: Context, t):
    (a,) = t
    B, s = ctx.bulk, int(ctx.star[a])
    sa = ctx.m(s, a)
    conds = {
        "delta13": bool(ctx.delta_set(a, {1, 3}).any()),
        "astarR": bool(B.in_right[s, sa]),
        "Ra": bool(B.in_left[a, sa]),
        "left_sum": ctx.one_in_left_sum(s, a),
        "right_sum": ctx.one_in_right_sum(a, s),
    }
    return _all_equal(conds), conds


@claim("inverse-14-criteria", "a", "{1,4}-invertible iff aR = aa*R iff Ra* = Raa* iff R = Ra + °(a*) iff R = a*R + a°")
def _lemma14(ctx: Context, t):
    (a,) = t
    B, s = ctx.bulk, int(ctx.star[a])
    as_ = ctx.m(a, s)
    conds = {
        "delta14": bool(ctx.delta_set(a, {1, 4}).any()),
        "aR": bool(B.in_right[a, as_]),
        "Rastar": bool(B.in_left[s, as_]),
        "left_sum": ctx.one_in_left_sum(a, s),
        "right_sum": ctx.one_in_right_sum(s, a),
    }
    return _all_equal(conds), conds


@claim("inverse-13-is-right-bc", "a", "every {1,3}-inverse is a right (1,a*)-inverse")
def _example13(ctx: Context, t):
    (a,) = t
    ok = _subset(ctx.delta_set(a, {1, 3}), ctx.right_set(a, ctx.one, int(ctx.star[a])))
    return ok, {"subset": ok}


@claim("inverse-14-is-left-bc", "a", "every {1,4}-inverse is a left (a*,1)-inverse")
def _example14(ctx: Context, t):
    (a,) = t
    ok = _subset(ctx.delta_set(a, {1, 4}), ctx.left_set(a, int(ctx.star[a]), ctx.one))
    return ok, {"subset": ok}


@claim("mp-left-astar-1-iff-14", "a", "left (a*,1)-invertible iff {1,4}-invertible")
def _mp_left(ctx: Context, t):
    (a,) = t
    e = ctx.e(a)
    conds = {"left_route": left_bc(e, e.star(), ctx.e(ctx.one)) is not None,
             "delta14": bool(ctx.delta_set(a, {1, 4}).any())}
    return _all_equal(conds), conds


@claim("mp-right-1-astar-iff-13", "a", "right (1,a*)-invertible iff {1,3}-invertible")
def _mp_right(ctx: Context, t):
    (a,) = t
    e = ctx.e(a)
    conds = {"right_route": right_bc(e, ctx.e(ctx.one), e.star()) is not None,
             "delta13": bool(ctx.delta_set(a, {1, 3}).any())}
    return _all_equal(conds), conds


@claim("mp-iff-both", "a", "Moore-Penrose invertible iff left (a*,1)- and right (1,a*)-invertible")
def _mp_both(ctx: Context, t):
    (a,) = t
    e, one = ctx.e(a), ctx.e(ctx.one)
    mp = ctx.delta_set(a, {1, 2, 3, 4})
    w = moore_penrose(e)
    conds = {
        "definition": bool(mp.any()),
        "route": left_bc(e, e.star(), one) is not None and right_bc(e, one, e.star()) is not None,
        "solver": w is not None,
    }
    ok = _all_equal(conds) and int(mp.sum()) <= 1
    if w is not None:
        ok = ok and bool(mp[w.y.code])
    return ok, conds


@claim("astar-one-criteria", "a", "right (a*,1)-invertible iff R = aa*R; left (1,a*)-invertible iff R = Ra*a")
def _astar_one(ctx: Context, t):
    (a,) = t
    B, s, one = ctx.bulk, int(ctx.star[a]), ctx.one
    e, E1 = ctx.e(a), ctx.e(one)
    conds = {
        "right_route": right_bc(e, e.star(), E1) is not None,
        "R_eq_aastarR": bool(B.in_right[one, ctx.m(a, s)]),
        "left_route": left_bc(e, E1, e.star()) is not None,
        "R_eq_Rastara": bool(B.in_left[one, ctx.m(s, a)]),
    }
    ok = conds["right_route"] == conds["R_eq_aastarR"] and conds["left_route"] == conds["R_eq_Rastara"]
    return ok, conds


@claim("a-astar-criteria", "a", "left (a,a*)-invertible iff a ∈ Ra*a²; right (a,a*)-invertible iff a* ∈ a*a²R")
def _a_astar(ctx: Context, t):
    (a,) = t
    B, s = ctx.bulk, int(ctx.star[a])
    e = ctx.e(a)
    conds = {
        "left_route": left_bc(e, e, e.star()) is not None,
        "a_in_Rastaraa": bool(B.in_left[a, ctx.m(s, a, a)]),
        "right_route": right_bc(e, e, e.star()) is not None,
        "astar_in_astaraaR": bool(B.in_right[s, ctx.m(s, a, a)]),
    }
    ok = conds["left_route"] == conds["a_in_Rastaraa"] and conds["right_route"] == conds["astar_in_astaraaR"]
    return ok, conds


@claim("astar-a-criteria", "a", "left (a*,a)-invertible iff a* ∈ Ra²a*; right (a*,a)-invertible iff a ∈ a²a*R")
def _astar_a(ctx: Context, t):
    (a,) = t
    B, s = ctx.bulk, int(ctx.star[a])
    e = ctx.e(a)
    conds = {
        "left_route": left_bc(e, e.star(), e) is not None,
        "astar_in_Raaastar": bool(B.in_left[s, ctx.m(a, a, s)]),
        "right_route": right_bc(e, e.star(), e) is not None,
        "a_in_aaastarR": bool(B.in_right[a, ctx.m(a, a, s)]),
    }
    ok = conds["left_route"] == conds["astar_in_Raaastar"] and conds["right_route"] == conds["a_in_aaastarR"]
    return ok, conds


# -- special pairs: units, regularity, *-regularity, pi-regularity ------------------------------


@claim("onesided-units", "a", "left (1,1)-invertible iff left invertible, and dually")
def _units(ctx: Context, t):
    (a,) = t
    e, E1 = ctx.e(a), ctx.e(ctx.one)
    B = ctx.bulk
    conds = {"left_route": left_bc(e, E1, E1) is not None, "left_unit": bool(B.left_unit[a]),
             "right_route": right_bc(e, E1, E1) is not None, "right_unit": bool(B.right_unit[a])}
    ok = conds["left_route"] == conds["left_unit"] and conds["right_route"] == conds["right_unit"]
    return ok, conds


@claim("onesided-regular", "a", "left (a,a)-invertible iff a ∈ Ra², right iff a ∈ a²R")
def _regular(ctx: Context, t):
    (a,) = t
    e, B, aa = ctx.e(a), ctx.bulk, ctx.m(a, a)
    conds = {"left_route": left_bc(e, e, e) is not None, "left_regular": bool(B.in_left[a, aa]),
             "right_route": right_bc(e, e, e) is not None, "right_regular": bool(B.in_right[a, aa])}
    ok = conds["left_route"] == conds["left_regular"] and conds["right_route"] == conds["right_regular"]
    return ok, conds


@claim("onesided-star-regular", "a", "left (a*,a*)-invertible iff a = aa*ax, right iff a = xaa*a")
def _star_regular(ctx: Context, t):
    (a,) = t
    e, B, s = ctx.e(a), ctx.bulk, int(ctx.star[a])
    core = ctx.m(a, s, a)
    conds = {
        "left_route": left_bc(e, e.star(), e.star()) is not None,
        "left_star_regular": bool(B.in_right[a, core]),
        "left_solver": star_regular(e, "left") is not None,
        "right_route": right_bc(e, e.star(), e.star()) is not None,
        "right_star_regular": bool(B.in_left[a, core]),
        "right_solver": star_regular(e, "right") is not None,
    }
    ok = (conds["left_route"] == conds["left_star_regular"] == conds["left_solver"]
          and conds["right_route"] == conds["right_star_regular"] == conds["right_solver"])
    return ok, conds


def _powers(ctx: Context, a: int):
    """``a^n`` for ``n = 1 .. |R|``."""
    out, x = [], a
    for _ in range(ctx.n):
        out.append(x)
        x = ctx.m(x, a)
    return out


@claim("onesided-powers-pi", "a", "left (a^n,a^n)-invertible iff a^n ∈ Ra^(n+1), and dually, for every n")
def _powers_pi(ctx: Context, t):
    (a,) = t
    B = ctx.bulk
    pw = _powers(ctx, a)
    for n, an in enumerate(pw, start=1):
        an1 = ctx.m(an, a)
        conds = {"n": n,
                 "left": ctx.exists("left_bc", a, an, an), "left_pi": bool(B.in_left[an, an1]),
                 "right": ctx.exists("right_bc", a, an, an), "right_pi": bool(B.in_right[an, an1])}
        if conds["left"] != conds["left_pi"] or conds["right"] != conds["right_pi"]:
            return False, conds
    return True, {}


@claim("pi-left", "a", "left (a^n,1)-invertible iff a^n ∈ Ra^(n+1)")
def _pi_left(ctx: Context, t):
    (a,) = t
    B = ctx.bulk
    for n, an in enumerate(_powers(ctx, a), start=1):
        route = ctx.exists("left_bc", a, an, ctx.one)
        pi = bool(B.in_left[an, ctx.m(an, a)])
        if route != pi:
            return False, {"n": n, "route": route, "pi": pi}
    got = pi_regular(ctx.e(a), "left")
    return got is not None, {"solver": got is not None}


@claim("pi-right", "a", "right (1,a^n)-invertible iff a^n ∈ a^(n+1)R")
def _pi_right(ctx: Context, t):
    (a,) = t
    B = ctx.bulk
    for n, an in enumerate(_powers(ctx, a), start=1):
        route = ctx.exists("right_bc", a, ctx.one, an)
        pi = bool(B.in_right[an, ctx.m(an, a)])
        if route != pi:
            return False, {"n": n, "route": route, "pi": pi}
    got = pi_regular(ctx.e(a), "right")
    return got is not None, {"solver": got is not None}


@claim("pi-strong-drazin", "a",
       "strongly pi-regular iff Drazin invertible iff (a^k,a^k)-invertible at the index k")
def _pi_drazin(ctx: Context, t):
    (a,) = t
    e = ctx.e(a)
    w = drazin(e)
    k = drazin_index(e)
    y, ak = w.y, e**k
    conds = {
        "exists": w is not None,
        "commutes": y * e == e * y,
        "yay": y * e * y == y,
        "index_eq": e ** (k + 1) * y == ak,
        "two_sided": two_sided_bc(e, ak, ak) is not None,
        "left_and_right": ctx.exists("left_bc", a, ak.code, ctx.one) and ctx.exists("right_bc", a, ctx.one, ak.code),
    }
    return all(conds.values()), conds


@claim("group-iff-n1", "a", "group invertible iff left (a,1)- and right (1,a)-invertible")
def _group(ctx: Context, t):
    (a,) = t
    e = ctx.e(a)
    conds = {
        "group": group(e) is not None,
        "route": ctx.exists("left_bc", a, a, ctx.one) and ctx.exists("right_bc", a, ctx.one, a),
        "index_one": drazin_index(e) == 1,
    }
    return _all_equal(conds), conds


@claim("onesided-vs-along", "a,b,c",
       "Rc ⊆ Rb ⊆ Rcab or Rb = Rc: left (b,c) = left along b; dually on the right")
def _onesided_along(ctx: Context, t):
    a, b, c = t
    B = ctx.bulk
    cab = ctx.m(c, a, b)
    e = ctx.e
    conds = {}
    ok = True
    if (B.in_left[c, b] and B.in_left[b, cab]) or (B.in_left[c, b] and B.in_left[b, c]):
        conds["left_bc"] = ctx.exists("left_bc", a, b, c)
        conds["left_along_b"] = inverse_along(e(a), e(b), "left") is not None
        ok = ok and conds["left_bc"] == conds["left_along_b"]
    if (B.in_right[b, c] and B.in_right[c, cab]) or (B.in_right[b, c] and B.in_right[c, b]):
        conds["right_bc"] = ctx.exists("right_bc", a, b, c)
        conds["right_along_c"] = inverse_along(e(a), e(c), "right") is not None
        ok = ok and conds["right_bc"] == conds["right_along_c"]
    return ok, conds


@claim("example-bc-implies-onesided", "a,b,c", "a (b,c)-inverse is both a left and a right (b,c)-inverse")
def _example_bc(ctx: Context, t):
    a, b, c = t
    dset = ctx.drazin_def_set(a, b, c)
    ok = _subset(dset, ctx.left_set(a, b, c) & ctx.right_set(a, b, c))
    return ok, {"subset": ok}


@claim("example-mary-implies-onesided", "a,d", "inverse along d is a left and right (d,d)-inverse")
def _example_mary(ctx: Context, t):
    a, d = t
    e = ctx.e
    both = inverse_along(e(a), e(d), "both")
    conds = {"along": both is not None,
             "left": left_bc(e(a), e(d), e(d)) is not None,
             "right": right_bc(e(a), e(d), e(d)) is not None}
    ok = (not conds["along"]) or (conds["left"] and conds["right"]
                                  and bool(ctx.left_set(a, d, d)[both.y.code] and ctx.right_set(a, d, d)[both.y.code]))
    return ok, conds


# -- products ---------------------------------------------------------------------------------


def _split_claim(ctx: Context, t, side: str):
    p, a, q, b, c = t
    kind = "left_bc" if side == "left" else "right_bc"
    paq, pa, aq = ctx.m(p, a, q), ctx.m(p, a), ctx.m(a, q)
    whole = ctx.exists(kind, paq, b, c)
    parts = ctx.exists(kind, pa, ctx.m(q, b), c) and ctx.exists(kind, aq, b, ctx.m(c, p))
    e = ctx.e
    res = (split_left if side == "left" else split_right)(e(p), e(a), e(q), e(b), e(c))
    conds = {"whole": whole, "parts": parts, "split": res.exists}
    if not _all_equal(conds):
        return False, conds
    if res.exists:
        y, x, z = res.y, res.x, res.z
        sets = ctx.left_set if side == "left" else ctx.right_set
        conds.update(
            y=bool(sets(paq, b, c)[y.code]),
            x_qy=bool(sets(pa, ctx.m(q, b), c)[x.code]),
            z_yp=bool(sets(aq, b, ctx.m(c, p))[z.code]),
            zax=bool(sets(paq, b, c)[ctx.m(z.code, a, x.code)]),
        )
        return all(conds.values()), conds
    return True, conds


@claim("product-split-left", "p,a,q,b,c",
       "paq left (b,c)-invertible iff pa left (qb,c)- and aq left (b,cp)-invertible")
def _split_l(ctx: Context, t):
    return _split_claim(ctx, t, "left")


@claim("product-split-right", "p,a,q,b,c",
       "paq right (b,c)-invertible iff pa right (qb,c)- and aq right (b,cp)-invertible")
def _split_r(ctx: Context, t):
    return _split_claim(ctx, t, "right")


def _transfer_claim(ctx: Context, t, side: str):
    p, a, q, b, c = t
    B = ctx.bulk
    e = ctx.e
    need_q = B.in_left[b, ctx.m(q, b)]
    need_p = B.in_right[c, ctx.m(c, p)]
    conds = {"q_prime": bool(need_q), "p_prime": bool(need_p)}
    want = {"left": need_q, "right": need_p, "both": need_q and need_p}[side]
    try:
        res = transfer(e(p), e(a), e(q), e(b), e(c), side)
    except PreconditionError:
        return not want, conds
    if not want:
        return False, conds
    paq, qb, cp = ctx.m(p, a, q), ctx.m(q, b), ctx.m(c, p)
    if side == "both":
        whole = ctx.two_sided_table[paq, b, c] >= 0
        inner = ctx.two_sided_table[a, qb, cp] >= 0
    else:
        kind = side + "_bc"
        whole, inner = ctx.exists(kind, paq, b, c), ctx.exists(kind, a, qb, cp)
    conds.update(whole=bool(whole), inner=bool(inner), transfer=res.exists)
    ok = conds["whole"] == conds["inner"] == conds["transfer"]
    if res.exists and side != "both":
        sets = ctx.left_set if side == "left" else ctx.right_set
        conds["w_valid"] = bool(sets(a, qb, cp)[res.w.code])
        ok = ok and conds["w_valid"]
    return ok, conds


@claim("transfer-left", "p,a,q,b,c",
       "with q'qb = b: paq left (b,c)-invertible iff a left (qb,cp)-invertible")
def _transfer_l(ctx: Context, t):
    return _transfer_claim(ctx, t, "left")


@claim("transfer-right", "p,a,q,b,c",
       "with cpp' = c: paq right (b,c)-invertible iff a right (qb,cp)-invertible")
def _transfer_r(ctx: Context, t):
    return _transfer_claim(ctx, t, "right")


@claim("transfer-twosided", "p,a,q,b,c",
       "with q'qb = b and cpp' = c: paq (b,c)-invertible iff a (qb,cp)-invertible")
def _transfer_b(ctx: Context, t):
    return _transfer_claim(ctx, t, "both")


@claim("mixed-twosided", "p,a,q,b,c",
       "with q'qc = c and bpp' = b: paq (b,c)-invertible iff pa right (qb,qc)- and aq left (bp,cp)-invertible")
def _mixed(ctx: Context, t):
    p, a, q, b, c = t
    B = ctx.bulk
    e = ctx.e
    want = bool(B.in_left[c, ctx.m(q, c)] and B.in_right[b, ctx.m(b, p)])
    try:
        res = mixed_transfer(e(p), e(a), e(q), e(b), e(c))
    except PreconditionError:
        return not want, {"precondition": False}
    if not want:
        return False, {"precondition": True, "oracle_precondition": False}
    paq = ctx.m(p, a, q)
    conds = {
        "whole": bool(ctx.two_sided_table[paq, b, c] >= 0),
        "parts": ctx.exists("right_bc", ctx.m(p, a), ctx.m(q, b), ctx.m(q, c))
        and ctx.exists("left_bc", ctx.m(a, q), ctx.m(b, p), ctx.m(c, p)),
        "mixed": res.exists,
    }
    ok = _all_equal(conds)
    if res.exists:
        conds["y_zax"] = res.y.code == int(ctx.two_sided_table[paq, b, c])
        ok = ok and conds["y_zax"]
    return ok, conds


# -- Jacobson and perturbation ------------------------------------------------------------------


def _jac_elements(ctx: Context, a, b):
    one = ctx.one
    u = int(ctx.add(one, ctx.m(a, b)))
    v = int(ctx.add(one, ctx.m(b, a)))
    return u, v


@claim("jacobson-i", "a,b", "y(1+ab) = 1 gives (1 - bya)(1 + ba) = 1")
def _jac_i(ctx: Context, t):
    a, b = t
    u, v = _jac_elements(ctx, a, b)
    L = ctx.bulk.left_unit
    conds = {"u_left_unit": bool(L[u]), "v_left_unit": bool(L[v])}
    ok = conds["u_left_unit"] == conds["v_left_unit"]
    if L[u]:
        y = int(np.flatnonzero(ctx.mul[:, u] == ctx.one)[0])
        out = jacobson_left(ctx.e(a), ctx.e(b), ctx.e(y))
        conds["formula"] = ctx.m(out.code, v) == ctx.one
        ok = ok and conds["formula"]
    return ok, conds


@claim("jacobson-ii", "a,b", "(1+ab)x = 1 gives (1 + ba)(1 - bxa) = 1")
def _jac_ii(ctx: Context, t):
    a, b = t
    u, v = _jac_elements(ctx, a, b)
    R = ctx.bulk.right_unit
    conds = {"u_right_unit": bool(R[u]), "v_right_unit": bool(R[v])}
    ok = conds["u_right_unit"] == conds["v_right_unit"]
    if R[u]:
        x = int(np.flatnonzero(ctx.mul[u, :] == ctx.one)[0])
        out = jacobson_right(ctx.e(a), ctx.e(b), ctx.e(x))
        conds["formula"] = ctx.m(v, out.code) == ctx.one
        ok = ok and conds["formula"]
    return ok, conds


@claim("jacobson-iii", "a,b", "(1+ba)^-1 = 1 - b(1+ab)^-1 a")
def _jac_iii(ctx: Context, t):
    a, b = t
    u, v = _jac_elements(ctx, a, b)
    B = ctx.bulk
    ui = bool(B.left_unit[u] and B.right_unit[u])
    vi = bool(B.left_unit[v] and B.right_unit[v])
    conds = {"u_unit": ui, "v_unit": vi}
    ok = ui == vi
    if ui:
        inv = int(np.flatnonzero(ctx.mul[:, u] == ctx.one)[0])
        out = jacobson_inverse(ctx.e(a), ctx.e(b), ctx.e(inv))
        conds["formula"] = ctx.m(out.code, v) == ctx.one == ctx.m(v, out.code)
        ok = ok and conds["formula"]
    return ok, conds


def _perturbation_claim(ctx: Context, t, side: str):
    a, b, c, abc, alpha = t
    if ctx.two_sided_table[a, b, c] != abc:
        return True, {"hypothesis": False}
    B = ctx.bulk
    diff = int(ctx.add(alpha, ctx.neg[a]))
    u = int(ctx.add(ctx.one, ctx.m(diff, abc)))
    v = int(ctx.add(ctx.one, ctx.m(abc, diff)))
    if side == "left":
        oracle = (ctx.exists("left_bc", alpha, b, c), ctx.exists("right_ann_bc", alpha, b, c),
                  bool(B.left_unit[u]), bool(B.left_unit[v]))
    else:
        oracle = (ctx.exists("right_bc", alpha, b, c), ctx.exists("left_ann_bc", alpha, b, c),
                  bool(B.right_unit[u]), bool(B.right_unit[v]))
    e = ctx.e
    res = perturbed_one_sided(e(a), e(b), e(c), e(abc), e(alpha), side)
    conds = dict(zip(("i", "ii", "iii", "iv"), oracle))
    conds["library"] = res.invertible
    return _all_equal(conds), conds


@claim("perturbation-left-4way", "a,b,c,a_bc,alpha",
       "alpha left (b,c)-invertible iff right annihilator one iff 1+(alpha-a)a_bc iff 1+a_bc(alpha-a) left invertible")
def _pert_left(ctx: Context, t):
    return _perturbation_claim(ctx, t, "left")


@claim("perturbation-right-4way", "a,b,c,a_bc,alpha",
       "alpha right (b,c)-invertible iff left annihilator one iff 1+(alpha-a)a_bc iff 1+a_bc(alpha-a) right invertible")
def _pert_right(ctx: Context, t):
    return _perturbation_claim(ctx, t, "right")


# -- converse hunts: statements that may fail somewhere ----------------------------------------------


@claim("converse-annihilator-to-onesided", "a,b,c",
       "right annihilator inverses are left inverses (converse, may fail)", expected="fails-somewhere")
def _hunt_ann_to_onesided(ctx: Context, t):
    a, b, c = t
    conds = {
        "rightann_in_left": _subset(ctx.rann_set(a, b, c), ctx.left_set(a, b, c)),
        "leftann_in_right": _subset(ctx.lann_set(a, b, c), ctx.right_set(a, b, c)),
    }
    return all(conds.values()), conds


@claim("ann-eq-but-not-ideal", "c,y", "c° = y° forces y ∈ Rc (may fail)", expected="fails-somewhere")
def _hunt_ann_eq(ctx: Context, t):
    c, y = t
    B = ctx.bulk
    eq = bool(B.rsub[c, y] and B.rsub[y, c])
    inside = bool(B.in_left[y, c])
    return (not eq) or inside, {"ann_equal": eq, "y_in_Rc": inside}


@claim("converse-bcirc-equality", "a,b,c", "b° = (cab)° forces right annihilator (b,c)-invertibility (may fail)",
       expected="fails-somewhere")
def _hunt_bcirc(ctx: Context, t):
    ok, conds = _rann_bcirc(ctx, t)
    return (not conds["bcirc_eq"]) or conds["right_ann_bc"], conds


@claim("converse-circc-equality", "a,b,c", "°c = °(cab) forces left annihilator (b,c)-invertibility (may fail)",
       expected="fails-somewhere")
def _hunt_circc(ctx: Context, t):
    ok, conds = _lann_circc(ctx, t)
    return (not conds["circc_eq"]) or conds["left_ann_bc"], conds


@claim("converse-ann-inverse-to-onesided", "a,b,c",
       "the annihilator (b,c)-inverse is a left (b,c)-inverse (may fail)", expected="fails-somewhere")
def _hunt_ann_inverse(ctx: Context, t):
    a, b, c = t
    ann = ctx.ann_set(a, b, c)
    ok = _subset(ann, ctx.left_set(a, b, c))
    return ok, {"ann_in_left": ok, "ann_exists": bool(ann.any())}


@claim("witness-inequality-left-vs-rightann", "a,b,c",
       "any left (b,c)-inverse y equals any right annihilator (b,c)-inverse z (may fail)",
       expected="fails-somewhere")
def _hunt_witness_sets(ctx: Context, t):
    a, b, c = t
    left, rann = ctx.left_set(a, b, c), ctx.rann_set(a, b, c)
    both = bool(left.any() and rann.any())
    ok = not both or int((left | rann).sum()) == 1
    fmt = ctx.ring.format_code
    return ok, {"both_exist": both,
                "left_set": [fmt(int(y)) for y in np.flatnonzero(left)],
                "rightann_set": [fmt(int(z)) for z in np.flatnonzero(rann)]}


@claim("onesided-implies-regular-bc", "a,b,c",
       "left (b,c)-invertibility forces b and c regular (may fail)", expected="fails-somewhere")
def _hunt_regular(ctx: Context, t):
    a, b, c = t
    R = ctx.bulk.regular
    exists = ctx.exists("left_bc", a, b, c)
    return (not exists) or bool(R[b] and R[c]), {"left_bc": exists, "b_regular": bool(R[b]), "c_regular": bool(R[c])}


@claim("product-maps-arbitrary-witness", "p,a,q,b,c",
       "every choice of witnesses satisfies x = qy, z = yp, y = zax (may fail)", expected="fails-somewhere")
def _hunt_product_maps(ctx: Context, t):
    p, a, q, b, c = t
    paq = ctx.m(p, a, q)
    ys = np.flatnonzero(ctx.left_set(paq, b, c))
    xs = np.flatnonzero(ctx.left_set(ctx.m(p, a), ctx.m(q, b), c))
    zs = np.flatnonzero(ctx.left_set(ctx.m(a, q), b, ctx.m(c, p)))
    if not (ys.size and xs.size and zs.size):
        return True, {"witnesses": False}
    mul = ctx.mul
    x_qy = bool((mul[q, ys][:, None] == xs[None, :]).all())
    z_yp = bool((mul[ys, p][:, None] == zs[None, :]).all())
    zax = mul[mul[zs, a][:, None], xs[None, :]]
    y_zax = bool((zax[..., None] == ys[None, None, :]).all())
    conds = {"x_qy": x_qy, "z_yp": z_yp, "y_zax": y_zax}
    return all(conds.values()), conds
