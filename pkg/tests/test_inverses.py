import pytest

from bcinv import (
    InconsistencyError, InverseKind, ann_bc, build_ring, delta_inverses, drazin, drazin_index, group,
    hybrid_bc, inverse_along, is_regular, left_ann_bc, left_bc, moore_penrose, pi_regular,
    right_ann_bc, right_bc, solve, star_regular, two_sided_bc, witness_set,
)
from bcinv.inverses import parse_delta

from oracle import Brute


def codes(xs):
    return [x.code for x in xs]


# -- worked examples --------------------------------------------------------------


def test_z8_worked_example():
    Z8 = build_ring("zmod:8")
    a, b, c = Z8(5), Z8(0), Z8(2)
    left = witness_set(InverseKind.LEFT_BC, a, b=b, c=c)
    rann = witness_set(InverseKind.RIGHT_ANN_BC, a, b=b, c=c)
    assert Z8(4) in left and Z8(6) in rann
    assert codes(left) == [0, 2, 4, 6]
    assert codes(rann) == [0, 2, 4, 6]
    assert not is_regular(Z8(2))
    assert left_bc(a, b, c) is not None and right_ann_bc(a, b, c) is not None


def test_z6_examples():
    Z6 = build_ring("zmod:6")
    w = left_bc(Z6(2), Z6(2), Z6(2))
    assert w.y == Z6(2) and w.verify()
    assert right_bc(Z6(2), Z6(2), Z6(2)).y == Z6(2)
    assert right_bc(Z6(2), Z6(3), Z6(3)) is None
    assert left_bc(Z6(2), Z6(3), Z6(3)) is None
    w = two_sided_bc(Z6(2), Z6(2), Z6(2))
    assert w.y == Z6(2)
    assert {k: v.code for k, v in w.certificate.items()} == {"s": 1, "t": 1, "u": 2, "v": 2}
    assert hybrid_bc(Z6(2), Z6(2), Z6(2)).y == Z6(2)


def test_hybrid_and_ann_missing_on_z8():
    Z8 = build_ring("zmod:8")
    assert hybrid_bc(Z8(5), Z8(0), Z8(2)) is None
    assert ann_bc(Z8(5), Z8(0), Z8(2)) is None


def test_delta_examples():
    Z5, Z8 = build_ring("zmod:5"), build_ring("zmod:8")
    assert codes(delta_inverses(Z5(2), {1, 2, 3, 4})) == [3]
    assert delta_inverses(Z8(2), {1}) == []
    assert codes(delta_inverses(Z8(3), "1,3")) == [3]
    with pytest.raises(ValueError):
        parse_delta({5})
    with pytest.raises(ValueError):
        parse_delta("")


def test_moore_penrose_examples():
    Z5, Z8 = build_ring("zmod:5"), build_ring("zmod:8")
    assert moore_penrose(Z5(2)).y == Z5(3)
    assert moore_penrose(Z8(2)) is None
    M3 = build_ring("mat:2:zmod:3")
    e = M3([[1, 0], [0, 0]])
    assert moore_penrose(e).y == e
    assert moore_penrose(M3.zero).y == M3.zero


def test_pi_regular_drazin_group():
    Z8, Z6 = build_ring("zmod:8"), build_ring("zmod:6")
    assert pi_regular(Z8(2), "left") == (3, Z8(0))
    assert pi_regular(Z6(2), "right") == (1, Z6(2))
    assert drazin(Z8(2)).y == Z8(0)
    assert drazin_index(Z8(2)) == 3
    assert drazin(Z6(2)).y == Z6(2) and drazin_index(Z6(2)) == 1
    assert group(Z8(2)) is None
    assert group(Z6(2)).y == Z6(2)
    assert group(Z8(3)).y == Z8(3)


def test_star_regular_examples():
    Z5, Z8 = build_ring("zmod:5"), build_ring("zmod:8")
    assert star_regular(Z5(2), "left") == Z5(4)
    assert star_regular(Z8(2), "left") is None
    assert star_regular(Z8(2), "right") is None


def test_inverse_along():
    Z6 = build_ring("zmod:6")
    assert inverse_along(Z6(3), Z6(2), "left") is None
    assert inverse_along(Z6(2), Z6(2), "both").y == Z6(2)
    w = inverse_along(Z6(5), Z6(1), "both")
    assert w.y == Z6(5) and w.kind is InverseKind.MARY


def test_solve_dispatch_and_errors():
    Z6 = build_ring("zmod:6")
    assert solve("left_bc", Z6(2), b=Z6(2), c=Z6(2)).y == Z6(2)
    assert solve("mary", Z6(2), d=Z6(2)).y == Z6(2)
    assert solve("delta", Z6(5), delta="1,2").y == Z6(5)
    assert solve("drazin", Z6(4)).y == Z6(4)
    with pytest.raises(ValueError):
        solve("left_bc", Z6(2), b=Z6(2))
    with pytest.raises(ValueError):
        solve("mary", Z6(2))
    with pytest.raises(ValueError):
        solve("nope", Z6(2))


def test_witness_json():
    Z6 = build_ring("zmod:6")
    j = two_sided_bc(Z6(2), Z6(2), Z6(2)).to_json()
    assert j == {"kind": "two_sided_bc", "y": "2", "certificate": {"s": "1", "t": "1", "u": "2", "v": "2"}}


# -- oracle comparisons ----------------------------------------------------------------


RINGS = [("zmod:6", 6, None), ("zmod:8", 8, None), ("zmod:9", 9, None), ("mat:2:zmod:2", 2, 2)]


@pytest.mark.parametrize("spec,n,k", RINGS)
def test_witness_sets_match_brute(spec, n, k):
    R, B = build_ring(spec), Brute(n, k)
    els = list(R.enumerate())
    step = 1 if R.cardinality <= 9 else 3
    for a in els[::step]:
        for b in els[::step]:
            for c in els[::step]:
                t = (a.code, b.code, c.code)
                kw = {"b": b, "c": c}
                assert codes(witness_set("left_bc", a, **kw)) == B.left_set(*t)
                assert codes(witness_set("right_bc", a, **kw)) == B.right_set(*t)
                assert codes(witness_set("right_ann_bc", a, **kw)) == B.rann_set(*t)
                assert codes(witness_set("left_ann_bc", a, **kw)) == B.lann_set(*t)
                assert codes(witness_set("two_sided_bc", a, **kw)) == B.drazin_set(*t)
                assert codes(witness_set("hybrid_bc", a, **kw)) == B.hybrid_set(*t)
                assert codes(witness_set("ann_bc", a, **kw)) == B.ann_set(*t)


@pytest.mark.parametrize("spec,n,k", RINGS)
def test_routes_match_brute(spec, n, k):
    R, B = build_ring(spec), Brute(n, k)
    els = list(R.enumerate())
    for a in els:
        for b in els:
            for c in els:
                t = (a.code, b.code, c.code)
                for route, oracle in ((left_bc, B.left_set), (right_bc, B.right_set)):
                    w = route(a, b, c)
                    found = oracle(*t)
                    assert (w is not None) == bool(found)
                    if w is not None:
                        assert w.y.code in found and w.verify()
                # least-code searches
                for route, oracle in ((right_ann_bc, B.rann_set), (left_ann_bc, B.lann_set)):
                    w = route(a, b, c)
                    found = oracle(*t)
                    assert (w.y.code if w else None) == (found[0] if found else None)
                w = two_sided_bc(a, b, c)
                found = B.drazin_set(*t)
                assert len(found) <= 1
                assert (w.y.code if w else None) == (found[0] if found else None)


@pytest.mark.parametrize("spec,n,k", RINGS + [("mat:2:zmod:3", 3, 2)])
def test_classical_inverses_match_brute(spec, n, k):
    R, B = build_ring(spec), Brute(n, k)
    for a in R.enumerate():
        x = a.code
        mp = B.penrose(x, {1, 2, 3, 4})
        w = moore_penrose(a)
        assert (w.y.code if w else None) == (mp[0] if mp else None)
        for delta in ({1}, {1, 3}, {1, 4}, {1, 2}):
            assert codes(delta_inverses(a, delta)) == B.penrose(x, delta)
        # Drazin by brute force over the index
        k_ = next(j for j in range(1, B.size + 2)
                  if B.power(x, j) in B.left_ideal(B.power(x, j + 1))
                  and B.power(x, j) in B.right_ideal(B.power(x, j + 1)))
        assert drazin_index(a) == k_
        ys = [y for y in B.R() if B.mul[y][x] == B.mul[x][y] and B.m(y, x, y) == y
              and B.m(B.power(x, k_ + 1), y) == B.power(x, k_)]
        assert ys == [drazin(a).y.code]
        g = [y for y in B.R() if B.m(x, y, x) == x and B.m(y, x, y) == y and B.mul[x][y] == B.mul[y][x]]
        gw = group(a)
        assert (gw.y.code if gw else None) == (g[0] if g else None)


def test_recheck_raises_on_tampered_witness():
    Z6 = build_ring("zmod:6")
    w = left_bc(Z6(2), Z6(2), Z6(2))
    w.y = Z6(1)
    assert not w.verify()
    from bcinv.inverses import _checked
    with pytest.raises(InconsistencyError):
        _checked(w)


def test_large_ring_uses_streaming_tables():
    R = build_ring("mat:2:zmod:7")  # 2401 elements, above the bulk table limit
    a = R([[1, 2], [0, 3]])
    b = R([[1, 0], [0, 0]])
    w = left_bc(a, b, b)
    assert w is not None and w.verify()
    # b is idempotent, hence regular, so the annihilator search takes the left route
    assert right_ann_bc(a, b, b).y == w.y
