import json

import pytest

from bcinv.harness import BudgetExceeded, Mode, expand_rings, get_claim, hunt, registry, verify

# one id per statement, grouped by topic; hunts last
MANIFEST = {
    # existence, two-sided case, uniqueness
    "existence-left-bc": 3, "existence-right-bc": 3, "twosided-iff-left-and-right": 3,
    "twosided-iff-regular-and-ann": 3, "uniqueness-twosided-hybrid-ann": 3,
    # annihilator forms and the regularity bridge
    "left-implies-rightann": 3, "prop-regular-bridge": 3, "regular-ann-iff-ideal": 2,
    "star-duality-left-right": 3, "star-duality-ann": 3, "rightann-implies-bcirc-eq": 3,
    "leftann-implies-circc-eq": 3, "hybrid-iff-right-and-rightann": 3, "leftpair-iff-annihilator-form": 3,
    "ann-inverse-is-one-sided-ann": 3, "onesided-pairs-are-ann-inverse": 3,
    "ann-inverse-converses-regular": 3,
    # ideal decompositions
    "fiveway-left": 3, "fiveway-right": 3, "direct-sum-twosided": 3,
    # involution specializations
    "inverse-13-criteria": 1, "inverse-14-criteria": 1, "inverse-13-is-right-bc": 1, "inverse-14-is-left-bc": 1,
    "mp-left-astar-1-iff-14": 1, "mp-right-1-astar-iff-13": 1, "mp-iff-both": 1,
    "astar-one-criteria": 1, "a-astar-criteria": 1, "astar-a-criteria": 1,
    # units, regularity, pi-regularity, inverse along an element
    "onesided-units": 1, "onesided-regular": 1, "onesided-star-regular": 1, "onesided-powers-pi": 1,
    "pi-left": 1, "pi-right": 1, "pi-strong-drazin": 1, "group-iff-n1": 1,
    "onesided-vs-along": 3, "example-bc-implies-onesided": 3, "example-mary-implies-onesided": 2,
    # products
    "product-split-left": 5, "product-split-right": 5, "transfer-left": 5, "transfer-right": 5,
    "transfer-twosided": 5, "mixed-twosided": 5,
    # Jacobson and perturbation
    "jacobson-i": 2, "jacobson-ii": 2, "jacobson-iii": 2,
    "perturbation-left-4way": 5, "perturbation-right-4way": 5,
    # converse hunts
    "converse-annihilator-to-onesided": 3, "ann-eq-but-not-ideal": 2,
    "converse-bcirc-equality": 3, "converse-circc-equality": 3, "converse-ann-inverse-to-onesided": 3,
    "witness-inequality-left-vs-rightann": 3, "onesided-implies-regular-bc": 3,
    "product-maps-arbitrary-witness": 5,
}
HUNTS = {k for k in MANIFEST if k.startswith(("converse-", "witness-inequality", "ann-eq-but",
                                              "onesided-implies", "product-maps"))}

HOLDS = [c.id for c in registry() if not c.is_hunt]


def test_registry_matches_manifest():
    ids = [c.id for c in registry()]
    assert len(ids) == len(set(ids))
    assert {c.id: c.arity for c in registry()} == MANIFEST
    assert {c.id for c in registry() if c.is_hunt} == HUNTS
    for c in registry():
        assert c.anchor and len(c.names) == c.arity


def test_registry_examples():
    assert get_claim("existence-left-bc").arity == 3
    assert get_claim("perturbation-left-4way").names == ("a", "b", "c", "a_bc", "alpha")
    assert get_claim("converse-annihilator-to-onesided").expected == "fails-somewhere"
    with pytest.raises(KeyError):
        get_claim("nosuch")


def test_verify_examples():
    r = verify("existence-left-bc", "zmod:8", "exhaustive")
    assert (r.cases, r.failed, r.verdict) == (512, 0, "pass")
    r = verify("jacobson-iii", "zmod:12", "exhaustive")
    assert (r.cases, r.failed) == (144, 0)
    r = verify("existence-left-bc", "mat:2:zmod:3", "sample:1:1000")
    assert (r.cases, r.failed, r.seed) == (1000, 0, 1)


def test_verify_is_deterministic():
    a = verify("product-maps-arbitrary-witness", "zmod:6", "sample:7:400").to_json()
    b = verify("product-maps-arbitrary-witness", "zmod:6", "sample:7:400").to_json()
    for r in (a, b):
        r.pop("elapsed_ms")
    assert a == b
    assert a["failed"] > 0
    assert a != verify("product-maps-arbitrary-witness", "zmod:6", "sample:8:400").to_json()


def test_workers_do_not_change_reports():
    one = verify("product-maps-arbitrary-witness", "zmod:4", "exhaustive").to_json()
    two = verify("product-maps-arbitrary-witness", "zmod:4", "exhaustive", workers=2).to_json()
    for r in (one, two):
        r.pop("elapsed_ms")
    assert one == two


def test_report_json_shape():
    r = verify("converse-annihilator-to-onesided", "zmod:4").to_json()
    assert {"claim", "ring", "mode", "seed", "cases", "failures", "elapsed_ms"} <= set(r)
    json.dumps(r)
    r = verify("product-maps-arbitrary-witness", "mat:2:zmod:2", "sample:3:200").to_json()
    f = r["failures"][0]
    assert set(f["tuple"]) == {"p", "a", "q", "b", "c"}
    assert all(v.startswith("[[") for v in f["tuple"].values())


def test_budget_and_modes():
    with pytest.raises(BudgetExceeded):
        verify("product-split-left", "zmod:12", "exhaustive", budget=1000)
    with pytest.raises(ValueError):
        Mode.parse("sample:1")
    with pytest.raises(KeyError):
        verify("nosuch", "zmod:4")
    assert str(Mode.parse("sample:3:10")) == "sample:3:10"


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("BCINV_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        verify("existence-left-bc", "zmod:8")


def test_expand_rings():
    assert expand_rings("zmod:2..4") == ["zmod:2", "zmod:3", "zmod:4"]
    assert expand_rings("zmod:3,prod:(zmod:2;zmod:3),mat:2:zmod:2") == [
        "zmod:3", "prod:(zmod:2;zmod:3)", "mat:2:zmod:2"]


def test_hunt_rules():
    with pytest.raises(ValueError):
        hunt("existence-left-bc", ["zmod:6"])
    with pytest.raises(KeyError):
        hunt("nosuch", ["zmod:6"])


def test_witness_inequality_hunt():
    r = hunt("witness-inequality-left-vs-rightann", ["zmod:8"])
    assert r.found and r.ring == "zmod:8"
    # first violation in scan order
    assert r.tuple == {"a": "0", "b": "0", "c": "1"}
    # the worked example is a violation too: 4 is a left inverse, 6 a right annihilator one
    from bcinv.harness import context_for
    ok, conds = get_claim("witness-inequality-left-vs-rightann").predicate(context_for("zmod:8"), (5, 0, 2))
    assert not ok and "4" in conds["left_set"] and "6" in conds["rightann_set"]


def test_hunts_are_deterministic():
    for cid in sorted(HUNTS - {"product-maps-arbitrary-witness"}):
        a, b = hunt(cid, "zmod:2..12"), hunt(cid, "zmod:2..12")
        assert a.to_json() == b.to_json()
    assert hunt("onesided-implies-regular-bc", "zmod:2..12").found
    assert hunt("product-maps-arbitrary-witness", ["zmod:4"]).found


@pytest.mark.parametrize("n", range(2, 9))
def test_small_claims_hold_on_zmod(n):
    for cid in HOLDS:
        if get_claim(cid).arity <= 3:
            r = verify(cid, f"zmod:{n}")
            assert r.passed, r.failures[:3]


@pytest.mark.parametrize("spec", ["zmod:9", "zmod:10", "mat:2:zmod:2", "prod:(zmod:2;zmod:3)",
                                  "prod:(zmod:2;mat:2:zmod:2)"])
def test_small_claims_hold_on_other_rings(spec):
    for cid in HOLDS:
        c = get_claim(cid)
        mode = "exhaustive" if c.arity <= 3 else "sample:11:3000"
        if spec.startswith("prod:(zmod:2;mat") and c.arity == 3:
            mode = "sample:5:4000"
        r = verify(cid, spec, mode)
        assert r.passed, (cid, r.failures[:3])


@pytest.mark.parametrize("n", range(2, 9))
def test_arity_five_claims_hold_on_zmod(n):
    for cid in HOLDS:
        if get_claim(cid).arity == 5:
            r = verify(cid, f"zmod:{n}")
            assert r.passed, (cid, r.failures[:3])


@pytest.mark.slow
@pytest.mark.parametrize("spec", ["zmod:9", "zmod:10", "mat:2:zmod:2"])
def test_arity_five_claims_hold_exhaustively(spec):
    for cid in HOLDS:
        if get_claim(cid).arity == 5:
            r = verify(cid, spec)
            assert r.passed, (cid, r.failures[:3])
