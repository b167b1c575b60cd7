import pytest

exrings = pytest.importorskip("exrings")


def test_registry_lists_every_theorem():
    ids = [e["id"] for e in exrings.list_theorems()]
    assert len(ids) == 31
    assert len(set(ids)) == 31
    thm16 = next(e for e in exrings.list_theorems() if e["id"] == "thm16")
    assert [c["ring"] for c in thm16["contexts"]] == ["m2-gf2", "m2-gf4"]


def test_verify_returns_report():
    report = exrings.verify(["ex2"], samples=50)
    assert report["all_passed"]
    (verdict,) = report["verdicts"]
    assert verdict["theorem"] == "ex2"
    assert verdict["mode"] == "VerifiedInWindow"
    assert verdict["config"]["ring"] == "m2-tpoly2"


def test_verify_is_deterministic():
    a = exrings.verify(["thm29", "lem6"], samples=40, seed=9, jobs=1)
    b = exrings.verify(["thm29", "lem6"], samples=40, seed=9, jobs=3)
    assert a == b


def test_unsupported_selection_raises():
    with pytest.raises(ValueError):
        exrings.verify(["bogus"])
    with pytest.raises(ValueError):
        exrings.verify(["thm16"], ring="m2-rat2")


def test_classify():
    text = "poly-full [[1,0],[0,1]]\npoly-full [[0,1],[0,0]]\npoly-full [[0,0],[1,0]]\nbits e11\n"
    out = exrings.classify(text, degree=10)
    assert out["classification"] == "TypeII"
    assert out["c_span_dim"] == 4
    assert exrings.classify("bits e12")["classification"] == "not a Lie ideal"
    assert exrings.classify("poly-full [[1,0],[0,1]]")["classification"] == "Central"
    with pytest.raises(ValueError):
        exrings.classify("nonsense [[1,0],[0,1]]")


def test_arithmetic_helpers():
    assert exrings.poly_gcd("t^2+t", "t^2+1") == "t+1"
    assert exrings.commutator("m2-gf2", "e12", "e21") == "[[1,0],[0,1]]"
    assert exrings.in_commutator_space("m2-tpoly2", "[[t,t],[t,t]]")
    assert exrings.apply_derivation("m2-poly2", "dt", "[[t^2,t],[1,t^3]]") == "[[0,1],[0,t^2]]"
    assert not exrings.is_x_inner("m2-poly2", "dt")
    assert exrings.is_x_inner("m2-poly2", "inner e11")
    with pytest.raises(ArithmeticError):
        exrings.apply_derivation("m2-gf2", "dt", "e11")
