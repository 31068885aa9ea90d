import pytest

import heckecs


def test_info_affine_a1():
    d = heckecs.info("A1!")
    assert d["cartan"] == [[2, -2], [-2, 2]]
    assert d["imaginary"] == [1, 1]
    assert d["exponents"] == [1]


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        heckecs.info("B3")
    with pytest.raises(ValueError):
        heckecs.character("A2", [1], 2)


def test_roots_and_layers():
    assert [r["coords"] for r in heckecs.roots("A2", 5)] == [[0, 1], [1, 0], [1, 1]]
    assert [len(layer) for layer in heckecs.weyl_layers("A2", 5)] == [1, 2, 2, 1]


def test_character_golden():
    # Level-one affine A1: coefficients at heights <= 2 are p(0) = 1.
    chi = heckecs.character("A1!", [0, 1], 2)
    assert [t["beta"] for t in chi["terms"]] == [[0, 0], [0, 1], [1, 1]]
    assert all(t["coeff"] == [[0, 1]] for t in chi["terms"])


def test_whittaker_a1():
    w = heckecs.whittaker("A1", [0])
    assert w["stabilized"]
    assert [(t["beta"], t["coeff"]) for t in w["series"]["terms"]] == [([0], [[0, 1]]), ([1], [[-1, -1]])]


def test_verify_round_trip():
    assert heckecs.verify_finite_cs("A2", [1, 1])["verdict"] == "pass"
    assert heckecs.verify_hecke_relations("A1!", count=10, seed=1)["verdict"] == "pass"
    assert heckecs.verify_gk_limit("A1", [1])["verdict"] == "pass"
    r = heckecs.verify_affine_cs("A1!", [0, 1], depth=4, qs=[2])
    assert r["verdict"] == "fail"
    assert r["witness"]["beta"] == [1, 1]
