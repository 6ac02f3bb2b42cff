from fractions import Fraction

import pytest

qthook = pytest.importorskip("qthook")


def test_okada_shifted_exact():
    rep = qthook.verify_okada("shifted", [2, 1], degree=3)
    assert rep["result"] == "pass"
    assert rep["check"] == "okada"
    assert rep["schemaVersion"] == 1


def test_okada_bird_eval_is_seeded():
    a = qthook.verify_okada("bird", "2,1", "2,1", f=1, degree=3, mode="eval", points=3, seed=42)
    b = qthook.verify_okada("bird", "2,1", "2,1", f=1, degree=3, mode="eval", points=3, seed=42)
    assert a["result"] == "pass"
    assert a["points"] == b["points"] and len(a["points"]) == 3


def test_bird_needs_two_rows():
    with pytest.raises(ValueError):
        qthook.verify_okada("bird", [2], [2, 1], f=1)


def test_identity_names_and_gasper_sweep():
    assert "gasper" in qthook.identity_names()
    rep = qthook.verify_identity("gasper", seed=7, trials=50)
    assert rep["result"] == "pass" and rep["cases"] == 50


def test_unknown_identity():
    with pytest.raises(ValueError):
        qthook.verify_identity("nonsuch")


def test_hooks_and_poset_dump():
    assert qthook.hook_agreement("shifted", [4, 2, 1])["result"] == "pass"
    P = qthook.poset("banner", [9, 6, 3, 2], f=2)
    assert len(P["elements"]) == 22
    assert qthook.poset_dot("shifted", "2,1").startswith("digraph")


def test_q_poch():
    assert qthook.q_poch(2, Fraction(1, 2), 2) == 0
    assert qthook.q_poch(Fraction(1, 3), Fraction(1, 2), 2) == Fraction(2, 3) * Fraction(5, 6)


def test_gasper_single_instance():
    assert qthook.gasper_check(2, 3, 5, Fraction(1, 2), 1)["result"] == "pass"


def test_criterion_three():
    assert qthook.run_criterion(3)["result"] == "pass"
