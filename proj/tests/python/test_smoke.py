import pytest

import springer_mgsc as sm


def test_counts():
    assert sm.pairs_count("G2", 5) == 7
    assert sm.pairs_count("E8", 3) == 105
    assert sm.cuspidal_count("E8", 2) == 10
    assert sm.cuspidal_count("E7", 3, "nontrivial") == 3
    assert sm.class_count("W(F4)") == 25
    assert sm.count_l_regular("W(E8)", 7) == 108
    assert sm.sylow_class("E6", 5) == "A4"


def test_cuspidal_pairs():
    assert sm.cuspidal_pairs("G2", 3) == [("(G2,triv)", "proven"), ("(G2(a1),eps)", "proven")]


def test_basic_sets():
    assert sm.basic_set("E6.l2.chi") == ["(2A2,chi)", "(A5,chi)"]
    assert len(sm.decomposition_matrix_ids()) == 4


def test_reports_round_trip():
    doc = sm.report_json("table1")
    assert doc["E8"]["chi_trivial"]["2"] == 10
    text = sm.report("appendix", type="F4", ell=2, format="text")
    assert "total" in text
    assert sm.report("table1") == sm.report("table1")


def test_verify_all():
    ok, summary = sm.verify_all()
    assert ok
    assert summary["table1"]["passed"] == summary["table1"]["total"]


def test_errors():
    with pytest.raises(sm.InvalidCharacterError):
        sm.pairs_count("E6", 3, "nontrivial")
    with pytest.raises(sm.ArgumentError):
        sm.report("nonsense")
    with pytest.raises(sm.SpringerError):
        sm.pairs_count("Q9", 2)
