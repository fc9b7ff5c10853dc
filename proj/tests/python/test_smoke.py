import pytest

import valuata


def test_wild_example():
    r = valuata.analyze_as("X^(-3)", p=2)
    assert r["verdict"] == "Best_i"
    assert r["invariants"]["swan"] == "3"
    assert r["invariants"]["e"] == 2


def test_defect_trajectory():
    r = valuata.normalize_as("X^(-1)", p=2, group="int-inv-p", budget=12)
    assert r["outcome"] == "DefectEvidence"
    assert r["trajectory"] == ["-1"] + [f"-1/{2**t}" for t in range(1, 13)]


def test_kummer_chain():
    r = valuata.normalize_kummer("1 + pi^2", p=2, m=2)
    assert r["outcome"] == "BestFound"
    assert r["trajectory"] == [2, 3]
    assert valuata.classify_kummer("5")["verdict"] == "Best_v"


def test_norm_ideal_samples():
    r = valuata.verify_norm_ideal("X^(-1)", p=2, group="int-inv-p", samples=5, seed=1)
    assert r["status"] == "ok"
    assert r["summary"]["count"] == 5


def test_corpus():
    r = valuata.run_corpus(probes=20)
    assert r["summary"]["failed"] == 0
    assert "defect-monomial(p=2)" in valuata.corpus_names()


def test_round_trip():
    assert valuata.format_series("y*X^(-2) + X^(0)", residue="ratfunc:2") == "y*X^(-2) + 1"
    assert valuata.format_cyclo("1 + pi^2*y", p=3, m=2, with_y=True) == "1 + pi^2*y"


def test_errors():
    with pytest.raises(valuata.UsageError):
        valuata.analyze_as("X^(1/2)")
    with pytest.raises(valuata.ValuataError):
        valuata.analyze_as("X^(-3")
