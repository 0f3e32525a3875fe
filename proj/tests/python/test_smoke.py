import pytest

import unitring


def test_classify_hypercentral_k8():
    report = unitring.classify_hypercentral("K8")
    assert report["schema_version"] == 1
    assert report["answer"] == "Yes(c)"
    assert report["rule"] == "case-c"
    assert len(report["evidence"]["decomposition"]["quaternion"]) == 8
    assert "timings" not in report


def test_classify_hypercentral_rejects_s3():
    report = unitring.classify_hypercentral("S3")
    assert report["answer"] == "No"
    assert report["evidence"]["reason"]


def test_structured_group_inline_file(tmp_path):
    spec = tmp_path / "c4_inversion.json"
    spec.write_text('{"torsion": "C4", "free_rank": 1, "actions": [[0, 3, 2, 1]]}')
    report = unitring.classify_hypercentral("@" + str(spec))
    assert report["answer"] == "Yes(b)"
    assert report["evidence"]["chain_orders"] == [2, 1]


def test_classify_hyperbolic_with_witness():
    report = unitring.classify_hyperbolic(
        field="GF(2)(t)", group="C3", about="V", witness=True
    )
    assert report["answer"] == "NotHyperbolic"
    assert report["rule"] == "R1-infinite-field"
    assert report["witness"]["verified"] is True
    assert report["witness"]["u1"] == "1 + (t+1)*g + (t+1)*g^2"


def test_classify_hyperbolic_finite_field():
    report = unitring.classify_hyperbolic(field="GF(2^2)", group="K8")
    assert report["answer"] == "Hyperbolic"
    assert report["rule"] == "R1-finite-field"


def test_enumerate_units_counts():
    report = unitring.enumerate_units(field="GF(2)", group="K8")
    assert report["answer"] == "|V(KG)| = 128"
    assert report["evidence"]["nilpotency_class"] is not None


def test_unit_search_finds_nontrivial_units():
    report = unitring.unit_search(group="C5", bound=1)
    assert report["evidence"]["count"] == 15
    assert "-1 + g + g^4" in report["evidence"]["units"]
    assert report["evidence"]["trivial_units_only"] is False


def test_witness_z2_roundtrip():
    report = unitring.witness_z2(field="GF(3)(t)", group="C2")
    assert report["answer"] == "verified"
    assert report["witness"]["independence_bound"] == 5


def test_central_series_and_dedekind():
    series = unitring.central_series("Q16")
    assert series["answer"] == "nilpotent, class 3"
    assert series["evidence"]["orders"] == [1, 2, 4, 16]

    dedekind = unitring.verify_dedekind("K8xC3")
    assert dedekind["answer"] == "violated"
    assert dedekind["evidence"]["conjugates_are_powers"]["holds"] is False


def test_timings_opt_in():
    report = unitring.classify_hypercentral("C6", timings=True)
    assert report["timings"]["total_ms"] >= 0


def test_errors_are_typed():
    with pytest.raises(ValueError):
        unitring.classify_hypercentral("C0")
    with pytest.raises(ValueError):
        unitring.classify_hyperbolic(field="GF(4)(t)", group="C3")
    with pytest.raises(RuntimeError):
        unitring.enumerate_units(field="GF(7)", group="K8", budget=1000)
