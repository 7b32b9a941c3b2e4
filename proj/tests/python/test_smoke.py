import pytest

import paperlab


def test_example_report():
    report = paperlab.verify(2, timings=False)
    assert report["schema_version"] == paperlab.REPORT_SCHEMA_VERSION
    assert report["summary"]["all_match"]
    s = next(stage for stage in report["stages"] if stage["name"] == "S")
    assert s["facts"]["generators_by_degree"] == [0, 3, 6, 1]
    depth = next(c for c in s["checks"] if c["name"] == "depth")
    assert depth["computed"] == 5
    assert "timings" not in report


def test_report_is_deterministic():
    assert paperlab.verify(2, timings=False) == paperlab.verify(2, timings=False)


def test_text_verdict():
    assert "NOT COHEN-MACAULAY" in paperlab.verify_text(2)


def test_invariant_generators():
    h = paperlab.invariant_generators(2, 3, 3)
    assert h["counts_by_degree"] == [0, 3, 6, 1]
    assert h["certificate"] == "integral-and-matching"
    g = paperlab.invariant_generators(2, 3, 2, group="G")
    assert sorted(g["generators"]) == sorted(["y1", "y2", "y3", "x1^2 + x1*y1", "x2^2 + x2*y2", "x3^2 + x3*y3"])


def test_compute():
    basis = paperlab.groebner_basis(101, "abcd", ["a*c - b^2", "b*d - c^2", "a*d - b*c"])
    assert len(basis) == 3
    depth = paperlab.compute("depth", 5, ["a", "b"], ["a^3 - b^2"], weights=[2, 3])["result"]
    assert (depth["dimension"], depth["depth"]) == (1, 1)
    pres = paperlab.compute("presentation", 5, ["x", "y"], ["x^2", "x*y", "y^2"])["result"]
    assert pres["relations"] == ["t2^2 + 4*t1*t3"]


def test_errors():
    with pytest.raises(paperlab.PaperlabError):
        paperlab.verify(4)
    with pytest.raises(paperlab.PaperlabError):
        paperlab.verify(2, d=2)
    with pytest.raises(ValueError):
        paperlab.compute("groebner", 2, ["x"], ["x + q"])
    assert paperlab.default_degree_bound(2, 3) == 3
