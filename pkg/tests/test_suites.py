"""Record format and determinism of the seeded law suites."""

from gweng.suites import SUITES, cwf_records, wpg_records


def test_suite_names():
    assert set(SUITES) == {"cwf", "groupoid", "pi", "sigma", "id", "wpg"}


def test_record_shape():
    recs = cwf_records(seed=7, count=2)
    for r in recs:
        assert set(r) >= {"law", "instance", "pass"}
        assert isinstance(r["pass"], bool)
        assert len(r["instance"]) == 16


def test_seeded_suites_are_deterministic():
    a = cwf_records(seed=3, count=3)
    b = cwf_records(seed=3, count=3)
    assert a == b
    c = cwf_records(seed=4, count=3)
    assert [r["instance"] for r in a] != [r["instance"] for r in c]


def test_wpg_smoke():
    recs = wpg_records(seed=1, count=5)
    assert recs and all(r["pass"] for r in recs)
