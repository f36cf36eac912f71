import pytest

from lefkit.corpus import (
    case_one_table,
    catalog,
    corrupted,
    degree_three_spans_agree,
    get_record,
    run_all,
    run_example,
    run_record,
    socle_degree_two_witnesses,
)
from lefkit.errors import UnknownExample


def test_every_record_reproduces():
    results = run_all()
    assert len(results) == len(catalog())
    assert [r.name for r in results if not r.passed] == []


def test_names_unique_and_anchored():
    names = [r.name for r in catalog()]
    assert len(names) == len(set(names))
    assert all(r.anchor for r in catalog())


def test_corrupted_record_reports_diff():
    rec = corrupted(get_record("brenner-kaid"), hilbert=(1, 3, 6, 7, 3), wlp="has_wlp")
    res = run_record(rec)
    assert not res.passed
    assert res.diff["hilbert"] == ([1, 3, 6, 7, 3], [1, 3, 6, 6, 3])
    assert res.diff["wlp"] == ("has_wlp", "fails_wlp")
    assert set(res.to_dict()["diff"]) == {"hilbert", "wlp"}


def test_gf2_record_is_exhaustive():
    res = run_example("ci-squares-gf2")
    assert res.passed
    assert res.sampling["mode"] == "exhaustive" and res.sampling["num_samples"] == 7


def test_unknown_example():
    with pytest.raises(UnknownExample):
        get_record("no-such-algebra")


def test_degree_three_span():
    assert degree_three_spans_agree()


@pytest.mark.parametrize("r", [4, 5, 6, 7])
def test_socle_degree_two_witness(r):
    checks = socle_degree_two_witnesses(r)
    assert len(checks) == 3 and all(c.ok for c in checks)


def test_case_one_rows():
    A, report, chk = case_one_table()
    assert A.hilbert == (1, 3, 6, 8, 6, 3, 1)
    assert chk.holds
    assert tuple(chk.h_plus) + (0,) * (7 - len(chk.h_plus)) == (1, 2, 3, 2, 0, 0, 0)
