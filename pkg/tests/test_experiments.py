import json

import pytest

from lefkit.corpus import get_record
from lefkit.experiments import (
    EXPERIMENTS,
    _dump,
    experiment_init_deg2,
    experiment_small_s,
    probe_open_question,
    rerun_dump,
    small_s_hypothesis,
    trial_seed,
)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        experiment_init_deg2(trials=0)
    with pytest.raises(ValueError):
        experiment_init_deg2(trials=1, e_max=11)


def test_trial_seeds_distinct():
    seeds = {trial_seed(s, i) for s in range(5) for i in range(100)}
    assert len(seeds) == 500


def test_replay_is_deterministic():
    a = experiment_init_deg2(trials=6, e_max=5)
    b = experiment_init_deg2(trials=6, e_max=5)
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
    c = experiment_init_deg2(trials=6, e_max=5, seed=99)
    assert c.to_dict()["records"] != a.to_dict()["records"]


def test_serial_and_parallel_agree():
    a = experiment_small_s(trials=4)
    b = experiment_small_s(trials=4, workers=2)
    assert a.to_dict() == b.to_dict()


def test_probe_short_run():
    rep = probe_open_question(trials=3, e=5)
    assert rep.passed + rep.failed + rep.skipped == 3


def test_small_s_hypothesis():
    assert small_s_hypothesis((1, 3, 6, 8, 9, 8, 6, 3, 1)) == 3
    assert small_s_hypothesis((1, 3, 6, 10, 6, 3, 1)) is None


def test_dump_reruns_to_same_verdict():
    A = get_record("brenner-kaid-dual").build()
    dump = _dump(A)
    json.dumps(dump)
    B, report = rerun_dump(dump)
    assert B.hilbert == A.hilbert
    assert report.verdict == "fails_wlp" and report.failing_degrees == [2]


def test_registry():
    assert set(EXPERIMENTS) == {"init-deg2", "small-s", "socle-bounds", "probe"}
