"""Randomized search pipeline: determinism, self-identification, replay."""

import pytest

from gordian.braid import braid_closure
from gordian.certify import BASE_BRAID
from gordian.identify import default_table
from gordian.invariants import fingerprint
from gordian.search import (
    SearchConfig,
    evaluate_candidate,
    replay_hit,
    replay_line,
    run_pipeline,
)


@pytest.fixture(scope="module")
def table():
    return default_table()


@pytest.fixture(scope="module")
def base():
    return braid_closure(BASE_BRAID)


def test_known_candidate_identifies_k14a18636(table, base):
    # The two-change candidate that started the whole chain: flipping the
    # first two letters of the base braid lands on K14a18636.
    result, fp = evaluate_candidate(
        BASE_BRAID, (0, 1), fingerprint(base), table
    )
    assert result == "K14a18636"
    assert fp.determinant == 261
    assert fp.signature == 0


def test_pipeline_is_deterministic(table, base):
    cfg = SearchConfig(seed=42, trials=4, k_changes=1)
    first_log: list = []
    second_log: list = []
    first = run_pipeline(base, cfg, table, log=first_log.append)
    second = run_pipeline(base, cfg, table, log=second_log.append)
    assert first_log == second_log
    assert first == second
    assert len(first_log) == 4


def test_zero_changes_always_selfidentify(table, base):
    cfg = SearchConfig(seed=1, trials=5, k_changes=0)
    hits = run_pipeline(base, cfg, table)
    assert len(hits) == 5
    assert all(h.result == "base" for h in hits)
    assert all(h.flips == () for h in hits)


def test_hit_braids_close_to_the_base_knot(table, base):
    # Before any flips, every stored braid closes to the base knot: the
    # scramble and braiding stages must be fingerprint-preserving.
    base_fp = fingerprint(base)
    cfg = SearchConfig(seed=6, trials=3, k_changes=0)
    for hit in run_pipeline(base, cfg, table):
        assert fingerprint(braid_closure(hit.braid)) == base_fp


def test_log_line_format_and_replay(table, base):
    cfg = SearchConfig(seed=9, trials=2, k_changes=0)
    log: list = []
    hits = run_pipeline(base, cfg, table, log=log.append)
    for line in log:
        fields = line.split()
        assert len(fields) == 6
        trial, seed, braid, flips, result, fp_token = fields
        assert trial.isdigit() and seed.isdigit()
        assert braid.startswith("[") and " " not in braid
        assert flips == "[]"
        assert result == "base"
        assert fp_token.startswith("alexander=")
    ok, rebuilt = replay_line(log[0], base, table)
    assert ok
    assert rebuilt == log[0]
    assert replay_hit(hits[0], base, table)


def test_replay_detects_tampering(table, base):
    cfg = SearchConfig(seed=9, trials=1, k_changes=0)
    log: list = []
    run_pipeline(base, cfg, table, log=log.append)
    tampered = log[0].replace("determinant=49", "determinant=51")
    ok, _ = replay_line(tampered, base, table)
    assert not ok


def test_replay_rejects_malformed_lines(table, base):
    from gordian.errors import InputError

    with pytest.raises(InputError):
        replay_line("1 2 3", base, table)
    with pytest.raises(InputError):
        replay_line("x 2 [1] [] base alexander=1", base, table)


def test_impossible_flip_count_is_skipped(table):
    # Asking for more changes than the braid has letters cannot crash the
    # run; the trial is logged as skipped and produces no hit.
    trefoil = braid_closure(BASE_BRAID)
    cfg = SearchConfig(seed=3, trials=2, k_changes=500)
    log: list = []
    hits = run_pipeline(trefoil, cfg, table, log=log.append)
    assert hits == []
    assert len(log) == 2
    assert all("skip(ResourceError)" in line for line in log)


def test_targets_filter_hits(table, base):
    # With a target set, base self-identifications no longer count as hits.
    cfg = SearchConfig(seed=1, trials=2, k_changes=0, targets=("K12n412",))
    hits = run_pipeline(base, cfg, table)
    assert hits == []
