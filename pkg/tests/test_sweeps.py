"""Exhaustive sweep harness: frozen small counts, sharding, lemma checks."""

import pytest

from arclocal import Digraph
from arclocal.sweeps import (
    SWEEP_PROPERTIES,
    SweepReport,
    collect_member_indices,
    lemma_failures,
    run_sweep,
)

# Frozen member counts for connected class members on n vertices.  These
# were computed once from the enumeration and act as regression anchors: a
# change in any of them means the recognizer or the enumeration changed.
MEMBER_COUNTS = {
    (3, "in"): 54,
    (3, "out"): 54,
    (3, "als"): 54,
    (4, "in"): 2034,
    (4, "out"): 2034,
    (4, "als"): 1224,
}


@pytest.mark.parametrize("prop", SWEEP_PROPERTIES)
def test_sweep_n3_all_properties(prop):
    report = run_sweep(3, "in", prop)
    assert report.ok, report.failures[:5]
    assert report.scanned == 64
    if prop == "duality":
        assert report.members == 64  # duality ranges over every digraph
    else:
        assert report.members == MEMBER_COUNTS[(3, "in")]


@pytest.mark.parametrize("cls", ("in", "out", "als"))
def test_sweep_n4_main_property(cls):
    prop = "dichotomy" if cls == "als" else "main-theorem"
    report = run_sweep(4, cls, prop)
    assert report.ok, report.failures[:5]
    assert report.scanned == 4096
    assert report.members == MEMBER_COUNTS[(4, cls)]
    # No digraph on four vertices contains an odd cycle on five, so every
    # member is diperfect.
    assert set(report.outcomes) == {"diperfect"}


def test_sweep_n4_diperfect_and_lemmas():
    for prop in ("diperfect", "lemmas", "non-oriented"):
        report = run_sweep(4, "in", prop)
        assert report.ok, (prop, report.failures[:5])
        assert report.members == 2034


def test_sharded_sweep_matches_single_process():
    solo = run_sweep(3, "in", "main-theorem", jobs=1)
    sharded = run_sweep(3, "in", "main-theorem", jobs=2)
    assert sharded.scanned == solo.scanned
    assert sharded.members == solo.members
    assert sharded.outcomes == solo.outcomes
    assert sharded.failures == solo.failures


def test_run_sweep_validation():
    with pytest.raises(ValueError):
        run_sweep(3, "in", "no-such-property")
    with pytest.raises(ValueError):
        run_sweep(3, "everything", "main-theorem")


def test_collect_member_indices():
    indices = collect_member_indices(3, "in")
    assert len(indices) == MEMBER_COUNTS[(3, "in")]
    assert indices == sorted(indices)
    assert len(collect_member_indices(4, "als")) == MEMBER_COUNTS[(4, "als")]


def test_report_merge_and_summary():
    a = SweepReport(n=3, cls="in", prop="main-theorem", scanned=10, members=4)
    a.outcomes["diperfect"] = 4
    b = SweepReport(n=3, cls="in", prop="main-theorem", scanned=6, members=2)
    b.outcomes["tripartition"] = 2
    b.failures.append((5, "boom"))
    a.merge(b)
    assert a.scanned == 16 and a.members == 6
    assert a.outcomes == {"diperfect": 4, "tripartition": 2}
    assert not a.ok
    assert "1 FAILURES" in a.summary()
    clean = SweepReport(n=3, cls="in", prop="main-theorem", scanned=64, members=54)
    assert clean.summary() == "64 scanned, 54 members of class 'in', 0 failures (0.0s)"


def test_lemma_failures_fire_outside_the_class():
    # 0 reaches the digon component {2, 3} through 1 but does not dominate
    # into it, violating the reaching-vertex fact (the digraph is not a
    # class member, so this is expected).
    d = Digraph(4, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 2)])
    problems = lemma_failures(d)
    assert any("without dominating into it" in p for p in problems)


def test_lemma_failures_empty_on_members():
    d = Digraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)])
    assert lemma_failures(d) == []
