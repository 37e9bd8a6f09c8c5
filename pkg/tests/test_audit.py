import csv
import io
import json

import pytest

from qspectral.audit import (
    CSV_HEADER,
    MUST_HOLD,
    AuditConfig,
    AuditReport,
    audit_corpus,
    audit_exhaustive,
    audit_graph,
    audit_graphs,
    friendship_extremality,
)
from qspectral.graph import complete, cycle, petersen, rook, triangular
from qspectral.graph6 import to_graph6


def _records(g, formula, **params):
    recs = audit_graph(g, AuditConfig(formulas=(formula,)))
    return [r for r in recs if all(dict(r.params)[k] == v for k, v in params.items())]


def test_rook_thm1_equality_with_srg():
    (r,) = _records(rook(4), "thm1", k=2, l=2)
    assert r.verdict == "equality"
    assert r.bound == pytest.approx(12) and r.value == pytest.approx(12)
    assert r.srg == "SRG(16,6,2,2) confirmed"


def test_rook_violates_n_minus_l_reading():
    (r,) = _records(rook(4), "lem1_printed", k=2, l=2)
    assert r.verdict == "violation"
    assert r.bound == pytest.approx(5.830952, abs=1e-6) and r.value == pytest.approx(6)


def test_cycle_thm2_holds():
    (r,) = _records(cycle(6), "thm2", s=3, t=3)
    assert r.verdict == "holds"
    assert r.bound - r.value == pytest.approx(7.301927, abs=1e-6)


def test_inapplicable_gives_no_records():
    assert audit_graph(cycle(4), AuditConfig(formulas=("thm1", "thm2"))) == []


def test_small_exhaustive():
    rep = audit_exhaustive(4, AuditConfig(formulas=("thm1",)))
    assert rep.count("thm1", "violation") == 0
    assert rep.graphs == 38
    rep = audit_exhaustive(5, AuditConfig(formulas=("lem5",)))
    assert rep.count("lem5", "violation") == 0 and rep.total("lem5") == 728
    assert audit_exhaustive(3, AuditConfig(formulas=("thm2",))).total("thm2") == 0
    with pytest.raises(ValueError):
        audit_exhaustive(8)


def test_counts_sum_to_instances():
    rep = audit_exhaustive(5, AuditConfig())
    assert sum(rep.total(f) for f in rep.counts) == rep.total()
    assert rep.must_hold_violations() == 0
    assert rep.count("lem1_printed", "violation") > 0


def test_complete_graph_equality_label():
    recs = [r for r in audit_graph(complete(5), AuditConfig(formulas=("thm1",))) if r.verdict == "equality"]
    assert [dict(r.params)["k"] for r in recs] == [3]
    assert recs[0].srg.startswith("degenerate SRG K_5") and recs[0].srg.endswith("confirmed")


def test_corpus():
    lines = [to_graph6(petersen()), to_graph6(rook(4)), to_graph6(triangular(5))]
    rep = audit_corpus(lines, AuditConfig(formulas=("thm1", "lem2")))
    eq = rep.equalities("thm1")
    assert sorted(r.graph6 for r in eq) == sorted(lines[1:])
    assert all(r.srg.endswith("confirmed") for r in eq)
    assert rep.violations() == []

    empty = audit_corpus([])
    assert empty.total() == 0 and empty.graphs == 0

    bad = audit_corpus(lines[:1] + ["not graph6!"], AuditConfig(formulas=("lem5",)))
    assert [ln for ln, _ in bad.skipped] == [2] and bad.graphs == 1


def test_partition_invariance():
    cfg = AuditConfig()
    whole = audit_exhaustive(5, cfg)
    parts = audit_exhaustive(5, cfg, chunk_size=97)
    assert whole.to_json(include_timing=False) == parts.to_json(include_timing=False)
    merged = AuditReport().merge(audit_graphs([rook(4)], cfg)).merge(audit_graphs([petersen()], cfg))
    swapped = audit_graphs([petersen()], cfg).merge(audit_graphs([rook(4)], cfg))
    assert merged.to_json(include_timing=False) == swapped.to_json(include_timing=False)


def test_serialisation():
    rep = audit_graphs([rook(4)], AuditConfig(formulas=("thm1", "lem1_printed")))
    doc = json.loads(rep.to_json())
    assert set(doc) == {"meta", "counts", "gaps", "records"}
    assert "wall_time" in doc["meta"] and "wall_time" not in json.loads(rep.to_json(include_timing=False))["meta"]
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) - 1 == len(rep.records)


def test_config_validation():
    with pytest.raises(ValueError):
        AuditConfig(formulas=("thm7",))
    with pytest.raises(ValueError):
        AuditConfig(st_pairs=((2, 3),))
    assert "lem1_printed" not in MUST_HOLD


def test_friendship_small():
    res = friendship_extremality(5)
    assert res.confirmed and res.best_q == pytest.approx(res.q_friendship)
    with pytest.raises(ValueError):
        friendship_extremality(4)
