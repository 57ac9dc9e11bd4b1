from __future__ import annotations

import json

import pytest

from topoindex import harness
from topoindex.harness import (
    CLAIMS,
    REGISTRY,
    Claim,
    Item,
    Status,
    SuiteConfig,
    check_claim,
    check_items,
    ge,
    gt,
    item,
    le,
    load_config,
    replay,
    reports_to_csv,
    reports_to_json,
    run_suite,
    suite_exit_code,
)

FAST = ("C2", "C6", "C7", "C13", "C20", "C20b")


def test_registry_shape():
    assert len(CLAIMS) >= 25
    assert len(REGISTRY) == len(CLAIMS)
    for c in CLAIMS:
        assert c.status in (Status.VERIFIED, Status.REPORT_ONLY)
        if c.status is Status.REPORT_ONLY:
            assert c.reason
    for cid in ["C%d" % i for i in range(1, 26)] + ["C26", "C27", "C28", "C29"]:
        assert cid in REGISTRY


def test_report_only_needs_reason():
    with pytest.raises(ValueError):
        Claim("X", "x", "x", "x", Status.REPORT_ONLY, lambda c, s: [], lambda it: [])


def test_strictness_rules():
    assert not harness.lt("x", 1.0, 1.0).holds
    assert not harness.lt("x", 1.0 - 1e-12, 1.0).holds
    assert harness.lt("x", 1.0 - 1e-6, 1.0).holds
    assert le("x", 1.0 + 1e-12, 1.0).holds and le("x", 1.0 + 1e-12, 1.0).equality
    assert not le("x", 1.0 + 1e-6, 1.0).holds
    # exact integers compare exactly
    assert not harness.lt("x", 3, 3).holds and le("x", 3, 3).equality
    assert ge("x", 2, 1).holds and gt("x", 2.0, 1.0).holds


def test_sombor_upper_bound_records_cycle_violation():
    rep = check_claim("C6")
    assert rep.status is Status.REPORT_ONLY and rep.violation_count > 0
    assert any(v.fingerprint == "cycle:3" for v in rep.violations)
    assert not rep.failed and rep.verdict == "REPORTED"
    v = next(v for v in rep.violations if v.fingerprint == "cycle:3")
    # per-edge values 2 sqrt 2 against sqrt(4.125)
    assert v.lhs == pytest.approx(3 * 2 * 2**0.5) and v.rhs == pytest.approx(3 * 4.125**0.5)


def test_violations_replay_standalone():
    rep = check_claim("C6")
    for v in rep.violations:
        outs = replay("C6", v.fingerprint, v.params)
        assert any(not o.holds and o.label == v.label for o in outs)


def test_verified_failure_sets_exit_code():
    bad = Claim("Z", "always_false", "0 > 1", "test", Status.VERIFIED, lambda c, s: [item("path:2")],
                lambda it: [gt("0 > 1", 0, 1)])
    rep = check_items(bad, bad.corpus({}, 0))
    assert rep.failed and rep.verdict == "FAIL"
    assert suite_exit_code([rep]) == 2


def test_equality_witnesses_for_gutman():
    rep = check_claim("C7")
    assert rep.violation_count == 0
    # equality appears only at complete graphs
    complete = {"edges:2:0-1", "edges:3:0-1,0-2,1-2"}
    assert complete <= set(rep.equality_witnesses)


def test_irr_t_reading_as_maximum():
    rep = check_claim("C13")
    assert rep.violation_count == 0 and rep.equality_count == rep.corpus_size


def test_budget_overrides_and_unknown_keys():
    cfg = SuiteConfig(claims=("C2",), overrides={"C2": {"count": 7}})
    assert check_claim("C2", cfg).corpus_size == 7
    with pytest.raises(KeyError):
        SuiteConfig(overrides={"C2": {"bogus": 1}}).budget("C2")
    with pytest.raises(KeyError):
        check_claim("C999")
    with pytest.raises(KeyError):
        SuiteConfig(claims=("C999",)).claim_ids()


def test_seed_changes_random_corpus():
    a = REGISTRY["C2"].corpus({"count": 5, "p_max": 3}, 1)
    b = REGISTRY["C2"].corpus({"count": 5, "p_max": 3}, 2)
    assert a != b and a == REGISTRY["C2"].corpus({"count": 5, "p_max": 3}, 1)


def test_json_is_deterministic_and_parallel_safe():
    cfg = SuiteConfig(claims=FAST)
    a = reports_to_json(run_suite(cfg, workers=1), cfg)
    b = reports_to_json(run_suite(cfg, workers=2), cfg)
    assert a == b
    doc = json.loads(a)
    assert [c["id"] for c in doc["claims"]] == list(FAST)
    assert doc["summary"]["exit_code"] == 0
    assert "runtime" not in a


def test_csv_report():
    cfg = SuiteConfig(claims=("C20", "C6"))
    text = reports_to_csv(run_suite(cfg))
    lines = text.splitlines()
    assert lines[0].startswith("id,name,status")
    assert lines[1].startswith("C20,") and "PASS" in lines[1]
    assert lines[2].startswith("C6,") and "REPORT-ONLY" in lines[2]


def test_load_config(tmp_path):
    p = tmp_path / "suite.json"
    p.write_text(json.dumps({"seed": 5, "claims": ["C2"], "overrides": {"C2": {"count": 3}}}))
    cfg = load_config(p)
    assert cfg.seed == 5 and cfg.claim_ids() == ["C2"] and cfg.budget("C2")["count"] == 3
    p.write_text(json.dumps({"claims": "all"}))
    assert len(load_config(p).claim_ids()) == len(CLAIMS)


def test_item_params_are_ordered():
    assert item("path:3", b=1, a=2) == Item("path:3", (("a", 2), ("b", 1)))
