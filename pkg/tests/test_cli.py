import json
import shutil
from pathlib import Path

import pytest

from morphweave.cli import main

REPO = Path(__file__).resolve().parents[1]


@pytest.fixture()
def workdir(tmp_path):
    """An isolated copy of the bundled config rooted in tmp_path."""
    fixtures = tmp_path / "fixtures"
    shutil.copytree(REPO / "fixtures", fixtures)
    return fixtures / "morphweave.toml"


def run_cli(*argv):
    return main([str(a) for a in argv])


def test_dry_run_prints_plan(workdir, capsys):
    assert run_cli("--config", workdir, "expand", "--dry-run") == 0
    plan = json.loads(capsys.readouterr().out)
    assert plan["temperatures"] == [0.5, 0.7]
    assert plan["prompt_iterations"] == 3
    assert plan["feedback_iterations"] == 5
    assert len(plan["cpats"]) == 10


def test_unknown_pattern_id_fails(workdir, capsys):
    assert run_cli("--config", workdir, "expand", "--cpat", "nope") == 1
    err = json.loads(capsys.readouterr().err)
    assert "nope" in err["detail"]


def test_expand_single_pattern_writes_stores(workdir, capsys, table_rows):
    assert run_cli("--config", workdir, "expand", "--cpat", "cpat-09") == 0
    out_dir = workdir.parent.parent / "out" / "cpat-09"
    report = json.loads((out_dir / "report.json").read_text())
    assert (report["total"], report["correct"], report["useful"],
            report["applicable"]) == table_rows["cpat-09"][:4]
    assert (out_dir / "variants.jsonl").exists()
    assert (out_dir / "events.jsonl").exists()
    assert (out_dir / "tests.jsonl").exists()


def test_synth_emits_baseline_plus_variant_rules(workdir):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09")
    assert run_cli("--config", workdir, "synth", "--cpat", "cpat-09") == 0
    rules_dir = workdir.parent.parent / "out" / "rules" / "cpat-09"
    rules = sorted(p.name for p in rules_dir.glob("*.rule"))
    assert "cpat-09-baseline.rule" in rules
    assert len(rules) == 1 + 9  # baseline + one per applicable variant


def test_synth_without_variant_store_writes_baseline_only(workdir):
    assert run_cli("--config", workdir, "synth", "--cpat", "cpat-08") == 0
    rules_dir = workdir.parent.parent / "out" / "rules" / "cpat-08"
    assert [p.name for p in rules_dir.glob("*.rule")] == ["cpat-08-baseline.rule"]


def test_apply_exit_codes_and_report(workdir, tmp_path, capsys):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-01")
    run_cli("--config", workdir, "synth", "--cpat", "cpat-01")
    capsys.readouterr()
    rules_dir = workdir.parent.parent / "out" / "rules" / "cpat-01"
    corpus = workdir.parent / "corpus" / "cpat-01"
    stubs = workdir.parent / "corpus" / "type_stubs.json"
    report_path = tmp_path / "counts.json"
    code = run_cli("--config", workdir, "apply", "--rules", rules_dir,
                   "--target", corpus, "--type-stubs", stubs,
                   "--report", report_path)
    assert code == 2  # matches found
    counts = json.loads(report_path.read_text())
    assert sum(counts.values()) == 196
    out = capsys.readouterr().out
    assert "--- a/" in out and "+++ b/" in out
    # the corpus carries the classic indexed-sum spelling; its site gets
    # the one-line replacement
    assert "+    loss = numpy.sum(losses)" in out


def test_apply_no_matches_exits_zero(workdir, tmp_path):
    target = tmp_path / "empty"
    target.mkdir()
    (target / "mod.py").write_text("x = 1\n")
    rules_dir = workdir.parent.parent / "out" / "rules" / "cpat-01"
    if not rules_dir.exists():
        run_cli("--config", workdir, "expand", "--cpat", "cpat-01")
        run_cli("--config", workdir, "synth", "--cpat", "cpat-01")
    assert run_cli("--config", workdir, "apply", "--rules", rules_dir,
                   "--target", target) == 0


def test_apply_empty_rule_dir_fails(workdir, tmp_path):
    empty = tmp_path / "no-rules"
    empty.mkdir()
    assert run_cli("--config", workdir, "apply", "--rules", empty,
                   "--target", tmp_path) == 1


def test_tune_selects_paper_parameters(workdir, capsys):
    assert run_cli("--config", workdir, "tune") == 0
    out = capsys.readouterr().out
    assert "t=1.2 i=5" in out
    out_root = workdir.parent.parent / "out"
    summary = json.loads((out_root / "tuning_summary.json").read_text())
    assert summary["selected"] == {"temperature": 1.2, "iterations": 5}
    assert summary["selected_f"] >= 0.961
    grid_csv = (out_root / "tuning_grid.csv").read_text().splitlines()
    assert grid_csv[0] == "temperature,iteration,precision,recall,f_measure"
    assert len(grid_csv) == 1 + 7 * 6


def test_tune_delta_override_converges_immediately(workdir, capsys):
    assert run_cli("--config", workdir, "tune", "--delta", "1.0") == 0
    assert "i=1" in capsys.readouterr().out


def test_report_summarizes_runs(workdir, capsys):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09")
    capsys.readouterr()
    assert run_cli("--config", workdir, "report") == 0
    out = capsys.readouterr().out
    assert "cpat-09: V=64 Vc=11 Vu=11 Va=9" in out


def test_replay_reruns_are_byte_identical(workdir):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09")
    out_dir = workdir.parent.parent / "out" / "cpat-09"
    first = {p.name: p.read_bytes() for p in out_dir.iterdir()}
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09", "--force")
    second = {p.name: p.read_bytes() for p in out_dir.iterdir()}
    assert first == second


def test_expand_resumes_from_existing_reports(workdir, capsys):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09")
    capsys.readouterr()
    assert run_cli("--config", workdir, "expand", "--cpat", "cpat-09") == 0
    assert "(cached)" in capsys.readouterr().out


def test_workers_do_not_change_results(workdir):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09", "--force")
    out_dir = workdir.parent.parent / "out" / "cpat-09"
    sequential = {p.name: p.read_bytes() for p in out_dir.iterdir()}
    run_cli("--config", workdir, "--workers", "4", "expand", "--cpat", "cpat-09", "--force")
    parallel = {p.name: p.read_bytes() for p in out_dir.iterdir()}
    assert sequential == parallel


def test_corrupted_variant_store_fails_synth(workdir, capsys):
    run_cli("--config", workdir, "expand", "--cpat", "cpat-09")
    store = workdir.parent.parent / "out" / "cpat-09" / "variants.jsonl"
    store.write_text("{\"format_version\": 1}\nnot json at all\n")
    assert run_cli("--config", workdir, "synth", "--cpat", "cpat-09") == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "StoreFormatError"


def test_malformed_oracle_fails_tune(workdir, capsys):
    oracle = workdir.parent / "oracle_tuning.json"
    oracle.write_text("{broken")
    assert run_cli("--config", workdir, "tune") == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "StoreFormatError"
