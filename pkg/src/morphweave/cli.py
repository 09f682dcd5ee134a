"""Command-line front end: expand, gen-tests, synth, apply, tune, report."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import shlex
import sys
from pathlib import Path

from . import pipeline
from .applier import load_rules, load_type_stubs, scan, write_patches
from .config import RunConfig, load_config
from .errors import MorphweaveError
from .gateway import Gateway, HttpChatProvider, ReplayCache
from .harness import TestCase
from .patterns import ChangePattern, load_pattern_dir
from .pipeline import ExpansionResult, expand, read_variant_store, summarize, write_event_log, write_variant_store
from .sandbox import ForkingSandbox, InlineSandbox, SubprocessSandbox
from .synthesis import synthesize_baseline, synthesize_from_variant
from .tuning import (
    GridCell,
    build_grid,
    cross_validate,
    oracle_from_dict,
    select_params,
)

log = logging.getLogger("morphweave")


def _make_sandbox(cfg: RunConfig):
    if cfg.sandbox == "inline":
        return InlineSandbox()
    if cfg.sandbox == "fork":
        return ForkingSandbox()
    return SubprocessSandbox(shlex.split(cfg.sandbox))


def _make_gateway(cfg: RunConfig, args) -> Gateway:
    cache = ReplayCache(cfg.replay_cache)
    if args.record:
        provider = HttpChatProvider(cfg.provider_base_url, cfg.provider_model)
        return Gateway(cache, provider, mode="record")
    return Gateway(cache, mode="replay")


def _select_patterns(cfg: RunConfig, cpat_id: str | None) -> list[ChangePattern]:
    patterns = load_pattern_dir(cfg.cpat_dir)
    if cpat_id is None:
        return patterns
    chosen = [p for p in patterns if p.id == cpat_id]
    if not chosen:
        raise MorphweaveError(f"no change pattern with id {cpat_id!r} in {cfg.cpat_dir}")
    return chosen


def _load_labels(cfg: RunConfig):
    if cfg.labels and Path(cfg.labels).exists():
        return pipeline.load_labels(cfg.labels)
    return None


def _report_line(report) -> str:
    return (f"{report.cpat_id}: V={report.total} Vc={report.correct} "
            f"Vu={report.useful} Va={report.applicable}")


def cmd_expand(cfg: RunConfig, args) -> int:
    patterns = _select_patterns(cfg, args.cpat)
    if args.dry_run:
        plan = {
            "cpats": [p.id for p in patterns],
            "temperatures": list(cfg.expansion.temperatures),
            "prompt_iterations": cfg.expansion.prompt_iterations,
            "feedback_iterations": cfg.expansion.feedback_iterations,
        }
        print(json.dumps(plan, indent=2))
        return 0
    gateway = _make_gateway(cfg, args)
    sandbox = _make_sandbox(cfg)
    labels = _load_labels(cfg)
    workers = args.workers or cfg.workers
    out_root = Path(cfg.out_dir)
    for cpat in patterns:
        cpat_dir = out_root / cpat.id
        report_path = cpat_dir / "report.json"
        if report_path.exists() and not args.force:
            # completed on an earlier run; replay determinism makes the
            # stored result authoritative
            data = json.loads(report_path.read_text())
            print(f"{data['cpat_id']}: V={data['total']} Vc={data['correct']} "
                  f"Vu={data['useful']} Va={data['applicable']} (cached)")
            continue
        result: ExpansionResult = expand(cpat, cfg.expansion, gateway, sandbox,
                                         labels, workers=workers)
        cpat_dir.mkdir(parents=True, exist_ok=True)
        write_variant_store(cpat_dir / "variants.jsonl", result.variants)
        write_event_log(cpat_dir / "events.jsonl", result.events)
        report_path.write_text(
            json.dumps(result.report.to_dict(), indent=2, sort_keys=True) + "\n")
        _write_tests(cpat_dir / "tests.jsonl", result.tests)
        print(_report_line(result.report))
    if gateway.mode == "record":
        gateway.cache.save()
    return 0


def _write_tests(path: Path, tests: list[TestCase]) -> None:
    lines = [json.dumps({"format_version": pipeline.STORE_FORMAT_VERSION, "kind": "test-store"})]
    for t in tests:
        lines.append(json.dumps({
            "id": t.id, "cpat_id": t.cpat_id, "code": t.code.text,
            "status": t.status, "temperature": t.temperature, "iteration": t.iteration,
        }, sort_keys=True))
    path.write_text("\n".join(lines) + "\n")


def cmd_gen_tests(cfg: RunConfig, args) -> int:
    from .pipeline import Expansion

    patterns = _select_patterns(cfg, args.cpat)
    gateway = _make_gateway(cfg, args)
    sandbox = _make_sandbox(cfg)
    out_root = Path(cfg.out_dir)
    for cpat in patterns:
        expansion = Expansion(cpat, cfg.expansion, gateway, sandbox)
        expansion._collect_tests()
        cpat_dir = out_root / cpat.id
        cpat_dir.mkdir(parents=True, exist_ok=True)
        _write_tests(cpat_dir / "tests.jsonl", expansion.tests)
        valid = sum(1 for t in expansion.tests if t.status == "Valid")
        print(f"{cpat.id}: {len(expansion.tests)} tests, {valid} valid")
    if gateway.mode == "record":
        gateway.cache.save()
    return 0


def cmd_synth(cfg: RunConfig, args) -> int:
    patterns = _select_patterns(cfg, args.cpat)
    gateway = _make_gateway(cfg, args)
    out_root = Path(cfg.out_dir)
    from .rewrite import serialize_rule

    for cpat in patterns:
        store = out_root / cpat.id / "variants.jsonl"
        variants = read_variant_store(store) if store.exists() else []
        rules_dir = out_root / "rules" / cpat.id
        rules_dir.mkdir(parents=True, exist_ok=True)
        baseline = synthesize_baseline(cpat)
        (rules_dir / f"{cpat.id}-baseline.rule").write_text(serialize_rule(baseline))
        written = 1
        for variant in variants:
            if variant.status != pipeline.APPLICABLE:
                continue
            try:
                llm_types = gateway.infer_types(variant.code, cpat)
            except MorphweaveError:
                llm_types = {}
            try:
                rule = synthesize_from_variant(variant.code, cpat, llm_types,
                                               rule_id=variant.id)
            except MorphweaveError as exc:
                log.warning("%s: synthesis failed (%s)", variant.id, exc)
                continue
            (rules_dir / f"{variant.id}.rule").write_text(serialize_rule(rule))
            written += 1
        print(f"{cpat.id}: {written} rules")
    return 0


def cmd_apply(cfg: RunConfig, args) -> int:
    rules = load_rules(args.rules)
    if not rules:
        raise MorphweaveError(f"no rule files under {args.rules}")
    stubs = load_type_stubs(args.type_stubs or cfg.type_stubs)
    patch_set = scan(rules, args.target, type_stubs=stubs)
    for entry in patch_set.entries:
        sys.stdout.write(entry.diff)
    if args.report:
        Path(args.report).write_text(
            json.dumps(patch_set.count_report(), indent=2, sort_keys=True) + "\n")
    print(f"# {patch_set.total} transformation(s) across "
          f"{len(patch_set.patched_files)} file(s)", file=sys.stderr)
    if args.write:
        write_patches(patch_set, args.target)
    return 2 if patch_set.total else 0


def cmd_tune(cfg: RunConfig, args) -> int:
    oracle_path = args.oracle or cfg.oracle
    if not oracle_path:
        raise MorphweaveError("no oracle file configured")
    from .errors import StoreFormatError

    try:
        oracle = oracle_from_dict(json.loads(Path(oracle_path).read_text()))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise StoreFormatError(f"oracle file {oracle_path} is malformed: {exc}") from None
    patterns = {p.id: p for p in _select_patterns(cfg, None)}
    gateway = _make_gateway(cfg, args)
    sandbox = _make_sandbox(cfg)
    delta = args.delta if args.delta is not None else cfg.tuning_delta
    grids: dict[str, list[GridCell]] = {}
    for cpat_id in oracle.cpat_ids():
        if cpat_id not in patterns:
            raise MorphweaveError(f"oracle mentions unknown pattern {cpat_id}")
        grids[cpat_id] = build_grid(
            patterns[cpat_id], oracle, gateway, sandbox,
            temps=cfg.tuning_temperatures, max_i=cfg.tuning_max_iterations)
    aggregate = _aggregate_grid(grids)
    selected = select_params(aggregate, delta)
    folds = cross_validate(oracle, grids, k=min(10, len(grids)), delta=delta)
    out_root = Path(cfg.out_dir)
    out_root.mkdir(parents=True, exist_ok=True)
    _write_grid_csv(out_root / "tuning_grid.csv", aggregate)
    summary = {
        "selected": {"temperature": selected[0], "iterations": selected[1]},
        "selected_f": _cell_at(aggregate, selected).f,
        "folds": [
            {
                "held": fold.held,
                "selected": {"temperature": fold.selected[0], "iterations": fold.selected[1]},
                "evaluations": {
                    other: {"precision": c.precision, "recall": c.recall, "f": c.f}
                    for other, c in sorted(fold.evaluations.items())
                },
            }
            for fold in folds
        ],
    }
    (out_root / "tuning_summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(f"selected t={selected[0]} i={selected[1]} "
          f"(F={_cell_at(aggregate, selected).f:.4f})")
    return 0


def _aggregate_grid(grids: dict[str, list[GridCell]]) -> list[GridCell]:
    cells: dict[tuple[float, int], list[GridCell]] = {}
    for grid in grids.values():
        for cell in grid:
            cells.setdefault((cell.t, cell.i), []).append(cell)
    from .stats import f_measure

    aggregate = []
    for (t, i), group in sorted(cells.items()):
        precision = sum(c.precision for c in group) / len(group)
        recall = sum(c.recall for c in group) / len(group)
        aggregate.append(GridCell(t, i, precision, recall,
                                  sum(c.f for c in group) / len(group)))
    return aggregate


def _cell_at(grid: list[GridCell], selected: tuple[float, int]) -> GridCell:
    return next(c for c in grid if c.t == selected[0] and c.i == selected[1])


def _write_grid_csv(path: Path, grid: list[GridCell]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["temperature", "iteration", "precision", "recall", "f_measure"])
        for cell in sorted(grid, key=lambda c: (c.i, c.t)):
            writer.writerow([cell.t, cell.i,
                             f"{cell.precision:.6f}", f"{cell.recall:.6f}", f"{cell.f:.6f}"])


def cmd_report(cfg: RunConfig, args) -> int:
    out_root = Path(cfg.out_dir)
    reports = []
    for report_path in sorted(out_root.glob("*/report.json")):
        reports.append(json.loads(report_path.read_text()))
    if not reports:
        print("no expansion reports found")
        return 0
    for data in reports:
        print(f"{data['cpat_id']}: V={data['total']} Vc={data['correct']} "
              f"Vu={data['useful']} Va={data['applicable']}")
    mean_applicable = sum(d["applicable"] for d in reports) / len(reports)
    print(f"mean applicable variants per pattern: {mean_applicable}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morphweave")
    parser.add_argument("--config", default=None, help="TOML configuration file")
    parser.add_argument("--replay-only", action="store_true", default=False,
                        help="serve completions from the cache only (default)")
    parser.add_argument("--record", action="store_true", default=False,
                        help="fill the cache through the configured provider")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; outputs are deterministic regardless")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="generate and validate variants")
    p_expand.add_argument("--cpat", default=None)
    p_expand.add_argument("--dry-run", action="store_true")
    p_expand.add_argument("--force", action="store_true",
                          help="recompute patterns that already have a report")
    p_expand.set_defaults(func=cmd_expand)

    p_tests = sub.add_parser("gen-tests", help="generate and vet test cases")
    p_tests.add_argument("--cpat", default=None)
    p_tests.set_defaults(func=cmd_gen_tests)

    p_synth = sub.add_parser("synth", help="synthesize rules from applicable variants")
    p_synth.add_argument("--cpat", default=None)
    p_synth.set_defaults(func=cmd_synth)

    p_apply = sub.add_parser("apply", help="apply rules across a target tree")
    p_apply.add_argument("--rules", required=True)
    p_apply.add_argument("--target", required=True)
    p_apply.add_argument("--type-stubs", default=None)
    p_apply.add_argument("--report", default=None)
    p_apply.add_argument("--write", action="store_true")
    p_apply.set_defaults(func=cmd_apply)

    p_tune = sub.add_parser("tune", help="select test-generation parameters")
    p_tune.add_argument("--oracle", default=None)
    p_tune.add_argument("--delta", type=float, default=None)
    p_tune.set_defaults(func=cmd_tune)

    p_report = sub.add_parser("report", help="summarize expansion reports")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else RunConfig()
        return args.func(cfg, args)
    except MorphweaveError as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(json.dumps({"error": "FileNotFound", "detail": str(exc)}), file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        # per-pattern outputs are flushed as they complete, so a rerun
        # resumes from the last finished pattern
        print(json.dumps({"error": "Interrupted", "detail": "partial results kept"}),
              file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
