"""Select test-generation parameters from a labeled variant oracle.

For every (temperature, iteration) cell a test suite is assembled from
the gateway (iterations accumulate), run over the oracle variants, and
scored against the labels; iteration selection walks upward while the
next iteration still improves the best F-measure by more than delta.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import (
    GridIncomplete,
    InsufficientCpats,
    MissingProvenance,
    StoreVersionError,
)
from .harness import TestCase, valid_only, validate_tests, wrap_fragment
from .patterns import ChangePattern
from .pipeline import STORE_FORMAT_VERSION, norm_hash
from .sandbox import ExecutionJob
from .stats import f_measure
from .syntax import SourceFragment

log = logging.getLogger(__name__)

KIND_PROMPT = "Prompt"
KIND_FEEDBACK = "Feedback"

DEFAULT_DELTA = 0.05
DEFAULT_TEMPS = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2)


@dataclass(frozen=True)
class OracleVariant:
    code: str
    correct: bool
    useful: bool
    applicable: bool
    temperature: float
    prompt_iteration: int | None = None
    feedback_iteration: int | None = None

    def __post_init__(self):
        if self.applicable and not self.useful:
            raise ValueError("applicable variants must be useful")
        if self.useful and not self.correct:
            raise ValueError("useful variants must be correct")


@dataclass
class OracleSet:
    variants_by_cpat: dict[str, list[OracleVariant]]

    def cpat_ids(self) -> list[str]:
        return list(self.variants_by_cpat)

    def variants(self, cpat_id: str) -> list[OracleVariant]:
        return self.variants_by_cpat[cpat_id]


def oracle_from_dict(data: dict) -> OracleSet:
    if data.get("format_version", 0) > STORE_FORMAT_VERSION:
        raise StoreVersionError("oracle file is newer than this build supports")
    by_cpat: dict[str, list[OracleVariant]] = {}
    for entry in data["cpats"]:
        by_cpat[entry["cpat_id"]] = [
            OracleVariant(
                code=v["code"],
                correct=v["correct"],
                useful=v["useful"],
                applicable=v["applicable"],
                temperature=v["temperature"],
                prompt_iteration=v.get("prompt_iteration"),
                feedback_iteration=v.get("feedback_iteration"),
            )
            for v in entry["variants"]
        ]
    return OracleSet(by_cpat)


@dataclass(frozen=True)
class GridCell:
    t: float
    i: int
    precision: float
    recall: float
    f: float
    empty_classification: bool = False


class SuiteEvaluator:
    """Runs test suites over one pattern's oracle variants, memoizing the
    verdict of each (variant, test) pair."""

    def __init__(self, cpat: ChangePattern, oracle_variants: list[OracleVariant], sandbox):
        self.cpat = cpat
        self.variants = oracle_variants
        self.sandbox = sandbox
        self._verdicts: dict[tuple[str, str], bool] = {}
        self._wrapped: dict[str, str | None] = {}

    def _wrap(self, code: str) -> str | None:
        if code not in self._wrapped:
            try:
                self._wrapped[code] = wrap_fragment(code, self.cpat)
            except Exception:
                self._wrapped[code] = None
        return self._wrapped[code]

    def _passes(self, code: str, test: TestCase) -> bool:
        key = (norm_hash(code), norm_hash(test.code.text))
        if key not in self._verdicts:
            wrapped = self._wrap(code)
            if wrapped is None:
                self._verdicts[key] = False
            else:
                verdict = self.sandbox.run(ExecutionJob(wrapped, test.code.text))
                self._verdicts[key] = verdict.passed
        return self._verdicts[key]

    def evaluate(self, tests: list[TestCase], t: float, i: int) -> GridCell:
        """Precision/recall of classifying oracle variants with this suite."""
        suite = valid_only(tests)
        actual_correct = sum(1 for v in self.variants if v.correct)
        if actual_correct == 0 or actual_correct == len(self.variants):
            raise ValueError(f"{self.cpat.id}: oracle needs both correct and incorrect variants")
        tp = fp = 0
        for variant in self.variants:
            classified_correct = all(self._passes(variant.code, test) for test in suite)
            if classified_correct and variant.correct:
                tp += 1
            elif classified_correct:
                fp += 1
        classified = tp + fp
        empty = classified == 0
        if empty:
            log.warning("%s: suite at (t=%s, i=%s) classified nothing as correct",
                        self.cpat.id, t, i)
        precision = tp / classified if classified else 0.0
        recall = tp / actual_correct
        return GridCell(t, i, precision, recall, f_measure(precision, recall), empty)


def build_suites(cpat: ChangePattern, gateway, sandbox, temps, max_i) -> dict[tuple[float, int], list[TestCase]]:
    """Validated, cumulative test suites for every (t, i) cell."""
    suites: dict[tuple[float, int], list[TestCase]] = {}
    for t in temps:
        accumulated: list[TestCase] = []
        seen: set[str] = set()
        for i in range(1, max_i + 1):
            try:
                fragments = gateway.generate_tests(cpat, t, i)
            except Exception:
                fragments = []
            raw = []
            for fragment in fragments:
                digest = norm_hash(fragment.text)
                if digest in seen:
                    continue
                seen.add(digest)
                raw.append(TestCase(
                    id=f"{cpat.id}-t{t}-i{i}-{len(raw)}",
                    code=fragment, cpat_id=cpat.id, temperature=t, iteration=i,
                ))
            accumulated = accumulated + validate_tests(raw, cpat, sandbox)
            suites[(t, i)] = list(accumulated)
    return suites


def build_grid(cpat: ChangePattern, oracle: OracleSet, gateway, sandbox,
               temps=DEFAULT_TEMPS, max_i: int = 6) -> list[GridCell]:
    evaluator = SuiteEvaluator(cpat, oracle.variants(cpat.id), sandbox)
    suites = build_suites(cpat, gateway, sandbox, temps, max_i)
    return [evaluator.evaluate(suites[(t, i)], t, i)
            for t in temps for i in range(1, max_i + 1)]


def select_params(grid: list[GridCell], delta: float = DEFAULT_DELTA) -> tuple[float, int]:
    """Walk iterations upward while the next one still improves the best
    F-measure by more than delta; ties at a given iteration go to the
    smaller temperature."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    by_i: dict[int, list[GridCell]] = {}
    for cell in grid:
        by_i.setdefault(cell.i, []).append(cell)
    iterations = sorted(by_i)
    if not iterations:
        raise GridIncomplete("empty grid")
    temps = {cell.t for cell in grid}
    for i in iterations:
        if {cell.t for cell in by_i[i]} != temps:
            raise GridIncomplete(f"iteration {i} does not cover every temperature")
    if iterations != list(range(iterations[0], iterations[-1] + 1)):
        raise GridIncomplete("iteration axis has gaps")

    def best(i: int) -> GridCell:
        return max(by_i[i], key=lambda c: (c.f, -c.t))

    index = 0
    while index + 1 < len(iterations):
        current, nxt = iterations[index], iterations[index + 1]
        if best(nxt).f - best(current).f <= delta:
            break
        index += 1
    chosen = iterations[index]
    return (best(chosen).t, chosen)


@dataclass
class Fold:
    held: str
    selected: tuple[float, int]
    evaluations: dict[str, GridCell] = field(default_factory=dict)


def cross_validate(oracle: OracleSet, grids: dict[str, list[GridCell]],
                   k: int = 10, delta: float = DEFAULT_DELTA) -> list[Fold]:
    """Select on each held pattern, then read off every other pattern's
    cell at the selected parameters."""
    ids = oracle.cpat_ids()
    if len(ids) < k:
        raise InsufficientCpats(f"{len(ids)} patterns cannot support {k} folds")
    if len(ids) == 1:
        log.warning("single-pattern oracle: cross-validation is degenerate")
    folds: list[Fold] = []
    for held in ids[:k]:
        selected = select_params(grids[held], delta)
        fold = Fold(held, selected)
        for other in ids:
            if other == held:
                continue
            cell = next(c for c in grids[other]
                        if c.t == selected[0] and c.i == selected[1])
            fold.evaluations[other] = cell
        folds.append(fold)
    return folds


# ---------------------------------------------------------------------------
# iteration curves


def iteration_curves(oracle: OracleSet, kind: str) -> dict[tuple[float, str], list[float]]:
    """Cumulative ratio series per (temperature, cpat).

    Prompt: fraction of the pattern's prompt-produced variants seen by
    iteration i.  Feedback: fraction of its feedback-produced non-useful
    variants seen by feedback iteration i.  Series index 0 is iteration 1;
    every series is monotone and ends at 1.
    """
    if kind not in (KIND_PROMPT, KIND_FEEDBACK):
        raise ValueError(f"unknown curve kind {kind}")
    pools: dict[tuple[float, str], list[int]] = {}
    for cpat_id, variants in oracle.variants_by_cpat.items():
        for variant in variants:
            if kind == KIND_PROMPT:
                if variant.feedback_iteration is not None:
                    continue
                if variant.prompt_iteration is None:
                    raise MissingProvenance(f"{cpat_id}: variant lacks prompt_iteration")
                iteration = variant.prompt_iteration
            else:
                if variant.feedback_iteration is None:
                    continue
                if variant.useful:
                    continue
                iteration = variant.feedback_iteration
            pools.setdefault((variant.temperature, cpat_id), []).append(iteration)
    curves: dict[tuple[float, str], list[float]] = {}
    for key, iterations in pools.items():
        top = max(iterations)
        total = len(iterations)
        series = []
        seen = 0
        counts = {i: iterations.count(i) for i in range(1, top + 1)}
        for i in range(1, top + 1):
            seen += counts.get(i, 0)
            series.append(seen / total)
        curves[key] = series
    return curves


def curve_value(series: list[float], iteration: int) -> float:
    """Value at a 1-based iteration; constant 1 past the end."""
    if iteration <= 0:
        return 0.0
    return series[iteration - 1] if iteration <= len(series) else 1.0


def mean_curve(curves: dict[tuple[float, str], list[float]], t: float,
               iterations: list[int]) -> list[float]:
    series_list = [s for (temp, _), s in sorted(curves.items()) if temp == t]
    if not series_list:
        raise MissingProvenance(f"no curves at temperature {t}")
    return [sum(curve_value(s, i) for s in series_list) / len(series_list)
            for i in iterations]


def successive_hl_differences(curves: dict[tuple[float, str], list[float]],
                              t: float, iterations: list[int]) -> list[float]:
    """Hodges-Lehmann estimate of each iteration-to-iteration shift."""
    from .stats import hodges_lehmann

    series_list = [s for (temp, _), s in sorted(curves.items()) if temp == t]
    if not series_list:
        raise MissingProvenance(f"no curves at temperature {t}")
    out = []
    for i in iterations:
        diffs = [curve_value(s, i + 1) - curve_value(s, i) for s in series_list]
        out.append(hodges_lehmann(diffs))
    return out
