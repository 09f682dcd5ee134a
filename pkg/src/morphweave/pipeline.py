"""Drive variants down the validation ladder and report the counts.

Expansion runs the configured temperatures for a fixed number of prompt
iterations, then feedback rounds that re-prompt with every applicable
variant not yet used as a seed.  Candidates are deduplicated by the hash
of their canonical print before validation; every surviving variant ends
in a terminal status and each transition is appended to an event log.
"""

from __future__ import annotations

import functools
import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .applicability import is_applicable
from .errors import (
    FormatError,
    FragmentSyntaxError,
    StoreFormatError,
    StoreVersionError,
    UnsupportedConstruct,
)
from .gateway import Gateway
from .harness import TestCase, T_VALID, run_suite, valid_only, validate_tests
from .patterns import ChangePattern
from .synthesis import correspondence
from .syntax import SourceFragment, parse_fragment, print_canonical

log = logging.getLogger(__name__)

RAW = "Raw"
SYNTAX_FAIL = "SyntaxFail"
TYPE_FAIL = "TypeFail"
IMPORT_FAIL = "ImportFail"
SEMANTIC_FAIL = "SemanticFail"
CORRECT = "Correct"
NOT_USEFUL = "NotUseful"
USEFUL = "Useful"
NOT_APPLICABLE = "NotApplicable"
APPLICABLE = "Applicable"

LADDER_RANK = {
    RAW: 0,
    SYNTAX_FAIL: 1, TYPE_FAIL: 1, IMPORT_FAIL: 1, SEMANTIC_FAIL: 1, CORRECT: 1,
    NOT_USEFUL: 2, USEFUL: 2,
    NOT_APPLICABLE: 3, APPLICABLE: 3,
}
CORRECT_STATUSES = frozenset({CORRECT, NOT_USEFUL, USEFUL, NOT_APPLICABLE, APPLICABLE})
USEFUL_STATUSES = frozenset({USEFUL, NOT_APPLICABLE, APPLICABLE})

STORE_FORMAT_VERSION = 1

# Modules a variant may rely on besides the pattern's own imports.
STDLIB_ALLOWLIST = frozenset({
    "math", "collections", "itertools", "functools", "operator",
    "statistics", "json", "re", "string", "heapq", "bisect", "copy",
})


@functools.lru_cache(maxsize=131072)
def norm_hash(code: str) -> str:
    """Hash of the canonical print; falls back to stripped text when the
    code does not parse (duplicates of broken candidates still collapse)."""
    try:
        normalized = print_canonical(parse_fragment(code))
    except (FragmentSyntaxError, UnsupportedConstruct):
        normalized = "\n".join(ln.rstrip() for ln in code.strip().split("\n"))
    return hashlib.sha256(normalized.encode("utf-8")).hexdigest()


@dataclass
class Variant:
    id: str
    code: SourceFragment
    cpat_id: str
    temperature: float
    prompt_iteration: int
    norm_hash: str
    feedback_parent: str | None = None
    status: str = RAW

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "cpat_id": self.cpat_id,
            "code": self.code.text,
            "temperature": self.temperature,
            "prompt_iteration": self.prompt_iteration,
            "feedback_parent": self.feedback_parent,
            "status": self.status,
            "norm_hash": self.norm_hash,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Variant":
        return cls(
            id=data["id"],
            code=SourceFragment(data["code"], origin="variant"),
            cpat_id=data["cpat_id"],
            temperature=data["temperature"],
            prompt_iteration=data["prompt_iteration"],
            norm_hash=data["norm_hash"],
            feedback_parent=data.get("feedback_parent"),
            status=data["status"],
        )


@dataclass(frozen=True)
class ExpansionConfig:
    temperatures: tuple[float, ...] = (0.5, 0.7)
    prompt_iterations: int = 3
    feedback_iterations: int = 5
    test_temperature: float = 1.2
    test_iterations: int = 5
    usefulness_labels: str | None = None
    multiset_control_rule: bool = True

    def __post_init__(self):
        if self.prompt_iterations < 1 or self.feedback_iterations < 0:
            raise ValueError("need prompt_iterations >= 1 and feedback_iterations >= 0")
        if any(not 0.0 <= t <= 2.0 for t in self.temperatures):
            raise ValueError("temperatures must lie in [0, 2]")


@dataclass
class ExpansionReport:
    cpat_id: str
    total: int
    correct: int
    useful: int
    applicable: int
    by_status: dict[str, int]
    expansion_factor: float

    def to_dict(self) -> dict:
        return {
            "cpat_id": self.cpat_id,
            "total": self.total,
            "correct": self.correct,
            "useful": self.useful,
            "applicable": self.applicable,
            "by_status": dict(sorted(self.by_status.items())),
            "expansion_factor": self.expansion_factor,
        }


@dataclass
class ExpansionResult:
    variants: list[Variant]
    report: ExpansionReport
    tests: list[TestCase]
    events: list[dict] = field(default_factory=list)


class _Ladder:
    """Single writer for status transitions; enforces forward movement."""

    def __init__(self, sink=None):
        self.events: list[dict] = []
        self._seq = 0
        self._sink = sink

    def advance(self, variant: Variant, status: str) -> None:
        if LADDER_RANK[status] <= LADDER_RANK[variant.status]:
            raise ValueError(
                f"{variant.id}: cannot move {variant.status} -> {status} (ladder is forward-only)"
            )
        event = {"seq": self._seq, "variant": variant.id,
                 "from": variant.status, "to": status}
        self._seq += 1
        self.events.append(event)
        if self._sink is not None:
            self._sink(event)
        variant.status = status


def load_labels(path: str | Path) -> dict[str, bool]:
    data = json.loads(Path(path).read_text())
    if data.get("format_version", 0) > STORE_FORMAT_VERSION:
        raise StoreVersionError(f"label file {path} is newer than this build supports")
    return {h: bool(entry["useful"]) for h, entry in data.get("labels", {}).items()}


def apply_usefulness(variants: list[Variant], labels: dict[str, bool] | None,
                     ladder: _Ladder | None = None, warn_orphans: bool = False) -> list[Variant]:
    """Promote Correct variants to Useful/NotUseful.

    Without labels every Correct variant is taken as Useful (parameter
    tuning, not a predicate, is what suppresses the useless ones).
    """
    ladder = ladder or _Ladder()
    for variant in variants:
        if variant.status != CORRECT:
            continue
        if labels is None or variant.norm_hash not in labels:
            ladder.advance(variant, USEFUL)
        else:
            ladder.advance(variant, USEFUL if labels[variant.norm_hash] else NOT_USEFUL)
    if warn_orphans and labels:
        for orphan in sorted(set(labels) - {v.norm_hash for v in variants}):
            log.warning("usefulness label matches no variant: %s", orphan)
    return variants


class Expansion:
    def __init__(self, cpat: ChangePattern, cfg: ExpansionConfig, gateway: Gateway,
                 sandbox, labels: dict[str, bool] | None = None, on_event=None,
                 workers: int = 1):
        self.cpat = cpat
        self.cfg = cfg
        self.gateway = gateway
        self.sandbox = sandbox
        self.labels = labels
        self.workers = max(1, workers)
        self.ladder = _Ladder(on_event)
        self.variants: list[Variant] = []
        self._by_hash: dict[str, Variant] = {}
        self.tests: list[TestCase] = []

    # -- candidate intake ----------------------------------------------------

    def _add(self, fragment: SourceFragment, t: float, iteration: int,
             parent: str | None) -> Variant | None:
        digest = norm_hash(fragment.text)
        if digest in self._by_hash:
            return None
        variant = Variant(
            id=f"{self.cpat.id}-v{len(self.variants):05d}",
            code=fragment,
            cpat_id=self.cpat.id,
            temperature=t,
            prompt_iteration=iteration,
            norm_hash=digest,
            feedback_parent=parent,
        )
        self.variants.append(variant)
        self._by_hash[digest] = variant
        return variant

    # -- validation ladder ---------------------------------------------------

    def _assess(self, variant: Variant) -> str:
        """Full static + semantic classification, without status effects."""
        try:
            ast = parse_fragment(variant.code)
        except (FragmentSyntaxError, UnsupportedConstruct):
            return SYNTAX_FAIL
        try:
            inferred_types = self.gateway.infer_types(variant.code, self.cpat)
        except FormatError:
            inferred_types = {}
        io_map, _ = correspondence(ast, self.cpat)
        for name, declared in self.cpat.input_vars:
            counterpart = io_map.get(name)
            inferred = inferred_types.get(counterpart) if counterpart else None
            if inferred is not None and inferred != declared:
                return TYPE_FAIL
        try:
            needed = self.gateway.infer_imports(variant.code, self.cpat)
        except FormatError:
            needed = set()
        if not needed <= (set(self.cpat.imports) | STDLIB_ALLOWLIST):
            return IMPORT_FAIL
        ok, _detail = run_suite(variant.code, self.tests, self.cpat, self.sandbox)
        return CORRECT if ok else SEMANTIC_FAIL

    def _validate_batch(self, batch: list[Variant]) -> None:
        # classification fans out to the worker pool; the ladder stays a
        # single writer applying outcomes in batch order
        if self.workers > 1 and len(batch) > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(pool.map(self._assess, batch))
        else:
            outcomes = [self._assess(variant) for variant in batch]
        for variant, outcome in zip(batch, outcomes):
            self.ladder.advance(variant, outcome)
        apply_usefulness(batch, self.labels, self.ladder)
        for variant in batch:
            if variant.status != USEFUL:
                continue
            verdict = is_applicable(parse_fragment(variant.code), self.cpat,
                                    multiset=self.cfg.multiset_control_rule)
            self.ladder.advance(variant, APPLICABLE if verdict.passed else NOT_APPLICABLE)

    # -- phases ---------------------------------------------------------------

    def _collect_tests(self) -> None:
        raw: list[TestCase] = []
        for i in range(1, self.cfg.test_iterations + 1):
            try:
                fragments = self.gateway.generate_tests(self.cpat, self.cfg.test_temperature, i)
            except FormatError:
                continue
            for fragment in fragments:
                raw.append(TestCase(
                    id=f"{self.cpat.id}-t{len(raw):04d}",
                    code=fragment,
                    cpat_id=self.cpat.id,
                    temperature=self.cfg.test_temperature,
                    iteration=i,
                ))
        self.tests = validate_tests(raw, self.cpat, self.sandbox)

    def run(self) -> ExpansionResult:
        self._collect_tests()
        batch: list[Variant] = []
        for t in self.cfg.temperatures:
            for i in range(1, self.cfg.prompt_iterations + 1):
                try:
                    fragments = self.gateway.generate_variants(self.cpat, t, i)
                except FormatError:
                    continue
                for fragment in fragments:
                    added = self._add(fragment, t, i, parent=None)
                    if added is not None:
                        batch.append(added)
        self._validate_batch(batch)

        seeded: set[str] = set()
        for round_index in range(1, self.cfg.feedback_iterations + 1):
            seeds = [v for v in self.variants
                     if v.status == APPLICABLE and v.id not in seeded]
            if not seeds:
                break
            batch = []
            for seed in seeds:
                seeded.add(seed.id)
                for t in self.cfg.temperatures:
                    try:
                        fragments = self.gateway.generate_variants(
                            self.cpat, t, round_index, seed_code=seed.code.text)
                    except FormatError:
                        continue
                    for fragment in fragments:
                        added = self._add(fragment, t, round_index, parent=seed.id)
                        if added is not None:
                            batch.append(added)
            self._validate_batch(batch)

        report = summarize(self.variants, cpat_id=self.cpat.id)
        return ExpansionResult(self.variants, report, self.tests, self.ladder.events)


def expand(cpat: ChangePattern, cfg: ExpansionConfig, gateway: Gateway, sandbox,
           labels: dict[str, bool] | None = None, on_event=None,
           workers: int = 1) -> ExpansionResult:
    return Expansion(cpat, cfg, gateway, sandbox, labels, on_event, workers).run()


def summarize(variants: list[Variant], cpat_id: str = "", human_examples: int = 1) -> ExpansionReport:
    by_status: dict[str, int] = {}
    for variant in variants:
        by_status[variant.status] = by_status.get(variant.status, 0) + 1
    applicable = by_status.get(APPLICABLE, 0)
    return ExpansionReport(
        cpat_id=cpat_id or (variants[0].cpat_id if variants else ""),
        total=len(variants),
        correct=sum(n for s, n in by_status.items() if s in CORRECT_STATUSES),
        useful=sum(n for s, n in by_status.items() if s in USEFUL_STATUSES),
        applicable=applicable,
        by_status=by_status,
        expansion_factor=applicable / human_examples,
    )


# ---------------------------------------------------------------------------
# stores


def write_variant_store(path: str | Path, variants: list[Variant]) -> None:
    lines = [json.dumps({"format_version": STORE_FORMAT_VERSION, "kind": "variant-store"})]
    lines += [json.dumps(v.to_dict(), sort_keys=True) for v in variants]
    Path(path).write_text("\n".join(lines) + "\n")


def read_variant_store(path: str | Path) -> list[Variant]:
    lines = Path(path).read_text().splitlines()
    if not lines:
        return []
    try:
        header = json.loads(lines[0])
        if header.get("format_version", 0) > STORE_FORMAT_VERSION:
            raise StoreVersionError(f"variant store {path} is newer than this build supports")
        return [Variant.from_dict(json.loads(ln)) for ln in lines[1:] if ln.strip()]
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise StoreFormatError(f"variant store {path} is corrupt: {exc}") from None


def write_event_log(path: str | Path, events: list[dict]) -> None:
    lines = [json.dumps({"format_version": STORE_FORMAT_VERSION, "kind": "event-log"})]
    lines += [json.dumps(e, sort_keys=True) for e in events]
    Path(path).write_text("\n".join(lines) + "\n")


def read_event_log(path: str | Path) -> list[dict]:
    lines = Path(path).read_text().splitlines()
    return [json.loads(ln) for ln in lines[1:] if ln.strip()]
