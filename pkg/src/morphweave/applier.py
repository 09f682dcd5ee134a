"""Scan a tree of Python files with a rule set and emit patches.

Files scan in sorted order, rules apply in list order, and overlapping
sites go to the first rule that claimed them, so identical inputs always
produce identical patch sets.  Sites whose guards cannot be decided
(missing type info) are skipped, never transformed.
"""

from __future__ import annotations

import difflib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import imported_modules
from .errors import FragmentSyntaxError, MissingTypeInfo, UnsupportedConstruct
from .rewrite import MatchBinding, RewriteRule, check_guards, find_matches, instantiate, parse_rule
from .syntax import Node, module, parse_fragment, print_canonical

log = logging.getLogger(__name__)

RULE_SUFFIX = ".rule"


@dataclass
class PatchEntry:
    path: str
    rule_id: str
    span: tuple[int, int]
    diff: str
    replacement: str


@dataclass
class PatchSet:
    entries: list[PatchEntry] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    patched_files: dict[str, str] = field(default_factory=dict)
    skipped_files: list[tuple[str, str]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count_report(self) -> dict[str, int]:
        return dict(sorted(self.counts.items()))


def load_rules(rule_dir: str | Path) -> list[RewriteRule]:
    rules = []
    for path in sorted(Path(rule_dir).rglob(f"*{RULE_SUFFIX}")):
        rules.append(parse_rule(path.read_text(), rule_id=path.stem))
    return rules


def load_type_stubs(path: str | Path | None) -> dict[str, dict[str, str]]:
    """Stub file: {"*": {name: type}, "<relative path>": {name: type}}."""
    if path is None:
        return {}
    return json.loads(Path(path).read_text())


def _type_env_for(stubs: dict[str, dict[str, str]], rel_path: str,
                  base_env: dict[str, str]) -> dict[str, str]:
    env = dict(base_env)
    env.update(stubs.get("*", {}))
    env.update(stubs.get(rel_path, {}))
    return env


def _overlaps(span: tuple[int, int], taken: list[tuple[int, int]]) -> bool:
    return any(not (span[1] < lo or span[0] > hi) for lo, hi in taken)


def rhs_modules(rule: RewriteRule) -> set[str]:
    """Module names the rule's replacement references with dotted calls.

    Concrete attribute bases in a synthesized replacement are concrete
    exactly because they named an imported module, so every one counts.
    """
    mods: set[str] = set()
    for stmt in rule.rhs:
        for node in stmt.walk():
            if node.kind == "Attribute" and node.children[0].kind == "Name":
                mods.add(node.children[0].text)
    return mods


def ensure_import_lines(text: str, modules: set[str]) -> str:
    """Insert ``import <module>`` for each missing module, after the last
    top-level import (or at the top).  Idempotent."""
    if not modules:
        return text
    try:
        tree = parse_fragment(text)
    except (FragmentSyntaxError, UnsupportedConstruct):
        return text
    present = imported_modules(tree)
    missing = sorted(m for m in modules if m not in present)
    if not missing:
        return text
    lines = text.split("\n")
    insert_at = 0
    for stmt in tree.children:
        if stmt.kind == "Import" and stmt.lines:
            insert_at = stmt.lines[1]
    return "\n".join(lines[:insert_at] + [f"import {m}" for m in missing] + lines[insert_at:])


def _site_diff(path: str, original: str, patched: str) -> str:
    return "".join(difflib.unified_diff(
        original.splitlines(keepends=True),
        patched.splitlines(keepends=True),
        fromfile=f"a/{path}",
        tofile=f"b/{path}",
    ))


def _splice(source: str, span: tuple[int, int], replacement_lines: list[str]) -> str:
    lines = source.split("\n")
    return "\n".join(lines[: span[0] - 1] + replacement_lines + lines[span[1]:])


def scan(rules: list[RewriteRule], root: str | Path,
         type_stubs: dict[str, dict[str, str]] | None = None,
         base_type_env: dict[str, str] | None = None) -> PatchSet:
    """Match every rule against every ``*.py`` file under root."""
    root = Path(root)
    stubs = type_stubs or {}
    base_env = base_type_env or {}
    result = PatchSet(counts={rule.rule_id: 0 for rule in rules})
    for file_path in sorted(root.rglob("*.py")):
        rel = file_path.relative_to(root).as_posix()
        text = file_path.read_text()
        try:
            tree = parse_fragment(text)
        except (FragmentSyntaxError, UnsupportedConstruct) as exc:
            result.skipped_files.append((rel, str(exc)))
            log.info("skipping %s: %s", rel, exc)
            continue
        env = _type_env_for(stubs, rel, base_env)
        file_imports = imported_modules(tree)
        accepted: list[tuple[RewriteRule, MatchBinding]] = []
        taken: list[tuple[int, int]] = []
        for rule in rules:
            for match in find_matches(rule, tree):
                if _overlaps(match.lines, taken):
                    continue
                try:
                    ok = check_guards(match, rule.guards, env, file_imports)
                except MissingTypeInfo as exc:
                    log.info("%s:%s skipped (%s)", rel, match.lines[0], exc)
                    continue
                if not ok:
                    continue
                accepted.append((rule, match))
                taken.append(match.lines)
        if not accepted:
            continue
        accepted.sort(key=lambda pair: pair[1].lines)
        patched = text
        needed_imports: set[str] = set()
        for rule, match in sorted(accepted, key=lambda pair: -pair[1].lines[0]):
            replacement = print_canonical(module(instantiate(rule.rhs, match.bindings)))
            lines = match.stmts[0].lines
            indent_line = text.split("\n")[lines[0] - 1]
            indent = indent_line[: len(indent_line) - len(indent_line.lstrip())]
            replacement_lines = [indent + ln if ln else ln
                                 for ln in replacement.rstrip("\n").split("\n")]
            site_patched = _splice(text, match.lines, replacement_lines)
            mods = rhs_modules(rule) - file_imports
            site_patched = ensure_import_lines(site_patched, mods)
            result.entries.append(PatchEntry(
                path=rel,
                rule_id=rule.rule_id,
                span=match.lines,
                diff=_site_diff(rel, text, site_patched),
                replacement="\n".join(replacement_lines),
            ))
            result.counts[rule.rule_id] += 1
            patched = _splice(patched, match.lines, replacement_lines)
            needed_imports |= mods
        patched = ensure_import_lines(patched, needed_imports)
        parse_fragment(patched)  # rewrite output must stay parseable
        result.patched_files[rel] = patched
    result.entries.sort(key=lambda e: (e.path, e.span))
    return result


def write_patches(patch_set: PatchSet, root: str | Path) -> None:
    root = Path(root)
    for rel, text in patch_set.patched_files.items():
        (root / rel).write_text(text)
