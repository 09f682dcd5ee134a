"""Change patterns: a mined before/after pair plus variable metadata.

File format (JSON, one pattern per file):

    {
      "id": "cpat-1",
      "lhs": "...",
      "rhs": "...",
      "input_vars": [{"name": "elements", "type": "List[int]"}],
      "output_vars": ["result"],
      "imports": ["numpy"],
      "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]}
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .analysis import analyze_names
from .errors import CpatFormatError
from .syntax import Node, SourceFragment, parse_fragment


@dataclass(frozen=True)
class ChangePattern:
    id: str
    lhs: SourceFragment
    rhs: SourceFragment
    input_vars: tuple[tuple[str, str], ...]  # (name, type-name)
    output_vars: tuple[str, ...]
    imports: frozenset[str]
    miner_guards: dict[str, tuple[tuple[str, str], ...]] = field(default_factory=dict)

    @cached_property
    def lhs_ast(self) -> Node:
        return parse_fragment(self.lhs)

    @cached_property
    def rhs_ast(self) -> Node:
        return parse_fragment(self.rhs)

    @property
    def input_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.input_vars)

    def input_type(self, name: str) -> str | None:
        for var, type_name in self.input_vars:
            if var == name:
                return type_name
        return None

    def validate(self) -> None:
        lhs_usage = analyze_names(self.lhs_ast, self.imports)
        rhs_usage = analyze_names(self.rhs_ast, self.imports)
        for name in self.input_names:
            if name not in lhs_usage.free:
                raise CpatFormatError(f"{self.id}: input variable {name!r} is not free in the lhs")
        for name in self.output_vars:
            if name not in lhs_usage.established:
                raise CpatFormatError(f"{self.id}: output variable {name!r} is never set in the lhs")
            if name not in rhs_usage.established:
                raise CpatFormatError(f"{self.id}: output variable {name!r} is never set in the rhs")


def pattern_from_dict(data: dict) -> ChangePattern:
    try:
        pattern = ChangePattern(
            id=data["id"],
            lhs=SourceFragment(data["lhs"], origin="cpat-lhs"),
            rhs=SourceFragment(data["rhs"], origin="cpat-rhs"),
            input_vars=tuple((v["name"], v["type"]) for v in data["input_vars"]),
            output_vars=tuple(data["output_vars"]),
            imports=frozenset(data["imports"]),
            miner_guards={
                name: tuple((g["kind"], g["value"]) for g in guards)
                for name, guards in data.get("miner_guards", {}).items()
            },
        )
    except (KeyError, TypeError) as exc:
        raise CpatFormatError(f"malformed change-pattern record: {exc}") from None
    pattern.validate()
    return pattern


def pattern_to_dict(pattern: ChangePattern) -> dict:
    return {
        "id": pattern.id,
        "lhs": pattern.lhs.text,
        "rhs": pattern.rhs.text,
        "input_vars": [{"name": n, "type": t} for n, t in pattern.input_vars],
        "output_vars": list(pattern.output_vars),
        "imports": sorted(pattern.imports),
        "miner_guards": {
            name: [{"kind": k, "value": v} for k, v in guards]
            for name, guards in pattern.miner_guards.items()
        },
    }


def load_pattern(path: str | Path) -> ChangePattern:
    return pattern_from_dict(json.loads(Path(path).read_text()))


def load_pattern_dir(path: str | Path) -> list[ChangePattern]:
    return [load_pattern(p) for p in sorted(Path(path).glob("*.json"))]
