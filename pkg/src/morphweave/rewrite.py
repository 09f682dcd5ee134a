"""Template rewrite rules: parsing, matching, guard checks, and rewriting.

A rule is two statement-sequence templates separated by a ``=>`` line,
followed by optional guard lines.  Template variables use the surface
form ``:[[vN]]`` and bind whole expressions, or a whole statement when
the variable itself is a statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import syntax
from .errors import MissingTypeInfo, RuleParseError, UnboundRhsVar
from .syntax import Node, parse_fragment, print_canonical

_VAR_RE = re.compile(r":\[\[([A-Za-z_][A-Za-z0-9_]*)\]\]")
_SENTINEL = "__mwtv_{}__"
_SENTINEL_RE = re.compile(r"__mwtv_([A-Za-z_][A-Za-z0-9_]*)__")

GUARD_TYPE = "type"
GUARD_IMPORT = "import"


@dataclass(frozen=True)
class Guard:
    var: str
    kind: str  # GUARD_TYPE or GUARD_IMPORT
    value: str


@dataclass(frozen=True)
class RewriteRule:
    rule_id: str
    lhs: tuple[Node, ...]
    rhs: tuple[Node, ...]
    guards: tuple[Guard, ...] = ()

    @property
    def lhs_vars(self) -> tuple[str, ...]:
        return _template_vars(self.lhs)

    @property
    def rhs_vars(self) -> tuple[str, ...]:
        return _template_vars(self.rhs)


@dataclass
class MatchBinding:
    """One matched site: var assignments plus the matched statement window."""

    bindings: dict[str, Node]
    stmts: tuple[Node, ...]
    lines: tuple[int, int]  # 1-based inclusive span in the parsed source
    order: int = field(default=0)


def _template_vars(stmts) -> tuple[str, ...]:
    seen: list[str] = []
    for stmt in stmts:
        for node in stmt.walk():
            if node.kind == "TemplateVar" and node.text not in seen:
                seen.append(node.text)
    return tuple(seen)


# ---------------------------------------------------------------------------
# parsing and serializing rule text


def parse_template(text: str) -> tuple[Node, ...]:
    """Parse template source (statements that may contain :[[vN]] holes)."""
    lexed = _VAR_RE.sub(lambda m: _SENTINEL.format(m.group(1)), text)
    try:
        tree = parse_fragment(lexed)
    except Exception as exc:
        raise RuleParseError(f"bad template syntax: {exc}") from None
    return tuple(_restore_vars(s) for s in tree.children)


def _restore_vars(node: Node) -> Node:
    if node.kind == "Name":
        m = _SENTINEL_RE.fullmatch(node.text)
        if m:
            return Node("TemplateVar", m.group(1))
    children = tuple(_restore_vars(c) for c in node.children)
    return Node(node.kind, node.text, children, node.lines)


def parse_rule(text: str, rule_id: str = "rule") -> RewriteRule:
    lines = text.replace("\r\n", "\n").split("\n")
    try:
        sep = next(i for i, ln in enumerate(lines) if ln.strip() == "=>")
    except StopIteration:
        raise RuleParseError("missing '=>' separator") from None
    guard_start = len(lines)
    for i in range(sep + 1, len(lines)):
        if lines[i].startswith("guard "):
            guard_start = i
            break
    lhs_text = "\n".join(lines[:sep])
    rhs_text = "\n".join(lines[sep + 1:guard_start])
    if not lhs_text.strip() or not rhs_text.strip():
        raise RuleParseError("rule needs a non-empty LHS and RHS")
    lhs = parse_template(lhs_text)
    rhs = parse_template(rhs_text)
    guards = tuple(_parse_guard(ln) for ln in lines[guard_start:] if ln.strip())
    rule = RewriteRule(rule_id, lhs, rhs, guards)
    lhs_vars = set(rule.lhs_vars)
    for var in rule.rhs_vars:
        if var not in lhs_vars:
            raise UnboundRhsVar(var)
    for guard in guards:
        if guard.var not in lhs_vars:
            raise RuleParseError(f"guard references unknown variable :[[{guard.var}]]")
    return rule


def _parse_guard(line: str) -> Guard:
    m = re.fullmatch(r"guard :\[\[([A-Za-z_][A-Za-z0-9_]*)\]\] (type|import) (.+)", line.strip())
    if not m:
        raise RuleParseError(f"bad guard line: {line!r}")
    return Guard(m.group(1), m.group(2), m.group(3))


def serialize_rule(rule: RewriteRule) -> str:
    parts = [
        print_canonical(syntax.module(rule.lhs)).rstrip("\n"),
        "=>",
        print_canonical(syntax.module(rule.rhs)).rstrip("\n"),
    ]
    for guard in sorted(rule.guards, key=lambda g: (g.var, g.kind, g.value)):
        parts.append(f"guard :[[{guard.var}]] {guard.kind} {guard.value}")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# matching

_UNBINDABLE = frozenset({"Else", "Params", "NoValue", "Slice"})


def _is_stmt_hole(node: Node) -> bool:
    return node.kind == "ExprStmt" and node.children[0].kind == "TemplateVar"


def _unify(template: Node, target: Node, binding: dict[str, Node]) -> bool:
    if template.kind == "TemplateVar":
        if target.kind in _UNBINDABLE:
            return False
        bound = binding.get(template.text)
        if bound is None:
            binding[template.text] = target
            return True
        return bound == target
    if _is_stmt_hole(template) and target.is_statement():
        return _unify(template.children[0], target, binding)
    if template.kind != target.kind or template.text != target.text:
        return False
    if len(template.children) != len(target.children):
        return False
    return all(_unify(t, n, binding) for t, n in zip(template.children, target.children))


def _statement_lists(root: Node):
    """Yield every statement list in document order."""
    if root.kind == "Module":
        yield root.children
    for node in root.walk():
        k = node.kind
        if k in ("For",):
            yield node.children[2:]
        elif k == "While":
            yield node.children[1:]
        elif k == "If":
            yield node.children[1:-1]
            if node.children[-1].children:
                yield node.children[-1].children
        elif k == "With":
            yield node.children[2:]
        elif k in ("FunctionDef", "ClassDef"):
            yield node.children[1:]


def find_matches(rule: RewriteRule, target: Node) -> list[MatchBinding]:
    """All bindings of the rule LHS against contiguous statement windows."""
    width = len(rule.lhs)
    found: list[MatchBinding] = []
    for stmts in _statement_lists(target):
        stmts = tuple(s for s in stmts if s.is_statement())
        for start in range(0, len(stmts) - width + 1):
            window = stmts[start:start + width]
            binding: dict[str, Node] = {}
            if all(_unify(t, s, binding) for t, s in zip(rule.lhs, window)):
                span = (window[0].lines[0], window[-1].lines[1]) if window[0].lines else (0, 0)
                found.append(MatchBinding(binding, window, span))
    found.sort(key=lambda m: m.lines)
    for i, m in enumerate(found):
        m.order = i
    return found


# ---------------------------------------------------------------------------
# guards


def check_guards(
    binding: MatchBinding,
    guards,
    type_env: dict[str, str],
    imports: set[str],
) -> bool:
    """True iff every guard predicate holds for this binding.

    Raises MissingTypeInfo when a type guard hits a variable with no entry
    in type_env; callers skip the site rather than transform it.
    """
    for guard in guards:
        bound = binding.bindings.get(guard.var)
        if guard.kind == GUARD_IMPORT:
            if guard.value not in imports:
                return False
            continue
        if bound is None or bound.kind != "Name" or bound.text not in type_env:
            name = bound.text if bound is not None and bound.kind == "Name" else ""
            raise MissingTypeInfo(guard.var, name)
        if type_env[bound.text] != guard.value:
            return False
    return True


# ---------------------------------------------------------------------------
# rewriting


def instantiate(templates, binding: dict[str, Node]) -> tuple[Node, ...]:
    """Substitute bound subtrees for template variables."""
    def subst(node: Node) -> Node:
        if node.kind == "TemplateVar":
            return binding[node.text]
        if _is_stmt_hole(node):
            return binding[node.children[0].text]
        return Node(node.kind, node.text, tuple(subst(c) for c in node.children))

    return tuple(subst(t) for t in templates)


def rewrite(rule: RewriteRule, binding: MatchBinding, source: str) -> str:
    """Replace the matched span with the instantiated RHS.

    Everything outside the span is preserved byte for byte; the
    replacement is canonical text re-indented to the site.
    """
    lines = source.replace("\r\n", "\n").split("\n")
    start, end = binding.lines
    indent = lines[start - 1][: len(lines[start - 1]) - len(lines[start - 1].lstrip())]
    replacement = print_canonical(syntax.module(instantiate(rule.rhs, binding.bindings)))
    new_lines = [indent + ln if ln else ln for ln in replacement.rstrip("\n").split("\n")]
    return "\n".join(lines[: start - 1] + new_lines + lines[end:])
