"""Infer rewrite rules from a before/after pair by anti-unification.

Every name in variable position becomes a template variable (numbered by
first appearance in the before side); literals, bare call targets, and
dotted prefixes naming imported modules stay concrete.  Guards come from
the miner output for elements shared with the pattern and from LLM type
inference for variant-only elements.
"""

from __future__ import annotations

from .analysis import analyze_names
from .errors import SynthesisError
from .patterns import ChangePattern
from .rewrite import GUARD_TYPE, Guard, RewriteRule
from .syntax import Node, SourceFragment, parse_fragment


def _as_ast(value) -> Node:
    if isinstance(value, Node):
        return value
    return parse_fragment(value)


class _Abstractor:
    """Replaces variable-position names with shared template variables."""

    def __init__(self, module_names):
        self.module_names = frozenset(module_names)
        self.var_ids: dict[str, str] = {}

    def _var_for(self, name: str, create: bool) -> str | None:
        if name in self.var_ids:
            return self.var_ids[name]
        if not create:
            return None
        var_id = f"v{len(self.var_ids)}"
        self.var_ids[name] = var_id
        return var_id

    def abstract(self, node: Node, create: bool, binder: bool = False) -> Node:
        k = node.kind
        if k == "Name":
            var_id = self._var_for(node.text, create)
            if var_id is None:
                if binder:
                    return node  # after-side local binder; keep concrete
                raise SynthesisError(
                    f"the after side reads {node.text!r}, which the before side never binds"
                )
            return Node("TemplateVar", var_id)
        if k == "Call":
            func = node.children[0]
            if func.kind == "Name":
                new_func = func  # bare call targets stay concrete
            elif func.kind == "Attribute":
                new_func = self._abstract_attribute(func, create)
            else:
                new_func = self.abstract(func, create)
            args = tuple(self.abstract(a, create) for a in node.children[1:])
            return Node("Call", children=(new_func,) + args)
        if k == "Attribute":
            return self._abstract_attribute(node, create)
        if k == "Literal":
            return node
        if k == "For":
            target = self.abstract(node.children[0], create, binder=True)
            it = self.abstract(node.children[1], create)
            body = tuple(self.abstract(s, create) for s in node.children[2:])
            return Node("For", children=(target, it) + body)
        if k == "Comprehension":
            element_last = node.children[0]
            target = self.abstract(node.children[1], create, binder=True)
            it = self.abstract(node.children[2], create)
            conds = tuple(self.abstract(c, create) for c in node.children[3:])
            element = self.abstract(element_last, create)
            return Node("Comprehension", children=(element, target, it) + conds)
        if k in ("TupleLiteral", "ListLiteral") and binder:
            return Node(k, children=tuple(self.abstract(c, create, binder=True) for c in node.children))
        if k == "Assign":
            # new names introduced by the after side's targets stay concrete
            target = self.abstract(node.children[0], create, binder=binder or not create)
            value = self.abstract(node.children[1], create)
            return Node("Assign", children=(target, value))
        children = tuple(self.abstract(c, create) for c in node.children)
        return Node(k, node.text, children)

    def _abstract_attribute(self, node: Node, create: bool) -> Node:
        base = node.children[0]
        if base.kind == "Name" and base.text in self.module_names:
            return node
        return Node("Attribute", node.text, (self.abstract(base, create),))


def _antiunify_mapped(before_ast, after_ast, module_names, rule_id):
    if not before_ast.children:
        raise SynthesisError("the before side is empty")
    abstractor = _Abstractor(module_names)
    lhs = tuple(abstractor.abstract(s, create=True) for s in before_ast.children)
    rhs = tuple(abstractor.abstract(s, create=False) for s in after_ast.children)
    return RewriteRule(rule_id, lhs, rhs, guards=()), abstractor.var_ids


def antiunify(before, after, module_names=frozenset(), rule_id: str = "rule") -> RewriteRule:
    """Build a rewrite rule whose LHS generalizes `before` and RHS `after`.

    Identical names on the two sides share a template variable, numbered
    by first appearance in the before side.  Raises SynthesisError when
    the after side reads a name the before side never binds (local
    binders and new assignment targets are exempt and stay concrete).
    """
    rule, _ = _antiunify_mapped(_as_ast(before), _as_ast(after), module_names, rule_id)
    return rule


def correspondence(variant_ast: Node, cpat: ChangePattern) -> tuple[dict[str, str], dict[str, str]]:
    """Map pattern variable names to the variant's names for the same role.

    Returns (io_map, binder_map): inputs pair with the variant's free
    names and outputs with its established names (these are the shared
    program elements); loop binders pair separately and only steer the
    renaming of the pattern rhs.  Identical names pair first, the rest
    pair in first-use order.
    """
    usage = analyze_names(variant_ast, cpat.imports)
    lhs_usage = analyze_names(cpat.lhs_ast, cpat.imports)
    io_map: dict[str, str] = {}
    claimed: set[str] = set()

    def pair(cpat_names, variant_names):
        for name in cpat_names:  # identical names win outright
            if name in variant_names and name not in claimed and name not in io_map:
                io_map[name] = name
                claimed.add(name)
        remaining = [n for n in variant_names if n not in claimed]
        for name in cpat_names:
            if name not in io_map and remaining:
                io_map[name] = remaining.pop(0)
                claimed.add(io_map[name])

    # outputs first: the written-to name is the strongest role signal
    pair(list(cpat.output_vars), list(usage.established))
    pair(list(cpat.input_names), list(usage.free))
    binder_map: dict[str, str] = {}
    remaining_binders = [b for b in usage.binders]
    for binder in lhs_usage.binders:
        if binder in io_map:
            continue
        if binder in remaining_binders:
            binder_map[binder] = binder
            remaining_binders.remove(binder)
        elif remaining_binders:
            binder_map[binder] = remaining_binders.pop(0)
    return io_map, binder_map


def rename_names(node: Node, mapping: dict[str, str]) -> Node:
    if node.kind == "Name" and node.text in mapping:
        return Node("Name", mapping[node.text])
    return Node(node.kind, node.text, tuple(rename_names(c, mapping) for c in node.children), node.lines)


def infer_guards(
    var_ids: dict[str, str],
    shared: dict[str, str],
    cpat: ChangePattern,
    llm_types: dict[str, str],
) -> tuple[Guard, ...]:
    """Guards for each template variable, ordered by variable id.

    Variables shared with the pattern copy the miner guards of their
    pattern-side counterpart; variant-only variables get a type guard
    when LLM inference supplied one, otherwise no guard.
    """
    guards: list[Guard] = []
    for name, var_id in var_ids.items():
        if name in shared:
            for kind, value in cpat.miner_guards.get(shared[name], ()):
                guards.append(Guard(var_id, kind, value))
        elif name in llm_types:
            guards.append(Guard(var_id, GUARD_TYPE, llm_types[name]))
    guards.sort(key=lambda g: (int(g.var[1:]) if g.var[1:].isdigit() else 0, g.kind, g.value))
    return tuple(guards)


def synthesize_from_variant(
    variant_lhs: SourceFragment | str | Node,
    cpat: ChangePattern,
    llm_types: dict[str, str] | None = None,
    rule_id: str | None = None,
) -> RewriteRule:
    """Combine a variant with the pattern rhs into a guarded rewrite rule."""
    variant_ast = _as_ast(variant_lhs)
    io_map, binder_map = correspondence(variant_ast, cpat)
    renamed_rhs = rename_names(cpat.rhs_ast, {**binder_map, **io_map})
    rule, var_ids = _antiunify_mapped(
        variant_ast, renamed_rhs, cpat.imports, rule_id or f"{cpat.id}-rule"
    )
    shared = {variant_name: cpat_name for cpat_name, variant_name in io_map.items()}
    llm_only = {
        name: type_name
        for name, type_name in (llm_types or {}).items()
        if name not in shared
    }
    guards = infer_guards(var_ids, shared, cpat, llm_only)
    return RewriteRule(rule.rule_id, rule.lhs, rule.rhs, guards)


def synthesize_baseline(cpat: ChangePattern, rule_id: str | None = None) -> RewriteRule:
    """The rule carried by the human example itself."""
    return synthesize_from_variant(
        cpat.lhs, cpat, llm_types={}, rule_id=rule_id or f"{cpat.id}-baseline"
    )
