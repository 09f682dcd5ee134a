"""Structural-intent checks deciding whether a variant can drive a rule.

Three rules, each decidable from ASTs alone:
  ControlNodes   every control statement of the pattern lhs appears in the
                 variant (multiset containment by default)
  Declarations   the variant introduces no function/class declarations
                 beyond those in the pattern lhs
  NodeCountSign  the variant sits on the same side of the pattern rhs as
                 the pattern lhs does, by node count
"""

from __future__ import annotations

from dataclasses import dataclass

from .patterns import ChangePattern
from .syntax import Node, collect_declarations, control_nodes, count_nodes

RULE_CONTROL = "ControlNodes"
RULE_DECLARATIONS = "Declarations"
RULE_COUNT_SIGN = "NodeCountSign"


@dataclass(frozen=True)
class ApplicabilityVerdict:
    passed: bool
    failed_rules: frozenset[str]


def check_control_nodes(variant: Node, cpat_lhs: Node, multiset: bool = True) -> bool:
    needed = control_nodes(cpat_lhs)
    have = control_nodes(variant)
    if multiset:
        return all(have[kind] >= count for kind, count in needed.items())
    return all(have[kind] > 0 for kind in needed)


def check_declarations(variant: Node, cpat_lhs: Node) -> bool:
    return collect_declarations(variant) <= collect_declarations(cpat_lhs)


def check_node_count_sign(variant: Node, cpat: ChangePattern) -> bool:
    rhs_count = count_nodes(cpat.rhs_ast)
    lhs_count = count_nodes(cpat.lhs_ast)
    return (count_nodes(variant) - rhs_count) * (lhs_count - rhs_count) > 0


def is_applicable(variant: Node, cpat: ChangePattern, multiset: bool = True) -> ApplicabilityVerdict:
    failed = []
    if not check_control_nodes(variant, cpat.lhs_ast, multiset=multiset):
        failed.append(RULE_CONTROL)
    if not check_declarations(variant, cpat.lhs_ast):
        failed.append(RULE_DECLARATIONS)
    if not check_node_count_sign(variant, cpat):
        failed.append(RULE_COUNT_SIGN)
    return ApplicabilityVerdict(passed=not failed, failed_rules=frozenset(failed))
