from conftest import INDEXED_SUM, SUM_LHS
from morphweave.applicability import (
    RULE_CONTROL,
    RULE_COUNT_SIGN,
    RULE_DECLARATIONS,
    check_control_nodes,
    check_declarations,
    check_node_count_sign,
    is_applicable,
)
from morphweave.syntax import count_nodes, parse_fragment


def test_indexed_variant_keeps_control_nodes(sum_pattern):
    assert check_control_nodes(parse_fragment(INDEXED_SUM), sum_pattern.lhs_ast)


def test_builtin_call_variant_drops_the_loop(sum_pattern):
    assert not check_control_nodes(parse_fragment("result = sum(elements)"),
                                   sum_pattern.lhs_ast)


def test_empty_control_requirement_accepts_anything(patterns):
    cpat = patterns["cpat-02"]  # its replacement carries no control nodes
    assert check_control_nodes(parse_fragment("d.update(add_dict)"),
                               parse_fragment("d.update(add_dict)"))


def test_multiset_vs_set_containment(patterns):
    cpat = patterns["cpat-03"]  # needs one For and one If
    single_if = ("both = []\nfor a in l1:\n    if a in l2 and a not in both:\n"
                 "        both.append(a)")
    assert check_control_nodes(parse_fragment(single_if), cpat.lhs_ast, multiset=True)
    two_loops_no_if = "both = []\nfor a in l1:\n    both.append(a)\nfor b in l2:\n    both.append(b)"
    assert not check_control_nodes(parse_fragment(two_loops_no_if), cpat.lhs_ast, multiset=True)
    assert not check_control_nodes(parse_fragment(two_loops_no_if), cpat.lhs_ast, multiset=False)


def test_declarations_reject_wrapping_def(sum_pattern):
    wrapped = "def compute(elements):\n    result = sum(elements)\n    return result"
    assert not check_declarations(parse_fragment(wrapped), sum_pattern.lhs_ast)


def test_declarations_allow_sorted_loop(sum_pattern):
    sorted_loop = "result = 0\nfor i in sorted(elements):\n    result += i"
    assert check_declarations(parse_fragment(sorted_loop), sum_pattern.lhs_ast)


def test_declarations_identity(sum_pattern):
    assert check_declarations(sum_pattern.lhs_ast, sum_pattern.lhs_ast)


def test_count_sign_positive_for_indexed_variant(sum_pattern):
    assert check_node_count_sign(parse_fragment(INDEXED_SUM), sum_pattern)


def test_count_sign_zero_product_fails(sum_pattern):
    # a variant with exactly the replacement's node count fails strict positivity
    rhs_count = count_nodes(sum_pattern.rhs_ast)
    variant = parse_fragment("count = numpy.sum(int_list)")
    assert count_nodes(variant) == rhs_count
    assert not check_node_count_sign(variant, sum_pattern)


def test_count_sign_reflexive(sum_pattern):
    assert check_node_count_sign(sum_pattern.lhs_ast, sum_pattern)


def test_applicable_verdict_indexed(sum_pattern):
    verdict = is_applicable(parse_fragment(INDEXED_SUM), sum_pattern)
    assert verdict.passed and verdict.failed_rules == frozenset()


def test_builtin_call_fails_control_and_count(sum_pattern):
    verdict = is_applicable(parse_fragment("result = sum(elements)"), sum_pattern)
    assert not verdict.passed
    assert RULE_CONTROL in verdict.failed_rules
    # with every leaf counted, this variant is also smaller than the
    # replacement, so the count-sign rule trips as well
    assert verdict.failed_rules == frozenset({RULE_CONTROL, RULE_COUNT_SIGN})


def test_def_wrapped_variant_fails_exactly_two_rules(sum_pattern):
    wrapped = "def compute(elements):\n    result = sum(elements)\n    return result"
    verdict = is_applicable(parse_fragment(wrapped), sum_pattern)
    assert verdict.failed_rules == frozenset({RULE_CONTROL, RULE_DECLARATIONS})


def test_failed_rules_lists_every_violation(sum_pattern):
    wrapped = "def compute(elements):\n    return sum(elements)"
    verdict = is_applicable(parse_fragment(wrapped), sum_pattern)
    assert verdict.failed_rules == frozenset(
        {RULE_CONTROL, RULE_DECLARATIONS, RULE_COUNT_SIGN})


def test_reflexivity_over_fixture_patterns(patterns):
    for cpat in patterns.values():
        lhs_count = count_nodes(cpat.lhs_ast)
        rhs_count = count_nodes(cpat.rhs_ast)
        assert lhs_count != rhs_count, cpat.id
        assert is_applicable(cpat.lhs_ast, cpat).passed, cpat.id
