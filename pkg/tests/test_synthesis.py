import pytest

from conftest import INDEXED_SUM, INDEXED_SUM_RULE_TEXT, SUM_LHS, SUM_RHS, SUM_RULE_TEXT
from morphweave.errors import SynthesisError
from morphweave.rewrite import Guard, find_matches, parse_rule, rewrite, serialize_rule
from morphweave.synthesis import (
    antiunify,
    correspondence,
    infer_guards,
    synthesize_baseline,
    synthesize_from_variant,
)
from morphweave.syntax import parse_fragment, print_canonical


def test_antiunify_reproduces_sum_rule():
    rule = antiunify(SUM_LHS, SUM_RHS, {"numpy"})
    assert serialize_rule(rule) == SUM_RULE_TEXT


def test_antiunify_identity_pair():
    rule = antiunify(SUM_LHS, SUM_LHS, {"numpy"})
    assert rule.lhs == rule.rhs


def test_antiunify_keeps_literals_and_callees_concrete():
    rule = antiunify("x = sum(xs) + 1", "x = 1", set())
    text = serialize_rule(rule)
    assert "sum(" in text and "+ 1" in text
    assert ":[[v0]]" in text and ":[[v1]]" in text


def test_antiunify_rejects_unbound_read():
    with pytest.raises(SynthesisError):
        antiunify("x = 1", "y = z + 1", set())


def test_antiunify_allows_new_output_targets():
    rule = antiunify("x = 1", "fresh = x", set())
    assert print_canonical(rule.rhs[0]).strip() == "fresh = :[[v0]]"


def test_variant_synthesis_gives_indexed_rule(sum_pattern):
    rule = synthesize_from_variant(INDEXED_SUM, sum_pattern,
                                   llm_types={"losses": "List[int]", "i": "int", "loss": "int"})
    expected = parse_rule(INDEXED_SUM_RULE_TEXT)
    assert rule.lhs == expected.lhs
    assert rule.rhs == expected.rhs
    assert Guard("v2", "type", "List[int]") in rule.guards
    assert Guard("v1", "type", "int") in rule.guards  # loop var typed by inference


def test_variant_synthesis_without_llm_types(sum_pattern):
    rule = synthesize_from_variant(INDEXED_SUM, sum_pattern, llm_types={})
    assert rule.guards == (Guard("v2", "type", "List[int]"),)


def test_baseline_rule_is_sum_rule(sum_pattern):
    rule = synthesize_baseline(sum_pattern)
    assert rule.lhs == parse_rule(SUM_RULE_TEXT).lhs
    assert rule.rhs == parse_rule(SUM_RULE_TEXT).rhs
    assert rule.guards == (Guard("v2", "type", "List[int]"),)


def test_self_application_across_fixture_patterns(patterns):
    # the rule carried by the human example must reproduce its own change
    for cpat in patterns.values():
        rule = synthesize_baseline(cpat)
        matches = find_matches(rule, cpat.lhs_ast)
        assert matches, cpat.id
        rewritten = rewrite(rule, matches[0], cpat.lhs.text)
        assert rewritten == print_canonical(cpat.rhs_ast).rstrip("\n"), cpat.id


def test_alpha_invariance(sum_pattern):
    renamed = SUM_LHS.replace("result", "acc").replace("elem", "item").replace("itements", "elements")
    renamed = "acc = 0\nfor item in elements:\n    acc = item + acc"
    original = antiunify(SUM_LHS, SUM_RHS, {"numpy"})
    rule = antiunify(renamed, "acc = numpy.sum(elements)", {"numpy"})
    assert rule.lhs == original.lhs
    assert rule.rhs == original.rhs


def test_guard_provenance_copies_miner_bytes(patterns):
    cpat = patterns["cpat-02"]
    rule = synthesize_baseline(cpat)
    for guard in rule.guards:
        assert any(guard.value == value
                   for guards in cpat.miner_guards.values()
                   for _kind, value in guards)


def test_correspondence_maps_by_role(sum_pattern):
    io_map, binder_map = correspondence(parse_fragment(INDEXED_SUM), sum_pattern)
    assert io_map == {"int_list": "losses", "count": "loss"}
    assert binder_map == {"i": "i"}


def test_correspondence_prefers_identical_names(patterns):
    cpat = patterns["cpat-10"]
    variant = "picked = []\nfor row in rows:\n    if cond(row):\n        picked.append(row)"
    io_map, _ = correspondence(parse_fragment(variant), cpat)
    assert io_map["cond"] == "cond"
    assert io_map["t"] == "picked"
    assert io_map["elem"] == "rows"


def test_infer_guards_ordering_is_deterministic(sum_pattern):
    guards = infer_guards({"a": "v0", "b": "v1", "c": "v2"},
                          {"c": "int_list"}, sum_pattern,
                          {"a": "int", "b": "int"})
    assert [g.var for g in guards] == ["v0", "v1", "v2"]


def test_infer_guards_empty_inputs(sum_pattern):
    assert infer_guards({}, {}, sum_pattern, {}) == ()
