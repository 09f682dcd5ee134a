import pytest

from conftest import INDEXED_SUM, INDEXED_SUM_RULE_TEXT, SUM_LHS, SUM_RULE_TEXT
from genprog import gen_program, gen_rule_text
from morphweave.errors import MissingTypeInfo, RuleParseError, UnboundRhsVar
from morphweave.rewrite import (
    Guard,
    check_guards,
    find_matches,
    instantiate,
    parse_rule,
    rewrite,
    serialize_rule,
)
from morphweave.syntax import parse_fragment, print_canonical


def test_parse_sum_rule():
    rule = parse_rule(SUM_RULE_TEXT)
    assert rule.lhs_vars == ("v0", "v1", "v2")
    assert [s.kind for s in rule.lhs] == ["Assign", "For"]
    assert len(rule.rhs) == 1


def test_identity_rule():
    rule = parse_rule(":[[v0]] => :[[v0]]".replace(" => ", "\n=>\n"))
    assert rule.lhs_vars == rule.rhs_vars == ("v0",)


def test_unbound_rhs_var():
    with pytest.raises(UnboundRhsVar):
        parse_rule(":[[v0]]\n=>\n:[[v9]]")


def test_missing_separator():
    with pytest.raises(RuleParseError):
        parse_rule(":[[v0]] = 0")


def test_guard_on_unknown_var_rejected():
    with pytest.raises(RuleParseError):
        parse_rule(":[[v0]]\n=>\n:[[v0]]\nguard :[[v7]] type int")


def test_serializer_round_trip_bytes():
    for text in (SUM_RULE_TEXT, INDEXED_SUM_RULE_TEXT):
        rule = parse_rule(text)
        assert serialize_rule(rule) == text
        assert serialize_rule(parse_rule(serialize_rule(rule))) == text


def test_match_alpha_renamed_target():
    rule = parse_rule(SUM_RULE_TEXT)
    target = "total = 0\nfor x in xs:\n    total = x + total"
    matches = find_matches(rule, parse_fragment(target))
    assert len(matches) == 1
    bound = {k: v.text for k, v in matches[0].bindings.items()}
    assert bound == {"v0": "total", "v1": "x", "v2": "xs"}


def test_sum_rule_misses_indexed_form():
    rule = parse_rule(SUM_RULE_TEXT)
    assert find_matches(rule, parse_fragment(INDEXED_SUM)) == []


def test_indexed_rule_matches_indexed_form():
    rule = parse_rule(INDEXED_SUM_RULE_TEXT)
    matches = find_matches(rule, parse_fragment(INDEXED_SUM))
    assert len(matches) == 1
    bound = {k: v.text for k, v in matches[0].bindings.items()}
    assert bound == {"v0": "loss", "v1": "i", "v2": "losses"}


def test_consistency_rejects_mixed_bindings():
    rule = parse_rule(":[[v0]] = :[[v0]] + 1\n=>\n:[[v0]] = 0")
    assert find_matches(rule, parse_fragment("a = b + 1")) == []
    assert len(find_matches(rule, parse_fragment("a = a + 1"))) == 1


def test_matches_inside_nested_blocks():
    rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1")
    target = "if flag == 1:\n    x = 0\nwhile k != 2:\n    y = 0"
    matches = find_matches(rule, parse_fragment(target))
    assert [m.bindings["v0"].text for m in matches] == ["x", "y"]


def test_matches_reported_in_source_order():
    rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1")
    target = "a = 0\nb = 1\nc = 0\nd = 0"
    matches = find_matches(rule, parse_fragment(target))
    assert [m.lines for m in matches] == [(1, 1), (3, 3), (4, 4)]


def test_statement_hole_binds_whole_statement():
    rule = parse_rule(":[[v0]]\n:[[v1]]\n=>\n:[[v1]]\n:[[v0]]")
    target = "a = 1\nb.append(2)"
    matches = find_matches(rule, parse_fragment(target))
    assert len(matches) == 1
    assert rewrite(rule, matches[0], target) == "b.append(2)\na = 1"


def test_rewrite_sum_loop():
    rule = parse_rule(SUM_RULE_TEXT)
    target = SUM_LHS
    matches = find_matches(rule, parse_fragment(target))
    assert rewrite(rule, matches[0], target) == "result = numpy.sum(elements)"


def test_rewrite_indexed_sum():
    rule = parse_rule(INDEXED_SUM_RULE_TEXT)
    matches = find_matches(rule, parse_fragment(INDEXED_SUM))
    assert rewrite(rule, matches[0], INDEXED_SUM) == "loss = numpy.sum(losses)"


def test_rewrite_identity_is_canonical_echo():
    rule = parse_rule(":[[v0]] = :[[v1]]\n=>\n:[[v0]] = :[[v1]]")
    target = "alpha = beta"
    matches = find_matches(rule, parse_fragment(target))
    assert rewrite(rule, matches[0], target) == "alpha = beta"


def test_rewrite_preserves_surrounding_bytes():
    rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1")
    target = "keep1 = 9\n\nmid = 0\n\nkeep2 = 8"
    matches = find_matches(rule, parse_fragment(target))
    out = rewrite(rule, matches[0], target)
    assert out == "keep1 = 9\n\nmid = 1\n\nkeep2 = 8"


def test_rewrite_indents_to_site():
    rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1\n:[[v0]] += 1")
    target = "if flag == 1:\n    x = 0"
    matches = find_matches(rule, parse_fragment(target))
    out = rewrite(rule, matches[0], target)
    assert out == "if flag == 1:\n    x = 1\n    x += 1"
    parse_fragment(out)


# guards ---------------------------------------------------------------------


def _binding_for(rule, target):
    return find_matches(rule, parse_fragment(target))[0]


def test_type_guard_passes_and_fails():
    rule = parse_rule(INDEXED_SUM_RULE_TEXT)
    binding = _binding_for(rule, INDEXED_SUM)
    assert check_guards(binding, rule.guards, {"losses": "List[int]"}, set()) is True
    assert check_guards(binding, rule.guards, {"losses": "str"}, set()) is False


def test_type_guard_without_info_raises():
    rule = parse_rule(INDEXED_SUM_RULE_TEXT)
    binding = _binding_for(rule, INDEXED_SUM)
    with pytest.raises(MissingTypeInfo):
        check_guards(binding, rule.guards, {}, set())


def test_import_guard_checks_module_presence():
    guards = (Guard("v0", "import", "numpy"),)
    rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1")
    binding = _binding_for(rule, "x = 0")
    assert check_guards(binding, guards, {}, {"numpy"}) is True
    assert check_guards(binding, guards, {}, {"torch"}) is False


def test_guards_never_add_sites():
    # guard monotonicity: every guarded match site is also an unguarded one
    rule = parse_rule(INDEXED_SUM_RULE_TEXT)
    bare = parse_rule(serialize_rule(rule).split("guard")[0])
    target = INDEXED_SUM + "\nother = 1\n" + INDEXED_SUM.replace("loss", "gain")
    with_guards = find_matches(rule, parse_fragment(target))
    without = find_matches(bare, parse_fragment(target))
    assert {m.lines for m in with_guards} <= {m.lines for m in without}


# brute-force oracle ----------------------------------------------------------


def oracle_matches(rule, target):
    """Independent matcher: positional binding collection followed by an
    instantiation-equality check over every contiguous window."""
    from morphweave.rewrite import _statement_lists

    width = len(rule.lhs)
    found = []
    for stmts in _statement_lists(target):
        stmts = tuple(s for s in stmts if s.is_statement())
        for start in range(0, len(stmts) - width + 1):
            window = stmts[start:start + width]
            binding = {}
            if not all(_collect(t, s, binding) for t, s in zip(rule.lhs, window)):
                continue
            if tuple(instantiate(rule.lhs, binding)) == tuple(
                    _strip(s) for s in window):
                found.append((window[0].lines[0], window[-1].lines[1]))
    return sorted(found)


def _collect(template, node, binding):
    if template.kind == "TemplateVar":
        if node.kind in ("Else", "Params", "NoValue", "Slice"):
            return False
        binding.setdefault(template.text, node)
        return True
    if (template.kind == "ExprStmt" and template.children[0].kind == "TemplateVar"
            and node.is_statement()):
        return _collect(template.children[0], node, binding)
    if template.kind != node.kind or template.text != node.text:
        return False
    if len(template.children) != len(node.children):
        return False
    return all(_collect(t, n, binding) for t, n in zip(template.children, node.children))


def _strip(node):
    from morphweave.syntax import strip_spans

    return strip_spans(node)


def test_matcher_agrees_with_oracle_on_random_programs():
    from genprog import gen_rule_from_program

    matched = 0
    for seed in range(120):
        src = gen_program(seed * 31 + 7, statements=6)
        target = parse_fragment(src)
        # a rule carved from the program (matches exist) and an unrelated one
        for rule_text in (gen_rule_from_program(src, seed), gen_rule_text(seed)):
            rule = parse_rule(rule_text)
            got = sorted(m.lines for m in find_matches(rule, target))
            want = oracle_matches(rule, target)
            assert got == want, f"seed {seed}"
            matched += len(want)
    assert matched >= 120  # carved rules guarantee real matches


def test_rewrite_output_always_reparses():
    from genprog import gen_rule_from_program

    rewritten = 0
    for seed in range(60):
        target_src = gen_program(seed * 17 + 3, statements=6)
        rule = parse_rule(gen_rule_from_program(target_src, seed))
        target = parse_fragment(target_src)
        for match in find_matches(rule, target):
            parse_fragment(rewrite(rule, match, target_src))
            rewritten += 1
    assert rewritten >= 60


def test_match_soundness_binding_reproduces_window():
    from genprog import gen_rule_from_program

    for seed in range(60):
        src = gen_program(seed * 13 + 1, statements=6)
        rule = parse_rule(gen_rule_from_program(src, seed))
        target = parse_fragment(src)
        matches = find_matches(rule, target)
        assert matches
        for match in matches:
            lhs_instance = instantiate(rule.lhs, match.bindings)
            window = tuple(_strip(s) for s in match.stmts)
            assert tuple(lhs_instance) == window
