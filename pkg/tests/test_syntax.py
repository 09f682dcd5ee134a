import pytest

from conftest import CUMULATIVE_SUM, INDEXED_SUM, SUM_LHS, SUM_RHS
from genprog import gen_program
from morphweave.errors import FragmentSyntaxError, UnsupportedConstruct
from morphweave.syntax import (
    collect_declarations,
    control_nodes,
    count_nodes,
    module,
    parse_fragment,
    print_canonical,
)


def test_parse_sum_loop_shape():
    ast = parse_fragment(SUM_LHS)
    kinds = [s.kind for s in ast.children]
    assert kinds == ["Assign", "For"]
    body = [s.kind for s in ast.children[1].children[2:]]
    assert body == ["Assign"]


def test_parse_indexed_sum_has_augassign():
    ast = parse_fragment(INDEXED_SUM)
    loop = ast.children[1]
    assert loop.kind == "For"
    assert loop.children[2].kind == "AugAssign"


def test_parse_cumulative_flow_fragment():
    ast = parse_fragment(CUMULATIVE_SUM)
    assert [s.kind for s in ast.children] == ["Assign", "For", "Assign"]


def test_empty_input_rejected():
    with pytest.raises(FragmentSyntaxError):
        parse_fragment("")
    with pytest.raises(FragmentSyntaxError):
        parse_fragment("   \n  ")


def test_syntax_error_carries_line():
    with pytest.raises(FragmentSyntaxError) as err:
        parse_fragment("x = 1\nfor i in xs\n    x = 2")
    assert err.value.line == 2


@pytest.mark.parametrize("src", [
    "async def f():\n    pass",
    "try:\n    x = 1\nexcept Exception:\n    x = 2",
    "lambda x: x",
    "x = f(a=1)",
])
def test_unsupported_constructs(src):
    with pytest.raises(UnsupportedConstruct):
        parse_fragment(src)


def test_canonical_normalizes_spacing():
    assert print_canonical(parse_fragment("x=1")) == "x = 1\n"
    assert print_canonical(parse_fragment("y  =  a+b")) == "y = a + b\n"


def test_canonical_round_trip_is_fixed_point():
    once = print_canonical(parse_fragment(SUM_LHS))
    twice = print_canonical(parse_fragment(once))
    assert once == twice


def test_canonical_preserves_rewrite_target():
    assert print_canonical(parse_fragment(SUM_RHS)) == SUM_RHS + "\n"


def test_parentheses_respect_precedence():
    for src in ["x = (a + b) * c", "x = a + b * c", "x = -(a + b)",
                "x = a < (b < c)", "y = (a or b) and c"]:
        printed = print_canonical(parse_fragment(src))
        assert parse_fragment(printed) == parse_fragment(src)


def test_count_smallest_assign():
    assert count_nodes(parse_fragment("x = 1")) == 3


def test_count_empty_module_is_zero():
    assert count_nodes(module([])) == 0


def test_count_shrinks_across_the_sum_rewrite():
    assert count_nodes(parse_fragment(SUM_LHS)) > count_nodes(parse_fragment(SUM_RHS))


def test_count_monotone_in_subtrees():
    ast = parse_fragment(CUMULATIVE_SUM)
    total = count_nodes(ast)
    for stmt in ast.children:
        assert count_nodes(stmt) < total
        for child in stmt.children:
            assert count_nodes(child) < count_nodes(stmt) or child.kind == "NoValue"


def test_control_nodes_sum_loop():
    assert dict(control_nodes(parse_fragment(SUM_LHS))) == {"For": 1}


def test_control_nodes_empty():
    assert dict(control_nodes(parse_fragment("common = []"))) == {}


def test_control_nodes_nested_if():
    src = "common = []\nfor i in l1:\n    if i in l2 and i not in common:\n        common.append(i)"
    assert dict(control_nodes(parse_fragment(src))) == {"For": 1, "If": 1}


def test_control_nodes_match_traversal_count():
    # brute-force oracle: count control kinds by scanning every node
    for seed in range(40):
        ast = parse_fragment(gen_program(seed))
        counted = control_nodes(ast)
        brute = {}
        for node in ast.walk():
            if node.kind in ("For", "While", "If"):
                brute[node.kind] = brute.get(node.kind, 0) + 1
        assert dict(counted) == brute


def test_declarations_exclude_assignments():
    assert collect_declarations(parse_fragment(SUM_LHS)) == set()
    assert collect_declarations(parse_fragment("x = 0\ny = x")) == set()


def test_declarations_capture_def_and_class():
    found = collect_declarations(parse_fragment("def helper(x):\n    return x"))
    assert found == {("FunctionDef", "helper", 1)}
    found = collect_declarations(parse_fragment("class Box:\n    def get(self):\n        return 1"))
    assert ("ClassDef", "Box", 0) in found
    assert ("FunctionDef", "get", 1) in found


def test_round_trip_random_programs():
    for seed in range(150):
        src = gen_program(seed)
        ast = parse_fragment(src)
        printed = print_canonical(ast)
        assert parse_fragment(printed) == ast, f"seed {seed}:\n{src}\n--\n{printed}"


def test_round_trip_fixture_patterns(patterns):
    for cpat in patterns.values():
        for fragment in (cpat.lhs, cpat.rhs):
            ast = parse_fragment(fragment)
            assert parse_fragment(print_canonical(ast)) == ast


def test_round_trip_fixture_corpus(fixtures_dir):
    for path in sorted((fixtures_dir / "corpus").rglob("*.py")):
        ast = parse_fragment(path.read_text())
        assert parse_fragment(print_canonical(ast)) == ast, path.name


def test_spans_ignored_by_equality():
    a = parse_fragment("x = 1\ny = 2")
    b = parse_fragment("x = 1\n\n\ny = 2")
    assert a == b
