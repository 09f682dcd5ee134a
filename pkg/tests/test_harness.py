import pytest

from conftest import INDEXED_SUM, SUM_LHS
from morphweave.errors import InsufficientTests, WrapError
from morphweave.harness import (
    T_ORIGINAL_FAIL,
    T_SYNTAX_FAIL,
    T_UNINIT_VAR,
    T_VALID,
    TestCase,
    run_suite,
    validate_tests,
    wrap_fragment,
)
from morphweave.sandbox import ExecutionJob
from morphweave.syntax import SourceFragment


def make_test(code, cpat_id="cpat-01", n=0):
    return TestCase(id=f"t{n}", code=SourceFragment(code, origin="test"), cpat_id=cpat_id)


def test_wrap_original_computes_sum(sum_pattern, sandbox):
    wrapped = wrap_fragment(sum_pattern.lhs, sum_pattern)
    assert wrapped.startswith("def snippet(int_list):")
    verdict = sandbox.run(ExecutionJob(wrapped, "assert snippet([1, 2, 3]) == 6"))
    assert verdict.passed


def test_wrap_maps_variant_names(sum_pattern, sandbox):
    wrapped = wrap_fragment(SourceFragment(INDEXED_SUM), sum_pattern)
    assert "def snippet(losses):" in wrapped
    assert wrapped.rstrip().endswith("return loss")
    assert sandbox.run(ExecutionJob(wrapped, "assert snippet([4, 5]) == 9")).passed


def test_wrap_requires_assigned_output(sum_pattern):
    with pytest.raises(WrapError):
        wrap_fragment(SourceFragment("print(elements)"), sum_pattern)


def test_wrap_rejects_broken_fragment(sum_pattern):
    with pytest.raises(WrapError):
        wrap_fragment(SourceFragment("for x in\n    pass"), sum_pattern)


def test_wrap_injects_declared_imports(patterns, sandbox):
    cpat = patterns["cpat-06"]
    wrapped = wrap_fragment(SourceFragment("tally = collections.Counter(stream)"), cpat)
    assert "import collections" in wrapped
    verdict = sandbox.run(ExecutionJob(wrapped, "assert snippet([1, 1, 2]) == {1: 2, 2: 1}"))
    assert verdict.passed


def test_validate_tests_three_steps(sum_pattern, sandbox):
    raw = [
        make_test("int_list = [1, 2, 3]\nassert snippet(int_list) == 6", n=0),
        make_test("int_list = [1, 2, 3]\nassert snippet(int_list) ==", n=1),
        make_test("int_list = [1, 2, 3]\nassert snippet(int_list) == 7", n=2),
        make_test("assert snippet([1, 2, 3]) == 6", n=3),
    ]
    vetted = validate_tests(raw, sum_pattern, sandbox)
    assert [t.status for t in vetted] == [T_VALID, T_SYNTAX_FAIL, T_ORIGINAL_FAIL, T_UNINIT_VAR]


def test_step_order_syntax_wins(sum_pattern, sandbox):
    # a test that would also fail on the original still reports the parse failure
    vetted = validate_tests([make_test("assert snippet( == 9")], sum_pattern, sandbox)
    assert vetted[0].status == T_SYNTAX_FAIL


def test_run_suite_accepts_equivalent_variant(sum_pattern, sandbox):
    tests = validate_tests(
        [make_test("int_list = [1, 2, 3]\nassert snippet(int_list) == 6"),
         make_test("int_list = []\nassert snippet(int_list) == 0", n=1)],
        sum_pattern, sandbox)
    ok, detail = run_suite(SourceFragment(INDEXED_SUM), tests, sum_pattern, sandbox)
    assert ok and detail == ""


def test_run_suite_rejects_product_variant(sum_pattern, sandbox):
    tests = validate_tests(
        [make_test("int_list = [1, 2, 3, 4]\nassert snippet(int_list) == 10")],
        sum_pattern, sandbox)
    product = "count = 1\nfor i in int_list:\n    count = i * count"
    ok, detail = run_suite(SourceFragment(product), tests, sum_pattern, sandbox)
    assert not ok and "fail" in detail


def test_run_suite_needs_valid_tests(sum_pattern, sandbox):
    with pytest.raises(InsufficientTests):
        run_suite(SourceFragment(SUM_LHS), [], sum_pattern, sandbox)
    invalid = validate_tests([make_test("assert snippet(")], sum_pattern, sandbox)
    with pytest.raises(InsufficientTests):
        run_suite(SourceFragment(SUM_LHS), invalid, sum_pattern, sandbox)


def test_original_always_passes_its_own_suite(patterns, sandbox, replay_gateway):
    from morphweave.pipeline import Expansion, ExpansionConfig

    for cpat in patterns.values():
        expansion = Expansion(cpat, ExpansionConfig(), replay_gateway, sandbox)
        expansion._collect_tests()
        ok, detail = run_suite(cpat.lhs, expansion.tests, cpat, sandbox)
        assert ok, f"{cpat.id}: {detail}"
