"""Wrap fragments into callables, vet generated tests, classify variants.

Tests address the fragment under test as ``snippet(...)``, a function
taking the pattern's input variables in declared order and returning its
output variables (a bare value for one output, a tuple otherwise).
"""

from __future__ import annotations

import textwrap
from dataclasses import dataclass, replace

from .analysis import analyze_names
from .errors import FragmentSyntaxError, InsufficientTests, UnsupportedConstruct, WrapError
from .patterns import ChangePattern
from .sandbox import ExecutionJob, Verdict
from .synthesis import correspondence
from .syntax import Node, SourceFragment, parse_fragment

WRAPPER_NAME = "snippet"

T_RAW = "RawT"
T_SYNTAX_FAIL = "TSyntaxFail"
T_ORIGINAL_FAIL = "TOriginalFail"
T_UNINIT_VAR = "TUninitVar"
T_VALID = "Valid"


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # not a pytest class, despite the name

    id: str
    code: SourceFragment
    cpat_id: str
    status: str = T_RAW
    temperature: float = 0.0
    iteration: int = 1


def wrap_fragment(code: SourceFragment | str, cpat: ChangePattern) -> str:
    """Build ``def snippet(<inputs>)`` around the fragment.

    Parameter and return names are the fragment's own names for the
    pattern's input/output roles; raises WrapError when an output role
    has no counterpart assigned in the fragment.
    """
    text = code.text if isinstance(code, SourceFragment) else code
    try:
        ast = parse_fragment(text)
    except (FragmentSyntaxError, UnsupportedConstruct) as exc:
        raise WrapError(f"fragment does not parse: {exc}") from None
    io_map, _ = correspondence(ast, cpat)
    params = [io_map.get(name, name) for name in cpat.input_names]
    outputs = []
    established = analyze_names(ast, cpat.imports).established
    for name in cpat.output_vars:
        mapped = io_map.get(name)
        if mapped is None or mapped not in established:
            raise WrapError(f"fragment never assigns a counterpart for output {name!r}")
        outputs.append(mapped)
    returned = outputs[0] if len(outputs) == 1 else "(" + ", ".join(outputs) + ")"
    # fragments are partial code; the pattern's declared imports are in scope
    imports = "".join(f"    import {m}\n" for m in sorted(cpat.imports))
    body = textwrap.indent(text.rstrip("\n"), "    ")
    source = f"def {WRAPPER_NAME}({', '.join(params)}):\n{imports}{body}\n    return {returned}\n"
    try:
        compile(source, "<wrapped>", "exec")
    except SyntaxError as exc:
        raise WrapError(f"wrapped fragment does not compile: {exc}") from None
    return source


def _initializes_inputs(test_ast: Node, cpat: ChangePattern) -> bool:
    established = analyze_names(test_ast, cpat.imports).established
    return all(name in established for name in cpat.input_names)


def validate_tests(raw: list[TestCase], cpat: ChangePattern, sandbox) -> list[TestCase]:
    """Three checks in order: parses, passes on the original, and
    initializes every input variable."""
    original = wrap_fragment(cpat.lhs, cpat)
    vetted: list[TestCase] = []
    for test in raw:
        try:
            test_ast = parse_fragment(test.code)
        except (FragmentSyntaxError, UnsupportedConstruct):
            vetted.append(replace(test, status=T_SYNTAX_FAIL))
            continue
        verdict = sandbox.run(ExecutionJob(original, test.code.text))
        if not verdict.passed:
            vetted.append(replace(test, status=T_ORIGINAL_FAIL))
            continue
        if not _initializes_inputs(test_ast, cpat):
            vetted.append(replace(test, status=T_UNINIT_VAR))
            continue
        vetted.append(replace(test, status=T_VALID))
    return vetted


def valid_only(tests) -> list[TestCase]:
    return [t for t in tests if t.status == T_VALID]


def run_suite(code: SourceFragment | str, tests, cpat: ChangePattern, sandbox) -> tuple[bool, str]:
    """Run every valid test against the wrapped fragment.

    Returns (all_passed, detail-of-first-failure).
    """
    suite = valid_only(tests)
    if not suite:
        raise InsufficientTests(f"no valid tests for {cpat.id}")
    try:
        wrapped = wrap_fragment(code, cpat)
    except WrapError as exc:
        return False, str(exc)
    for test in suite:
        verdict: Verdict = sandbox.run(ExecutionJob(wrapped, test.code.text))
        if not verdict.passed:
            return False, f"{test.id}: {verdict.status} {verdict.detail}".rstrip()
    return True, ""
