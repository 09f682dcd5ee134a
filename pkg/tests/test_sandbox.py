import sys
from pathlib import Path

import pytest

from morphweave.errors import SandboxUnavailable
from morphweave.sandbox import (
    ExecutionJob,
    ForkingSandbox,
    InlineSandbox,
    SubprocessSandbox,
    execute_job,
)

SUM_FN = "def snippet(elements):\n    result = 0\n    for elem in elements:\n        result = elem + result\n    return result\n"


def test_pass_fail_error_verdicts():
    assert execute_job(ExecutionJob(SUM_FN, "assert snippet([1, 2, 3]) == 6")).status == "pass"
    assert execute_job(ExecutionJob(SUM_FN, "assert snippet([1, 2, 3]) == 7")).status == "fail"
    assert execute_job(ExecutionJob(SUM_FN, "assert snippet(None) == 0")).status == "error"
    assert execute_job(ExecutionJob("def snippet(:", "assert True")).status == "error"


def test_jobs_run_in_fresh_namespaces():
    poison = ExecutionJob("leak = 41", "leak = leak + 1")
    assert execute_job(poison).status == "pass"
    assert execute_job(ExecutionJob("x = 1", "assert 'leak' not in dir()")).status == "pass"


def test_timeout_requires_positive_budget():
    with pytest.raises(ValueError):
        ExecutionJob("x = 1", "assert True", timeout_ms=0)


def test_forking_sandbox_times_out():
    sandbox = ForkingSandbox()
    verdict = sandbox.run(ExecutionJob(
        "def snippet():\n    while True:\n        pass\n",
        "snippet()", timeout_ms=200))
    assert verdict.status == "timeout"


def test_forking_sandbox_isolates_crashes():
    sandbox = ForkingSandbox()
    boom = sandbox.run(ExecutionJob("import os\nos._exit(3)", "assert True"))
    assert boom.status == "error"
    ok = sandbox.run(ExecutionJob(SUM_FN, "assert snippet([2, 3]) == 5"))
    assert ok.status == "pass"


def _runner_command():
    script = Path(__file__).with_name("fake_runner.py")
    return [sys.executable, str(script)]


def test_subprocess_sandbox_round_trip():
    with SubprocessSandbox(_runner_command()) as sandbox:
        assert sandbox.run(ExecutionJob(SUM_FN, "assert snippet([1, 2]) == 3")).passed
        assert sandbox.run(ExecutionJob(SUM_FN, "assert snippet([1]) == 9")).status == "fail"
        assert sandbox.run(ExecutionJob(SUM_FN, "assert missing(1)")).status == "error"


def test_subprocess_sandbox_preserves_order():
    with SubprocessSandbox(_runner_command()) as sandbox:
        outcomes = [sandbox.run(ExecutionJob(SUM_FN, f"assert snippet([{k}]) == {k}")).status
                    for k in range(20)]
    assert outcomes == ["pass"] * 20


def test_subprocess_sandbox_unavailable_command():
    sandbox = SubprocessSandbox(["/nonexistent/runner"])
    with pytest.raises(SandboxUnavailable):
        sandbox.run(ExecutionJob("x = 1", "assert True"))


def test_inline_sandbox_interface():
    verdict = InlineSandbox().run(ExecutionJob(SUM_FN, "assert snippet([]) == 0"))
    assert verdict.passed and verdict.detail == ""
