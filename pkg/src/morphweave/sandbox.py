"""Execution jobs, verdicts, and the clients that run them.

The wire protocol (shared with the external runner) is newline-delimited
JSON over stdin/stdout:

    request:  {"id", "function_source", "test_source", "timeout_ms", "memory_limit_mb"}
    response: {"id", "status": "pass"|"fail"|"error"|"timeout", "detail"}

Three backends: InlineSandbox executes jobs in-process (fast, no timeout
protection; for trusted fixture code and tests), ForkingSandbox runs each
job in a forked child with a wall-clock limit, and SubprocessSandbox
drives an external runner process over the protocol.
"""

from __future__ import annotations

import functools
import json
import multiprocessing
import subprocess
from dataclasses import dataclass

from .errors import SandboxUnavailable

PASS, FAIL, ERROR, TIMEOUT = "pass", "fail", "error", "timeout"

DEFAULT_TIMEOUT_MS = 5000
DEFAULT_MEMORY_MB = 256


@dataclass(frozen=True)
class ExecutionJob:
    function_source: str
    test_source: str
    timeout_ms: int = DEFAULT_TIMEOUT_MS
    memory_limit_mb: int = DEFAULT_MEMORY_MB

    def __post_init__(self):
        if self.timeout_ms <= 0:
            raise ValueError("timeout_ms must be positive")


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@functools.lru_cache(maxsize=None)
def _compiled(source: str, label: str):
    return compile(source, label, "exec")


def execute_job(job: ExecutionJob) -> Verdict:
    """Run function source then test source in one fresh namespace."""
    namespace: dict = {}
    try:
        exec(_compiled(job.function_source, "<function>"), namespace)
        exec(_compiled(job.test_source, "<test>"), namespace)
    except AssertionError as exc:
        return Verdict(FAIL, str(exc))
    except BaseException as exc:  # includes SyntaxError from compile
        return Verdict(ERROR, f"{type(exc).__name__}: {exc}")
    return Verdict(PASS)


class InlineSandbox:
    """In-process execution; trusts the code not to hang."""

    def run(self, job: ExecutionJob) -> Verdict:
        return execute_job(job)

    def close(self) -> None:
        pass


def _forked_job(job: ExecutionJob, pipe) -> None:
    verdict = execute_job(job)
    pipe.send((verdict.status, verdict.detail))
    pipe.close()


class ForkingSandbox:
    """One forked child per job; enforces the wall-clock limit."""

    def __init__(self):
        self._ctx = multiprocessing.get_context("fork")

    def run(self, job: ExecutionJob) -> Verdict:
        parent, child = self._ctx.Pipe(duplex=False)
        proc = self._ctx.Process(target=_forked_job, args=(job, child))
        proc.start()
        child.close()
        proc.join(job.timeout_ms / 1000.0)
        if proc.is_alive():
            proc.kill()
            proc.join()
            parent.close()
            return Verdict(TIMEOUT, f"exceeded {job.timeout_ms} ms")
        try:
            status, detail = parent.recv()
        except EOFError:
            return Verdict(ERROR, f"job process died with exit code {proc.exitcode}")
        finally:
            parent.close()
        return Verdict(status, detail)

    def close(self) -> None:
        pass


class SubprocessSandbox:
    """Client for an external runner speaking the NDJSON protocol."""

    def __init__(self, command: list[str]):
        self.command = list(command)
        self._proc: subprocess.Popen | None = None
        self._next_id = 0

    def _ensure(self) -> subprocess.Popen:
        if self._proc is None or self._proc.poll() is not None:
            try:
                self._proc = subprocess.Popen(
                    self.command,
                    stdin=subprocess.PIPE,
                    stdout=subprocess.PIPE,
                    text=True,
                    bufsize=1,
                )
            except OSError as exc:
                raise SandboxUnavailable(f"cannot start runner {self.command}: {exc}") from None
        return self._proc

    def run(self, job: ExecutionJob) -> Verdict:
        proc = self._ensure()
        self._next_id += 1
        job_id = f"job-{self._next_id}"
        request = {
            "id": job_id,
            "function_source": job.function_source,
            "test_source": job.test_source,
            "timeout_ms": job.timeout_ms,
            "memory_limit_mb": job.memory_limit_mb,
        }
        try:
            proc.stdin.write(json.dumps(request) + "\n")
            proc.stdin.flush()
            line = proc.stdout.readline()
        except (BrokenPipeError, OSError) as exc:
            raise SandboxUnavailable(f"runner connection lost: {exc}") from None
        if not line:
            raise SandboxUnavailable("runner closed its output stream")
        reply = json.loads(line)
        if reply.get("id") != job_id:
            raise SandboxUnavailable(
                f"runner replied out of order: sent {job_id}, got {reply.get('id')}"
            )
        return Verdict(reply["status"], reply.get("detail", ""))

    def close(self) -> None:
        if self._proc is not None and self._proc.poll() is None:
            self._proc.stdin.close()
            self._proc.wait(timeout=10)
        self._proc = None

    def __enter__(self):
        return self

    def __exit__(self, *_exc):
        self.close()
