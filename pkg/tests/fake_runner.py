"""Minimal in-test stand-in for the external sandbox runner: one JSON job
per stdin line, one JSON verdict per stdout line, in order."""

import json
import sys

from morphweave.sandbox import ExecutionJob, execute_job


def main() -> None:
    for line in sys.stdin:
        if not line.strip():
            continue
        try:
            request = json.loads(line)
            job = ExecutionJob(
                function_source=request["function_source"],
                test_source=request["test_source"],
                timeout_ms=request.get("timeout_ms", 5000),
                memory_limit_mb=request.get("memory_limit_mb", 256),
            )
        except Exception as exc:
            sys.stdout.write(json.dumps(
                {"id": None, "status": "error", "detail": f"ProtocolError: {exc}"}) + "\n")
            sys.stdout.flush()
            continue
        verdict = execute_job(job)
        sys.stdout.write(json.dumps(
            {"id": request.get("id"), "status": verdict.status, "detail": verdict.detail}) + "\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
