/** Runs one job in a fresh Python process: cheapest credible isolation.
 * The process is recycled after every job, so a crash, hang, or leaked
 * state cannot poison the next one.
 *
 * The child protocol avoids importing json (a ~20ms startup tax per
 * process): the envelope arrives as a one-line header plus raw source
 * bytes, and the verdict comes back as a status line followed by the
 * detail text. */

import { spawn } from 'node:child_process';
import type { JobEnvelope, VerdictReply, VerdictStatus } from './protocol.js';

export const PYTHON = process.env.SANDBOX_PYTHON ?? 'python3';

/** Interpreter-side harness, passed via -c; the framed job arrives on
 * stdin.  Wall clock is enforced by the parent and address space by
 * RLIMIT_AS here; the job's file descriptor 1 points at /dev/null so
 * stray prints cannot pollute the verdict channel; writable file handles
 * are denied; imports are restricted to the standard library plus numpy,
 * with socket creation disabled on import. */
const BOOTSTRAP = `
import builtins, os, sys

data = sys.stdin.buffer.read()
cut = data.index(10)
mem_mb, fn_len = (int(part) for part in data[:cut].split())
body = data[cut + 1:]
function_source = body[:fn_len].decode("utf-8")
test_source = body[fn_len:].decode("utf-8")

try:
    import resource
    limit = mem_mb << 20
    resource.setrlimit(resource.RLIMIT_AS, (limit, limit))
except Exception:
    pass

verdict_fd = os.dup(1)
devnull = os.open(os.devnull, os.O_WRONLY)
os.dup2(devnull, 1)

_open = builtins.open
def _read_only_open(file, mode="r", *args, **kwargs):
    if any(flag in str(mode) for flag in ("w", "a", "x", "+")):
        raise PermissionError("writing files is denied inside jobs")
    return _open(file, mode, *args, **kwargs)
builtins.open = _read_only_open

def _deny_socket(*args, **kwargs):
    raise PermissionError("sockets are denied inside jobs")

_allowed_extra = {"numpy"}
_stdlib = set(getattr(sys, "stdlib_module_names", ())) | set(sys.builtin_module_names)
_import = builtins.__import__
def _guarded_import(name, globals=None, locals=None, fromlist=(), level=0):
    if level > 0:  # relative import inside an already-admitted package
        return _import(name, globals, locals, fromlist, level)
    top = name.split(".")[0]
    if top in _stdlib or top in sys.modules:
        module = _import(name, globals, locals, fromlist, level)
    elif top in _allowed_extra:
        try:
            module = _import(name, globals, locals, fromlist, level)
        except ModuleNotFoundError:
            import site  # started with -S; pull site-packages in on demand
            site.main()
            module = _import(name, globals, locals, fromlist, level)
    else:
        raise ImportError("module " + top + " is outside the job allowlist")
    if top == "socket":
        sys.modules["socket"].socket = _deny_socket
        sys.modules["socket"].create_connection = _deny_socket
    return module
builtins.__import__ = _guarded_import

status, detail = "pass", ""
namespace = {}
try:
    exec(compile(function_source, "<function>", "exec"), namespace)
    exec(compile(test_source, "<test>", "exec"), namespace)
except AssertionError as exc:
    status, detail = "fail", str(exc)
except BaseException as exc:
    status, detail = "error", type(exc).__name__ + ": " + str(exc)
os.write(verdict_fd, (status + "\\n" + detail).encode("utf-8"))
os._exit(0)
`;

export interface JobOutcome {
  status: VerdictStatus;
  detail: string;
}

export function runJob(job: JobEnvelope): Promise<JobOutcome> {
  return new Promise((resolve) => {
    const child = spawn(PYTHON, ['-I', '-S', '-E', '-c', BOOTSTRAP], {
      stdio: ['pipe', 'pipe', 'pipe'],
    });
    const chunks: Buffer[] = [];
    let timedOut = false;
    let settled = false;

    const finish = (outcome: JobOutcome) => {
      if (!settled) {
        settled = true;
        resolve(outcome);
      }
    };

    const timer = setTimeout(() => {
      timedOut = true;
      child.kill('SIGKILL');
    }, job.timeout_ms);

    child.stdout.on('data', (chunk: Buffer) => chunks.push(chunk));
    child.stderr.resume(); // drain; job chatter is not part of the protocol
    child.on('error', (err) => {
      clearTimeout(timer);
      finish({ status: 'error', detail: `interpreter failed to start: ${err.message}` });
    });
    child.on('close', (code) => {
      clearTimeout(timer);
      if (timedOut) {
        finish({ status: 'timeout', detail: `exceeded ${job.timeout_ms} ms` });
        return;
      }
      const raw = Buffer.concat(chunks).toString('utf8');
      const cut = raw.indexOf('\n');
      const status = cut < 0 ? raw : raw.slice(0, cut);
      if (status === 'pass' || status === 'fail' || status === 'error') {
        finish({ status, detail: cut < 0 ? '' : raw.slice(cut + 1) });
        return;
      }
      finish({ status: 'error', detail: `job process died with exit code ${code}` });
    });

    child.stdin.on('error', () => {
      /* the child can die before reading stdin; close() settles the job */
    });
    const fnBytes = Buffer.from(job.function_source, 'utf8');
    const testBytes = Buffer.from(job.test_source, 'utf8');
    child.stdin.write(`${job.memory_limit_mb} ${fnBytes.length}\n`);
    child.stdin.write(fnBytes);
    child.stdin.write(testBytes);
    child.stdin.end();
  });
}

export function reply(id: string | null, outcome: JobOutcome): VerdictReply {
  return { id, status: outcome.status, detail: outcome.detail };
}
