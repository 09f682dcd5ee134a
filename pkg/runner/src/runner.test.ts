import { spawn, ChildProcessWithoutNullStreams } from 'node:child_process';
import { createInterface } from 'node:readline';
import { fileURLToPath } from 'node:url';
import path from 'node:path';
import { afterEach, describe, expect, it } from 'vitest';

const MAIN = path.join(path.dirname(fileURLToPath(import.meta.url)), '..', 'dist', 'main.js');

const SUM_FN =
  'def snippet(elements):\n' +
  '    result = 0\n' +
  '    for elem in elements:\n' +
  '        result = elem + result\n' +
  '    return result\n';

interface Reply {
  id: string | null;
  status: string;
  detail: string;
}

class RunnerHandle {
  proc: ChildProcessWithoutNullStreams;
  private pending: Array<(line: string) => void> = [];
  private buffered: string[] = [];

  constructor() {
    this.proc = spawn('node', [MAIN, '--jobs-from-stdin'], { stdio: 'pipe' });
    const lines = createInterface({ input: this.proc.stdout });
    lines.on('line', (line) => {
      const waiter = this.pending.shift();
      if (waiter) waiter(line);
      else this.buffered.push(line);
    });
  }

  sendRaw(line: string): void {
    this.proc.stdin.write(line + '\n');
  }

  send(job: Record<string, unknown>): void {
    this.sendRaw(JSON.stringify(job));
  }

  nextLine(timeoutMs = 15000): Promise<string> {
    const queued = this.buffered.shift();
    if (queued !== undefined) return Promise.resolve(queued);
    return new Promise((resolve, reject) => {
      const timer = setTimeout(() => reject(new Error('no reply from runner')), timeoutMs);
      this.pending.push((line) => {
        clearTimeout(timer);
        resolve(line);
      });
    });
  }

  async next(timeoutMs = 15000): Promise<Reply> {
    return JSON.parse(await this.nextLine(timeoutMs)) as Reply;
  }

  close(): void {
    this.proc.stdin.end();
    this.proc.kill();
  }
}

let runner: RunnerHandle | null = null;

function start(): RunnerHandle {
  runner = new RunnerHandle();
  return runner;
}

afterEach(() => {
  runner?.close();
  runner = null;
});

describe('verdicts', () => {
  it('returns the four canned verdicts bit-exactly', async () => {
    const r = start();
    r.send({ id: 'ok', function_source: SUM_FN, test_source: 'assert snippet([1, 2, 3]) == 6', timeout_ms: 5000, memory_limit_mb: 256 });
    expect(await r.nextLine()).toBe('{"id":"ok","status":"pass","detail":""}');

    r.send({ id: 'bad', function_source: SUM_FN, test_source: 'assert snippet([1, 2, 3]) == 7', timeout_ms: 5000, memory_limit_mb: 256 });
    expect(await r.nextLine()).toBe('{"id":"bad","status":"fail","detail":""}');

    r.send({ id: 'boom', function_source: SUM_FN, test_source: 'assert snippet(None) == 0', timeout_ms: 5000, memory_limit_mb: 256 });
    expect(await r.nextLine()).toBe(
      '{"id":"boom","status":"error","detail":"TypeError: \'NoneType\' object is not iterable"}',
    );

    r.send({ id: 'slow', function_source: 'def snippet():\n    while True:\n        pass\n', test_source: 'snippet()', timeout_ms: 150, memory_limit_mb: 256 });
    expect(await r.nextLine()).toBe('{"id":"slow","status":"timeout","detail":"exceeded 150 ms"}');
  });

  it('reports assertion messages as the fail detail', async () => {
    const r = start();
    r.send({ id: 'msg', function_source: 'x = 1', test_source: "assert x == 2, 'expected two'", timeout_ms: 5000, memory_limit_mb: 256 });
    expect(await r.next()).toEqual({ id: 'msg', status: 'fail', detail: 'expected two' });
  });

  it('applies the memory limit', async () => {
    const r = start();
    r.send({
      id: 'hog',
      function_source: 'blob = bytearray(512 * 1024 * 1024)',
      test_source: 'assert True',
      timeout_ms: 10000,
      memory_limit_mb: 64,
    });
    const reply = await r.next();
    expect(reply.status).toBe('error');
    expect(reply.detail).toContain('MemoryError');
  });
});

describe('policy', () => {
  it('denies file writes', async () => {
    const r = start();
    r.send({ id: 'w', function_source: "handle = open('/tmp/leak.txt', 'w')", test_source: 'assert True', timeout_ms: 5000, memory_limit_mb: 256 });
    const reply = await r.next();
    expect(reply.status).toBe('error');
    expect(reply.detail).toContain('PermissionError');
  });

  it('denies sockets', async () => {
    const r = start();
    r.send({
      id: 's',
      function_source: 'import socket\nconn = socket.socket()',
      test_source: 'assert True',
      timeout_ms: 5000,
      memory_limit_mb: 256,
    });
    const reply = await r.next();
    expect(reply.status).toBe('error');
    expect(reply.detail).toContain('PermissionError');
  });

  it('denies imports outside the allowlist but keeps the stdlib', async () => {
    const r = start();
    r.send({ id: 'm', function_source: 'import math\nx = math.sqrt(4)', test_source: 'assert x == 2', timeout_ms: 5000, memory_limit_mb: 256 });
    expect((await r.next()).status).toBe('pass');
    r.send({ id: 'f', function_source: 'import requests', test_source: 'assert True', timeout_ms: 5000, memory_limit_mb: 256 });
    const denied = await r.next();
    expect(denied.status).toBe('error');
    expect(denied.detail).toContain('ImportError');
  });

  it('swallows job prints so the verdict channel stays clean', async () => {
    const r = start();
    r.send({ id: 'p', function_source: "print('{\"id\": \"fake\"}')", test_source: 'assert True', timeout_ms: 5000, memory_limit_mb: 256 });
    expect(await r.next()).toEqual({ id: 'p', status: 'pass', detail: '' });
  });
});

describe('protocol', () => {
  it('replies ProtocolError for malformed lines without dying', async () => {
    const r = start();
    r.sendRaw('this is not json');
    const broken = await r.next();
    expect(broken.id).toBeNull();
    expect(broken.status).toBe('error');
    expect(broken.detail).toContain('ProtocolError');

    r.send({ id: 'half' }); // missing sources
    const half = await r.next();
    expect(half.id).toBe('half');
    expect(half.detail).toContain('ProtocolError');

    r.send({ id: 'alive', function_source: 'x = 1', test_source: 'assert x == 1', timeout_ms: 5000, memory_limit_mb: 256 });
    expect((await r.next()).status).toBe('pass');
  });

  it('preserves request order', async () => {
    const r = start();
    const ids = Array.from({ length: 25 }, (_, k) => `job-${k}`);
    for (const id of ids) {
      r.send({ id, function_source: 'x = 1', test_source: 'assert x == 1', timeout_ms: 5000, memory_limit_mb: 256 });
    }
    const seen: Array<string | null> = [];
    for (let k = 0; k < ids.length; k += 1) {
      seen.push((await r.next()).id);
    }
    expect(seen).toEqual(ids);
  });

  it('survives 1000 consecutive error jobs', async () => {
    const r = start();
    const started = Date.now();
    for (let k = 0; k < 1000; k += 1) {
      r.send({ id: `err-${k}`, function_source: "raise ValueError('boom')", test_source: 'assert True', timeout_ms: 5000, memory_limit_mb: 256 });
    }
    for (let k = 0; k < 1000; k += 1) {
      const reply = await r.next(30000);
      expect(reply.id).toBe(`err-${k}`);
      expect(reply.status).toBe('error');
    }
    const elapsed = (Date.now() - started) / 1000;
    expect(elapsed).toBeLessThan(30);

    r.send({ id: 'after', function_source: 'x = 2', test_source: 'assert x == 2', timeout_ms: 5000, memory_limit_mb: 256 });
    expect((await r.next()).status).toBe('pass');
  }, 45000);
});
