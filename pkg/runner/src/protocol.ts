/** Wire protocol: one JSON job per stdin line, one JSON verdict per
 * stdout line, replies in request order. */

export type VerdictStatus = 'pass' | 'fail' | 'error' | 'timeout';

export interface JobEnvelope {
  id: string;
  function_source: string;
  timeout_ms: number;
  memory_limit_mb: number;
  test_source: string;
}

export interface VerdictReply {
  id: string | null;
  status: VerdictStatus;
  detail: string;
}

const DEFAULT_TIMEOUT_MS = 5000;
const DEFAULT_MEMORY_MB = 256;

export class ProtocolError extends Error {}

export function parseEnvelope(line: string): JobEnvelope {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch (err) {
    throw new ProtocolError(`bad json: ${(err as Error).message}`);
  }
  if (typeof raw !== 'object' || raw === null || Array.isArray(raw)) {
    throw new ProtocolError('envelope must be a json object');
  }
  const record = raw as Record<string, unknown>;
  for (const field of ['id', 'function_source', 'test_source']) {
    if (typeof record[field] !== 'string') {
      throw new ProtocolError(`envelope field ${field} must be a string`);
    }
  }
  const timeoutMs = record.timeout_ms ?? DEFAULT_TIMEOUT_MS;
  const memoryMb = record.memory_limit_mb ?? DEFAULT_MEMORY_MB;
  if (typeof timeoutMs !== 'number' || timeoutMs <= 0) {
    throw new ProtocolError('timeout_ms must be a positive number');
  }
  if (typeof memoryMb !== 'number' || memoryMb <= 0) {
    throw new ProtocolError('memory_limit_mb must be a positive number');
  }
  return {
    id: record.id as string,
    function_source: record.function_source as string,
    test_source: record.test_source as string,
    timeout_ms: timeoutMs,
    memory_limit_mb: memoryMb,
  };
}

export function serializeReply(reply: VerdictReply): string {
  // field order is part of the contract: id, status, detail
  return JSON.stringify({ id: reply.id, status: reply.status, detail: reply.detail });
}
