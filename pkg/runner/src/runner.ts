/** The serving loop: jobs in arrival order, one at a time, replies in
 * the same order.  Malformed envelopes get a ProtocolError reply and the
 * loop keeps going. */

import { createInterface } from 'node:readline';
import type { Readable, Writable } from 'node:stream';
import { runJob, reply } from './executor.js';
import { parseEnvelope, ProtocolError, serializeReply } from './protocol.js';

export async function serve(input: Readable, output: Writable): Promise<void> {
  const lines = createInterface({ input, crlfDelay: Infinity });
  const queue: string[] = [];
  let draining = false;
  let closed = false;
  let idle: (() => void) | null = null;

  const drain = async () => {
    if (draining) return;
    draining = true;
    while (queue.length > 0) {
      const line = queue.shift()!;
      if (!line.trim()) continue;
      let replyLine: string;
      try {
        const job = parseEnvelope(line);
        const outcome = await runJob(job);
        replyLine = serializeReply(reply(job.id, outcome));
      } catch (err) {
        if (err instanceof ProtocolError) {
          const id = idFromBrokenLine(line);
          replyLine = serializeReply({
            id,
            status: 'error',
            detail: `ProtocolError: ${err.message}`,
          });
        } else {
          replyLine = serializeReply({
            id: null,
            status: 'error',
            detail: `internal: ${(err as Error).message}`,
          });
        }
      }
      output.write(replyLine + '\n');
    }
    draining = false;
    if (idle) idle();
  };

  lines.on('line', (line) => {
    queue.push(line);
    void drain();
  });

  await new Promise<void>((resolve) => {
    lines.on('close', () => {
      closed = true;
      if (!draining && queue.length === 0) resolve();
      else idle = () => { if (closed && queue.length === 0) resolve(); };
    });
  });
}

/** Salvage the id from a structurally broken envelope when possible. */
function idFromBrokenLine(line: string): string | null {
  try {
    const raw = JSON.parse(line);
    if (raw && typeof raw === 'object' && typeof (raw as { id?: unknown }).id === 'string') {
      return (raw as { id: string }).id;
    }
  } catch {
    /* not json at all */
  }
  return null;
}
