import { serve } from './runner.js';

const args = process.argv.slice(2);

if (!args.includes('--jobs-from-stdin')) {
  process.stderr.write(
    'usage: node dist/main.js --jobs-from-stdin\n' +
    'Reads one JSON job per stdin line and replies with one JSON verdict per line.\n',
  );
  process.exit(64);
}

serve(process.stdin, process.stdout).then(
  () => process.exit(0),
  (err) => {
    process.stderr.write(`fatal: ${err}\n`);
    process.exit(1);
  },
);
