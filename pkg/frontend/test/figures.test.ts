import assert from 'node:assert/strict';
import { mkdtempSync, readFileSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { test } from 'node:test';

import { parseCsv } from '../src/csv.js';
import {
  parseProfile,
  profileHeights,
  renderConvergenceFigure,
  renderProfileFigure,
  renderWaveFigure,
} from '../src/figures.js';
import { render } from '../src/render.js';

const FIXTURES = join(import.meta.dirname, '..', '..', 'test', 'fixtures');

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), 'utf8');
}

test('profile fixture renders to svg', () => {
  const out = renderProfileFigure(fixture('profile.json'));
  assert.ok(out.startsWith('<svg'));
  assert.ok(out.includes('polyline'));
  assert.ok(out.includes('dispersive action profile'));
});

test('convergence fixture renders to svg', () => {
  const out = renderConvergenceFigure(fixture('sweep.csv'));
  assert.ok(out.startsWith('<svg'));
  assert.ok(out.includes('circle'));
  assert.ok(out.includes('log10 eps'));
});

test('wave fixture renders to svg', () => {
  const out = renderWaveFigure(fixture('wave.csv'));
  assert.ok(out.startsWith('<svg'));
  assert.ok(out.includes('polyline'));
});

test('render writes files and is idempotent', () => {
  const dir = mkdtempSync(join(tmpdir(), 'figs-'));
  for (const [kind, name] of [
    ['profile', 'profile.json'],
    ['convergence', 'sweep.csv'],
    ['wave', 'wave.csv'],
  ] as const) {
    const input = join(dir, name);
    writeFileSync(input, fixture(name));
    const output = join(dir, `${kind}.svg`);
    render({ kind, inputPath: input, outputPath: output });
    const first = readFileSync(output, 'utf8');
    render({ kind, inputPath: input, outputPath: output });
    assert.equal(readFileSync(output, 'utf8'), first);
    assert.ok(first.includes('</svg>'));
    // inputs stay untouched
    assert.equal(readFileSync(input, 'utf8'), fixture(name));
  }
});

test('profile heights follow the vee outside the extrema', () => {
  const p = parseProfile(JSON.stringify({
    center: -1, maxima: [-1], minima: [0, -2], truncated: false,
  }));
  const [a, b, c] = profileHeights(p, [1.0, -1.0, -3.0]);
  assert.ok(Math.abs(a - 2.0) < 1e-12);
  assert.ok(Math.abs(b - 2.0) < 1e-12);
  assert.ok(Math.abs(c - 2.0) < 1e-12);
});

test('profile schema errors name the failing field', () => {
  assert.throws(() => parseProfile('{"center": 0}'), /truncated/);
  assert.throws(
    () => parseProfile('{"center": 0, "truncated": true, "maxima": [1], ' +
      '"minima": [2]}'),
    /minima/,
  );
  assert.throws(() => parseProfile('{nope'), /not valid JSON/);
});

test('csv schema errors name the failing field', () => {
  assert.throws(() => parseCsv('a,b\n1,2', 'x,v'), /header mismatch/);
  assert.throws(() => parseCsv('x,v\n1,banana', 'x,v'), /field "v"/);
  assert.throws(() => parseCsv('x,v\n', 'x,v'), /no data rows/);
});

test('convergence rejects non-positive errors for the log axes', () => {
  const text = 'eps,u_re,u_im,phi_re,phi_im,target_re,target_im,abs_err\n' +
    '1,0,2,0,0,0,0,0\n';
  assert.throws(() => renderConvergenceFigure(text), /positive/);
});
