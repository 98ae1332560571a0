/** Figure dispatch: read one artifact, write one SVG. */

import { readFileSync, writeFileSync } from 'node:fs';

import {
  renderConvergenceFigure,
  renderProfileFigure,
  renderWaveFigure,
} from './figures.js';

export type FigureKind = 'profile' | 'convergence' | 'wave';

export interface FigureSpec {
  kind: FigureKind;
  inputPath: string;
  outputPath: string;
}

const RENDERERS: Record<FigureKind, (text: string) => string> = {
  profile: renderProfileFigure,
  convergence: renderConvergenceFigure,
  wave: renderWaveFigure,
};

export function render(spec: FigureSpec): void {
  const renderer = RENDERERS[spec.kind];
  if (!renderer) {
    throw new Error(`unknown figure kind "${spec.kind}"`);
  }
  const text = readFileSync(spec.inputPath, 'utf8');
  writeFileSync(spec.outputPath, renderer(text));
}

/** Shared entry-point body for the one-script-per-kind executables. */
export function runKind(kind: FigureKind, argv: string[]): number {
  if (argv.length !== 2) {
    process.stderr.write(`usage: ${kind}-figure <input> <output.svg>\n`);
    return 2;
  }
  try {
    render({ kind, inputPath: argv[0], outputPath: argv[1] });
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
  return 0;
}
