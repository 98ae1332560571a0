/** The three figure kinds, each a pure string-to-SVG transformation. */

import { column, parseCsv } from './csv.js';
import * as svg from './svg.js';

export interface ProfileData {
  center: number;
  maxima: number[];
  minima: number[];
  truncated: boolean;
}

function requireNumberArray(data: Record<string, unknown>, field: string): number[] {
  const value = data[field];
  if (!Array.isArray(value) || value.some((x) => typeof x !== 'number')) {
    throw new Error(`profile: field "${field}" must be an array of numbers`);
  }
  return value as number[];
}

export function parseProfile(text: string): ProfileData {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new Error(`profile: not valid JSON: ${(err as Error).message}`);
  }
  if (typeof raw !== 'object' || raw === null) {
    throw new Error('profile: top level must be an object');
  }
  const data = raw as Record<string, unknown>;
  if (typeof data.center !== 'number') {
    throw new Error('profile: field "center" must be a number');
  }
  if (typeof data.truncated !== 'boolean') {
    throw new Error('profile: field "truncated" must be a boolean');
  }
  const maxima = requireNumberArray(data, 'maxima');
  const minima = requireNumberArray(data, 'minima');
  if (minima.length !== maxima.length + 1) {
    throw new Error('profile: field "minima" must hold one more entry than ' +
      '"maxima"');
  }
  return { center: data.center, maxima, minima, truncated: data.truncated };
}

/** Piecewise-linear heights of the profile at the sample points. */
export function profileHeights(p: ProfileData, cs: number[]): number[] {
  const nodes: number[] = [];
  for (let i = 0; i < p.minima.length; i++) {
    nodes.push(p.minima[i]);
    if (i < p.maxima.length) {
      nodes.push(p.maxima[i]);
    }
  }
  const fs: number[] = [nodes[0] - p.center];
  for (let j = 1; j < nodes.length; j++) {
    const sign = j % 2 === 1 ? +1 : -1;
    fs.push(fs[j - 1] + sign * (nodes[j - 1] - nodes[j]));
  }
  return cs.map((c) => {
    if (c >= nodes[0]) {
      return c - p.center;
    }
    const last = nodes.length - 1;
    if (c <= nodes[last]) {
      return fs[last] + (nodes[last] - c);
    }
    let j = 0;
    while (nodes[j + 1] > c) {
      j++;
    }
    const t = (nodes[j] - c) / (nodes[j] - nodes[j + 1]);
    return fs[j] + t * (fs[j + 1] - fs[j]);
  });
}

/** Profile staircase with the |c - center| asymptote overlay. */
export function renderProfileFigure(text: string): string {
  const p = parseProfile(text);
  const lo = Math.min(...p.minima, p.center) - 1.0;
  const hi = Math.max(...p.minima, p.center) + 1.0;
  const cs: number[] = [];
  const samples = 512;
  for (let i = 0; i <= samples; i++) {
    cs.push(lo + ((hi - lo) * i) / samples);
  }
  const fs = profileHeights(p, cs);
  const vee = cs.map((c) => Math.abs(c - p.center));
  const frame: svg.Frame = {
    width: 640, height: 420, margin: 46,
    xMin: lo, xMax: hi,
    yMin: 0, yMax: Math.max(...fs, ...vee) * 1.05,
  };
  const body = [
    svg.axes(frame, 'c', 'f(c)', svg.ticks(lo, hi, 7),
      svg.ticks(0, frame.yMax, 5)),
    svg.polyline(frame, cs, vee,
      'stroke="#999" stroke-width="1" stroke-dasharray="5,4"'),
    svg.polyline(frame, cs, fs, 'stroke="#d62728" stroke-width="1.8"'),
  ].join('\n');
  const kind = p.truncated ? 'dispersive action profile (truncated window)'
    : 'action profile';
  return svg.document(frame, `${kind}, center ${p.center}`, body);
}

/** Log-log convergence curves of abs_err against eps, one per test point. */
export function renderConvergenceFigure(text: string): string {
  const table = parseCsv(text,
    'eps,u_re,u_im,phi_re,phi_im,target_re,target_im,abs_err');
  const eps = column(table, 'eps');
  const uRe = column(table, 'u_re');
  const uIm = column(table, 'u_im');
  const err = column(table, 'abs_err');
  if (eps.some((e) => e <= 0) || err.some((e) => e <= 0)) {
    throw new Error('convergence: eps and abs_err must be positive for ' +
      'log axes');
  }
  const keys = [...new Set(uRe.map((re, i) => `${re},${uIm[i]}`))];
  const lx = eps.map(Math.log10);
  const ly = err.map(Math.log10);
  const frame: svg.Frame = {
    width: 640, height: 420, margin: 52,
    xMin: Math.min(...lx) - 0.15, xMax: Math.max(...lx) + 0.15,
    yMin: Math.min(...ly) - 0.3, yMax: Math.max(...ly) + 0.3,
  };
  const palette = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#8c564b'];
  const parts = [svg.axes(
    frame, 'log10 eps', 'log10 |phi - target|',
    svg.ticks(frame.xMin, frame.xMax, 5), svg.ticks(frame.yMin, frame.yMax, 5),
    (v) => Number(v.toPrecision(3)).toString(),
  )];
  keys.forEach((key, k) => {
    const idx = uRe.map((re, i) => i)
      .filter((i) => `${uRe[i]},${uIm[i]}` === key)
      .sort((a, b) => lx[b] - lx[a]);
    const colour = palette[k % palette.length];
    parts.push(svg.polyline(frame, idx.map((i) => lx[i]),
      idx.map((i) => ly[i]), `stroke="${colour}" stroke-width="1.6"`));
    parts.push(svg.circles(frame, idx.map((i) => lx[i]),
      idx.map((i) => ly[i]), 3, `fill="${colour}"`));
    parts.push(`<text x="${frame.width - frame.margin}" ` +
      `y="${frame.margin + 14 * k}" font-size="10" text-anchor="end" ` +
      `fill="${colour}">u = ${key.replace(',', ' + ')}i</text>`);
  });
  return svg.document(frame, 'small-dispersion convergence',
    parts.join('\n'));
}

/** One period of a sampled wave. */
export function renderWaveFigure(text: string): string {
  const table = parseCsv(text, 'x,v');
  const xs = column(table, 'x');
  const vs = column(table, 'v');
  const lo = Math.min(...vs);
  const hi = Math.max(...vs);
  const pad = 0.05 * (hi - lo || 1);
  const frame: svg.Frame = {
    width: 640, height: 420, margin: 46,
    xMin: 0, xMax: 2 * Math.PI,
    yMin: lo - pad, yMax: hi + pad,
  };
  const body = [
    svg.axes(frame, 'x', 'v(x)', svg.ticks(0, 2 * Math.PI, 5),
      svg.ticks(lo, hi, 5), (v) => Number(v.toPrecision(3)).toString()),
    svg.polyline(frame, xs, vs, 'stroke="#1f77b4" stroke-width="1.8"'),
  ].join('\n');
  return svg.document(frame, 'wave snapshot over one period', body);
}
