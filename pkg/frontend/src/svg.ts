/** Minimal deterministic SVG assembly: axes, polylines, labels. */

export interface Frame {
  width: number;
  height: number;
  margin: number;
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export function xPix(frame: Frame, x: number): number {
  const span = frame.xMax - frame.xMin || 1;
  return frame.margin +
    ((x - frame.xMin) / span) * (frame.width - 2 * frame.margin);
}

export function yPix(frame: Frame, y: number): number {
  const span = frame.yMax - frame.yMin || 1;
  return frame.height - frame.margin -
    ((y - frame.yMin) / span) * (frame.height - 2 * frame.margin);
}

function fmt(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

export function polyline(
  frame: Frame,
  xs: number[],
  ys: number[],
  style: string,
): string {
  const pts = xs
    .map((x, i) => `${fmt(xPix(frame, x))},${fmt(yPix(frame, ys[i]))}`)
    .join(' ');
  return `<polyline fill="none" ${style} points="${pts}"/>`;
}

export function circles(
  frame: Frame,
  xs: number[],
  ys: number[],
  radius: number,
  style: string,
): string {
  return xs
    .map((x, i) =>
      `<circle cx="${fmt(xPix(frame, x))}" cy="${fmt(yPix(frame, ys[i]))}" ` +
      `r="${radius}" ${style}/>`)
    .join('\n');
}

/** Evenly spaced tick positions covering [lo, hi]. */
export function ticks(lo: number, hi: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    out.push(lo + ((hi - lo) * i) / (count - 1));
  }
  return out;
}

export function axes(
  frame: Frame,
  xLabel: string,
  yLabel: string,
  xTicks: number[],
  yTicks: number[],
  tickText: (v: number) => string = fmt,
): string {
  const parts: string[] = [];
  const axisStyle = 'stroke="#444" stroke-width="1"';
  const x0 = frame.margin;
  const x1 = frame.width - frame.margin;
  const y0 = frame.height - frame.margin;
  const y1 = frame.margin;
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}" ${axisStyle}/>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}" ${axisStyle}/>`);
  for (const t of xTicks) {
    const px = fmt(xPix(frame, t));
    parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 4}" ${axisStyle}/>`);
    parts.push(`<text x="${px}" y="${y0 + 16}" font-size="10" ` +
      `text-anchor="middle" fill="#222">${tickText(t)}</text>`);
  }
  for (const t of yTicks) {
    const py = fmt(yPix(frame, t));
    parts.push(`<line x1="${x0 - 4}" y1="${py}" x2="${x0}" y2="${py}" ${axisStyle}/>`);
    parts.push(`<text x="${x0 - 6}" y="${py}" font-size="10" ` +
      `text-anchor="end" dominant-baseline="middle" fill="#222">` +
      `${tickText(t)}</text>`);
  }
  parts.push(`<text x="${(x0 + x1) / 2}" y="${frame.height - 4}" ` +
    `font-size="11" text-anchor="middle" fill="#222">${xLabel}</text>`);
  parts.push(`<text x="12" y="${(y0 + y1) / 2}" font-size="11" ` +
    `text-anchor="middle" fill="#222" ` +
    `transform="rotate(-90 12 ${(y0 + y1) / 2})">${yLabel}</text>`);
  return parts.join('\n');
}

export function document(
  frame: Frame,
  title: string,
  body: string,
): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${frame.width}" ` +
    `height="${frame.height}" viewBox="0 0 ${frame.width} ${frame.height}">`,
    `<rect width="${frame.width}" height="${frame.height}" fill="white"/>`,
    `<text x="${frame.width / 2}" y="16" font-size="13" ` +
    `text-anchor="middle" fill="#111">${title}</text>`,
    body,
    '</svg>',
    '',
  ].join('\n');
}
