/**
 * Small hand-assembled SVG pieces shared by both figures.
 *
 * Output is plain markup with no timestamps or generator tags, so the
 * same data always produces the same bytes.
 */

import { ticks } from "d3-array";

export const FONT = "12px sans-serif";

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// fixed-precision coordinates keep the files small and byte-stable
export function px(value: number): string {
  return Number(value.toFixed(2)).toString();
}

export function fmtTick(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

export interface Scale {
  (value: number): number;
  domain: [number, number];
  ticks: number[];
}

export function linearScale(
  lo: number,
  hi: number,
  rangeLo: number,
  rangeHi: number,
  tickCount = 6
): Scale {
  if (hi <= lo) {
    hi = lo + 1; // degenerate domain, e.g. a single flat line
  }
  const scale = ((value: number) =>
    rangeLo + ((value - lo) / (hi - lo)) * (rangeHi - rangeLo)) as Scale;
  scale.domain = [lo, hi];
  scale.ticks = ticks(lo, hi, tickCount);
  return scale;
}

export function openSvg(width: number, height: number): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}" ` +
    `font-family="sans-serif" font-size="12">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n`
  );
}

export function text(
  x: number,
  y: number,
  body: string,
  attrs = ""
): string {
  return `<text x="${px(x)}" y="${px(y)}"${attrs ? " " + attrs : ""}>${esc(body)}</text>\n`;
}

export function line(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  attrs: string
): string {
  return `<line x1="${px(x1)}" y1="${px(y1)}" x2="${px(x2)}" y2="${px(y2)}" ${attrs}/>\n`;
}

export function polyline(points: Array<[number, number]>, attrs: string): string {
  const path = points.map(([x, y]) => `${px(x)},${px(y)}`).join(" ");
  return `<polyline points="${path}" fill="none" ${attrs}/>\n`;
}

// y axis on the left edge of the plot box, with a rotated label
export function yAxis(
  scale: Scale,
  xAt: number,
  label: string,
  plotTop: number,
  plotBottom: number
): string {
  let out = line(xAt, plotTop, xAt, plotBottom, 'stroke="black"');
  for (const tick of scale.ticks) {
    const y = scale(tick);
    out += line(xAt - 4, y, xAt, y, 'stroke="black"');
    out += text(xAt - 7, y + 4, fmtTick(tick), 'text-anchor="end"');
  }
  const midY = (plotTop + plotBottom) / 2;
  out += text(
    xAt - 52,
    midY,
    label,
    `text-anchor="middle" transform="rotate(-90 ${px(xAt - 52)} ${px(midY)})"`
  );
  return out;
}

export function xAxisLinear(
  scale: Scale,
  yAt: number,
  label: string,
  plotLeft: number,
  plotRight: number
): string {
  let out = line(plotLeft, yAt, plotRight, yAt, 'stroke="black"');
  for (const tick of scale.ticks) {
    const x = scale(tick);
    out += line(x, yAt, x, yAt + 4, 'stroke="black"');
    out += text(x, yAt + 16, fmtTick(tick), 'text-anchor="middle"');
  }
  out += text((plotLeft + plotRight) / 2, yAt + 34, label, 'text-anchor="middle"');
  return out;
}
