/**
 * Grouped termination-cost box plot from summary.csv rows.
 *
 * One group per optimizer, one box per noise level inside the group,
 * drawn straight from the precomputed five-number summaries.
 */

import { SummaryRow } from "./csv.js";
import { PlotError } from "./curves.js";
import { linearScale, line, openSvg, px, text, yAxis } from "./svg.js";
import { NOISE_COLORS, noiseLabel, orderNoises } from "./style.js";

export interface BoxplotOptions {
  problem?: string;
  noise?: string[];
  width?: number;
  height?: number;
}

export function pickProblem(present: string[], requested?: string): string {
  const unique = [...new Set(present)];
  if (requested !== undefined) {
    if (!unique.includes(requested)) {
      throw new PlotError(
        `problem '${requested}' not in input (have: ${unique.join(", ")})`
      );
    }
    return requested;
  }
  if (unique.length === 1) {
    return unique[0];
  }
  throw new PlotError(
    `input covers several problems (${unique.join(", ")}); pass --problem`
  );
}

export function renderBoxplot(rows: SummaryRow[], options: BoxplotOptions = {}): string {
  if (rows.length === 0) {
    throw new PlotError("no summary rows to plot");
  }
  const problem = pickProblem(rows.map((r) => r.problem), options.problem);
  let data = rows.filter((r) => r.problem === problem);
  if (options.noise && options.noise.length > 0) {
    const wanted = options.noise;
    data = data.filter((r) => wanted.includes(r.noise));
    if (data.length === 0) {
      throw new PlotError(`no rows left after noise filter (${wanted.join(", ")})`);
    }
  }

  const optimizers = [...new Set(data.map((r) => r.optimizer))];
  const noises = orderNoises(data.map((r) => r.noise));

  const width = options.width ?? 860;
  const height = options.height ?? 420;
  const left = 96;
  const right = width - 24;
  const top = 56;
  const bottom = height - 64;

  let lo = Math.min(...data.map((r) => r.min));
  let hi = Math.max(...data.map((r) => r.max));
  const pad = (hi - lo || 1) * 0.05;
  lo -= pad;
  hi += pad;
  const y = linearScale(lo, hi, bottom, top);

  const slot = (right - left) / optimizers.length;
  const boxWidth = Math.min(26, slot / (noises.length + 1));

  let svg = openSvg(width, height);
  svg += text(left, 24, `${problem} termination cost by optimizer`, 'font-size="14"');

  // legend across the top, one swatch per noise level
  let legendX = right - 66 * noises.length;
  for (const noise of noises) {
    const color = NOISE_COLORS[noise] ?? "#444444";
    svg += `<rect x="${px(legendX)}" y="16" width="12" height="12" fill="${color}" fill-opacity="0.65" stroke="${color}"/>\n`;
    svg += text(legendX + 17, 26, noiseLabel(noise));
    legendX += 66;
  }

  svg += yAxis(y, left, "cost at termination", top, bottom);
  for (let g = 0; g < optimizers.length; g++) {
    const groupMid = left + slot * (g + 0.5);
    svg += text(groupMid, bottom + 18, optimizers[g], 'text-anchor="middle"');
    const cells = data.filter((r) => r.optimizer === optimizers[g]);
    for (let b = 0; b < noises.length; b++) {
      const row = cells.find((r) => r.noise === noises[b]);
      if (!row) {
        continue;
      }
      const color = NOISE_COLORS[row.noise] ?? "#444444";
      const cx = groupMid + (b - (noises.length - 1) / 2) * (boxWidth + 6);
      const half = boxWidth / 2;
      const stroke = `stroke="${color}"`;
      svg += line(cx, y(row.min), cx, y(row.q1), stroke);
      svg += line(cx, y(row.q3), cx, y(row.max), stroke);
      svg += line(cx - half / 2, y(row.min), cx + half / 2, y(row.min), stroke);
      svg += line(cx - half / 2, y(row.max), cx + half / 2, y(row.max), stroke);
      svg += `<rect x="${px(cx - half)}" y="${px(y(row.q3))}" width="${px(boxWidth)}" height="${px(y(row.q1) - y(row.q3))}" fill="${color}" fill-opacity="0.65" stroke="${color}"/>\n`;
      svg += line(cx - half, y(row.median), cx + half, y(row.median), 'stroke="black" stroke-width="1.5"');
    }
  }
  svg += line(left, bottom, right, bottom, 'stroke="black"');
  svg += text((left + right) / 2, bottom + 40, "optimizer", 'text-anchor="middle"');
  svg += "</svg>\n";
  return svg;
}
