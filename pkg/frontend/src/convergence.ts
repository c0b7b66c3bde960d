/**
 * Mean convergence curves from runs.csv rows: one line per
 * (optimizer, noise level) cell, best-so-far cost averaged over the
 * cell's runs on the unit grid.
 */

import { RunsRow } from "./csv.js";
import {
  CellCurves,
  groupCells,
  maxUnits,
  meanCurve,
  PlotError,
  selectTop,
} from "./curves.js";
import { pickProblem } from "./boxplot.js";
import { linearScale, openSvg, polyline, text, xAxisLinear, yAxis } from "./svg.js";
import { NOISE_DASH, noiseLabel, SERIES_COLORS } from "./style.js";

export interface ConvergenceOptions {
  problem?: string;
  noise?: string[];
  top?: number; // keep the k best runs per cell; 0 = all
  width?: number;
  height?: number;
}

interface Series {
  cell: CellCurves;
  curve: number[];
  color: string;
  dash: string;
}

export function renderConvergence(
  rows: RunsRow[],
  options: ConvergenceOptions = {}
): string {
  if (rows.length === 0) {
    throw new PlotError("no trace rows to plot");
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

  const cells = groupCells(data);
  const budget = Math.max(...cells.map((c) => maxUnits(c.traces)));

  const colorByOptimizer = new Map<string, string>();
  const series: Series[] = cells.map((cell) => {
    let color = colorByOptimizer.get(cell.optimizer);
    if (!color) {
      color = SERIES_COLORS[colorByOptimizer.size % SERIES_COLORS.length];
      colorByOptimizer.set(cell.optimizer, color);
    }
    return {
      cell,
      curve: meanCurve(selectTop(cell.traces, options.top ?? 0), budget),
      color,
      dash: NOISE_DASH[cell.noise] ?? "",
    };
  });

  const width = options.width ?? 860;
  const height = options.height ?? 460;
  const left = 96;
  const right = width - 190; // room for the legend column
  const top = 48;
  const bottom = height - 64;

  let lo = Math.min(...series.map((s) => Math.min(...s.curve)));
  let hi = Math.max(...series.map((s) => Math.max(...s.curve)));
  const pad = (hi - lo || 1) * 0.05;
  const y = linearScale(lo - pad, hi + pad, bottom, top);
  const x = linearScale(1, budget, left, right);

  let svg = openSvg(width, height);
  svg += text(left, 24, `${problem} average convergence`, 'font-size="14"');
  svg += yAxis(y, left, "mean best cost", top, bottom);
  svg += xAxisLinear(x, bottom, "cost evaluation units", left, right);

  for (const s of series) {
    const points: Array<[number, number]> = s.curve.map((value, i) => [
      x(i + 1),
      y(value),
    ]);
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    svg += polyline(points, `stroke="${s.color}" stroke-width="1.6"${dash}`);
  }

  let legendY = top + 8;
  for (const s of series) {
    const label = `${s.cell.optimizer} (${noiseLabel(s.cell.noise)})`;
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    svg += polyline(
      [
        [right + 14, legendY - 4],
        [right + 38, legendY - 4],
      ],
      `stroke="${s.color}" stroke-width="1.6"${dash}`
    );
    svg += text(right + 44, legendY, label);
    legendY += 18;
  }
  svg += "</svg>\n";
  return svg;
}
