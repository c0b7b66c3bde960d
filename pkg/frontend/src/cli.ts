#!/usr/bin/env node
/**
 * Figure commands for benchmark CSV output.
 *
 *   plot-box          --in summary.csv --out box.svg [--problem A1]
 *                     [--noise exact,shots] [--format svg|png]
 *   plot-convergence  --in runs.csv --out conv.svg [--problem A1]
 *                     [--noise device] [--top 50] [--format svg|png]
 *
 * Exit codes: 0 ok, 1 file-system problems, 2 bad input data.
 * The output file is only written after rendering succeeds.
 */

import * as fs from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { CsvError, parseRunsCsv, parseSummaryCsv } from "./csv.js";
import { PlotError } from "./curves.js";
import { renderBoxplot } from "./boxplot.js";
import { renderConvergence } from "./convergence.js";

interface CommonArgs {
  in: string;
  out: string;
  problem?: string;
  noise?: string;
  format: string;
}

function splitNoise(flag?: string): string[] | undefined {
  if (flag === undefined) {
    return undefined;
  }
  return flag
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part !== "");
}

function readInput(path: string): string {
  try {
    return fs.readFileSync(path, "utf8");
  } catch (err) {
    const detail = err instanceof Error ? err.message : String(err);
    fail(1, `cannot read ${path}: ${detail}`);
  }
}

async function writeFigure(svg: string, outPath: string, format: string): Promise<void> {
  if (format === "png") {
    const { Resvg } = await import("@resvg/resvg-js");
    fs.writeFileSync(outPath, new Resvg(svg).render().asPng());
  } else {
    fs.writeFileSync(outPath, svg, "utf8");
  }
  console.log(`wrote ${outPath}`);
}

function fail(code: number, message: string): never {
  console.error(`error: ${message}`);
  process.exit(code);
}

async function run(args: CommonArgs, render: (text: string) => string): Promise<void> {
  const content = readInput(args.in);
  let svg: string;
  try {
    svg = render(content);
  } catch (err) {
    if (err instanceof CsvError || err instanceof PlotError) {
      fail(2, err.message);
    }
    throw err;
  }
  try {
    await writeFigure(svg, args.out, args.format);
  } catch (err) {
    const detail = err instanceof Error ? err.message : String(err);
    fail(1, `cannot write ${args.out}: ${detail}`);
  }
}

function commonOptions(cmd: ReturnType<typeof yargs>) {
  return cmd
    .option("in", { type: "string", demandOption: true, describe: "input CSV path" })
    .option("out", { type: "string", demandOption: true, describe: "output image path" })
    .option("problem", { type: "string", describe: "problem to plot (required when the CSV has several)" })
    .option("noise", { type: "string", describe: "comma-separated noise levels to keep" })
    .option("format", { choices: ["svg", "png"] as const, default: "svg" });
}

await yargs(hideBin(process.argv))
  .scriptName("vqlsbench-plot")
  .command(
    "plot-box",
    "grouped termination-cost box plot from summary.csv",
    (cmd) => commonOptions(cmd),
    async (args) =>
      run(args as unknown as CommonArgs, (content) =>
        renderBoxplot(parseSummaryCsv(args.in as string, content), {
          problem: args.problem as string | undefined,
          noise: splitNoise(args.noise as string | undefined),
        })
      )
  )
  .command(
    "plot-convergence",
    "mean best-cost curves from runs.csv",
    (cmd) =>
      commonOptions(cmd).option("top", {
        type: "number",
        default: 0,
        describe: "average only the k best runs per cell (0 = all)",
      }),
    async (args) =>
      run(args as unknown as CommonArgs, (content) =>
        renderConvergence(parseRunsCsv(args.in as string, content), {
          problem: args.problem as string | undefined,
          noise: splitNoise(args.noise as string | undefined),
          top: args.top as number,
        })
      )
  )
  .demandCommand(1, "pick a command: plot-box or plot-convergence")
  .strict()
  .help()
  .parseAsync();
