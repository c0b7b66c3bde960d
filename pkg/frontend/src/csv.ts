/**
 * Readers for the two benchmark CSV schemas.
 *
 * runs.csv     problem,optimizer,noise,run_index,units,best_cost
 *              (one row per recorded trace point, grouped by run)
 * summary.csv  problem,optimizer,noise,n_selected,min,q1,median,q3,max,final_mean
 *
 * All parse errors carry `path:line:` so a bad row is findable.
 */

import Papa from "papaparse";

export class CsvError extends Error {}

export interface RunsRow {
  problem: string;
  optimizer: string;
  noise: string;
  runIndex: number;
  units: number;
  bestCost: number;
}

export interface SummaryRow {
  problem: string;
  optimizer: string;
  noise: string;
  nSelected: number;
  min: number;
  q1: number;
  median: number;
  q3: number;
  max: number;
  finalMean: number;
}

export const RUNS_HEADER = [
  "problem",
  "optimizer",
  "noise",
  "run_index",
  "units",
  "best_cost",
];

export const SUMMARY_HEADER = [
  "problem",
  "optimizer",
  "noise",
  "n_selected",
  "min",
  "q1",
  "median",
  "q3",
  "max",
  "final_mean",
];

// Returns data rows (header stripped); rows[i] is file line i + 2.
function parseTable(path: string, text: string, header: string[]): string[][] {
  const parsed = Papa.parse<string[]>(text, { header: false });
  const rows = parsed.data;
  // a trailing newline yields one empty record; drop it
  while (rows.length > 0 && rows[rows.length - 1].join("") === "") {
    rows.pop();
  }
  if (rows.length === 0) {
    throw new CsvError(`${path}: empty file, expected header ${header.join(",")}`);
  }
  const got = rows[0];
  const missing = header.filter((name) => !got.includes(name));
  if (missing.length > 0) {
    throw new CsvError(`${path}:1: missing columns: ${missing.join(", ")}`);
  }
  if (got.length !== header.length || header.some((name, i) => got[i] !== name)) {
    throw new CsvError(
      `${path}:1: expected header ${header.join(",")}, got ${got.join(",")}`
    );
  }
  const data = rows.slice(1);
  for (let i = 0; i < data.length; i++) {
    if (data[i].length !== header.length) {
      throw new CsvError(
        `${path}:${i + 2}: expected ${header.length} fields, got ${data[i].length}`
      );
    }
  }
  return data;
}

function asNumber(path: string, line: number, column: string, field: string): number {
  const value = Number(field);
  if (field.trim() === "" || !Number.isFinite(value)) {
    throw new CsvError(`${path}:${line}: invalid number for ${column}: '${field}'`);
  }
  return value;
}

function asInt(path: string, line: number, column: string, field: string): number {
  const value = asNumber(path, line, column, field);
  if (!Number.isInteger(value)) {
    throw new CsvError(`${path}:${line}: invalid integer for ${column}: '${field}'`);
  }
  return value;
}

export function parseRunsCsv(path: string, text: string): RunsRow[] {
  return parseTable(path, text, RUNS_HEADER).map((fields, i) => ({
    problem: fields[0],
    optimizer: fields[1],
    noise: fields[2],
    runIndex: asInt(path, i + 2, "run_index", fields[3]),
    units: asInt(path, i + 2, "units", fields[4]),
    bestCost: asNumber(path, i + 2, "best_cost", fields[5]),
  }));
}

export function parseSummaryCsv(path: string, text: string): SummaryRow[] {
  return parseTable(path, text, SUMMARY_HEADER).map((fields, i) => ({
    problem: fields[0],
    optimizer: fields[1],
    noise: fields[2],
    nSelected: asInt(path, i + 2, "n_selected", fields[3]),
    min: asNumber(path, i + 2, "min", fields[4]),
    q1: asNumber(path, i + 2, "q1", fields[5]),
    median: asNumber(path, i + 2, "median", fields[6]),
    q3: asNumber(path, i + 2, "q3", fields[7]),
    max: asNumber(path, i + 2, "max", fields[8]),
    finalMean: asNumber(path, i + 2, "final_mean", fields[9]),
  }));
}
