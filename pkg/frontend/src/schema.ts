/**
 * Input contracts: the figure specification JSON and the two CSV schemas
 * written by the magtfd CLI. Everything plotted originates in those files;
 * this package never computes physics.
 */

import { readFileSync } from "node:fs";
import { z } from "zod";

export const CurveInput = z.object({
  path: z.string(),
  label: z.string(),
});

export const FigureSpec = z.object({
  inputs: z.array(CurveInput),
  output: z.string(),
  title: z.string().optional(),
  /** column of the time-series CSV to plot on the y axis */
  yColumn: z.enum(["C", "Cdot"]).default("C"),
  /** horizontal dashed reference lines, e.g. the zero-temperature floor */
  asymptotes: z.array(z.number()).default([]),
});
export type FigureSpec = z.infer<typeof FigureSpec>;

export class SchemaError extends Error {}

export interface TimeSeries {
  t: number[];
  C: number[];
  Cdot: number[];
}

export interface SweepTable {
  beta: number[];
  cMax: number[];
  rateMax: number[];
  internalEnergy: number[];
  lloydRhs: number[];
  lloydSatisfied: boolean[];
}

const TIMESERIES_HEADER = "t,C,Cdot";
const SWEEP_HEADER =
  "beta,omega0,omegaC,omegaR1,omegaR2,cMax,rateMax,internalEnergy,lloydRhs,lloydSatisfied,error";

function rows(path: string, expectedHeader: string): string[][] {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch {
    throw new SchemaError(`${path}: cannot read file`);
  }
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines[0] !== expectedHeader) {
    throw new SchemaError(`${path}: expected header "${expectedHeader}", got "${lines[0] ?? ""}"`);
  }
  return lines.slice(1).map((l) => l.split(","));
}

function num(path: string, field: string, raw: string): number {
  const v = Number(raw);
  if (raw === "" || Number.isNaN(v)) {
    throw new SchemaError(`${path}: non-numeric ${field} value "${raw}"`);
  }
  return v;
}

export function readTimeSeries(path: string): TimeSeries {
  const out: TimeSeries = { t: [], C: [], Cdot: [] };
  for (const r of rows(path, TIMESERIES_HEADER)) {
    if (r.length !== 3) throw new SchemaError(`${path}: expected 3 columns, got ${r.length}`);
    out.t.push(num(path, "t", r[0]));
    out.C.push(num(path, "C", r[1]));
    out.Cdot.push(num(path, "Cdot", r[2]));
  }
  if (out.t.length < 2) throw new SchemaError(`${path}: need at least 2 rows`);
  return out;
}

export function readSweep(path: string): SweepTable {
  const out: SweepTable = {
    beta: [],
    cMax: [],
    rateMax: [],
    internalEnergy: [],
    lloydRhs: [],
    lloydSatisfied: [],
  };
  for (const r of rows(path, SWEEP_HEADER)) {
    if (r.length !== 11) throw new SchemaError(`${path}: expected 11 columns, got ${r.length}`);
    if (r[10] !== "") continue; // flagged row: skip, it carries no numbers
    out.beta.push(num(path, "beta", r[0]));
    out.cMax.push(num(path, "cMax", r[5]));
    out.rateMax.push(num(path, "rateMax", r[6]));
    out.internalEnergy.push(num(path, "internalEnergy", r[7]));
    out.lloydRhs.push(num(path, "lloydRhs", r[8]));
    out.lloydSatisfied.push(r[9] === "true");
  }
  if (out.beta.length < 2) throw new SchemaError(`${path}: need at least 2 usable rows`);
  for (let i = 1; i < out.beta.length; i++) {
    if (out.beta[i] <= out.beta[i - 1]) {
      throw new SchemaError(`${path}: beta column must be strictly increasing`);
    }
  }
  return out;
}

export function loadSpec(path: string): FigureSpec {
  let parsed: unknown;
  try {
    parsed = JSON.parse(readFileSync(path, "utf8"));
  } catch {
    throw new SchemaError(`${path}: cannot read or parse figure spec JSON`);
  }
  const res = FigureSpec.safeParse(parsed);
  if (!res.success) {
    throw new SchemaError(`${path}: invalid figure spec: ${res.error.issues[0]?.message}`);
  }
  return res.data;
}
