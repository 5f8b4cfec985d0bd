/**
 * Renders a Lloyd-bound panel from one sweep CSV: max |dC/dt| and the
 * internal energy against beta on a log-10 x axis, with dashed asymptotes
 * (ground-state energy, high-temperature rate plateau) when provided.
 *
 * Usage: node dist/render_lloyd.js <figure-spec.json>
 */

import { writeFileSync } from "node:fs";
import { FigureSpec, loadSpec, readSweep, SchemaError } from "./schema.js";
import { renderPanel } from "./svg.js";

export function renderLloyd(spec: FigureSpec): string {
  if (spec.inputs.length !== 1) {
    throw new SchemaError("lloyd figure takes exactly one sweep CSV input");
  }
  const { path, label } = spec.inputs[0];
  const sweep = readSweep(path);
  const svg = renderPanel(
    [
      { label: `${label} max |dC/dt|`, x: sweep.beta, y: sweep.rateMax, color: "#1f77b4" },
      { label: `${label} U`, x: sweep.beta, y: sweep.internalEnergy, color: "#2ca02c" },
    ],
    {
      title: spec.title,
      xLabel: "beta",
      yLabel: "rate / energy",
      logX: true,
      asymptotes: spec.asymptotes,
    }
  );
  writeFileSync(spec.output, svg);
  return svg;
}

function main(argv: string[]): number {
  if (argv.length !== 1) {
    console.error("usage: render_lloyd <figure-spec.json>");
    return 1;
  }
  try {
    const spec = loadSpec(argv[0]);
    renderLloyd(spec);
    console.log(`wrote ${spec.output}`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (process.argv[1]?.endsWith("render_lloyd.js")) {
  process.exit(main(process.argv.slice(2)));
}
