/**
 * Renders one panel of complexity (or rate) time series, one curve per input
 * CSV, with optional dashed horizontal asymptotes.
 *
 * Usage: node dist/render_timeseries.js <figure-spec.json>
 */

import { writeFileSync } from "node:fs";
import { FigureSpec, loadSpec, readTimeSeries, SchemaError } from "./schema.js";
import { renderPanel } from "./svg.js";

export function renderTimeseries(spec: FigureSpec): string {
  const curves = spec.inputs.map(({ path, label }) => {
    const series = readTimeSeries(path);
    return { label, x: series.t, y: spec.yColumn === "Cdot" ? series.Cdot : series.C };
  });
  const svg = renderPanel(curves, {
    title: spec.title,
    xLabel: "t",
    yLabel: spec.yColumn === "Cdot" ? "dC/dt" : "C",
    asymptotes: spec.asymptotes,
  });
  writeFileSync(spec.output, svg);
  return svg;
}

function main(argv: string[]): number {
  if (argv.length !== 1) {
    console.error("usage: render_timeseries <figure-spec.json>");
    return 1;
  }
  try {
    const spec = loadSpec(argv[0]);
    renderTimeseries(spec);
    console.log(`wrote ${spec.output} (${spec.inputs.length} curves)`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (process.argv[1]?.endsWith("render_timeseries.js")) {
  process.exit(main(process.argv.slice(2)));
}
