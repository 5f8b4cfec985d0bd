/**
 * Minimal hand-rolled SVG panel builder: one plot area, linear or log-10 x,
 * polyline curves, dashed horizontal reference lines, a small legend.
 * Output is plain diffable markup; reference lines carry a data-value
 * attribute so tools (and tests) can read them back without geometry math.
 */

export const WIDTH = 640;
export const HEIGHT = 420;
const MARGIN = { top: 36, right: 24, bottom: 46, left: 64 };

export const PALETTE = ["#2ca02c", "#9467bd", "#d62728", "#1f77b4", "#ff7f0e", "#17becf"];

export interface Curve {
  label: string;
  x: number[];
  y: number[];
  color?: string;
}

export interface PanelOptions {
  title?: string;
  xLabel: string;
  yLabel: string;
  logX?: boolean;
  asymptotes?: number[];
}

interface Scale {
  (v: number): number;
}

function linearScale(lo: number, hi: number, out0: number, out1: number): Scale {
  const span = hi - lo || 1;
  return (v) => out0 + ((v - lo) / span) * (out1 - out0);
}

function fmt(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

function ticks(lo: number, hi: number, n = 5): number[] {
  const span = hi - lo || 1;
  const step = Math.pow(10, Math.floor(Math.log10(span / n)));
  const mult = [5, 2, 1].find((m) => span / (step * m) >= n) ?? 1;
  const s = step * mult;
  const start = Math.ceil(lo / s) * s;
  const out: number[] = [];
  for (let v = start; v <= hi + 1e-12 * span; v += s) out.push(v);
  return out;
}

function logTicks(lo: number, hi: number): number[] {
  const out: number[] = [];
  for (let e = Math.ceil(lo); e <= Math.floor(hi); e++) out.push(e);
  return out;
}

export function renderPanel(curves: Curve[], opts: PanelOptions): string {
  if (curves.length === 0) throw new Error("no curves to draw");
  const xs = curves.flatMap((c) => c.x);
  const raw = opts.logX ? xs.map((v) => Math.log10(v)) : xs;
  const ys = curves.flatMap((c) => c.y).concat(opts.asymptotes ?? []);
  const [xLo, xHi] = [Math.min(...raw), Math.max(...raw)];
  let [yLo, yHi] = [Math.min(...ys), Math.max(...ys)];
  const pad = 0.05 * (yHi - yLo || Math.abs(yHi) || 1);
  yLo -= pad;
  yHi += pad;

  const sx = linearScale(xLo, xHi, MARGIN.left, WIDTH - MARGIN.right);
  const sy = linearScale(yLo, yHi, HEIGHT - MARGIN.bottom, MARGIN.top);
  const px = (v: number) => sx(opts.logX ? Math.log10(v) : v);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  if (opts.title) {
    parts.push(`<text x="${WIDTH / 2}" y="20" text-anchor="middle" font-size="14">${opts.title}</text>`);
  }

  // axes
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  parts.push(`<g class="axes" stroke="black" fill="none">`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}"/>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}"/>`);
  parts.push(`</g>`);

  parts.push(`<g class="ticks" fill="black">`);
  const xTicks = opts.logX ? logTicks(xLo, xHi) : ticks(xLo, xHi);
  for (const v of xTicks) {
    const x = sx(v);
    const label = opts.logX ? `1e${v}` : fmt(v);
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}" stroke="black"/>`);
    parts.push(`<text x="${x}" y="${y0 + 18}" text-anchor="middle">${label}</text>`);
  }
  for (const v of ticks(yLo, yHi)) {
    const y = sy(v);
    parts.push(`<line x1="${x0 - 5}" y1="${y}" x2="${x0}" y2="${y}" stroke="black"/>`);
    parts.push(`<text x="${x0 - 8}" y="${y + 4}" text-anchor="end">${fmt(v)}</text>`);
  }
  parts.push(`</g>`);
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 10}" text-anchor="middle">${opts.xLabel}</text>`
  );
  parts.push(
    `<text x="16" y="${(y0 + y1) / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${(y0 + y1) / 2})">${opts.yLabel}</text>`
  );

  for (const value of opts.asymptotes ?? []) {
    const y = sy(value);
    parts.push(
      `<line class="asymptote" data-value="${value}" x1="${x0}" y1="${y}" x2="${x1}" y2="${y}" ` +
        `stroke="black" stroke-dasharray="6 4"/>`
    );
  }

  curves.forEach((curve, i) => {
    const color = curve.color ?? PALETTE[i % PALETTE.length];
    const pts = curve.x.map((v, j) => `${px(v).toFixed(2)},${sy(curve.y[j]).toFixed(2)}`);
    parts.push(
      `<polyline class="curve" data-label="${curve.label}" fill="none" stroke="${color}" ` +
        `stroke-width="1.5" points="${pts.join(" ")}"/>`
    );
    parts.push(
      `<text class="legend" x="${x1 - 8}" y="${y1 + 14 + 16 * i}" text-anchor="end" ` +
        `fill="${color}">${curve.label}</text>`
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
