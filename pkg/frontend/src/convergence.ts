/**
 * Log-log convergence chart: the lower gap tau = lambda_min - m and upper
 * gap tau_hat = M - lambda_max against matrix size, with dashed
 * least-squares fit lines and their slopes annotated.  Slopes near -p say
 * the extremal eigenvalues approach the symbol range like size^(-p).
 */

import { scaleLog } from "d3";

import type { ExtremalRow } from "./csv.js";
import { logLogSlope } from "./fit.js";
import { el, legend, polylinePath, round2, svgDocument, xAxis, yAxis } from "./svg.js";

export interface ConvergenceOptions {
  width?: number;
  height?: number;
  title?: string;
}

const TAU_COLOR = "#1f6fb2";
const TAUHAT_COLOR = "#2e8540";

interface Series {
  name: "tau" | "tauhat";
  label: string;
  color: string;
  gaps: number[];
  slope: number;
}

export function buildConvergence(rows: ExtremalRow[], opts: ConvergenceOptions = {}): string {
  if (rows.length < 2) {
    throw new Error("need >= 2 sizes for a convergence plot");
  }
  const sizes = rows.map((r) => r.size);
  if (rows.some((r) => r.tau <= 0 || r.tau_hat <= 0)) {
    throw new Error("gap columns must be strictly positive for a log-log plot");
  }

  const series: Series[] = [
    {
      name: "tau",
      label: "lower gap tau",
      color: TAU_COLOR,
      gaps: rows.map((r) => r.tau),
      slope: logLogSlope(sizes, rows.map((r) => r.tau)),
    },
    {
      name: "tauhat",
      label: "upper gap tau_hat",
      color: TAUHAT_COLOR,
      gaps: rows.map((r) => r.tau_hat),
      slope: logLogSlope(sizes, rows.map((r) => r.tau_hat)),
    },
  ];

  const width = opts.width ?? 640;
  const height = opts.height ?? 420;
  const frame = { left: 64, top: 28, right: width - 16, bottom: height - 48 };

  const allGaps = series.flatMap((s) => s.gaps);
  const x = scaleLog()
    .domain([Math.min(...sizes) / 1.15, Math.max(...sizes) * 1.15])
    .range([frame.left, frame.right]);
  const y = scaleLog()
    .domain([Math.min(...allGaps) / 1.5, Math.max(...allGaps) * 1.5])
    .range([frame.bottom, frame.top]);

  const body: string[] = [
    el(
      "text",
      { x: width / 2, y: 16, "text-anchor": "middle", class: "title" },
      opts.title ?? "extremal-gap convergence",
    ),
    xAxis(x, frame, "matrix size", (v) => String(v)),
    yAxis(y, frame, "gap to symbol range", (v) => v.toExponential(0)),
  ];

  for (const s of series) {
    const px = sizes.map((v) => x(v));
    const py = s.gaps.map((v) => y(v));
    const markers = sizes.map((_, i) =>
      el("circle", { class: "pt", cx: round2(px[i]), cy: round2(py[i]), r: 3, fill: s.color }),
    );
    // dashed least-squares line across the plotted size range
    const intercept =
      s.gaps.map(Math.log10).reduce((a, b) => a + b, 0) / sizes.length -
      (s.slope * sizes.map(Math.log10).reduce((a, b) => a + b, 0)) / sizes.length;
    const fitAt = (size: number) => 10 ** (intercept + s.slope * Math.log10(size));
    const ends = [sizes[0], sizes[sizes.length - 1]];
    body.push(
      el("g", { class: `series-${s.name}` }, [
        el("path", {
          d: polylinePath(px, py),
          fill: "none",
          stroke: s.color,
          "stroke-width": 1.2,
        }),
        ...markers,
      ]),
      el("path", {
        class: `fit-${s.name}`,
        d: polylinePath(ends.map((v) => x(v)), ends.map((v) => y(fitAt(v)))),
        fill: "none",
        stroke: s.color,
        "stroke-width": 1,
        "stroke-dasharray": "5 3",
      }),
      el(
        "text",
        {
          class: `slope-${s.name}`,
          x: frame.right - 8,
          y: frame.top + (s.name === "tau" ? 14 : 30),
          "text-anchor": "end",
          fill: s.color,
        },
        `${s.label} slope = ${s.slope.toFixed(3)}`,
      ),
    );
  }

  body.push(
    legend(
      series.map((s) => ({ label: s.label, color: s.color, marker: "circle" as const })),
      frame.left + 10,
      frame.bottom - 30,
    ),
  );
  return svgDocument(width, height, body);
}
