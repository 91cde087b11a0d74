/**
 * Overlay chart: sorted eigenvalues plotted at ranks i/(n+1) as point
 * markers, with the rearranged-symbol quantile curve drawn through them as a
 * line.  Visual agreement of the two series is the headline claim the chart
 * exists to show.
 */

import { scaleLinear } from "d3";

import type { PsiRow, SpectrumRow } from "./csv.js";
import { el, legend, polylinePath, round2, svgDocument, xAxis, yAxis } from "./svg.js";

export interface OverlayOptions {
  width?: number;
  height?: number;
  title?: string;
}

const SPECTRUM_COLOR = "#1f6fb2";
const PSI_COLOR = "#c23b22";

export function buildOverlay(
  spectrum: SpectrumRow[],
  psi: PsiRow[],
  opts: OverlayOptions = {},
): string {
  if (spectrum.length === 0) {
    throw new Error("empty spectrum: nothing to plot");
  }
  if (psi.length < 2) {
    throw new Error("need >= 2 rearrangement points to draw a curve");
  }
  const width = opts.width ?? 640;
  const height = opts.height ?? 420;
  const frame = { left: 56, top: 28, right: width - 16, bottom: height - 48 };

  const n = spectrum.length;
  const values = spectrum.map((r) => r.eigenvalue);
  const ranks = spectrum.map((r) => r.index / (n + 1));
  const yMin = Math.min(...values, ...psi.map((r) => r.psi));
  const yMax = Math.max(...values, ...psi.map((r) => r.psi));
  const pad = 0.05 * (yMax - yMin || 1);

  const x = scaleLinear().domain([0, 1]).range([frame.left, frame.right]);
  const y = scaleLinear()
    .domain([yMin - pad, yMax + pad])
    .range([frame.bottom, frame.top]);

  const markers = spectrum.map((row, i) =>
    el("circle", {
      class: "pt",
      cx: round2(x(ranks[i])),
      cy: round2(y(row.eigenvalue)),
      r: 2.2,
      fill: SPECTRUM_COLOR,
      "fill-opacity": 0.75,
    }),
  );
  const curve = el("path", {
    d: polylinePath(
      psi.map((r) => x(r.t)),
      psi.map((r) => y(r.psi)),
    ),
    fill: "none",
    stroke: PSI_COLOR,
    "stroke-width": 1.6,
  });

  const body = [
    el(
      "text",
      { x: width / 2, y: 16, "text-anchor": "middle", class: "title" },
      opts.title ?? `eigenvalues (n = ${n}) vs rearranged symbol`,
    ),
    xAxis(x, frame, "rank t = i/(n+1)", (v) => v.toFixed(1)),
    yAxis(y, frame, "value", (v) => v.toFixed(1)),
    el("g", { class: "series-spectrum" }, markers),
    el("g", { class: "series-psi" }, [curve]),
    legend(
      [
        { label: `eigenvalues (n = ${n})`, color: SPECTRUM_COLOR, marker: "circle" },
        { label: "rearranged symbol", color: PSI_COLOR, marker: "line" },
      ],
      frame.left + 10,
      frame.top + 10,
    ),
  ];
  return svgDocument(width, height, body);
}
