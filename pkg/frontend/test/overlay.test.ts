import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { readPsi, readSpectrum } from "../src/csv.js";
import { buildOverlay } from "../src/overlay.js";

const FIXTURES = join(__dirname, "..", "fixtures");
const spectrum = readSpectrum(
  readFileSync(join(FIXTURES, "spectrum_restricted_n320.csv"), "utf8"),
);
const psi = readPsi(readFileSync(join(FIXTURES, "psi_points_321.csv"), "utf8"));

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("buildOverlay", () => {
  const svg = buildOverlay(spectrum, psi);

  it("renders both series exactly once", () => {
    expect(count(svg, 'class="series-spectrum"')).toBe(1);
    expect(count(svg, 'class="series-psi"')).toBe(1);
  });

  it("draws one marker per eigenvalue and one connected quantile curve", () => {
    const spectrumGroup = svg.split('class="series-spectrum"')[1].split("</g>")[0];
    expect(count(spectrumGroup, "<circle")).toBe(321);
    const psiGroup = svg.split('class="series-psi"')[1].split("</g>")[0];
    expect(count(psiGroup, "<path")).toBe(1);
    // polyline visits every quantile point: 1 moveto + 320 linetos
    const d = /d="([^"]+)"/.exec(psiGroup)![1];
    expect(count(d, "L")).toBe(320);
    expect(d.startsWith("M")).toBe(true);
  });

  it("labels both series in the legend and both axes", () => {
    expect(svg).toContain("eigenvalues (n = 321)");
    expect(svg).toContain("rearranged symbol");
    expect(svg).toContain("rank t = i/(n+1)");
    expect(svg).toContain('class="x-axis"');
    expect(svg).toContain('class="y-axis"');
  });

  it("is a self-contained svg document and deterministic", () => {
    expect(svg.startsWith("<svg xmlns=")).toBe(true);
    expect(svg.endsWith("</svg>")).toBe(true);
    expect(buildOverlay(spectrum, psi)).toBe(svg);
  });

  it("keeps the two series visually close: markers sit on the curve", () => {
    // the acceptance story of the chart — for each marker, the curve point
    // at the same rank is nearby (both series share the y-scale, so compare
    // raw values: eigenvalue i vs psi quantile at t = i/(n+1))
    const byT = new Map(psi.map((r) => [r.t.toFixed(12), r.psi]));
    let worst = 0;
    for (const row of spectrum) {
      const t = (row.index / (spectrum.length + 1)).toFixed(12);
      const q = byT.get(t);
      expect(q).toBeDefined();
      worst = Math.max(worst, Math.abs(row.eigenvalue - q!));
    }
    expect(worst).toBeLessThan(0.05);
  });

  it("rejects an empty spectrum without producing output", () => {
    expect(() => buildOverlay([], psi)).toThrowError(/empty spectrum/);
  });

  it("rejects a degenerate quantile curve", () => {
    expect(() => buildOverlay(spectrum, psi.slice(0, 1))).toThrowError(
      />= 2 rearrangement points/,
    );
  });
});
