import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { buildConvergence } from "../src/convergence.js";
import { readExtremal } from "../src/csv.js";
import { logLogSlope } from "../src/fit.js";

const FIXTURES = join(__dirname, "..", "fixtures");
const rows = readExtremal(readFileSync(join(FIXTURES, "extremal_fd.csv"), "utf8"));

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("fitted slopes", () => {
  it("lower gap decays like size^-1.36 within 0.05", () => {
    const slope = logLogSlope(rows.map((r) => r.size), rows.map((r) => r.tau));
    expect(Math.abs(slope - -1.36)).toBeLessThan(0.05);
  });

  it("upper gap decays like size^-0.99 within 0.05", () => {
    const slope = logLogSlope(rows.map((r) => r.size), rows.map((r) => r.tau_hat));
    expect(Math.abs(slope - -0.99)).toBeLessThan(0.05);
  });

  it("matches the fitted exponents the generating tool reported", () => {
    // footers of the fixture table, written by the producing CLI
    const text = readFileSync(join(FIXTURES, "extremal_fd.csv"), "utf8");
    const pMin = Number(/# fitted_p_min = (\S+)/.exec(text)![1]);
    const pMax = Number(/# fitted_p_max = (\S+)/.exec(text)![1]);
    const tauSlope = logLogSlope(rows.map((r) => r.size), rows.map((r) => r.tau));
    const tauHatSlope = logLogSlope(rows.map((r) => r.size), rows.map((r) => r.tau_hat));
    expect(tauSlope).toBeCloseTo(-pMin, 9);
    expect(tauHatSlope).toBeCloseTo(-pMax, 9);
  });
});

describe("buildConvergence", () => {
  const svg = buildConvergence(rows);

  it("renders two gap series with one marker per table row", () => {
    expect(count(svg, 'class="series-tau"')).toBe(1);
    expect(count(svg, 'class="series-tauhat"')).toBe(1);
    for (const name of ["series-tau", "series-tauhat"]) {
      const group = svg.split(`class="${name}"`)[1].split("</g>")[0];
      expect(count(group, "<circle")).toBe(rows.length);
    }
  });

  it("annotates both fitted slopes with values in the expected bands", () => {
    const tau = /class="slope-tau"[^>]*>[^<]*slope = (-\d+\.\d+)/.exec(svg);
    const tauhat = /class="slope-tauhat"[^>]*>[^<]*slope = (-\d+\.\d+)/.exec(svg);
    expect(tau).not.toBeNull();
    expect(tauhat).not.toBeNull();
    expect(Math.abs(Number(tau![1]) - -1.36)).toBeLessThan(0.05);
    expect(Math.abs(Number(tauhat![1]) - -0.99)).toBeLessThan(0.05);
  });

  it("draws the dashed fit lines", () => {
    expect(count(svg, 'class="fit-tau"')).toBe(1);
    expect(count(svg, 'class="fit-tauhat"')).toBe(1);
    expect(count(svg, "stroke-dasharray")).toBe(2);
  });

  it("works on the second parameter set too", () => {
    const alt = readExtremal(
      readFileSync(join(FIXTURES, "extremal_fd_b05.csv"), "utf8"),
    );
    const svg2 = buildConvergence(alt);
    expect(svg2).toContain('class="slope-tau"');
    // slopes differ from the first parameter set: fitted on pinned coarse
    // bounds, the lower-gap rate is near -1.05
    const m = /class="slope-tau"[^>]*>[^<]*slope = (-\d+\.\d+)/.exec(svg2);
    expect(Number(m![1])).toBeLessThan(-0.8);
  });

  it("refuses single-row tables", () => {
    expect(() => buildConvergence(rows.slice(0, 1))).toThrowError(
      /need >= 2 sizes/,
    );
  });

  it("refuses non-positive gaps", () => {
    const broken = rows.map((r, i) => (i === 0 ? { ...r, tau: 0 } : r));
    expect(() => buildConvergence(broken)).toThrowError(/strictly positive/);
  });
});
