/**
 * Minimal SVG assembly: attribute-safe element builders plus axis rendering
 * for d3 scales.  Everything returns plain strings so output is trivially
 * deterministic and testable.
 */

import type { ScaleContinuousNumeric } from "d3";

export type Attrs = Record<string, string | number>;

function esc(v: string): string {
  return v
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function el(tag: string, attrs: Attrs, children: string[] | string = []): string {
  const attrText = Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${esc(String(v))}"`)
    .join("");
  const body = Array.isArray(children) ? children.join("") : esc(children);
  return body === "" ? `<${tag}${attrText}/>` : `<${tag}${attrText}>${body}</${tag}>`;
}

export function svgDocument(width: number, height: number, body: string[]): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="11">` +
    body.join("") +
    `</svg>`
  );
}

export function polylinePath(xs: number[], ys: number[]): string {
  return xs
    .map((x, i) => `${i === 0 ? "M" : "L"}${round2(x)},${round2(ys[i])}`)
    .join("");
}

export function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

export interface Frame {
  left: number;
  top: number;
  right: number;
  bottom: number;
}

type Scale = ScaleContinuousNumeric<number, number>;

export function xAxis(scale: Scale, frame: Frame, label: string, fmt: (v: number) => string): string {
  const y = frame.bottom;
  const parts: string[] = [
    el("line", { x1: frame.left, y1: y, x2: frame.right, y2: y, stroke: "black" }),
  ];
  for (const t of scale.ticks(6)) {
    const x = round2(scale(t));
    parts.push(el("line", { x1: x, y1: y, x2: x, y2: y + 4, stroke: "black" }));
    parts.push(el("text", { x, y: y + 16, "text-anchor": "middle" }, fmt(t)));
  }
  parts.push(
    el(
      "text",
      {
        x: (frame.left + frame.right) / 2,
        y: y + 32,
        "text-anchor": "middle",
        class: "axis-label",
      },
      label,
    ),
  );
  return el("g", { class: "x-axis" }, parts);
}

export function yAxis(scale: Scale, frame: Frame, label: string, fmt: (v: number) => string): string {
  const x = frame.left;
  const parts: string[] = [
    el("line", { x1: x, y1: frame.top, x2: x, y2: frame.bottom, stroke: "black" }),
  ];
  for (const t of scale.ticks(6)) {
    const y = round2(scale(t));
    parts.push(el("line", { x1: x - 4, y1: y, x2: x, y2: y, stroke: "black" }));
    parts.push(
      el("text", { x: x - 7, y: y + 3, "text-anchor": "end" }, fmt(t)),
    );
  }
  parts.push(
    el(
      "text",
      {
        x: 14,
        y: (frame.top + frame.bottom) / 2,
        "text-anchor": "middle",
        transform: `rotate(-90 14 ${(frame.top + frame.bottom) / 2})`,
        class: "axis-label",
      },
      label,
    ),
  );
  return el("g", { class: "y-axis" }, parts);
}

export interface LegendEntry {
  label: string;
  color: string;
  marker: "circle" | "line";
}

export function legend(entries: LegendEntry[], x: number, y: number): string {
  const parts = entries.map((entry, i) => {
    const cy = y + i * 16;
    const swatch =
      entry.marker === "circle"
        ? el("circle", { cx: x + 6, cy, r: 3, fill: entry.color })
        : el("line", { x1: x, y1: cy, x2: x + 12, y2: cy, stroke: entry.color, "stroke-width": 1.5 });
    return swatch + el("text", { x: x + 18, y: cy + 3.5 }, entry.label);
  });
  return el("g", { class: "legend" }, parts);
}
