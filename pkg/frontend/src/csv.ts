/**
 * Readers for the three CSV shapes the cwglt CLI emits.  Footer lines
 * starting with "#" are metadata and are skipped.  All parse failures throw
 * CsvError carrying the 1-based line number in the original file.
 */

import Papa from "papaparse";
import { z } from "zod";

export class CsvError extends Error {
  readonly line: number;

  constructor(message: string, line: number) {
    super(`line ${line}: ${message}`);
    this.name = "CsvError";
    this.line = line;
  }
}

export interface SpectrumRow {
  index: number;
  eigenvalue: number;
  weight: number;
}

export interface PsiRow {
  t: number;
  psi: number;
}

export interface ExtremalRow {
  size: number;
  lambda_min: number;
  tau: number;
  alpha: number | null;
  lambda_max: number;
  tau_hat: number;
  beta: number | null;
}

const finite = z
  .string()
  .refine((s) => s.trim() !== "" && Number.isFinite(Number(s)), {
    message: "not a finite number",
  })
  .transform(Number);

const finiteOrBlank = z
  .string()
  .refine((s) => s.trim() === "" || Number.isFinite(Number(s)), {
    message: "not a finite number or blank",
  })
  .transform((s) => (s.trim() === "" ? null : Number(s)));

const spectrumSchema = z.object({
  index: finite.refine(Number.isInteger, { message: "index must be an integer" }),
  eigenvalue: finite,
  weight: finite.refine((w) => w >= 0, { message: "weight must be >= 0" }),
});

const psiSchema = z.object({ t: finite, psi: finite });

const extremalSchema = z.object({
  size: finite.refine((n) => Number.isInteger(n) && n >= 2, {
    message: "size must be an integer >= 2",
  }),
  lambda_min: finite,
  tau: finite,
  alpha: finiteOrBlank,
  lambda_max: finite,
  tau_hat: finite,
  beta: finiteOrBlank,
});

interface RowSchema<T> {
  safeParse(
    data: unknown,
  ): { success: true; data: T } | { success: false; error: z.ZodError };
}

/**
 * Parse CSV text and validate every record against `schema`.  Returns the
 * typed rows; the original line number of each data row is recovered by
 * scanning past comment/blank lines so errors can point at the real file.
 */
function readRows<T>(text: string, schema: RowSchema<T>, expectedColumns: string[]): T[] {
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    comments: "#",
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new CsvError(e.message, (e.row ?? 0) + 2);
  }

  const fields = parsed.meta.fields ?? [];
  const missing = expectedColumns.filter((c) => !fields.includes(c));
  if (missing.length > 0) {
    throw new CsvError(`missing column(s): ${missing.join(", ")}`, 1);
  }

  // map data-row ordinal -> 1-based line number in the original text
  const dataLines: number[] = [];
  let sawHeader = false;
  text.split(/\r\n|\r|\n/).forEach((raw, i) => {
    const lineText = raw.trim();
    if (lineText === "" || lineText.startsWith("#")) return;
    if (!sawHeader) {
      sawHeader = true;
      return;
    }
    dataLines.push(i + 1);
  });

  return parsed.data.map((record, k) => {
    const result = schema.safeParse(record);
    if (!result.success) {
      const issue = result.error.issues[0];
      const field = issue.path.join(".");
      throw new CsvError(
        `column "${field}": ${issue.message}`,
        dataLines[k] ?? k + 2,
      );
    }
    return result.data;
  });
}

export function readSpectrum(text: string): SpectrumRow[] {
  return readRows(text, spectrumSchema, ["index", "eigenvalue", "weight"]);
}

export function readPsi(text: string): PsiRow[] {
  return readRows(text, psiSchema, ["t", "psi"]);
}

export function readExtremal(text: string): ExtremalRow[] {
  return readRows(text, extremalSchema, [
    "size",
    "lambda_min",
    "tau",
    "alpha",
    "lambda_max",
    "tau_hat",
    "beta",
  ]);
}
