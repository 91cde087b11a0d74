#!/usr/bin/env node
/**
 * Command-line entry: render the cwglt CSV outputs to SVG files.
 *
 *   cwglt-plots overlay --spectrum spec.csv --psi psi.csv -o overlay.svg
 *   cwglt-plots convergence --table extremal.csv -o convergence.svg
 *
 * Exit codes: 0 success, 1 bad input (parse/validation), with the message on
 * stderr.  No output file is written on failure.
 */

import { readFileSync, writeFileSync } from "fs";
import { pathToFileURL } from "url";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { buildConvergence } from "./convergence.js";
import { readExtremal, readPsi, readSpectrum } from "./csv.js";
import { buildOverlay } from "./overlay.js";

function readText(path: string): string {
  return readFileSync(path, "utf8");
}

export async function main(argv: string[]): Promise<number> {
  let failure: string | null = null;

  const parser = yargs(argv)
    .scriptName("cwglt-plots")
    .strict()
    .exitProcess(false)
    .fail((msg, err) => {
      failure = err?.message ?? msg ?? "unknown error";
    })
    .command(
      "overlay",
      "spectrum markers overlaid on the rearranged-symbol curve",
      (y) =>
        y
          .option("spectrum", { type: "string", demandOption: true, describe: "spectrum CSV (index,eigenvalue,weight)" })
          .option("psi", { type: "string", demandOption: true, describe: "rearrangement CSV (t,psi)" })
          .option("output", { alias: "o", type: "string", demandOption: true, describe: "output SVG path" })
          .option("title", { type: "string" }),
      (args) => {
        const svg = buildOverlay(
          readSpectrum(readText(args.spectrum)),
          readPsi(readText(args.psi)),
          { title: args.title },
        );
        writeFileSync(args.output, svg);
        console.log(`wrote ${args.output}`);
      },
    )
    .command(
      "convergence",
      "log-log extremal-gap chart with fitted slopes",
      (y) =>
        y
          .option("table", { type: "string", demandOption: true, describe: "extremal CSV (size,...,tau,...,tau_hat,...)" })
          .option("output", { alias: "o", type: "string", demandOption: true, describe: "output SVG path" })
          .option("title", { type: "string" }),
      (args) => {
        const svg = buildConvergence(readExtremal(readText(args.table)), {
          title: args.title,
        });
        writeFileSync(args.output, svg);
        console.log(`wrote ${args.output}`);
      },
    )
    .demandCommand(1, "specify a command: overlay or convergence");

  try {
    await parser.parse();
  } catch (err) {
    failure = err instanceof Error ? err.message : String(err);
  }
  if (failure !== null) {
    console.error(`error: ${failure}`);
    return 1;
  }
  return 0;
}

const isDirectRun =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (isDirectRun) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
