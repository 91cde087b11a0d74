/** Ordinary least-squares slope of y against x. */
export function leastSquaresSlope(x: number[], y: number[]): number {
  if (x.length !== y.length || x.length < 2) {
    throw new Error("need >= 2 matched points for a slope fit");
  }
  const n = x.length;
  const mx = x.reduce((a, b) => a + b, 0) / n;
  const my = y.reduce((a, b) => a + b, 0) / n;
  let sxy = 0;
  let sxx = 0;
  for (let i = 0; i < n; i++) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx === 0) throw new Error("x values are all identical");
  return sxy / sxx;
}

/** Slope of log10(y) against log10(x); all inputs must be positive. */
export function logLogSlope(x: number[], y: number[]): number {
  if (x.some((v) => v <= 0) || y.some((v) => v <= 0)) {
    throw new Error("log-log fit needs strictly positive values");
  }
  return leastSquaresSlope(x.map(Math.log10), y.map(Math.log10));
}
