/** Display formatting: scores to 4 decimals, weights to 3. */

export function fmtScore(x: number): string {
  return x.toFixed(4);
}

export function fmtWeight(x: number): string {
  return x.toFixed(3);
}

/** Width of a score bar in percent; scores are scaled within the method's
 * own min/max so the bar is purely comparative. */
export function barWidth(score: number, min: number, max: number): number {
  if (max === min) return 100;
  return Math.max(2, Math.round(((score - min) / (max - min)) * 100));
}
