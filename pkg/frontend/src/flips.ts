/** Flip detection between two rank snapshots.
 *
 * A pair of alternatives flips when their strict relative order (by rank)
 * reverses between the previous response and the current one; pairs are
 * compared only among alternatives present in both. Rank equality (ties)
 * turning strict does not count. This mirrors the service's reversal-probe
 * semantics so checkbox exclusions show the same flags the probe reports.
 */

import type { RankResponse } from "./types.js";

export type Pair = [string, string];

function rankMap(resp: RankResponse, methodId: string): Map<string, number> | null {
  const result = resp.results[methodId];
  if (!result) return null;
  const map = new Map<string, number>();
  resp.alternatives.forEach((label, i) => map.set(label, result.ranks[i]));
  return map;
}

export function flippedPairs(
  prev: RankResponse,
  next: RankResponse,
  methodId: string,
): Pair[] {
  const before = rankMap(prev, methodId);
  const after = rankMap(next, methodId);
  if (!before || !after) return [];
  const common = prev.alternatives.filter((a) => after.has(a));
  const pairs: Pair[] = [];
  for (let i = 0; i < common.length; i++) {
    for (let k = i + 1; k < common.length; k++) {
      const a = common[i];
      const b = common[k];
      const d1 = before.get(a)! - before.get(b)!;
      const d2 = after.get(a)! - after.get(b)!;
      if (d1 * d2 < 0) pairs.push([a, b]);
    }
  }
  return pairs;
}

export function allFlips(prev: RankResponse, next: RankResponse): Record<string, Pair[]> {
  const out: Record<string, Pair[]> = {};
  for (const methodId of Object.keys(next.results)) {
    out[methodId] = flippedPairs(prev, next, methodId);
  }
  return out;
}

/** Alternatives involved in at least one flipped pair, per method. */
export function flaggedAlternatives(flips: Record<string, Pair[]>): Record<string, Set<string>> {
  const out: Record<string, Set<string>> = {};
  for (const [methodId, pairs] of Object.entries(flips)) {
    const flagged = new Set<string>();
    for (const [a, b] of pairs) {
      flagged.add(a);
      flagged.add(b);
    }
    out[methodId] = flagged;
  }
  return out;
}
