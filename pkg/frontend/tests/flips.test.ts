import { describe, expect, it } from "vitest";

import { allFlips, flippedPairs } from "../src/flips.js";
import type { RankResponse } from "../src/types.js";

import rankDefault from "./fixtures/rank_default.json";
import rankDropA3 from "./fixtures/rank_drop_a3.json";
import probeDropA3 from "./fixtures/probe_drop_a3.json";
import flipCase from "./fixtures/flip_case.json";

type Probe = { flips: Record<string, string[][]> };

function normalize(pairs: string[][]): string[] {
  return pairs.map(([a, b]) => (a < b ? `${a}|${b}` : `${b}|${a}`)).sort();
}

describe("flip flags vs the service's reversal probe", () => {
  it("matches the probe report when A3 is excluded from the sample", () => {
    const prev = rankDefault.response as RankResponse;
    const next = rankDropA3.response as RankResponse;
    const probe = probeDropA3 as Probe;
    const flips = allFlips(prev, next);
    for (const methodId of Object.keys(next.results)) {
      expect(normalize(flips[methodId])).toEqual(
        normalize(probe.flips[methodId] ?? []),
      );
    }
  });

  it("matches the probe on a case with real flips", () => {
    const prev = flipCase.base.response as RankResponse;
    const next = flipCase.reduced.response as RankResponse;
    const probe = flipCase.probe as Probe;
    const flips = allFlips(prev, next);
    let total = 0;
    for (const methodId of Object.keys(next.results)) {
      expect(normalize(flips[methodId])).toEqual(
        normalize(probe.flips[methodId] ?? []),
      );
      total += flips[methodId].length;
    }
    expect(total).toBeGreaterThanOrEqual(2); // the fixture really flips
  });
});

describe("flippedPairs semantics", () => {
  const base: RankResponse = {
    alternatives: ["X", "Y", "Z"],
    results: { topsis: { method: "topsis", orientation: "higher_better",
      scores: [0.9, 0.5, 0.1], ranks: [1, 2, 3], diagnostics: {} } },
    failures: {},
  };

  it("only compares alternatives present in both responses", () => {
    const next: RankResponse = {
      alternatives: ["X", "Z"],
      results: { topsis: { method: "topsis", orientation: "higher_better",
        scores: [0.2, 0.8], ranks: [2, 1], diagnostics: {} } },
      failures: {},
    };
    expect(flippedPairs(base, next, "topsis")).toEqual([["X", "Z"]]);
  });

  it("does not count ties turning strict", () => {
    const tied: RankResponse = {
      ...base,
      results: { topsis: { ...base.results.topsis, ranks: [1, 1, 3] } },
    };
    const strict: RankResponse = {
      ...base,
      results: { topsis: { ...base.results.topsis, ranks: [1, 2, 3] } },
    };
    expect(flippedPairs(tied, strict, "topsis")).toEqual([]);
  });

  it("returns nothing for methods missing from either response", () => {
    expect(flippedPairs(base, base, "vikor")).toEqual([]);
  });
});
