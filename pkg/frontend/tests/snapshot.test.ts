import { describe, expect, it } from "vitest";

import { buildSnapshot, parseSnapshot, serializeSnapshot } from "../src/snapshot.js";
import type { ProblemDocument, RankResponse } from "../src/types.js";

import rankDefault from "./fixtures/rank_default.json";
import rankDropA3 from "./fixtures/rank_drop_a3.json";

const request = rankDefault.request as ProblemDocument;
const response = rankDefault.response as RankResponse;

describe("snapshot export/import", () => {
  it("round-trips the exact request/response pair", () => {
    const snapshot = buildSnapshot(request, response);
    const restored = parseSnapshot(serializeSnapshot(snapshot));
    expect(restored.request).toEqual(request);
    expect(restored.response).toEqual(response);
  });

  it("exports deep copies, not references", () => {
    const snapshot = buildSnapshot(request, response);
    snapshot.request.values[0][0] = 999;
    expect(request.values[0][0]).not.toBe(999);
  });

  it("exports the subproblem when alternatives were excluded", () => {
    const snapshot = buildSnapshot(
      rankDropA3.request as ProblemDocument,
      rankDropA3.response as RankResponse,
    );
    expect(snapshot.request.alternatives).toEqual(["A1", "A2", "A4", "A5"]);
    const restored = parseSnapshot(serializeSnapshot(snapshot));
    expect(restored.request.values).toHaveLength(4);
  });

  it("rejects snapshots missing either half", () => {
    expect(() => parseSnapshot(JSON.stringify({ request }))).toThrow(/response/);
    expect(() => parseSnapshot("{broken")).toThrow(/invalid JSON/);
  });
});
