/** Snapshot export/import: the exact request/response pair of the last
 * completed rank call, re-runnable via the CLI (`rank --input snapshot.json`)
 * and re-importable into the UI.
 */

import type { ProblemDocument, RankResponse } from "./types.js";
import { LoadError, parseDocumentText } from "./loader.js";

export interface Snapshot {
  request: ProblemDocument;
  response: RankResponse;
}

export function buildSnapshot(request: ProblemDocument, response: RankResponse): Snapshot {
  return {
    request: JSON.parse(JSON.stringify(request)) as ProblemDocument,
    response: JSON.parse(JSON.stringify(response)) as RankResponse,
  };
}

export function serializeSnapshot(snapshot: Snapshot): string {
  return JSON.stringify(snapshot, null, 2);
}

export function parseSnapshot(text: string): Snapshot {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new LoadError(`invalid JSON: ${(err as Error).message}`);
  }
  const obj = data as Partial<Snapshot>;
  if (typeof obj !== "object" || obj === null || !obj.request || !obj.response) {
    throw new LoadError("snapshot needs request and response fields");
  }
  // round-trip the request through the document parser for shape checking
  const request = parseDocumentText(JSON.stringify(obj.request));
  return { request, response: obj.response as RankResponse };
}
