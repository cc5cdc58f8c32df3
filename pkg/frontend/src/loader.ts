/** Client-side problem ingestion: pasted/loaded JSON documents, exported
 * snapshots, or CSV.
 *
 * CSV dialect: first row is the header (criterion names after the label
 * cell); optional metadata rows labelled "direction" (max/min) and "weight"
 * (numbers) follow anywhere; every other row is an alternative. Without
 * metadata rows, directions default to max and weights to equal. The UI
 * only parses shape -- all validation happens server-side on rank.
 */

import type { DirectionId, ProblemDocument } from "./types.js";
import { DEFAULT_PARAMS } from "./types.js";

export class LoadError extends Error {}

export function parseDocumentText(text: string): ProblemDocument {
  const trimmed = text.trim();
  if (trimmed.length === 0) throw new LoadError("empty document");
  if (trimmed.startsWith("{")) return parseJsonDocument(trimmed);
  return parseCsvDocument(trimmed);
}

function parseJsonDocument(text: string): ProblemDocument {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new LoadError(`invalid JSON: ${(err as Error).message}`);
  }
  if (typeof data !== "object" || data === null) {
    throw new LoadError("expected a JSON object");
  }
  let doc = data as Record<string, unknown>;
  if (!("alternatives" in doc) && typeof doc.request === "object" && doc.request !== null) {
    doc = doc.request as Record<string, unknown>; // exported snapshot
  }
  if (!Array.isArray(doc.alternatives) || !Array.isArray(doc.criteria)
      || !Array.isArray(doc.values)) {
    throw new LoadError("document needs alternatives, criteria, and values");
  }
  return {
    alternatives: doc.alternatives as string[],
    criteria: (doc.criteria as ProblemDocument["criteria"]).map((c) => ({ ...c })),
    values: (doc.values as number[][]).map((row) => [...row]),
    methods: (doc.methods as ProblemDocument["methods"]) ?? "all",
    params: { ...DEFAULT_PARAMS, ...(doc.params as object | undefined) },
  };
}

function splitCsvLine(line: string): string[] {
  const cells: string[] = [];
  let current = "";
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"' && line[i + 1] === '"') {
        current += '"';
        i++;
      } else if (ch === '"') {
        quoted = false;
      } else {
        current += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      cells.push(current);
      current = "";
    } else {
      current += ch;
    }
  }
  cells.push(current);
  return cells.map((c) => c.trim());
}

function parseCsvDocument(text: string): ProblemDocument {
  const lines = text.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length < 2) throw new LoadError("CSV needs a header row and data rows");
  const header = splitCsvLine(lines[0]);
  const names = header.slice(1);
  if (names.length === 0) throw new LoadError("header row has no criterion columns");

  let directions: DirectionId[] | null = null;
  let weights: number[] | null = null;
  const alternatives: string[] = [];
  const values: number[][] = [];

  for (let r = 1; r < lines.length; r++) {
    const cells = splitCsvLine(lines[r]);
    if (cells.length !== names.length + 1) {
      throw new LoadError(`row ${r + 1}: expected ${names.length + 1} cells, got ${cells.length}`);
    }
    const label = cells[0];
    const kind = label.toLowerCase();
    if (kind === "direction") {
      directions = cells.slice(1).map((c, j) => {
        const d = c.toLowerCase();
        if (d !== "max" && d !== "min") {
          throw new LoadError(`row ${r + 1}, column ${j + 2}: direction must be max or min`);
        }
        return d;
      });
      continue;
    }
    if (kind === "weight") {
      weights = cells.slice(1).map((c, j) => parseCell(c, r + 1, j + 2));
      continue;
    }
    alternatives.push(label);
    values.push(cells.slice(1).map((c, j) => parseCell(c, r + 1, j + 2)));
  }
  if (alternatives.length < 2) throw new LoadError("at least 2 alternatives required");

  const n = names.length;
  return {
    alternatives,
    criteria: names.map((name, j) => ({
      name,
      direction: directions ? directions[j] : "max",
      weight: weights ? weights[j] : 1 / n,
    })),
    values,
    methods: "all",
    params: { ...DEFAULT_PARAMS },
  };
}

function parseCell(cell: string, row: number, col: number): number {
  if (!/^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$/.test(cell)) {
    throw new LoadError(`row ${row}, column ${col}: ${JSON.stringify(cell)} is not a number`);
  }
  return Number(cell);
}
