/** Thin fetch client for the ranking service. */

import type { ApiIssue, MethodInfo, ProblemDocument, RankResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly issues: ApiIssue[],
  ) {
    super(issues.map((i) => `[${i.code}] ${i.message}`).join("; ") || `HTTP ${status}`);
  }
}

async function post<T>(url: string, body: unknown): Promise<T> {
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    let issues: ApiIssue[] = [];
    try {
      const data = (await resp.json()) as { errors?: ApiIssue[]; detail?: unknown };
      if (Array.isArray(data.errors)) {
        issues = data.errors;
      } else if (data.detail) {
        issues = [{ code: "SchemaViolation", message: JSON.stringify(data.detail), location: {} }];
      }
    } catch {
      // non-JSON error body; fall through with the bare status
    }
    throw new ApiError(resp.status, issues);
  }
  return (await resp.json()) as T;
}

export function postRank(doc: ProblemDocument, base = ""): Promise<RankResponse> {
  return post<RankResponse>(`${base}/api/v1/rank`, doc);
}

export async function getMethods(base = ""): Promise<MethodInfo[]> {
  const resp = await fetch(`${base}/api/v1/methods`);
  if (!resp.ok) throw new ApiError(resp.status, []);
  const body = (await resp.json()) as { methods: MethodInfo[] };
  return body.methods;
}
