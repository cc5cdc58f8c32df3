/** Wire types mirroring the ranking service's JSON schema. */

export type DirectionId = "max" | "min";
export type GraVariantId = "unweighted" | "weighted";

export interface CriterionDoc {
  name: string;
  direction: DirectionId;
  weight: number;
}

export interface ParamsDoc {
  gamma: number;
  zeta: number;
  tau: number;
  gra_variant: GraVariantId;
}

export interface ProblemDocument {
  alternatives: string[];
  criteria: CriterionDoc[];
  values: number[][];
  methods: string[] | "all";
  params: ParamsDoc;
}

export interface MethodResultDoc {
  method: string;
  orientation: "higher_better" | "lower_better";
  scores: number[];
  ranks: number[];
  diagnostics: Record<string, unknown>;
}

export interface ApiIssue {
  code: string;
  message: string;
  location: Record<string, unknown>;
}

export interface RankResponse {
  alternatives: string[];
  results: Record<string, MethodResultDoc>;
  failures: Record<string, ApiIssue[]>;
}

export interface ErrorResponse {
  errors: ApiIssue[];
}

export interface MethodInfo {
  id: string;
  orientation: "higher_better" | "lower_better";
  params: string[];
}

export const ALL_METHOD_IDS = [
  "topsis", "gra", "vikor", "edas", "mabac", "codas", "piv", "marcos", "probid",
] as const;

export const DEFAULT_PARAMS: ParamsDoc = {
  gamma: 0.5,
  zeta: 0.5,
  tau: 0.02,
  gra_variant: "unweighted",
};
