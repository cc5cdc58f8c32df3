/** Session state: the loaded problem, control positions, and exclusions.
 *
 * All updates are pure (state in, state out); the UI owns a single current
 * state object and re-renders from it. The state never computes scores --
 * every displayed number comes from a service response.
 */

import type { DirectionId, ParamsDoc, ProblemDocument } from "./types.js";
import { DEFAULT_PARAMS, ALL_METHOD_IDS } from "./types.js";

export interface CriterionState {
  name: string;
  direction: DirectionId;
  weight: number;
}

export interface SessionState {
  alternatives: string[];
  criteria: CriterionState[];
  values: number[][];
  excluded: ReadonlySet<string>;
  methods: ReadonlySet<string>;
  params: ParamsDoc;
}

export const MIN_WEIGHT = 0.001;
export const MIN_ACTIVE_ALTERNATIVES = 2;

export function fromDocument(doc: ProblemDocument): SessionState {
  const methods =
    doc.methods === "all" ? [...ALL_METHOD_IDS] : doc.methods;
  return {
    alternatives: [...doc.alternatives],
    criteria: doc.criteria.map((c) => ({ ...c })),
    values: doc.values.map((row) => [...row]),
    excluded: new Set(),
    methods: new Set(methods),
    params: { ...DEFAULT_PARAMS, ...doc.params },
  };
}

/** Move one weight slider; the others rescale proportionally so the sum
 * stays 1. With a single criterion the weight is pinned at 1. */
export function setWeight(state: SessionState, index: number, value: number): SessionState {
  const n = state.criteria.length;
  if (n === 1) {
    return withWeights(state, [1]);
  }
  const next = Math.min(Math.max(value, MIN_WEIGHT), 1 - MIN_WEIGHT * (n - 1));
  const old = state.criteria[index].weight;
  const othersOld = 1 - old;
  const othersNew = 1 - next;
  const weights = state.criteria.map((c, j) => {
    if (j === index) return next;
    if (othersOld <= 0) return othersNew / (n - 1); // others were all ~0
    return c.weight * (othersNew / othersOld);
  });
  return withWeights(state, weights);
}

function withWeights(state: SessionState, weights: number[]): SessionState {
  return {
    ...state,
    criteria: state.criteria.map((c, j) => ({ ...c, weight: weights[j] })),
  };
}

export function toggleDirection(state: SessionState, index: number): SessionState {
  return {
    ...state,
    criteria: state.criteria.map((c, j) =>
      j === index ? { ...c, direction: c.direction === "max" ? "min" : "max" } : c,
    ),
  };
}

export function setValue(
  state: SessionState, row: number, col: number, value: number,
): SessionState {
  const values = state.values.map((r, i) =>
    i === row ? r.map((v, j) => (j === col ? value : v)) : r,
  );
  return { ...state, values };
}

export function setParam(
  state: SessionState, name: keyof ParamsDoc, value: number | string,
): SessionState {
  return { ...state, params: { ...state.params, [name]: value } };
}

export function toggleMethod(state: SessionState, id: string): SessionState {
  const methods = new Set(state.methods);
  if (methods.has(id)) {
    if (methods.size > 1) methods.delete(id); // keep at least one method
  } else {
    methods.add(id);
  }
  return { ...state, methods };
}

export function activeAlternatives(state: SessionState): string[] {
  return state.alternatives.filter((a) => !state.excluded.has(a));
}

/** Toggle an exclusion checkbox; refuses to drop below two active rows. */
export function toggleExclusion(state: SessionState, label: string): SessionState {
  const excluded = new Set(state.excluded);
  if (excluded.has(label)) {
    excluded.delete(label);
  } else {
    if (activeAlternatives(state).length <= MIN_ACTIVE_ALTERNATIVES) return state;
    excluded.add(label);
  }
  return { ...state, excluded };
}

/** The request document for the current state, with exclusions applied. */
export function toRequest(state: SessionState): ProblemDocument {
  const keep = state.alternatives
    .map((a, i) => [a, i] as const)
    .filter(([a]) => !state.excluded.has(a));
  return {
    alternatives: keep.map(([a]) => a),
    criteria: state.criteria.map((c) => ({ ...c })),
    values: keep.map(([, i]) => [...state.values[i]]),
    methods: [...state.methods],
    params: { ...state.params },
  };
}

/** Canonical serialization used to detect no-op control changes. */
export function stateKey(state: SessionState): string {
  return JSON.stringify(toRequest(state));
}

export function displayedWeightSum(state: SessionState): number {
  return state.criteria.reduce((acc, c) => acc + c.weight, 0);
}
