/** App wiring: one SessionState, debounced recompute through a single
 * in-flight request gate, rendering from service responses only.
 */

import { postRank } from "./api.js";
import { DEBOUNCE_MS, debounce } from "./debounce.js";
import { allFlips, type Pair } from "./flips.js";
import { LatestWins } from "./inflight.js";
import { LoadError, parseDocumentText } from "./loader.js";
import { buildSnapshot, parseSnapshot, serializeSnapshot } from "./snapshot.js";
import {
  fromDocument,
  setParam,
  setValue,
  setWeight,
  stateKey,
  toggleDirection,
  toggleExclusion,
  toggleMethod,
  toRequest,
  type SessionState,
} from "./state.js";
import { ALL_METHOD_IDS, type ProblemDocument, type RankResponse } from "./types.js";
import {
  renderBanner,
  renderGrid,
  renderMethodToggles,
  renderParams,
  renderResults,
  renderWeights,
} from "./view.js";

const $ = (id: string) => document.getElementById(id) as HTMLElement;

let state: SessionState | null = null;
let lastSentKey = "";
let lastRequest: ProblemDocument | null = null;
let lastResponse: RankResponse | null = null;
let previousResponse: RankResponse | null = null;

const gate = new LatestWins<ProblemDocument, RankResponse>(
  (doc) => postRank(doc),
  (doc, resp) => {
    previousResponse = lastResponse;
    lastRequest = doc;
    lastResponse = resp;
    $("banner").innerHTML = "";
    renderResultsPanel();
  },
  (_doc, err) => {
    const issues = (err as { issues?: [] }).issues ?? [];
    $("banner").innerHTML = renderBanner(String((err as Error).message ?? err), issues);
    // previous results stay visible
  },
);

const scheduleRecompute = debounce(() => {
  if (!state) return;
  const key = stateKey(state);
  if (key === lastSentKey) return; // no-op change: no request
  lastSentKey = key;
  gate.submit(toRequest(state));
}, DEBOUNCE_MS);

function renderControls(): void {
  if (!state) return;
  $("grid").innerHTML = renderGrid(state);
  $("weights").innerHTML = renderWeights(state);
  $("params").innerHTML = renderParams(state);
  $("methods").innerHTML = renderMethodToggles(state, ALL_METHOD_IDS);
}

function renderResultsPanel(): void {
  if (!lastResponse) return;
  const flips: Record<string, Pair[]> =
    previousResponse ? allFlips(previousResponse, lastResponse) : {};
  $("results").innerHTML = renderResults(lastResponse, flips);
}

function update(next: SessionState, rerenderControls = true): void {
  state = next;
  if (rerenderControls) renderControls();
  scheduleRecompute();
}

function loadDocument(doc: ProblemDocument): void {
  state = fromDocument(doc);
  lastSentKey = "";
  previousResponse = null;
  lastResponse = null;
  $("results").innerHTML = "";
  $("banner").innerHTML = "";
  renderControls();
  scheduleRecompute.flush?.();
  scheduleRecompute();
}

function loadText(text: string): void {
  try {
    loadDocument(parseDocumentText(text));
  } catch (err) {
    if (err instanceof LoadError) {
      $("banner").innerHTML = renderBanner(err.message);
    } else {
      throw err;
    }
  }
}

function wireEvents(): void {
  $("grid").addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    if (!state) return;
    const direction = target.dataset.direction;
    if (direction !== undefined) update(toggleDirection(state, Number(direction)));
  });
  $("grid").addEventListener("change", (ev) => {
    const target = ev.target as HTMLInputElement;
    if (!state) return;
    if (target.classList.contains("exclude")) {
      update(toggleExclusion(state, target.dataset.label ?? ""));
    } else if (target.classList.contains("cell")) {
      const value = Number(target.value);
      if (Number.isFinite(value)) {
        update(setValue(state, Number(target.dataset.row), Number(target.dataset.col), value),
               false);
      }
    }
  });
  $("weights").addEventListener("input", (ev) => {
    const target = ev.target as HTMLInputElement;
    if (!state || !target.classList.contains("weight")) return;
    state = setWeight(state, Number(target.dataset.weight), Number(target.value));
    $("weights").innerHTML = renderWeights(state);
    scheduleRecompute();
  });
  $("params").addEventListener("input", (ev) => {
    const target = ev.target as HTMLInputElement | HTMLSelectElement;
    if (!state) return;
    const name = target.dataset.param as "gamma" | "zeta" | "tau" | "gra_variant" | undefined;
    if (!name) return;
    const value = name === "gra_variant" ? target.value : Number(target.value);
    state = setParam(state, name, value);
    $("params").innerHTML = renderParams(state);
    scheduleRecompute();
  });
  $("methods").addEventListener("change", (ev) => {
    const target = ev.target as HTMLInputElement;
    if (!state || !target.classList.contains("method")) return;
    update(toggleMethod(state, target.dataset.method ?? ""));
  });

  ($("file-input") as HTMLInputElement).addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (file) loadText(await file.text());
    input.value = "";
  });
  $("load-paste").addEventListener("click", () => {
    loadText(($("paste-area") as HTMLTextAreaElement).value);
  });
  $("load-sample").addEventListener("click", async () => {
    const resp = await fetch("sample.csv");
    loadText(await resp.text());
  });

  $("export-snapshot").addEventListener("click", () => {
    if (!lastRequest || !lastResponse) return;
    const text = serializeSnapshot(buildSnapshot(lastRequest, lastResponse));
    const blob = new Blob([text], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "snapshot.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });
  ($("import-snapshot") as HTMLInputElement).addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    try {
      const snapshot = parseSnapshot(await file.text());
      loadDocument(snapshot.request);
    } catch (err) {
      $("banner").innerHTML = renderBanner((err as Error).message);
    }
    input.value = "";
  });
}

wireEvents();
void fetch("sample.csv").then(async (resp) => {
  if (resp.ok) loadText(await resp.text());
}).catch(() => {
  // no bundled sample: start empty
});
