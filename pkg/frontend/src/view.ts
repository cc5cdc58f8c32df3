/** HTML rendering. Pure string builders; event wiring lives in main.ts.
 * Every number shown here comes from session state or a service response.
 */

import type { Pair } from "./flips.js";
import type { SessionState } from "./state.js";
import { activeAlternatives, displayedWeightSum } from "./state.js";
import { barWidth, fmtScore, fmtWeight } from "./format.js";
import type { ApiIssue, RankResponse } from "./types.js";

function esc(text: string): string {
  return text.replace(/[&<>"']/g, (ch) => ({
    "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;", "'": "&#39;",
  })[ch] as string);
}

export function renderGrid(state: SessionState): string {
  const head = [
    "<tr><th></th><th>alternative</th>",
    ...state.criteria.map((c, j) =>
      `<th><button class="direction ${c.direction}" data-direction="${j}" ` +
      `title="click to flip direction">${esc(c.name)} (${c.direction})</button></th>`),
    "</tr>",
  ].join("");
  const active = activeAlternatives(state).length;
  const rows = state.alternatives.map((label, i) => {
    const excluded = state.excluded.has(label);
    const lock = !excluded && active <= 2 ? "disabled" : "";
    const cells = state.values[i].map((v, j) =>
      `<td><input class="cell" data-row="${i}" data-col="${j}" value="${v}"></td>`,
    ).join("");
    return `<tr class="${excluded ? "excluded" : ""}">` +
      `<td><input type="checkbox" class="exclude" data-label="${esc(label)}" ` +
      `${excluded ? "checked" : ""} ${lock} title="exclude from ranking"></td>` +
      `<td class="label">${esc(label)}</td>${cells}</tr>`;
  }).join("");
  return `<table class="grid">${head}${rows}</table>`;
}

export function renderWeights(state: SessionState): string {
  const sliders = state.criteria.map((c, j) => `
    <div class="weight-row">
      <span class="weight-name">${esc(c.name)}</span>
      <input type="range" class="weight" data-weight="${j}"
             min="0.001" max="0.999" step="0.001" value="${c.weight}">
      <span class="weight-value">${fmtWeight(c.weight)}</span>
    </div>`).join("");
  const sum = displayedWeightSum(state);
  return `${sliders}<div class="weight-sum">sum = ${fmtWeight(sum)}</div>`;
}

export function renderParams(state: SessionState): string {
  const p = state.params;
  return `
    <div class="param-row"><label>gamma (vikor)</label>
      <input type="range" class="param" data-param="gamma" min="0" max="1" step="0.01" value="${p.gamma}">
      <span>${p.gamma.toFixed(2)}</span></div>
    <div class="param-row"><label>zeta (gra)</label>
      <input type="range" class="param" data-param="zeta" min="0.01" max="1" step="0.01" value="${p.zeta}">
      <span>${p.zeta.toFixed(2)}</span></div>
    <div class="param-row"><label>tau (codas)</label>
      <input type="range" class="param" data-param="tau" min="0.01" max="0.05" step="0.001" value="${p.tau}">
      <span>${p.tau.toFixed(3)}</span></div>
    <div class="param-row"><label>gra variant</label>
      <select class="param-select" data-param="gra_variant">
        <option value="unweighted" ${p.gra_variant === "unweighted" ? "selected" : ""}>unweighted</option>
        <option value="weighted" ${p.gra_variant === "weighted" ? "selected" : ""}>weighted</option>
      </select></div>`;
}

export function renderMethodToggles(state: SessionState, allIds: readonly string[]): string {
  return allIds.map((id) => `
    <label class="method-toggle">
      <input type="checkbox" class="method" data-method="${id}"
             ${state.methods.has(id) ? "checked" : ""}> ${id}
    </label>`).join("");
}

export function renderResults(
  response: RankResponse,
  flips: Record<string, Pair[]>,
): string {
  const cards = Object.entries(response.results).map(([methodId, result]) => {
    const flagged = new Set((flips[methodId] ?? []).flatMap((pair) => pair));
    const better = result.orientation === "lower_better" ? "lower is better" : "higher is better";
    const lo = Math.min(...result.scores);
    const hi = Math.max(...result.scores);
    const order = response.alternatives
      .map((label, i) => ({ label, i, rank: result.ranks[i], score: result.scores[i] }))
      .sort((a, b) => a.rank - b.rank || a.i - b.i);
    const rows = order.map(({ label, rank, score }) => {
      const oriented = result.orientation === "lower_better" ? hi - score + lo : score;
      const flag = flagged.has(label)
        ? ` <span class="flip-flag" title="order vs. previous run flipped">flip</span>` : "";
      return `<tr class="${rank === 1 ? "best" : ""}">
        <td class="rank">${rank}</td><td class="label">${esc(label)}${flag}</td>
        <td class="score">${fmtScore(score)}</td>
        <td class="bar-cell"><div class="bar" style="width:${barWidth(oriented, lo, hi)}%"></div></td>
      </tr>`;
    }).join("");
    const compromise = Array.isArray(result.diagnostics["compromise_set"])
      ? `<div class="compromise">compromise set: ` +
        `${(result.diagnostics["compromise_set"] as string[]).map(esc).join(", ")}</div>`
      : "";
    return `<div class="card" data-result="${methodId}">
      <h3>${methodId} <span class="orientation">${better}</span></h3>
      <table class="results">${rows}</table>${compromise}
    </div>`;
  }).join("");

  const failures = Object.entries(response.failures ?? {}).map(([methodId, issues]) =>
    `<div class="card failure"><h3>${methodId}</h3>${renderIssues(issues)}</div>`,
  ).join("");
  return cards + failures;
}

export function renderIssues(issues: ApiIssue[]): string {
  return `<ul class="issues">${issues.map((i) =>
    `<li><code>${esc(i.code)}</code> ${esc(i.message)}</li>`).join("")}</ul>`;
}

export function renderBanner(message: string, issues: ApiIssue[] = []): string {
  if (!message) return "";
  return `<div class="banner">${esc(message)}${issues.length ? renderIssues(issues) : ""}</div>`;
}
