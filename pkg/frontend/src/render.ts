// HTML fragment builders. Pure string -> string so tests can assert on
// output without a DOM. Server-provided values ("p/q" strings, rendered
// sentences) pass through verbatim, escaped but never recomputed.

import type { ConjecturePayload, EqualityPayload, KnownTheorem, RunPayload } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatRhs(rhs: { terms: [string, string][]; intercept: string }): string {
  const parts = rhs.terms.map(([name, slope]) =>
    slope === "1" ? name : `${slope} ${name}`,
  );
  if (rhs.intercept !== "0") {
    parts.push(rhs.intercept);
  }
  return parts.join(" + ");
}

export function conjectureRow(c: ConjecturePayload, index: number, selected: boolean): string {
  const sharp = c.sharp_set.map(escapeHtml).join(", ") || "(none)";
  return (
    `<li class="conjecture${selected ? " selected" : ""}" data-index="${index}">` +
    `<span class="touch-badge" title="equality on ${c.touch} objects">${c.touch}</span>` +
    `<span class="statement">${escapeHtml(c.rendered)}</span>` +
    `<details><summary>sharp set</summary><span class="sharp-set">${sharp}</span></details>` +
    `</li>`
  );
}

export function conjectureList(run: RunPayload, selected: number | null): string {
  // Order is the server's; nothing here re-sorts.
  const items = run.conjectures.map((c, i) => conjectureRow(c, i, i === selected));
  return items.join("\n");
}

export function equalityList(equalities: EqualityPayload[]): string {
  if (equalities.length === 0) {
    return "<li class=\"empty\">none detected</li>";
  }
  return equalities
    .map(
      (e) =>
        `<li class="equality">If ${escapeHtml(e.hypothesis.join(" and "))}, then ` +
        `${escapeHtml(e.target)} = ${escapeHtml(formatRhs(e.rhs))}</li>`,
    )
    .join("\n");
}

export function knownTheoremRow(pattern: KnownTheorem, index: number): string {
  const symbol = pattern.direction === "upper" ? "&lt;=" : "&gt;=";
  return (
    `<li class="known" data-index="${index}">` +
    `<span>${escapeHtml(pattern.hypothesis.join(" and "))}: ` +
    `${escapeHtml(pattern.target)} ${symbol} ${escapeHtml(formatRhs(pattern.rhs))}</span>` +
    `<button data-remove="${index}">remove</button></li>`
  );
}

export function verdictMessage(v: {
  kind: "appended" | "rejected";
  lhs?: string;
  rhs?: string;
  message?: string;
}): string {
  if (v.kind === "appended") {
    const sides = v.lhs && v.rhs ? ` (target = ${v.lhs}, bound = ${v.rhs})` : "";
    return `Counterexample accepted${escapeHtml(sides)}; table version advanced. Rerun to refresh the list.`;
  }
  const sides = v.lhs && v.rhs ? `: target = ${v.lhs}, bound = ${v.rhs}` : "";
  return `Not a counterexample${escapeHtml(sides)}. ${escapeHtml(v.message ?? "")}`.trim();
}

export function staleBanner(datasetVersion: number, runVersion: number): string {
  return (
    `Showing a run from version ${runVersion}, but the dataset is now at ` +
    `version ${datasetVersion}. Rerun before submitting more counterexamples.`
  );
}
