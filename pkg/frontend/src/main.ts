// Wires the panels to the service: dataset/run controls, the ranked
// conjecture list, the counterexample box, and the known-theorem store.

import {
  addKnownTheorem,
  ApiError,
  createDataset,
  fetchTable,
  listKnownTheorems,
  removeKnownTheorem,
  startRun,
  submitCounterexample,
  type KnownTheorem,
  type RunParams,
} from "./api.js";
import { checkEdgeList } from "./edgeList.js";
import {
  appendSucceeded,
  bannerDismissed,
  canSubmitCounterexample,
  conjectureSelected,
  datasetLoaded,
  draftEdited,
  initialState,
  requestFailed,
  runCompleted,
  runIsStale,
  selectedConjecture,
  type WorkbenchState,
} from "./state.js";
import {
  conjectureList,
  equalityList,
  knownTheoremRow,
  staleBanner,
  verdictMessage,
} from "./render.js";

let state: WorkbenchState = initialState();
let known: KnownTheorem[] = [];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setState(next: WorkbenchState): void {
  state = next;
  redraw();
}

function redraw(): void {
  const banner = el<HTMLDivElement>("banner");
  if (state.banner) {
    banner.textContent = state.banner;
    banner.hidden = false;
  } else if (state.run && state.dataset && runIsStale(state)) {
    banner.textContent = staleBanner(state.dataset.version, state.run.dataset_version);
    banner.hidden = false;
  } else {
    banner.hidden = true;
  }

  const handle = el<HTMLSpanElement>("dataset-handle");
  handle.textContent = state.dataset
    ? `${state.dataset.id} (v${state.dataset.version}, ${state.dataset.rows} rows, ${state.dataset.domain})`
    : "no dataset loaded";

  const list = el<HTMLOListElement>("conjectures");
  list.innerHTML = state.run ? conjectureList(state.run, state.selected) : "";
  el<HTMLUListElement>("equalities").innerHTML = state.run
    ? equalityList(state.run.equalities)
    : "";

  const check = checkEdgeList(state.draft);
  const validation = el<HTMLSpanElement>("draft-validation");
  if (state.draft.trim() === "") {
    validation.textContent = "";
  } else if (check.ok) {
    validation.textContent = `ok: ${check.vertices} vertices, ${check.edges} edges`;
    validation.className = "valid";
  } else {
    validation.textContent = check.error;
    validation.className = "invalid";
  }
  el<HTMLButtonElement>("submit-counterexample").disabled = !canSubmitCounterexample(
    state,
    check.ok,
  );
  el<HTMLSpanElement>("selected-conjecture").textContent =
    selectedConjecture(state)?.rendered ?? "none (submitting without a conjecture reference)";

  const knownList = el<HTMLUListElement>("known-theorems");
  knownList.innerHTML = known.map((p, i) => knownTheoremRow(p, i)).join("\n");
  el<HTMLButtonElement>("add-known").disabled =
    el<HTMLInputElement>("known-target").value.trim() === "" ||
    el<HTMLInputElement>("known-rhs").value.trim() === "";
}

function runParams(): RunParams {
  const targets = state.params.targets
    .split(",")
    .map((t) => t.trim())
    .filter(Boolean);
  return {
    targets,
    use_dalmatian: state.params.useDalmatian,
    limit: state.params.limit,
  };
}

async function guard<T>(work: () => Promise<T>): Promise<T | null> {
  try {
    const result = await work();
    setState(bannerDismissed(state));
    return result;
  } catch (err) {
    if (err instanceof ApiError && err.status === 0) {
      setState(requestFailed(state, "Server unreachable; check the service and retry."));
    } else {
      setState(requestFailed(state, err instanceof Error ? err.message : String(err)));
    }
    return null;
  }
}

async function loadDataset(): Promise<void> {
  const name = el<HTMLSelectElement>("dataset-picker").value;
  const handle = await guard(() => createDataset(name));
  if (handle) {
    setState(datasetLoaded(state, handle));
    await refreshTablePreview();
  }
}

async function refreshTablePreview(): Promise<void> {
  if (!state.dataset) return;
  const table = await guard(() => fetchTable(state.dataset!.id));
  if (!table) return;
  const head = table.numeric_columns.concat(table.boolean_columns);
  const preview = el<HTMLTableElement>("table-preview");
  const header = `<tr><th>name</th>${head.map((c) => `<th>${c}</th>`).join("")}</tr>`;
  const body = table.rows
    .map(
      (r) =>
        `<tr><td>${r.name}</td>${head
          .map((c) => `<td>${String(r.cells[c])}</td>`)
          .join("")}</tr>`,
    )
    .join("");
  preview.innerHTML = header + body;
}

async function runPipeline(): Promise<void> {
  if (!state.dataset) return;
  state.params = {
    targets: el<HTMLInputElement>("targets").value,
    useDalmatian: el<HTMLInputElement>("use-dalmatian").checked,
    limit: el<HTMLInputElement>("limit").value
      ? Number(el<HTMLInputElement>("limit").value)
      : null,
  };
  const run = await guard(() => startRun(state.dataset!.id, runParams()));
  if (run) {
    setState(runCompleted(state, run));
  }
}

async function submitDraft(): Promise<void> {
  if (!state.dataset) return;
  const verdict = await guard(() =>
    submitCounterexample(state.dataset!.id, state.draft, selectedConjecture(state)),
  );
  if (!verdict) return;
  el<HTMLDivElement>("verdict").textContent = verdictMessage(verdict);
  if (verdict.kind === "appended") {
    setState(appendSucceeded(state, verdict.handle.version, verdict.handle.rows));
    await refreshTablePreview();
  }
}

async function refreshKnown(): Promise<void> {
  const patterns = await guard(() => listKnownTheorems());
  if (patterns) {
    known = patterns;
    redraw();
  }
}

function parseKnownForm(): KnownTheorem | null {
  const hypothesis = el<HTMLInputElement>("known-hypothesis")
    .value.split(",")
    .map((s) => s.trim())
    .filter(Boolean);
  const target = el<HTMLInputElement>("known-target").value.trim();
  const direction = el<HTMLSelectElement>("known-direction").value as "upper" | "lower";
  const rhsText = el<HTMLInputElement>("known-rhs").value.trim();
  // rhs grammar: "slope name" terms joined by +, optional trailing rational
  const terms: [string, string][] = [];
  let intercept = "0";
  for (const chunk of rhsText.split("+").map((s) => s.trim())) {
    if (chunk === "") continue;
    const m = chunk.match(/^(-?\d+(?:\/\d+)?\s+)?([A-Za-z_]\w*)$/);
    if (m) {
      terms.push([m[2], (m[1] ?? "1").trim()]);
    } else if (/^-?\d+(?:\/\d+)?$/.test(chunk)) {
      intercept = chunk;
    } else {
      return null;
    }
  }
  if (!hypothesis.length || !target || !terms.length) return null;
  return { hypothesis, target, direction, rhs: { terms, intercept } };
}

async function addKnown(): Promise<void> {
  const pattern = parseKnownForm();
  if (!pattern) {
    setState(requestFailed(state, "known-theorem form is incomplete"));
    return;
  }
  const result = await guard(() => addKnownTheorem(pattern));
  if (result) await refreshKnown();
}

async function removeKnownAt(index: number): Promise<void> {
  const pattern = known[index];
  if (!pattern) return;
  const result = await guard(() => removeKnownTheorem(pattern));
  if (result) await refreshKnown();
}

export function boot(): void {
  el<HTMLButtonElement>("load-dataset").addEventListener("click", () => void loadDataset());
  el<HTMLButtonElement>("run").addEventListener("click", () => void runPipeline());
  el<HTMLButtonElement>("submit-counterexample").addEventListener("click", () =>
    void submitDraft(),
  );
  el<HTMLButtonElement>("add-known").addEventListener("click", () => void addKnown());
  el<HTMLTextAreaElement>("draft").addEventListener("input", (event) => {
    setState(draftEdited(state, (event.target as HTMLTextAreaElement).value));
  });
  el<HTMLOListElement>("conjectures").addEventListener("click", (event) => {
    const item = (event.target as HTMLElement).closest("li.conjecture");
    if (item) {
      const index = Number((item as HTMLElement).dataset.index);
      setState(conjectureSelected(state, state.selected === index ? null : index));
    }
  });
  el<HTMLUListElement>("known-theorems").addEventListener("click", (event) => {
    const button = (event.target as HTMLElement).closest("button[data-remove]");
    if (button) {
      void removeKnownAt(Number((button as HTMLElement).dataset.remove));
    }
  });
  ["known-target", "known-rhs", "known-hypothesis"].forEach((id) =>
    el<HTMLInputElement>(id).addEventListener("input", redraw),
  );
  void refreshKnown();
  redraw();
}

if (typeof document !== "undefined" && document.getElementById("workbench")) {
  boot();
}
