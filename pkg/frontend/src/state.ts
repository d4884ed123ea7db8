// Workbench session state and its transitions, kept pure for testing.
//
// The key invariant: the conjecture list on screen always belongs to the
// dataset version on screen. Appending a counterexample bumps the version
// and flags the run as stale, which blocks further submissions until the
// next run completes.

import type { ConjecturePayload, DatasetHandle, RunPayload } from "./api.js";

export type RunParamsState = {
  targets: string;
  useDalmatian: boolean;
  limit: number | null;
};

export type WorkbenchState = {
  dataset: DatasetHandle | null;
  params: RunParamsState;
  run: RunPayload | null;
  selected: number | null; // index into run.conjectures
  draft: string; // counterexample edge-list text being edited
  banner: string | null; // retryable error message, if any
};

export function initialState(): WorkbenchState {
  return {
    dataset: null,
    params: { targets: "independence_number,matching_number", useDalmatian: true, limit: null },
    run: null,
    selected: null,
    draft: "",
    banner: null,
  };
}

export function datasetLoaded(state: WorkbenchState, dataset: DatasetHandle): WorkbenchState {
  return { ...state, dataset, run: null, selected: null, banner: null };
}

export function runCompleted(state: WorkbenchState, run: RunPayload): WorkbenchState {
  if (state.dataset === null || run.dataset_id !== state.dataset.id) {
    return state;
  }
  const dataset = { ...state.dataset, version: Math.max(state.dataset.version, run.dataset_version) };
  return { ...state, dataset, run, selected: null, banner: null };
}

export function appendSucceeded(state: WorkbenchState, version: number, rows: number): WorkbenchState {
  if (state.dataset === null) {
    return state;
  }
  return { ...state, dataset: { ...state.dataset, version, rows }, draft: "" };
}

export function conjectureSelected(state: WorkbenchState, index: number | null): WorkbenchState {
  return { ...state, selected: index };
}

export function draftEdited(state: WorkbenchState, draft: string): WorkbenchState {
  return { ...state, draft };
}

export function requestFailed(state: WorkbenchState, message: string): WorkbenchState {
  return { ...state, banner: message };
}

export function bannerDismissed(state: WorkbenchState): WorkbenchState {
  return { ...state, banner: null };
}

/** The displayed run no longer matches the displayed dataset version. */
export function runIsStale(state: WorkbenchState): boolean {
  return (
    state.run !== null &&
    state.dataset !== null &&
    state.run.dataset_version !== state.dataset.version
  );
}

export function selectedConjecture(state: WorkbenchState): ConjecturePayload | null {
  if (state.run === null || state.selected === null) {
    return null;
  }
  return state.run.conjectures[state.selected] ?? null;
}

/** Submissions are blocked while the conjecture list on screen is stale. */
export function canSubmitCounterexample(state: WorkbenchState, draftValid: boolean): boolean {
  return (
    state.dataset !== null &&
    state.dataset.domain === "graph" &&
    state.run !== null &&
    !runIsStale(state) &&
    draftValid
  );
}
