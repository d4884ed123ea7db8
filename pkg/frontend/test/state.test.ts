import { describe, expect, it } from "vitest";

import type { DatasetHandle, RunPayload } from "../src/api.js";
import {
  appendSucceeded,
  canSubmitCounterexample,
  conjectureSelected,
  datasetLoaded,
  initialState,
  runCompleted,
  runIsStale,
  selectedConjecture,
} from "../src/state.js";

const handle: DatasetHandle = { id: "ds-1", domain: "graph", version: 1, rows: 5 };

function runPayload(version: number): RunPayload {
  return {
    run_id: `run-${version}`,
    dataset_id: "ds-1",
    dataset_version: version,
    conjectures: [
      {
        hypothesis: ["connected"],
        target: "independence_number",
        direction: "lower",
        rhs: { terms: [["n_minus_matching_number", "1"]], intercept: "0" },
        touch: 5,
        sharp_set: ["G_1", "G_3"],
        rendered: "Conjecture 1. ...",
      },
    ],
    equalities: [],
  };
}

describe("workbench state", () => {
  it("starts without dataset or run", () => {
    const state = initialState();
    expect(state.dataset).toBeNull();
    expect(canSubmitCounterexample(state, true)).toBe(false);
  });

  it("binds runs to the displayed dataset version", () => {
    let state = datasetLoaded(initialState(), handle);
    state = runCompleted(state, runPayload(1));
    expect(runIsStale(state)).toBe(false);
    expect(canSubmitCounterexample(state, true)).toBe(true);
  });

  it("flags the run stale after an append and blocks submissions", () => {
    let state = datasetLoaded(initialState(), handle);
    state = runCompleted(state, runPayload(1));
    state = appendSucceeded(state, 2, 6);
    expect(state.dataset?.version).toBe(2);
    expect(runIsStale(state)).toBe(true);
    expect(canSubmitCounterexample(state, true)).toBe(false);
  });

  it("a fresh run against the new version clears the stale flag", () => {
    let state = datasetLoaded(initialState(), handle);
    state = runCompleted(state, runPayload(1));
    state = appendSucceeded(state, 2, 6);
    state = runCompleted(state, runPayload(2));
    expect(runIsStale(state)).toBe(false);
    expect(canSubmitCounterexample(state, true)).toBe(true);
  });

  it("ignores runs for a different dataset", () => {
    let state = datasetLoaded(initialState(), handle);
    const foreign = { ...runPayload(1), dataset_id: "ds-9" };
    state = runCompleted(state, foreign);
    expect(state.run).toBeNull();
  });

  it("invalid drafts block submission even when fresh", () => {
    let state = datasetLoaded(initialState(), handle);
    state = runCompleted(state, runPayload(1));
    expect(canSubmitCounterexample(state, false)).toBe(false);
  });

  it("integer datasets never accept graph counterexamples", () => {
    let state = datasetLoaded(initialState(), { ...handle, domain: "integer" });
    state = runCompleted(state, runPayload(1));
    expect(canSubmitCounterexample(state, true)).toBe(false);
  });

  it("selection resolves to the run's conjecture payload", () => {
    let state = datasetLoaded(initialState(), handle);
    state = runCompleted(state, runPayload(1));
    state = conjectureSelected(state, 0);
    expect(selectedConjecture(state)?.touch).toBe(5);
    state = conjectureSelected(state, null);
    expect(selectedConjecture(state)).toBeNull();
  });
});
