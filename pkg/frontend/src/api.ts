// Typed client for the conjecturing service. Every number that matters is a
// "p/q" string straight from the server; this module never parses them.

let baseUrl = "";

/** Point the client at a service origin (default: same origin). */
export function setBaseUrl(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

export type DatasetHandle = {
  id: string;
  domain: "graph" | "integer";
  version: number;
  rows: number;
};

export type AffinePayload = {
  terms: [string, string][];
  intercept: string;
};

export type ConjecturePayload = {
  hypothesis: string[];
  target: string;
  direction: "upper" | "lower";
  rhs: AffinePayload;
  touch: number;
  sharp_set: string[];
  rendered: string;
};

export type EqualityPayload = {
  hypothesis: string[];
  target: string;
  rhs: AffinePayload;
};

export type RunPayload = {
  run_id: string;
  dataset_id: string;
  dataset_version: number;
  conjectures: ConjecturePayload[];
  equalities: EqualityPayload[];
};

export type RunParams = {
  targets: string[];
  use_dalmatian: boolean;
  limit: number | null;
};

export type KnownTheorem = {
  hypothesis: string[];
  target: string;
  direction: "upper" | "lower";
  rhs: AffinePayload;
};

export type TablePayload = {
  numeric_columns: string[];
  boolean_columns: string[];
  rows: { name: string; cells: Record<string, string | boolean> }[];
};

export type CounterexampleVerdict =
  | { kind: "appended"; handle: DatasetHandle; lhs?: string; rhs?: string }
  | { kind: "rejected"; message: string; lhs?: string; rhs?: string };

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let res: Response;
  try {
    res = await fetch(baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
  } catch (err) {
    throw new ApiError(0, "unreachable", "server unreachable");
  }
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(
      res.status,
      body.code ?? "error",
      body.message ?? res.statusText,
      body,
    );
  }
  return body as T;
}

export function createDataset(builtin: string): Promise<DatasetHandle> {
  return request("/datasets", { method: "POST", body: JSON.stringify({ builtin }) });
}

export function listDatasets(): Promise<DatasetHandle[]> {
  return request("/datasets");
}

export function fetchTable(datasetId: string, version?: number): Promise<TablePayload> {
  const suffix = version ? `?version=${version}` : "";
  return request(`/datasets/${datasetId}/table${suffix}`);
}

export function startRun(datasetId: string, params: RunParams): Promise<RunPayload> {
  return request(`/datasets/${datasetId}/runs`, {
    method: "POST",
    body: JSON.stringify(params),
  });
}

export async function submitCounterexample(
  datasetId: string,
  edgeList: string,
  conjecture: ConjecturePayload | null,
): Promise<CounterexampleVerdict> {
  const body: Record<string, unknown> = { edge_list: edgeList };
  if (conjecture) {
    body.conjecture = {
      hypothesis: conjecture.hypothesis,
      target: conjecture.target,
      direction: conjecture.direction,
      rhs: conjecture.rhs,
    };
  }
  try {
    const handle = await request<DatasetHandle & { recompute?: { lhs?: string; rhs?: string } }>(
      `/datasets/${datasetId}/counterexamples`,
      { method: "POST", body: JSON.stringify(body) },
    );
    return {
      kind: "appended",
      handle,
      lhs: handle.recompute?.lhs,
      rhs: handle.recompute?.rhs,
    };
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      return {
        kind: "rejected",
        message: err.message,
        lhs: err.detail.lhs as string | undefined,
        rhs: err.detail.rhs as string | undefined,
      };
    }
    throw err;
  }
}

export function listKnownTheorems(): Promise<KnownTheorem[]> {
  return request("/known-theorems");
}

export function addKnownTheorem(pattern: KnownTheorem): Promise<{ added: boolean }> {
  return request("/known-theorems", { method: "POST", body: JSON.stringify(pattern) });
}

export function removeKnownTheorem(pattern: KnownTheorem): Promise<{ removed: boolean }> {
  return request("/known-theorems/remove", {
    method: "POST",
    body: JSON.stringify(pattern),
  });
}
