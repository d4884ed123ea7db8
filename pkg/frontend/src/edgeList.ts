// Structural validation of the edge-list text format ("n <count>" header,
// then "u v" lines). This is input checking only; all mathematics stays on
// the server.

export type EdgeListCheck =
  | { ok: true; vertices: number; edges: number }
  | { ok: false; error: string };

export function checkEdgeList(text: string): EdgeListCheck {
  let vertices: number | null = null;
  const seen = new Set<string>();
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === "" || line.startsWith("#")) {
      continue;
    }
    const parts = line.split(/\s+/);
    if (vertices === null) {
      if (parts.length !== 2 || parts[0] !== "n" || !/^\d+$/.test(parts[1])) {
        return { ok: false, error: `line ${i + 1}: expected "n <count>"` };
      }
      vertices = Number(parts[1]);
      continue;
    }
    if (parts.length !== 2 || !/^\d+$/.test(parts[0]) || !/^\d+$/.test(parts[1])) {
      return { ok: false, error: `line ${i + 1}: expected "u v"` };
    }
    const u = Number(parts[0]);
    const v = Number(parts[1]);
    if (u === v) {
      return { ok: false, error: `line ${i + 1}: self-loop at ${u}` };
    }
    if (u >= vertices || v >= vertices) {
      return { ok: false, error: `line ${i + 1}: endpoint beyond ${vertices - 1}` };
    }
    seen.add(`${Math.min(u, v)},${Math.max(u, v)}`);
  }
  if (vertices === null) {
    return { ok: false, error: 'missing "n <count>" header' };
  }
  return { ok: true, vertices, edges: seen.size };
}
