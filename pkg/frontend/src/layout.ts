/** Board geometry: interval lane layout plus a seeded force layout fallback. */

export interface LaneSegment {
  vertex: number;
  lo: number;
  hi: number;
  lane: number;
}

/**
 * Stack intervals into horizontal lanes. The x axis uses the interval
 * endpoints verbatim; a lane is reused only when the previous interval in it
 * ends strictly before the next one starts, since closed intervals that touch
 * at an endpoint intersect.
 */
export function intervalLanes(intervals: readonly [number, number][]): LaneSegment[] {
  const order = intervals
    .map(([lo, hi], vertex) => ({ vertex, lo, hi }))
    .sort((a, b) => a.lo - b.lo || a.hi - b.hi || a.vertex - b.vertex);
  const laneEnds: number[] = [];
  const placed: LaneSegment[] = [];
  for (const item of order) {
    let lane = laneEnds.findIndex((end) => end < item.lo);
    if (lane === -1) {
      lane = laneEnds.length;
      laneEnds.push(item.hi);
    } else {
      laneEnds[lane] = item.hi;
    }
    placed.push({ ...item, lane });
  }
  placed.sort((a, b) => a.vertex - b.vertex);
  return placed;
}

export function laneCount(segments: readonly LaneSegment[]): number {
  return segments.reduce((acc, s) => Math.max(acc, s.lane + 1), 0);
}

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Deterministic force-directed placement for graphs with no interval data.
 * Same n, edges and seed always give the same picture. Output coordinates
 * are normalized to the unit square.
 */
export function forcePositions(
  n: number,
  edges: readonly [number, number][],
  seed = 1,
  iterations = 200,
): Point[] {
  if (n === 0) return [];
  const rand = mulberry32(seed);
  const pos: Point[] = [];
  for (let i = 0; i < n; i += 1) {
    const angle = (2 * Math.PI * i) / n;
    pos.push({
      x: Math.cos(angle) + (rand() - 0.5) * 0.1,
      y: Math.sin(angle) + (rand() - 0.5) * 0.1,
    });
  }
  if (n === 1) return [{ x: 0.5, y: 0.5 }];

  const ideal = 1.6 / Math.sqrt(n);
  for (let step = 0; step < iterations; step += 1) {
    const cool = 1 - step / iterations;
    const disp: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i += 1) {
      for (let j = i + 1; j < n; j += 1) {
        const dx = pos[i]!.x - pos[j]!.x;
        const dy = pos[i]!.y - pos[j]!.y;
        const d2 = dx * dx + dy * dy + 1e-6;
        const push = (ideal * ideal) / d2;
        disp[i]!.x += dx * push;
        disp[i]!.y += dy * push;
        disp[j]!.x -= dx * push;
        disp[j]!.y -= dy * push;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u]!.x - pos[v]!.x;
      const dy = pos[u]!.y - pos[v]!.y;
      const d = Math.sqrt(dx * dx + dy * dy) + 1e-6;
      const pull = (d * d) / ideal / d;
      disp[u]!.x -= dx * pull * 0.5;
      disp[u]!.y -= dy * pull * 0.5;
      disp[v]!.x += dx * pull * 0.5;
      disp[v]!.y += dy * pull * 0.5;
    }
    const limit = 0.12 * cool + 0.01;
    for (let i = 0; i < n; i += 1) {
      const d = Math.sqrt(disp[i]!.x ** 2 + disp[i]!.y ** 2) + 1e-9;
      const scale = Math.min(limit, d) / d;
      pos[i]!.x += disp[i]!.x * scale;
      pos[i]!.y += disp[i]!.y * scale;
    }
  }

  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of pos) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return pos.map((p) => ({
    x: (p.x - minX) / spanX,
    y: (p.y - minY) / spanY,
  }));
}

/** Blob adjacency as index pairs; blob ids are already positional. */
export function blobEdges(
  blobs: readonly { id: number; neighbors: number[] }[],
): [number, number][] {
  const edges: [number, number][] = [];
  for (const blob of blobs) {
    for (const other of blob.neighbors) {
      if (other > blob.id) edges.push([blob.id, other]);
    }
  }
  return edges;
}
