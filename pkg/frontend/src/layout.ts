import type { GraphDoc } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

/** Small deterministic PRNG (mulberry32); same seed, same layout. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 300;

/**
 * Seeded force-directed layout: circle start jittered by the PRNG, then a
 * fixed number of spring/repulsion steps. Pure function of (graph, seed);
 * the game engine never sees coordinates.
 */
export function layoutGraph(graph: GraphDoc, seed = 1): Point[] {
  const n = graph.n;
  if (n === 0) return [];
  const rnd = mulberry32(seed);
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    pos.push({
      x: 0.5 + 0.38 * Math.cos(angle) + 0.04 * (rnd() - 0.5),
      y: 0.5 + 0.38 * Math.sin(angle) + 0.04 * (rnd() - 0.5),
    });
  }
  if (n === 1) return [{ x: 0.5, y: 0.5 }];
  const adj: boolean[][] = Array.from({ length: n }, () => new Array(n).fill(false));
  for (const [a, b] of graph.edges) {
    adj[a][b] = adj[b][a] = true;
  }
  const ideal = 0.9 / Math.sqrt(n);
  for (let it = 0; it < ITERATIONS; it++) {
    const step = 0.05 * (1 - it / ITERATIONS);
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-6) {
          dx = rnd() - 0.5;
          dy = rnd() - 0.5;
          d = Math.hypot(dx, dy);
        }
        const repel = (ideal * ideal) / d;
        const attract = adj[i][j] ? (d * d) / ideal : 0;
        const f = (repel - attract) / d;
        force[i].x += f * dx;
        force[i].y += f * dy;
        force[j].x -= f * dx;
        force[j].y -= f * dy;
      }
    }
    for (let i = 0; i < n; i++) {
      const mag = Math.hypot(force[i].x, force[i].y);
      const s = mag > 1e-9 ? Math.min(step, mag) / mag : 0;
      pos[i].x = Math.min(0.95, Math.max(0.05, pos[i].x + s * force[i].x));
      pos[i].y = Math.min(0.95, Math.max(0.05, pos[i].y + s * force[i].y));
    }
  }
  return pos;
}
