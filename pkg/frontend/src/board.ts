import type { GameView } from "./types.js";
import { layoutGraph, type Point } from "./layout.js";

const SIZE = 640;

export interface BoardState {
  phase: string;
  cops: number[];
  robber: number | null;
  exit: number;
  legal: number[];
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/"/g, "&quot;");
}

/**
 * Moves the human robber is allowed to pick right now, derived only from the
 * server view: during placement every vertex is a candidate, on the robber's
 * turn it is the server's legal-move list, otherwise nothing is clickable.
 */
export function clickableVertices(view: GameView): number[] {
  if (view.phase === "placing-free-cops" || view.phase === "placing-robber") {
    return Array.from({ length: view.graph.n }, (_, i) => i);
  }
  if (view.phase === "robber-turn") {
    return [...view.legal_robber_moves];
  }
  return [];
}

/**
 * Renders a game view to an SVG string. Every piece of game state that the
 * board displays is also encoded in data-* attributes so tests can read it
 * back with extractBoardState and compare against the raw API view.
 */
export function renderBoard(view: GameView, seed = 1): string {
  const pos: Point[] = layoutGraph(view.graph, seed);
  const px = (p: Point) => ({ x: 40 + p.x * (SIZE - 80), y: 40 + p.y * (SIZE - 80) });
  const clickable = new Set(clickableVertices(view));
  const cutSet = new Set(view.cut_vertices);
  const copCount = new Map<number, number>();
  for (const c of view.cops) {
    if (c >= 0) copCount.set(c, (copCount.get(c) ?? 0) + 1);
  }

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${SIZE} ${SIZE}" ` +
      `class="board" data-phase="${esc(view.phase)}" data-exit="${view.exit}" ` +
      `data-round="${view.round}">`,
  );

  for (const [a, b] of view.graph.edges) {
    const pa = px(pos[a]);
    const pb = px(pos[b]);
    parts.push(
      `<line class="edge" x1="${pa.x.toFixed(1)}" y1="${pa.y.toFixed(1)}" ` +
        `x2="${pb.x.toFixed(1)}" y2="${pb.y.toFixed(1)}" stroke="#888" stroke-width="2"/>`,
    );
  }

  for (let v = 0; v < view.graph.n; v++) {
    const p = px(pos[v]);
    const roles: string[] = [];
    if (v === view.exit) roles.push("exit");
    if (copCount.has(v)) roles.push("cop");
    if (view.robber === v) roles.push("robber");
    if (cutSet.has(v)) roles.push("cut");
    const fill =
      view.robber === v ? "#d33" : copCount.has(v) ? "#36c" : v === view.exit ? "#2a2" : "#eee";
    parts.push(
      `<g class="vertex" data-vertex="${v}" data-roles="${roles.join(" ")}" ` +
        `data-cops="${copCount.get(v) ?? 0}" data-clickable="${clickable.has(v)}">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${v === view.exit ? 20 : 16}" ` +
        `fill="${fill}" stroke="${clickable.has(v) ? "#f90" : "#333"}" ` +
        `stroke-width="${clickable.has(v) ? 4 : 1.5}"/>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y + 5).toFixed(1)}" text-anchor="middle" ` +
        `font-size="14">${v}</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Parses the game state back out of a rendered board's data attributes. */
export function extractBoardState(svg: string): BoardState {
  const phase = /data-phase="([^"]*)"/.exec(svg)?.[1];
  const exit = /data-exit="(-?\d+)"/.exec(svg)?.[1];
  if (phase === undefined || exit === undefined) {
    throw new Error("not a rendered board");
  }
  const cops: number[] = [];
  let robber: number | null = null;
  const legal: number[] = [];
  const re =
    /data-vertex="(\d+)" data-roles="([^"]*)" data-cops="(\d+)" data-clickable="(true|false)"/g;
  let m: RegExpExecArray | null;
  while ((m = re.exec(svg)) !== null) {
    const v = Number(m[1]);
    const roles = m[2].split(" ");
    for (let i = 0; i < Number(m[3]); i++) cops.push(v);
    if (roles.includes("robber")) robber = v;
    if (phase === "robber-turn" && m[4] === "true") legal.push(v);
  }
  cops.sort((a, b) => a - b);
  legal.sort((a, b) => a - b);
  return { phase, cops, robber, exit: Number(exit), legal };
}
