import type { GameView, GraphDoc } from "../src/types.js";

export const BOWTIE: GraphDoc = {
  n: 5,
  edges: [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [2, 4]],
};

export function makeView(overrides: Partial<GameView> = {}): GameView {
  return {
    id: "fixture",
    phase: "robber-turn",
    cops: [0, 2],
    robber: 4,
    exit: 0,
    round: 1,
    graph: BOWTIE,
    cut_vertices: [2],
    legal_robber_moves: [3, 4],
    annotations: null,
    transcript: [],
    ...overrides,
  };
}
