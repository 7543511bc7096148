export interface GraphDoc {
  n: number;
  edges: [number, number][];
}

export type Phase =
  | "placing-free-cops"
  | "placing-robber"
  | "cops-turn"
  | "robber-turn"
  | "cops-won"
  | "robber-won";

/** Strategy internals attached to the latest cop move. */
export interface Annotations {
  mode: "theorem1" | "lemma4";
  phase: string;
  avatar: number | null;
  level?: number;
  exit?: number;
  roles?: { sentry: number; patrol: number };
  active_vertices?: number[];
  block?: number[];
  ends?: number[];
  cop_of_end?: Record<string, number>;
  machine_vertices?: number[];
  opposite?: Record<string, number>;
  rules?: Record<string, number>;
  phi?: number | null;
}

export interface TranscriptRecord {
  actor: "cops" | "robber";
  action: { type: string; to?: number | number[]; free_cops?: number[]; robber?: number };
  resulting_phase: Phase;
  annotations?: Annotations;
}

/** The server's state view; the board renders this and nothing else. */
export interface GameView {
  id: string;
  phase: Phase;
  cops: number[];
  robber: number | null;
  exit: number;
  round: number;
  graph: GraphDoc;
  cut_vertices: number[];
  legal_robber_moves: number[];
  annotations: Annotations | null;
  transcript: TranscriptRecord[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  legal_moves?: number[];
}
