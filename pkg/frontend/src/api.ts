import type { ApiErrorBody, GameView, GraphDoc } from "./types.js";

/** A non-2xx reply from the session API, carrying its structured body. */
export class ApiRejection extends Error {
  readonly code: string;
  readonly status: number;
  readonly legalMoves?: number[];

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.legalMoves = body.legal_moves;
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async send<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(`${this.base}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await res.json();
    if (!res.ok) {
      throw new ApiRejection(res.status, body as ApiErrorBody);
    }
    return body as T;
  }

  health(): Promise<{ status: string }> {
    return this.send("/health");
  }

  createGame(graph: GraphDoc, exit: number): Promise<GameView> {
    return this.send("/games", {
      method: "POST",
      body: JSON.stringify({ graph, exit }),
    });
  }

  getGame(id: string): Promise<GameView> {
    return this.send(`/games/${id}`);
  }

  placement(id: string, freeCop: number, robber: number): Promise<GameView> {
    return this.send(`/games/${id}/placement`, {
      method: "POST",
      body: JSON.stringify({ free_cop: freeCop, robber }),
    });
  }

  robberMove(id: string, to: number): Promise<GameView> {
    return this.send(`/games/${id}/robber-move`, {
      method: "POST",
      body: JSON.stringify({ to }),
    });
  }

  audit(id: string): Promise<{ consistent: boolean }> {
    return this.send(`/games/${id}/audit`);
  }

  deleteGame(id: string): Promise<{ deleted: string }> {
    return this.send(`/games/${id}`, { method: "DELETE" });
  }
}
