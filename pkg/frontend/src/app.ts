import { ApiClient, ApiRejection } from "./api.js";
import { clickableVertices, renderBoard } from "./board.js";
import { inspectorLines, statusLine } from "./inspector.js";
import type { GameView, GraphDoc } from "./types.js";

/** Built-in boards offered in the picker. */
export const PRESETS: Record<string, { graph: GraphDoc; exit: number }> = {
  triangle: { graph: { n: 3, edges: [[0, 1], [1, 2], [0, 2]] }, exit: 0 },
  bowtie: {
    graph: { n: 5, edges: [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [2, 4]] },
    exit: 0,
  },
  "two squares": {
    graph: {
      n: 7,
      edges: [[0, 1], [1, 2], [0, 3], [3, 2], [2, 4], [4, 6], [2, 5], [5, 6]],
    },
    exit: 0,
  },
};

/**
 * Wires the page together. All DOM access lives here; board/inspector are
 * pure view -> string functions so they stay testable without a browser.
 */
export class App {
  private view: GameView | null = null;
  private pendingFreeCop: number | null = null;
  private notice = "";

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  async start(presetName: string): Promise<void> {
    const preset = PRESETS[presetName];
    if (!preset) throw new Error(`unknown preset ${presetName}`);
    this.pendingFreeCop = null;
    this.notice = "";
    this.view = await this.api.createGame(preset.graph, preset.exit);
    this.render();
  }

  private async onVertexClick(v: number): Promise<void> {
    if (!this.view) return;
    try {
      if (this.view.phase === "placing-free-cops") {
        if (this.pendingFreeCop === null) {
          this.pendingFreeCop = v;
          this.notice = `free cop on ${v}; now place the robber`;
        } else {
          this.view = await this.api.placement(this.view.id, this.pendingFreeCop, v);
          this.pendingFreeCop = null;
          this.notice = "";
        }
      } else if (this.view.phase === "robber-turn") {
        this.view = await this.api.robberMove(this.view.id, v);
        this.notice = "";
      }
    } catch (err) {
      if (err instanceof ApiRejection) {
        this.notice =
          err.code === "illegal-move" && err.legalMoves
            ? `${err.message} (legal: ${err.legalMoves.join(", ")})`
            : err.message;
      } else {
        throw err;
      }
    }
    this.render();
  }

  private render(): void {
    if (!this.view) return;
    const board = this.root.querySelector("#board")!;
    board.innerHTML = renderBoard(this.view);
    const status = this.root.querySelector("#status")!;
    status.textContent = this.notice || statusLine(this.view);
    const inspector = this.root.querySelector("#inspector")!;
    inspector.innerHTML = inspectorLines(this.view)
      .map((line) => `<div class="fact">${line}</div>`)
      .join("");
    const clickable = new Set(clickableVertices(this.view));
    if (this.view.phase === "placing-free-cops") {
      // both placement picks use the full vertex set
      for (let i = 0; i < this.view.graph.n; i++) clickable.add(i);
    }
    board.querySelectorAll<SVGGElement>("g.vertex").forEach((g) => {
      const v = Number(g.dataset.vertex);
      if (clickable.has(v)) {
        g.style.cursor = "pointer";
        g.addEventListener("click", () => void this.onVertexClick(v));
      }
    });
  }
}

export function mount(root: HTMLElement, base: string): App {
  const app = new App(new ApiClient(base), root);
  const picker = root.querySelector<HTMLSelectElement>("#preset")!;
  for (const name of Object.keys(PRESETS)) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    picker.appendChild(opt);
  }
  root.querySelector<HTMLButtonElement>("#new-game")!.addEventListener("click", () => {
    void app.start(picker.value);
  });
  return app;
}
