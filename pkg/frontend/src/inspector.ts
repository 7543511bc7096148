import type { Annotations, GameView } from "./types.js";

/**
 * One human-readable line per strategy fact from the latest cop move.
 * Returns a single "waiting" notice when no cop move has happened yet
 * (placement phases) or the view carries no annotations.
 */
export function inspectorLines(view: GameView): string[] {
  const a: Annotations | null = view.annotations;
  if (a === null || a === undefined) {
    return ["no cop move yet — strategy inspector is idle"];
  }
  const lines: string[] = [];
  lines.push(`mode: ${a.mode}`);
  lines.push(`strategy phase: ${a.phase}`);
  lines.push(`robber avatar: ${a.avatar === null ? "-" : a.avatar}`);
  if (a.level !== undefined) {
    lines.push(`recursion level: ${a.level}`);
  }
  if (a.roles) {
    lines.push(`roles: sentry=cop${a.roles.sentry} patrol=cop${a.roles.patrol}`);
  }
  if (a.exit !== undefined) {
    lines.push(`level exit: ${a.exit}`);
  }
  if (a.block) {
    lines.push(`current block: {${a.block.join(", ")}}`);
  }
  if (a.active_vertices) {
    lines.push(`active region: {${a.active_vertices.join(", ")}}`);
  }
  if (a.ends) {
    lines.push(`chain ends: ${a.ends.join(" / ")}`);
  }
  if (a.cop_of_end) {
    const assignments = Object.entries(a.cop_of_end)
      .map(([end, cop]) => `end ${end} -> cop${cop}`)
      .join(", ");
    lines.push(`end assignment: ${assignments}`);
  }
  if (a.rules) {
    const rules = Object.entries(a.rules)
      .map(([end, rule]) => `end ${end}: rule ${rule}`)
      .join(", ");
    lines.push(`push rules: ${rules}`);
  }
  if (a.phi !== undefined && a.phi !== null) {
    lines.push(`potential: ${a.phi}`);
  }
  return lines;
}

export function statusLine(view: GameView): string {
  switch (view.phase) {
    case "placing-free-cops":
      return "pick a vertex for the free cop, then one for the robber";
    case "placing-robber":
      return "pick the robber's starting vertex";
    case "robber-turn":
      return `round ${view.round}: your move (highlighted vertices)`;
    case "cops-turn":
      return "cops are moving...";
    case "cops-won":
      return "cops won — the robber was caught";
    case "robber-won":
      return "robber won — escaped through the exit";
  }
}
