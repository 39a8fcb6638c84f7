// Canvas rendering of a ViewState. Pure drawing: reads the view, never
// mutates it.

import { boundPanel, edgeKey, ViewState, Viewport } from "./state.js";

const VERTEX_RADIUS = 7;

export interface Theme {
  background: string;
  edge: string;
  crossingEdge: string;
  vertex: string;
  vertexSelected: string;
  ghost: string;
  hud: string;
  banner: string;
}

export const DEFAULT_THEME: Theme = {
  background: "#10141c",
  edge: "#7187a8",
  crossingEdge: "#e4574f",
  vertex: "#e8ecf4",
  vertexSelected: "#ffd166",
  ghost: "#4fd1a1",
  hud: "#c8d2e0",
  banner: "#4fd1a1",
};

function vertexPosition(view: ViewState, id: number): { x: number; y: number } {
  if (view.selected === id && view.dragPos) {
    return view.dragPos;
  }
  const v = view.vertices[id];
  return { x: v.x, y: v.y };
}

export function render(
  ctx: CanvasRenderingContext2D,
  view: ViewState,
  viewport: Viewport,
  theme: Theme = DEFAULT_THEME
): void {
  const { width, height } = ctx.canvas;
  ctx.fillStyle = theme.background;
  ctx.fillRect(0, 0, width, height);

  // edges
  for (const [u, v] of view.edges) {
    const a = viewport.worldToScreen(vertexPosition(view, u).x, vertexPosition(view, u).y);
    const b = viewport.worldToScreen(vertexPosition(view, v).x, vertexPosition(view, v).y);
    const crossing = view.crossingEdgeKeys.has(edgeKey(u, v));
    ctx.strokeStyle = crossing ? theme.crossingEdge : theme.edge;
    ctx.lineWidth = crossing ? 2.5 : 1.5;
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }

  // ghost move suggestion
  if (view.ghost) {
    const from = vertexPosition(view, view.ghost.v);
    const a = viewport.worldToScreen(from.x, from.y);
    const b = viewport.worldToScreen(view.ghost.x, view.ghost.y);
    ctx.strokeStyle = theme.ghost;
    ctx.setLineDash([6, 6]);
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
    ctx.beginPath();
    ctx.arc(b.x, b.y, VERTEX_RADIUS, 0, 2 * Math.PI);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  // vertices
  for (const v of view.vertices) {
    const pos = vertexPosition(view, v.id);
    const p = viewport.worldToScreen(pos.x, pos.y);
    ctx.fillStyle = v.id === view.selected ? theme.vertexSelected : theme.vertex;
    ctx.beginPath();
    ctx.arc(p.x, p.y, v.id === view.selected ? VERTEX_RADIUS + 2 : VERTEX_RADIUS, 0, 2 * Math.PI);
    ctx.fill();
  }

  // HUD
  ctx.fillStyle = theme.hud;
  ctx.font = "14px system-ui, sans-serif";
  const lines = hudLines(view);
  lines.forEach((line, i) => ctx.fillText(line, 12, 22 + 18 * i));

  if (view.status === "solved") {
    ctx.fillStyle = theme.banner;
    ctx.font = "bold 28px system-ui, sans-serif";
    ctx.fillText("crossing-free — solved!", width / 2 - 150, 42);
  }

  if (view.toast) {
    ctx.fillStyle = theme.crossingEdge;
    ctx.font = "bold 14px system-ui, sans-serif";
    ctx.fillText(view.toast, 12, height - 16);
  }
}

export function hudLines(view: ViewState): string[] {
  const lines = [
    `crossings: ${view.crossings}`,
    `moves: ${view.movesUsed}`,
    `fixed vs start: ${view.fixedCount}`,
  ];
  const panel = boundPanel(view);
  if (panel) {
    lines.push(panel.headline);
  }
  if (view.ghost) {
    lines.push(`hint: move vertex ${view.ghost.v} (${view.ghost.remaining} to go)`);
  }
  return lines;
}
