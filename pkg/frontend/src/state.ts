// View state and interaction logic. The view is a pure projection of the
// last server response plus the in-flight drag position; no crossing count
// or legality decision is ever made client-side.

import {
  ApiError,
  BoundPayload,
  Coordinate,
  GameApi,
  GameStatePayload,
  Pair,
  SourceSpec,
} from "./api.js";

export interface VertexView {
  id: number;
  x: number; // world coordinates (server decimal convenience fields)
  y: number;
}

export interface GhostMove {
  v: number;
  x: number;
  y: number;
  exactX: Pair;
  exactY: Pair;
  remaining: number;
}

export interface ViewState {
  sessionId: string | null;
  vertexCount: number;
  vertices: VertexView[];
  edges: Pair[];
  crossingPairKeys: Set<string>;
  crossingEdgeKeys: Set<string>;
  crossings: number;
  movesUsed: number;
  fixedCount: number;
  status: "in_progress" | "solved";
  bound: BoundPayload | null;
  selected: number | null;
  dragPos: { x: number; y: number } | null;
  ghost: GhostMove | null;
  toast: string | null;
  busy: boolean;
}

export function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

export function pairKey(e: Pair, f: Pair): string {
  const a = edgeKey(e[0], e[1]);
  const b = edgeKey(f[0], f[1]);
  return a < b ? `${a}|${b}` : `${b}|${a}`;
}

export function emptyView(): ViewState {
  return {
    sessionId: null,
    vertexCount: 0,
    vertices: [],
    edges: [],
    crossingPairKeys: new Set(),
    crossingEdgeKeys: new Set(),
    crossings: 0,
    movesUsed: 0,
    fixedCount: 0,
    status: "in_progress",
    bound: null,
    selected: null,
    dragPos: null,
    ghost: null,
    toast: null,
    busy: false,
  };
}

// Pure projection from a server payload; keeps only view-local fields.
export function projectServerState(view: ViewState, state: GameStatePayload): ViewState {
  const vertices: VertexView[] = [];
  for (let v = 0; v < state.n; v++) {
    const pos = state.positions[String(v)];
    vertices.push({ id: v, x: pos.xd, y: pos.yd });
  }
  const crossingPairKeys = new Set<string>();
  const crossingEdgeKeys = new Set<string>();
  for (const [e, f] of state.crossing_edges) {
    crossingPairKeys.add(pairKey(e, f));
    crossingEdgeKeys.add(edgeKey(e[0], e[1]));
    crossingEdgeKeys.add(edgeKey(f[0], f[1]));
  }
  for (const [, e] of state.vertex_on_edge) {
    crossingEdgeKeys.add(edgeKey(e[0], e[1]));
  }
  return {
    ...view,
    sessionId: state.id,
    vertexCount: state.n,
    vertices,
    edges: state.edges,
    crossingPairKeys,
    crossingEdgeKeys,
    crossings: state.crossings,
    movesUsed: state.moves_used,
    fixedCount: state.fixed_count,
    status: state.status,
    bound: state.bound,
    selected: null,
    dragPos: null,
  };
}

export interface BoundPanel {
  headline: string;
  detail: string;
}

export function boundPanel(view: ViewState): BoundPanel | null {
  if (!view.bound) {
    return null;
  }
  const b = view.bound;
  return {
    headline: `≥ ${b.certified_moved_lower} moves required`,
    detail:
      `certified: any crossing-free redrawing keeps at most ` +
      `${b.certified_fixed_upper} of ${b.n} vertices fixed (${b.method})`,
  };
}

// ---------------------------------------------------------------------------
// Viewport: pan/zoom is strictly view-only; model coordinates never change.
// ---------------------------------------------------------------------------

export class Viewport {
  constructor(
    public offsetX = 0,
    public offsetY = 0,
    public scale = 1
  ) {}

  worldToScreen(x: number, y: number): { x: number; y: number } {
    return { x: (x - this.offsetX) * this.scale, y: (y - this.offsetY) * this.scale };
  }

  screenToWorld(px: number, py: number): { x: number; y: number } {
    return { x: px / this.scale + this.offsetX, y: py / this.scale + this.offsetY };
  }

  pan(dxScreen: number, dyScreen: number): void {
    this.offsetX -= dxScreen / this.scale;
    this.offsetY -= dyScreen / this.scale;
  }

  zoomAt(px: number, py: number, factor: number): void {
    const before = this.screenToWorld(px, py);
    this.scale *= factor;
    const after = this.screenToWorld(px, py);
    this.offsetX += before.x - after.x;
    this.offsetY += before.y - after.y;
  }

  fit(vertices: VertexView[], width: number, height: number, margin = 40): void {
    if (vertices.length === 0) {
      return;
    }
    const xs = vertices.map((v) => v.x);
    const ys = vertices.map((v) => v.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const spanX = Math.max(maxX - minX, 1e-9);
    const spanY = Math.max(maxY - minY, 1e-9);
    this.scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
    this.offsetX = minX - margin / this.scale;
    this.offsetY = minY - margin / this.scale;
  }
}

// ---------------------------------------------------------------------------
// Controller: drag lifecycle, hints, undo. One in-flight mutation at a time.
// ---------------------------------------------------------------------------

const MAX_DECIMALS = 6; // server rationalizes with denominator <= 10^6

export function roundCoordinate(value: number): number {
  return Number(value.toFixed(MAX_DECIMALS));
}

export class GameController {
  view: ViewState = emptyView();
  onChange: (view: ViewState) => void = () => {};

  constructor(private api: GameApi) {}

  private emit(): void {
    this.onChange(this.view);
  }

  async newGame(source: SourceSpec): Promise<void> {
    const state = await this.api.createGame(source);
    this.view = projectServerState(emptyView(), state);
    this.emit();
  }

  async refresh(): Promise<void> {
    if (!this.view.sessionId) {
      return;
    }
    const state = await this.api.getState(this.view.sessionId);
    this.view = projectServerState(this.view, state);
    this.emit();
  }

  vertexAt(x: number, y: number, radius: number): number | null {
    let best: number | null = null;
    let bestDist = radius;
    for (const v of this.view.vertices) {
      const d = Math.hypot(v.x - x, v.y - y);
      if (d <= bestDist) {
        best = v.id;
        bestDist = d;
      }
    }
    return best;
  }

  beginDrag(v: number): boolean {
    if (this.view.busy || this.view.sessionId === null) {
      return false;
    }
    this.view = { ...this.view, selected: v, dragPos: null, toast: null };
    this.emit();
    return true;
  }

  dragTo(x: number, y: number): void {
    if (this.view.selected === null) {
      return;
    }
    this.view = { ...this.view, dragPos: { x, y } };
    this.emit();
  }

  cancelDrag(): void {
    this.view = { ...this.view, selected: null, dragPos: null };
    this.emit();
  }

  // Commit the drag as a server move. On a 409 the vertex snaps back to the
  // last server-confirmed position; any other failure also snaps back but
  // keeps the error visible.
  async commitDrag(): Promise<void> {
    const v = this.view.selected;
    const pos = this.view.dragPos;
    if (v === null || this.view.sessionId === null) {
      return;
    }
    if (!pos) {
      this.cancelDrag();
      return;
    }
    await this.sendMove(v, roundCoordinate(pos.x), roundCoordinate(pos.y));
  }

  async sendMove(v: number, x: Coordinate, y: Coordinate): Promise<boolean> {
    const sessionId = this.view.sessionId;
    if (sessionId === null || this.view.busy) {
      return false;
    }
    this.view = { ...this.view, busy: true };
    this.emit();
    try {
      const state = await this.api.move(sessionId, v, x, y);
      this.view = { ...projectServerState(this.view, state), busy: false, ghost: null };
      this.emit();
      return true;
    } catch (err) {
      const toast =
        err instanceof ApiError && err.status === 409
          ? "that point is occupied"
          : `move failed: ${err instanceof Error ? err.message : err}`;
      // snap back: drop the drag overlay, keep the server positions
      this.view = { ...this.view, busy: false, selected: null, dragPos: null, toast };
      this.emit();
      return false;
    }
  }

  async requestHint(): Promise<void> {
    if (this.view.sessionId === null || this.view.busy) {
      return;
    }
    const h = await this.api.hint(this.view.sessionId);
    if (h === null) {
      this.view = { ...this.view, ghost: null, toast: "already solved" };
    } else {
      this.view = {
        ...this.view,
        toast: null,
        ghost: {
          v: h.v,
          x: h.xd,
          y: h.yd,
          exactX: h.x,
          exactY: h.y,
          remaining: h.remaining,
        },
      };
    }
    this.emit();
  }

  // Applying a hint is an ordinary move; exact coordinates from the server
  // survive the round trip unchanged.
  async applyGhost(): Promise<boolean> {
    const g = this.view.ghost;
    if (!g) {
      return false;
    }
    return this.sendMove(g.v, g.exactX, g.exactY);
  }

  async undo(): Promise<void> {
    const sessionId = this.view.sessionId;
    if (sessionId === null || this.view.busy) {
      return;
    }
    this.view = { ...this.view, busy: true };
    this.emit();
    try {
      const state = await this.api.undo(sessionId);
      this.view = { ...projectServerState(this.view, state), busy: false, ghost: null };
    } catch (err) {
      this.view = {
        ...this.view,
        busy: false,
        toast: `undo failed: ${err instanceof Error ? err.message : err}`,
      };
    }
    this.emit();
  }
}
