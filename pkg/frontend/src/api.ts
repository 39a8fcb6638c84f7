// Thin typed client over the /api endpoints. The server is authoritative
// for every game rule; this module only moves JSON around.

export type Pair = [number, number];

export interface PositionPayload {
  x: Pair;
  y: Pair;
  xd: number;
  yd: number;
}

export interface BoundPayload {
  family: string;
  method: string;
  k: number;
  m: number;
  n: number;
  s: number | null;
  certified_fixed_upper: number;
  certified_moved_lower: number;
}

export interface MoveEntry {
  v: number;
  x: Pair;
  y: Pair;
  t: number;
}

export interface GameStatePayload {
  id: string;
  n: number;
  edges: Pair[];
  positions: Record<string, PositionPayload>;
  crossings: number;
  crossing_edges: [Pair, Pair][];
  vertex_on_edge: [number, Pair][];
  status: "in_progress" | "solved";
  moves_used: number;
  fixed_count: number;
  history: MoveEntry[];
  bound: BoundPayload | null;
  source: unknown;
}

export interface HintPayload {
  v: number;
  x: Pair;
  y: Pair;
  xd: number;
  yd: number;
  remaining: number;
}

export interface PresetInfo {
  name: string;
  label: string;
  family: string;
  k: number;
  s?: number;
}

export type SourceSpec =
  | { type: "preset"; name: string }
  | { type: "generated"; family: string; k: number; s?: number }
  | { type: "random"; n: number; seed: number }
  | { type: "instance"; data: unknown };

export type Coordinate = number | Pair;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export function newIdempotencyKey(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
    return crypto.randomUUID();
  }
  return `${Date.now()}-${Math.random().toString(36).slice(2)}`;
}

async function parseError(res: Response): Promise<ApiError> {
  let message = res.statusText;
  try {
    const body = await res.json();
    if (body && typeof body.error === "string") {
      message = body.error;
    }
  } catch {
    // keep the status text
  }
  return new ApiError(res.status, message);
}

export class GameApi {
  constructor(private base: string = "") {}

  private async requestJson<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, init);
    if (!res.ok) {
      throw await parseError(res);
    }
    return (await res.json()) as T;
  }

  async listPresets(): Promise<PresetInfo[]> {
    const body = await this.requestJson<{ presets: PresetInfo[] }>(
      "/api/instances/presets"
    );
    return body.presets;
  }

  async createGame(source: SourceSpec): Promise<GameStatePayload> {
    const body = await this.requestJson<{ id: string; state: GameStatePayload }>(
      "/api/games",
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ source }),
      }
    );
    return body.state;
  }

  getState(id: string): Promise<GameStatePayload> {
    return this.requestJson<GameStatePayload>(`/api/games/${id}`);
  }

  // A network-level failure (no HTTP response) is retried once with the same
  // idempotency key; the server will not apply an acknowledged move twice.
  async move(
    id: string,
    v: number,
    x: Coordinate,
    y: Coordinate,
    key?: string
  ): Promise<GameStatePayload> {
    const idem = key ?? newIdempotencyKey();
    const send = () =>
      this.requestJson<GameStatePayload>(`/api/games/${id}/moves`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ v, x, y, key: idem }),
      });
    try {
      return await send();
    } catch (err) {
      if (err instanceof ApiError) {
        throw err; // the server answered; do not retry
      }
      return await send();
    }
  }

  undo(id: string): Promise<GameStatePayload> {
    return this.requestJson<GameStatePayload>(`/api/games/${id}/undo`, {
      method: "POST",
    });
  }

  async hint(id: string): Promise<HintPayload | null> {
    const res = await fetch(`${this.base}/api/games/${id}/hint`);
    if (res.status === 204) {
      return null;
    }
    if (!res.ok) {
      throw await parseError(res);
    }
    return (await res.json()) as HintPayload;
  }

  async log(id: string): Promise<MoveEntry[]> {
    const res = await fetch(`${this.base}/api/games/${id}/log`);
    if (!res.ok) {
      throw await parseError(res);
    }
    const text = await res.text();
    return text
      .split("\n")
      .filter((line) => line.trim().length > 0)
      .map((line) => JSON.parse(line) as MoveEntry);
  }
}
