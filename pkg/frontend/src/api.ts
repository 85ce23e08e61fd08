// Client for the mission service HTTP API. Every store mutation the UI
// performs goes through these endpoints; nothing touches persistence
// directly, so reloading the page always shows the committed state.

import { parseNdjson } from "./ndjson.js";

export interface Waypoint {
  id: number;
  latitude_deg: number;
  longitude_deg: number;
  altitude_m: number;
  task: number;
  instruction: string;
}

export interface Route {
  route_id: string;
  description: string | null;
  points: Waypoint[];
}

export interface RouteSummary {
  route_id: string;
  description: string | null;
  waypoint_count: number;
}

export interface StreamFrame {
  time_s: number;
  latitude_deg: number;
  longitude_deg: number;
  altitude_m: number;
  task: number;
  label: string;
  color: string;
  progress: number;
  done: boolean;
  message?: string;
}

export interface StreamOptions {
  tickS?: number;
  speedMps?: number;
  noiseSigmaM?: number;
  rngSeed?: number;
  signal?: AbortSignal;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function check(response: Response): Promise<Response> {
  if (response.ok) return response;
  let code = "unknown";
  let message = `HTTP ${response.status}`;
  try {
    const body = await response.json();
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body, keep the defaults
  }
  throw new ApiError(response.status, code, message);
}

export class MissionApi {
  constructor(readonly base: string = "") {}

  async listRoutes(): Promise<RouteSummary[]> {
    const response = await check(await fetch(`${this.base}/paths`));
    return response.json();
  }

  async getRoute(routeId: string): Promise<Route> {
    const response = await check(
      await fetch(`${this.base}/paths/${encodeURIComponent(routeId)}`),
    );
    return response.json();
  }

  /** Create under the next free id; an empty body starts a blank route. */
  async createRoute(
    description: string | null = null,
    points: Waypoint[] = [],
  ): Promise<Route> {
    const response = await check(
      await fetch(`${this.base}/paths`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ description, points }),
      }),
    );
    return response.json();
  }

  async saveRoute(route: Route): Promise<Route> {
    const response = await check(
      await fetch(`${this.base}/paths/${encodeURIComponent(route.route_id)}`, {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({
          description: route.description,
          points: route.points,
        }),
      }),
    );
    return response.json();
  }

  async deleteRoute(routeId: string): Promise<void> {
    await check(
      await fetch(`${this.base}/paths/${encodeURIComponent(routeId)}`, {
        method: "DELETE",
      }),
    );
  }

  /** Animation frames at tick cadence until the completion frame. */
  async *streamFrames(
    routeId: string,
    options: StreamOptions = {},
  ): AsyncGenerator<StreamFrame> {
    const params = new URLSearchParams();
    if (options.tickS !== undefined) params.set("tick_s", String(options.tickS));
    if (options.speedMps !== undefined) params.set("speed_mps", String(options.speedMps));
    if (options.noiseSigmaM !== undefined) params.set("noise_sigma_m", String(options.noiseSigmaM));
    if (options.rngSeed !== undefined) params.set("rng_seed", String(options.rngSeed));
    const query = params.size > 0 ? `?${params}` : "";
    const response = await check(
      await fetch(
        `${this.base}/paths/${encodeURIComponent(routeId)}/simulate/stream${query}`,
        { signal: options.signal },
      ),
    );
    if (response.body === null) throw new ApiError(0, "stream", "response has no body");
    yield* parseNdjson<StreamFrame>(response.body);
  }
}
