// Simulation playback over the frame stream. Read-only: it never
// mutates the route. One subscription at a time; starting a new
// playback aborts the previous stream first.

import { MissionApi, StreamFrame, StreamOptions } from "./api.js";

export type PlaybackPhase = "idle" | "running" | "done" | "error";

export interface PlaybackState {
  phase: PlaybackPhase;
  frame: StreamFrame | null;
  notice: string | null;
  error: string | null;
}

export interface PlaybackOptions extends StreamOptions {
  /** Real-time pacing between frames; tests disable it. */
  pace?: boolean;
}

const IDLE: PlaybackState = { phase: "idle", frame: null, notice: null, error: null };

function sleep(ms: number, signal: AbortSignal): Promise<void> {
  return new Promise((resolve) => {
    const timer = setTimeout(done, ms);
    function done() {
      signal.removeEventListener("abort", done);
      clearTimeout(timer);
      resolve();
    }
    signal.addEventListener("abort", done);
  });
}

export class Playback {
  state: PlaybackState = IDLE;
  private controller: AbortController | null = null;

  constructor(
    private readonly api: MissionApi,
    private readonly onChange: (state: PlaybackState) => void = () => {},
  ) {}

  private update(state: PlaybackState): void {
    this.state = state;
    this.onChange(state);
  }

  async play(routeId: string, options: PlaybackOptions = {}): Promise<void> {
    this.stop();
    const controller = new AbortController();
    this.controller = controller;
    this.update({ phase: "running", frame: null, notice: null, error: null });
    let last: StreamFrame | null = null;
    try {
      const frames = this.api.streamFrames(routeId, {
        ...options,
        signal: controller.signal,
      });
      for await (const frame of frames) {
        if (controller.signal.aborted) return;
        if (options.pace && last !== null) {
          await sleep(Math.max(0, (frame.time_s - last.time_s) * 1000), controller.signal);
          if (controller.signal.aborted) return;
        }
        last = frame;
        this.update({ phase: "running", frame, notice: null, error: null });
      }
      if (controller.signal.aborted) return;
      this.update({
        phase: "done",
        frame: last,
        notice: last?.message ?? "Simulation finished",
        error: null,
      });
    } catch (error) {
      if (controller.signal.aborted) return;
      const message = error instanceof Error ? error.message : String(error);
      this.update({ phase: "error", frame: last, notice: null, error: message });
    } finally {
      if (this.controller === controller) this.controller = null;
    }
  }

  stop(): void {
    if (this.controller !== null) {
      this.controller.abort();
      this.controller = null;
    }
    if (this.state.phase === "running") this.update(IDLE);
  }

  /** The completion notice is dismissible; the final frame stays put. */
  dismissNotice(): void {
    if (this.state.notice !== null) {
      this.update({ ...this.state, notice: null });
    }
  }
}
