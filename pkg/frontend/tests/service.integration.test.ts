// Drives the planner against a real service process: list, edit, save,
// reload, stream playback and delete all go through HTTP. The service
// is spawned once for the file with an isolated store.

import { ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { Window } from "happy-dom";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { MissionApi, Waypoint } from "../src/api.js";
import { PlannerApp } from "../src/main.js";
import { TASK_COLORS, TASK_LABELS } from "../src/palette.js";
import { Playback } from "../src/playback.js";

const PORT = 17000 + Math.floor(Math.random() * 2000);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let serverLog = "";
let storeDir: string;

function wp(
  id: number,
  latitude_deg: number,
  longitude_deg: number,
  task: number = 0,
  instruction: string = "",
): Waypoint {
  return { id, latitude_deg, longitude_deg, altitude_m: 10, task, instruction };
}

// short legs (~30 m at 5 m/s) keep the unpaced streams quick
const HOP_POINTS: Waypoint[] = [
  wp(0, 4.6006, -74.0627),
  wp(1, 4.60087, -74.0627, 1),
  wp(2, 4.60087, -74.06243),
];

// one waypoint per camera task, video paired start/stop
const PALETTE_POINTS: Waypoint[] = [
  wp(0, 4.6006, -74.0627, 1),
  wp(1, 4.6008, -74.0627, 2),
  wp(2, 4.601, -74.0627, 0),
  wp(3, 4.6012, -74.0627, 2),
  wp(4, 4.6014, -74.0627, 3, "1"),
  wp(5, 4.6016, -74.0627, 4),
];

async function sleep(ms: number): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, ms));
}

async function until(check: () => boolean, what: string, timeoutMs = 15000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!check()) {
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${what}`);
    await sleep(50);
  }
}

beforeAll(async () => {
  storeDir = mkdtempSync(join(tmpdir(), "droneplan-ui-"));
  server = spawn(
    "python3",
    [
      "-m",
      "droneplan.cli",
      "--store",
      join(storeDir, "routes.json"),
      "serve",
      "--host",
      "127.0.0.1",
      "--port",
      String(PORT),
    ],
    { stdio: ["ignore", "ignore", "pipe"] },
  );
  server.stderr!.on("data", (chunk) => {
    serverLog += String(chunk);
  });

  const deadline = Date.now() + 20000;
  for (;;) {
    try {
      const response = await fetch(`${BASE}/`);
      if (response.ok) return;
    } catch {
      // not listening yet
    }
    if (Date.now() > deadline) {
      throw new Error(`service did not come up on ${BASE}\n${serverLog}`);
    }
    await sleep(100);
  }
});

afterAll(() => {
  server?.kill();
  if (storeDir) rmSync(storeDir, { recursive: true, force: true });
});

interface Harness {
  window: Window;
  doc: Document;
  api: MissionApi;
  app: PlannerApp;
  els: Record<"sidebar" | "mapBox" | "legend" | "controls" | "playbar" | "toast", HTMLElement>;
}

function makeApp(confirmDialog: (message: string) => boolean = () => true): Harness {
  const window = new Window({ url: "http://localhost/" });
  const doc = window.document as unknown as Document;
  const els = {
    sidebar: doc.createElement("div"),
    mapBox: doc.createElement("div"),
    legend: doc.createElement("div"),
    controls: doc.createElement("div"),
    playbar: doc.createElement("div"),
    toast: doc.createElement("div"),
  };
  for (const el of Object.values(els)) doc.body.appendChild(el);
  const api = new MissionApi(BASE);
  const app = new PlannerApp(doc, els, api, { confirmDialog });
  return { window, doc, api, app, els };
}

let hopId = "";
let paletteId = "";

describe("planner against the live service", () => {
  it("starts with an empty route list", async () => {
    const { app, els } = makeApp();
    await app.showList();
    expect(els.sidebar.querySelector(".route-table")).not.toBeNull();
    expect(els.sidebar.querySelectorAll("tbody tr").length).toBe(0);
  });

  it("renders the stored paths, one row per route", async () => {
    const { api, app, els } = makeApp();
    hopId = (await api.createRoute("short hop", HOP_POINTS)).route_id;
    paletteId = (await api.createRoute("camera tour", PALETTE_POINTS)).route_id;

    await app.showList();
    // the table mirrors the path index resource
    const index = await (await fetch(`${BASE}/paths`)).json();
    const rows = els.sidebar.querySelectorAll("tbody tr");
    expect(rows.length).toBe(index.length);
    for (const summary of index) {
      const row = els.sidebar.querySelector(
        `tr[data-route-id="${summary.route_id}"]`,
      ) as HTMLElement;
      expect(row).not.toBeNull();
      expect(row.children[0].textContent).toContain(summary.route_id);
      expect(row.children[0].textContent).toContain(summary.description);
      expect(row.children[1].textContent).toBe(String(summary.waypoint_count));
    }
  });

  it("saving an edited route then reloading shows the committed values", async () => {
    const { window, app, els } = makeApp();
    await app.openEditor(hopId);

    const description = els.sidebar.querySelector(".route-description") as HTMLInputElement;
    description.value = "hop edited";
    description.dispatchEvent(new window.Event("input"));

    // the sidebar re-renders after every change, so re-query controls
    const altitude = els.sidebar.querySelector(".altitude-input") as HTMLInputElement;
    altitude.value = "77.5";
    altitude.dispatchEvent(new window.Event("input"));

    (els.sidebar.querySelector(".save-route") as HTMLButtonElement).click();
    await until(
      () => (els.toast.textContent ?? "").includes(`Route ${hopId} saved`),
      "the save confirmation toast",
    );

    // a fresh client sees the committed values
    const reloaded = await new MissionApi(BASE).getRoute(hopId);
    expect(reloaded.description).toBe("hop edited");
    expect(reloaded.points[0].altitude_m).toBe(77.5);
    expect(reloaded.points.length).toBe(HOP_POINTS.length);

    const again = makeApp();
    await again.app.openEditor(hopId);
    const slider = again.els.sidebar.querySelector(".altitude-slider") as HTMLInputElement;
    expect(slider.value).toBe("77.5");
  });

  it("stream frames color every task from the web palette", async () => {
    const api = new MissionApi(BASE);
    const seen = new Set<number>();
    let frames = 0;
    let lastProgress = -1;
    let final = null as { done: boolean; message?: string } | null;
    for await (const frame of api.streamFrames(paletteId, { tickS: 0.25 })) {
      frames += 1;
      seen.add(frame.task);
      expect(frame.color).toBe(TASK_COLORS[frame.task]);
      expect(frame.label).toBe(TASK_LABELS[frame.task]);
      expect(frame.progress).toBeGreaterThanOrEqual(lastProgress);
      lastProgress = frame.progress;
      final = frame;
    }
    expect(frames).toBeGreaterThan(50);
    // every camera task appears: picture, video, interval, panorama
    expect([...seen].sort()).toEqual([0, 1, 2, 3, 4]);
    expect(final?.done).toBe(true);
    expect(final?.message).toBe("Simulation finished");
  });

  it("playback consumes the stream to completion and shows the notice", async () => {
    const { app, els } = makeApp();
    await app.startPlayback(hopId, false);

    expect(app.playback.state.phase).toBe("done");
    expect(app.playback.state.frame?.done).toBe(true);
    expect(app.playback.state.frame?.progress).toBe(1);
    const notice = els.playbar.querySelector(".play-notice");
    expect(notice).not.toBeNull();
    expect(notice!.textContent).toContain("Simulation finished");
    expect(app.map.svg.querySelector(".drone-icon")).not.toBeNull();

    // dismissing the notice keeps the drone at the final position
    (els.playbar.querySelector(".notice-dismiss") as HTMLButtonElement).click();
    expect(els.playbar.querySelector(".play-notice")).toBeNull();
    expect(app.map.svg.querySelector(".drone-icon")).not.toBeNull();
  });

  it("a missing route surfaces the failure instead of crashing", async () => {
    const { app, els } = makeApp();
    await app.startPlayback("PATH-404", false);
    expect(els.toast.textContent).toContain("Could not play PATH-404");
    expect(els.toast.textContent).toContain("not found");

    // the stream itself reports the same failure as an error phase
    const playback = new Playback(new MissionApi(BASE));
    await playback.play("PATH-404");
    expect(playback.state.phase).toBe("error");
    expect(playback.state.error).toContain("PATH-404");
  });

  it("deleting a route removes its row and the stored path", async () => {
    const asked: string[] = [];
    const { api, app, els } = makeApp((message) => {
      asked.push(message);
      return true;
    });
    await app.showList();
    const row = els.sidebar.querySelector(`tr[data-route-id="${hopId}"]`)!;
    (row.querySelector(".delete-route") as HTMLButtonElement).click();

    await until(
      () => els.sidebar.querySelector(`tr[data-route-id="${hopId}"]`) === null,
      "the deleted row to disappear",
    );
    expect(asked).toEqual([`Delete ${hopId}?`]);
    const left = await api.listRoutes();
    expect(left.map((s) => s.route_id)).not.toContain(hopId);
    expect(left.map((s) => s.route_id)).toContain(paletteId);
  });
});
