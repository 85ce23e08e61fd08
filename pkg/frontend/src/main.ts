// Application controller: owns the current screen (route list, edit
// mode, playback), the edit working copy, and the map. All data flows
// through the MissionApi client; the UI holds no persistence of its
// own.

import { ApiError, MissionApi, Route, RouteSummary } from "./api.js";
import { renderEditSidebar, renderLegend, showToast } from "./editview.js";
import { renderRouteList } from "./listview.js";
import { MapView } from "./mapview.js";
import { Playback, PlaybackState } from "./playback.js";
import {
  EditState,
  addWaypoint,
  removeWaypoint,
  setAltitude,
  setDescription,
  setInstruction,
  setTask,
  startEdit,
  toRoute,
} from "./state.js";
import {
  DEFAULT_VIEW,
  ViewState,
  applyView,
  renderViewControls,
} from "./viewcontrols.js";

export type Screen = "list" | "edit" | "play";

export interface AppElements {
  sidebar: HTMLElement;
  mapBox: HTMLElement;
  legend: HTMLElement;
  controls: HTMLElement;
  playbar: HTMLElement;
  toast: HTMLElement;
}

export class PlannerApp {
  screen: Screen = "list";
  edit: EditState | null = null;
  readonly map: MapView;
  readonly playback: Playback;
  private view: ViewState = { ...DEFAULT_VIEW };
  private confirmDialog: (message: string) => boolean;

  constructor(
    private readonly doc: Document,
    private readonly els: AppElements,
    private readonly api: MissionApi,
    options: { confirmDialog?: (message: string) => boolean } = {},
  ) {
    this.confirmDialog =
      options.confirmDialog ??
      ((message) => (doc.defaultView ? doc.defaultView.confirm(message) : true));
    this.map = new MapView(doc);
    this.els.mapBox.appendChild(this.map.svg as unknown as Node);
    this.map.onMapClick = (point) => {
      if (this.screen === "edit" && this.edit !== null) {
        this.applyEdit(addWaypoint(this.edit, point.latitude_deg, point.longitude_deg));
      }
    };
    this.playback = new Playback(api, (state) => this.renderPlayback(state));
    renderLegend(doc, this.els.legend);
    this.renderControls();
  }

  private renderControls(): void {
    applyView(this.els.mapBox, this.view);
    renderViewControls(this.doc, this.els.controls, this.view, {
      onChange: (view) => {
        this.view = view;
        this.renderControls();
      },
    });
  }

  /** Button-driven actions surface API failures as a toast. */
  private reportFailure(verb: string, error: unknown): void {
    const message = error instanceof ApiError ? error.message : String(error);
    showToast(this.doc, this.els.toast, `Could not ${verb}: ${message}`);
  }

  async showList(): Promise<void> {
    this.playback.stop();
    this.screen = "list";
    this.edit = null;
    let summaries: RouteSummary[];
    try {
      summaries = await this.api.listRoutes();
    } catch (error) {
      this.reportFailure("load routes", error);
      return;
    }
    renderRouteList(this.doc, this.els.sidebar, summaries, {
      onEdit: (routeId) => void this.openEditor(routeId),
      onPlay: (routeId) => void this.startPlayback(routeId),
      onDelete: (routeId) => void this.deleteRoute(routeId),
      onCreate: () => void this.createRoute(),
      confirmDialog: this.confirmDialog,
    });
    this.map.render([]);
    this.map.setDrone(null);
    this.els.playbar.textContent = "";
  }

  async deleteRoute(routeId: string): Promise<void> {
    try {
      await this.api.deleteRoute(routeId);
    } catch (error) {
      this.reportFailure(`delete ${routeId}`, error);
      return;
    }
    await this.showList();
  }

  /** New routes are created server-side first so the id is committed. */
  async createRoute(): Promise<void> {
    try {
      this.enterEdit(await this.api.createRoute());
    } catch (error) {
      this.reportFailure("create a route", error);
    }
  }

  async openEditor(routeId: string): Promise<void> {
    try {
      this.enterEdit(await this.api.getRoute(routeId));
    } catch (error) {
      this.reportFailure(`open ${routeId}`, error);
    }
  }

  private enterEdit(route: Route): void {
    this.playback.stop();
    this.screen = "edit";
    this.applyEdit(startEdit(route));
  }

  private applyEdit(state: EditState): void {
    this.edit = state;
    renderEditSidebar(this.doc, this.els.sidebar, state, {
      onDescription: (text) => this.applyEdit(setDescription(this.edit!, text)),
      onAltitude: (i, alt) => this.applyEdit(setAltitude(this.edit!, i, alt)),
      onTask: (i, task) => this.applyEdit(setTask(this.edit!, i, task)),
      onInstruction: (i, text) => this.applyEdit(setInstruction(this.edit!, i, text)),
      onRemove: (i) => this.applyEdit(removeWaypoint(this.edit!, i)),
      onSave: () => void this.saveEdit(),
      onBack: () => void this.showList(),
    });
    this.map.render(state.points);
  }

  async saveEdit(): Promise<void> {
    if (this.edit === null) return;
    try {
      const saved = await this.api.saveRoute(toRoute(this.edit));
      this.edit = { ...this.edit, dirty: false };
      showToast(this.doc, this.els.toast, `Route ${saved.route_id} saved`);
    } catch (error) {
      this.reportFailure("save", error);
    }
  }

  async startPlayback(routeId: string, pace: boolean = true): Promise<void> {
    let route: Route;
    try {
      route = await this.api.getRoute(routeId);
    } catch (error) {
      this.reportFailure(`play ${routeId}`, error);
      return;
    }
    this.screen = "play";
    this.map.render(route.points);
    await this.playback.play(routeId, { pace });
  }

  private renderPlayback(state: PlaybackState): void {
    this.map.setDrone(state.frame);
    const bar = this.els.playbar;
    bar.textContent = "";
    if (state.phase === "idle") return;

    if (state.phase === "running" && state.frame !== null) {
      const progress = this.doc.createElement("span");
      progress.className = "play-progress";
      progress.textContent = `${Math.round(state.frame.progress * 100)}%`;
      const label = this.doc.createElement("span");
      label.className = "play-task";
      label.textContent = state.frame.label;
      const stop = this.doc.createElement("button");
      stop.className = "play-stop";
      stop.textContent = "Stop";
      stop.addEventListener("click", () => this.playback.stop());
      bar.appendChild(progress);
      bar.appendChild(label);
      bar.appendChild(stop);
    }

    if (state.phase === "done" && state.notice !== null) {
      const notice = this.doc.createElement("div");
      notice.className = "play-notice";
      notice.textContent = state.notice;
      const dismiss = this.doc.createElement("button");
      dismiss.className = "notice-dismiss";
      dismiss.textContent = "OK";
      dismiss.addEventListener("click", () => this.playback.dismissNotice());
      notice.appendChild(dismiss);
      bar.appendChild(notice);
    }

    if (state.phase === "error") {
      const failure = this.doc.createElement("div");
      failure.className = "play-error";
      failure.textContent = `Stream failed: ${state.error}`;
      bar.appendChild(failure);
    }
  }
}

/** Build the page skeleton inside root and start on the route list. */
export function bootstrap(
  doc: Document,
  root: HTMLElement,
  api: MissionApi,
): PlannerApp {
  root.textContent = "";

  const header = doc.createElement("header");
  const title = doc.createElement("h1");
  title.textContent = "droneplan";
  const legend = doc.createElement("div");
  legend.className = "legend";
  const controls = doc.createElement("div");
  controls.className = "view-controls";
  header.appendChild(title);
  header.appendChild(legend);
  header.appendChild(controls);
  root.appendChild(header);

  const content = doc.createElement("div");
  content.className = "content";
  const sidebar = doc.createElement("aside");
  sidebar.className = "sidebar";
  const mapWrap = doc.createElement("div");
  mapWrap.className = "map-wrap";
  const mapBox = doc.createElement("div");
  mapBox.className = "map-box map-structures";
  mapWrap.appendChild(mapBox);
  content.appendChild(sidebar);
  content.appendChild(mapWrap);
  root.appendChild(content);

  const playbar = doc.createElement("div");
  playbar.className = "playbar";
  root.appendChild(playbar);

  const toast = doc.createElement("div");
  toast.className = "toast-area";
  root.appendChild(toast);

  const app = new PlannerApp(doc, { sidebar, mapBox, legend, controls, playbar, toast }, api);
  void app.showList();
  return app;
}
