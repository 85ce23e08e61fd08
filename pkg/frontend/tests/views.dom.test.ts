import { Window } from "happy-dom";
import { beforeEach, describe, expect, it, vi } from "vitest";

import { RouteSummary, Route } from "../src/api.js";
import { renderEditSidebar, renderLegend, showToast } from "../src/editview.js";
import { renderRouteList, ListHandlers } from "../src/listview.js";
import { MapView } from "../src/mapview.js";
import { TASK_COLORS, TASK_LABELS } from "../src/palette.js";
import { startEdit } from "../src/state.js";

let window: Window;
let doc: Document;

beforeEach(() => {
  window = new Window({ url: "http://localhost/" });
  doc = window.document as unknown as Document;
});

function div(): HTMLElement {
  const el = doc.createElement("div");
  doc.body.appendChild(el);
  return el;
}

const SUMMARIES: RouteSummary[] = [
  { route_id: "PATH-3", description: "Ruta 3", waypoint_count: 4 },
  { route_id: "PATH-96", description: null, waypoint_count: 8 },
];

function handlers(overrides: Partial<ListHandlers> = {}): ListHandlers {
  return {
    onEdit: vi.fn(),
    onPlay: vi.fn(),
    onDelete: vi.fn(),
    onCreate: vi.fn(),
    confirmDialog: vi.fn(() => true),
    ...overrides,
  };
}

const ROUTE: Route = {
  route_id: "PATH-9",
  description: "demo",
  points: [
    { id: 0, latitude_deg: 4.6006, longitude_deg: -74.0627, altitude_m: 10, task: 1, instruction: "" },
    { id: 1, latitude_deg: 4.6011, longitude_deg: -74.0622, altitude_m: 30, task: 3, instruction: "2" },
  ],
};

describe("legend", () => {
  it("shows exactly the web palette", () => {
    const container = div();
    renderLegend(doc, container);
    const swatches = Array.from(container.querySelectorAll(".legend-swatch"));
    expect(swatches.length).toBe(5);
    for (const swatch of swatches) {
      const task = Number((swatch as HTMLElement).dataset.task);
      expect((swatch as HTMLElement).style.backgroundColor).toBe(TASK_COLORS[task]);
    }
  });
});

describe("route list screen", () => {
  it("renders one row per stored route", () => {
    const container = div();
    renderRouteList(doc, container, SUMMARIES, handlers());
    const rows = container.querySelectorAll("tbody tr");
    expect(rows.length).toBe(2);
    expect(rows[0].textContent).toContain("PATH-3 (Ruta 3)");
    expect(rows[1].textContent).toContain("PATH-96");
    // location is a placeholder column
    expect(rows[0].children[2].textContent).toBe(".");
  });

  it("an empty store renders the header with an empty table", () => {
    const container = div();
    renderRouteList(doc, container, [], handlers());
    expect(container.querySelector("table")).not.toBeNull();
    expect(container.querySelectorAll("tbody tr").length).toBe(0);
  });

  it("delete asks for confirmation and is skipped on cancel", () => {
    const container = div();
    const cancel = handlers({ confirmDialog: vi.fn(() => false) });
    renderRouteList(doc, container, SUMMARIES, cancel);
    (container.querySelector(".delete-route") as HTMLButtonElement).click();
    expect(cancel.confirmDialog).toHaveBeenCalledWith("Delete PATH-3?");
    expect(cancel.onDelete).not.toHaveBeenCalled();

    const accept = handlers();
    renderRouteList(doc, container, SUMMARIES, accept);
    (container.querySelector(".delete-route") as HTMLButtonElement).click();
    expect(accept.onDelete).toHaveBeenCalledWith("PATH-3");
  });

  it("create and edit route buttons dispatch", () => {
    const container = div();
    const h = handlers();
    renderRouteList(doc, container, SUMMARIES, h);
    (container.querySelector(".create-route") as HTMLButtonElement).click();
    expect(h.onCreate).toHaveBeenCalled();
    (container.querySelectorAll(".edit-route")[1] as HTMLButtonElement).click();
    expect(h.onEdit).toHaveBeenCalledWith("PATH-96");
  });
});

describe("edit sidebar", () => {
  function editHandlers() {
    return {
      onDescription: vi.fn(),
      onAltitude: vi.fn(),
      onTask: vi.fn(),
      onInstruction: vi.fn(),
      onRemove: vi.fn(),
      onSave: vi.fn(),
      onBack: vi.fn(),
    };
  }

  it("lists waypoints with 1-based order and task colors", () => {
    const container = div();
    renderEditSidebar(doc, container, startEdit(ROUTE), editHandlers());
    const cards = container.querySelectorAll(".waypoint-card");
    expect(cards.length).toBe(2);
    expect((cards[0] as HTMLElement).dataset.order).toBe("1");
    expect((cards[1] as HTMLElement).dataset.order).toBe("2");
    const dots = container.querySelectorAll(".waypoint-dot");
    expect((dots[0] as HTMLElement).style.backgroundColor).toBe(TASK_COLORS[1]);
    expect((dots[1] as HTMLElement).style.backgroundColor).toBe(TASK_COLORS[3]);
  });

  it("slider and numeric input start equal and both report changes", () => {
    const container = div();
    const h = editHandlers();
    renderEditSidebar(doc, container, startEdit(ROUTE), h);
    const slider = container.querySelector(".altitude-slider") as HTMLInputElement;
    const numeric = container.querySelector(".altitude-input") as HTMLInputElement;
    expect(slider.value).toBe(numeric.value);

    slider.value = "42";
    slider.dispatchEvent(new window.Event("input"));
    expect(h.onAltitude).toHaveBeenCalledWith(0, 42);

    numeric.value = "55";
    numeric.dispatchEvent(new window.Event("input"));
    expect(h.onAltitude).toHaveBeenCalledWith(0, 55);
  });

  it("task selector offers the five labeled options", () => {
    const container = div();
    renderEditSidebar(doc, container, startEdit(ROUTE), editHandlers());
    const select = container.querySelector(".task-select") as HTMLSelectElement;
    const labels = Array.from(select.options).map((o) => o.textContent);
    expect(labels).toEqual([0, 1, 2, 3, 4].map((t) => TASK_LABELS[t]));
  });

  it("save and remove dispatch to the controller", () => {
    const container = div();
    const h = editHandlers();
    renderEditSidebar(doc, container, startEdit(ROUTE), h);
    (container.querySelector(".save-route") as HTMLButtonElement).click();
    expect(h.onSave).toHaveBeenCalled();
    (container.querySelectorAll(".remove-waypoint")[1] as HTMLButtonElement).click();
    expect(h.onRemove).toHaveBeenCalledWith(1);
  });
});

describe("toast", () => {
  it("shows a dismissible confirmation", () => {
    const container = div();
    showToast(doc, container, "Route PATH-9 saved");
    expect(container.textContent).toContain("Route PATH-9 saved");
    (container.querySelector(".toast-dismiss") as HTMLButtonElement).click();
    expect(container.textContent).toBe("");
  });
});

describe("map view", () => {
  it("draws ground line, dashed guide, stems and tinted markers", () => {
    const view = new MapView(doc);
    view.render(ROUTE.points);
    const svg = view.svg;
    expect(svg.querySelectorAll(".ground-line").length).toBe(1);
    const guide = svg.querySelector(".guide-line")!;
    expect(guide.getAttribute("stroke-dasharray")).toBe("6 4");
    expect(svg.querySelectorAll(".altitude-stem").length).toBe(2);
    const markers = svg.querySelectorAll(".waypoint-marker");
    expect(markers[0].getAttribute("fill")).toBe(TASK_COLORS[1]);
    expect(markers[1].getAttribute("fill")).toBe(TASK_COLORS[3]);
  });

  it("marker elevation is proportional to altitude", () => {
    const view = new MapView(doc);
    view.render(ROUTE.points);
    const stems = view.svg.querySelectorAll(".altitude-stem");
    const rise = (stem: Element) =>
      Number(stem.getAttribute("y1")) - Number(stem.getAttribute("y2"));
    // 30 m waypoint rises three times as far as the 10 m one
    expect(rise(stems[1]) / rise(stems[0])).toBeCloseTo(3, 9);
    expect(rise(stems[0])).toBeCloseTo(10 * view.projection.scale(), 9);
  });

  it("guide vertices sit directly above ground vertices", () => {
    const view = new MapView(doc);
    view.render(ROUTE.points);
    const ground = view.svg.querySelector(".ground-line")!.getAttribute("points")!;
    const guide = view.svg.querySelector(".guide-line")!.getAttribute("points")!;
    const xs = (points: string) => points.split(" ").map((p) => p.split(",")[0]);
    expect(xs(guide)).toEqual(xs(ground));
  });

  it("click-to-add reports the geographic position", () => {
    const view = new MapView(doc);
    view.render(ROUTE.points);
    const seen: { latitude_deg: number; longitude_deg: number }[] = [];
    view.onMapClick = (p) => seen.push(p);
    const click = new window.MouseEvent("click", { clientX: 450, clientY: 300 });
    view.svg.dispatchEvent(click);
    expect(seen.length).toBe(1);
    // the viewport center unprojects to the fitted route center
    const center = view.projection.unproject(450, 300);
    expect(seen[0].latitude_deg).toBeCloseTo(center.latitude_deg, 12);
    expect(seen[0].longitude_deg).toBeCloseTo(center.longitude_deg, 12);
  });

  it("the drone icon is tinted by the frame color and hides when cleared", () => {
    const view = new MapView(doc);
    view.render(ROUTE.points);
    view.setDrone({
      time_s: 1,
      latitude_deg: 4.6008,
      longitude_deg: -74.0625,
      altitude_m: 10,
      task: 3,
      label: "Start interval",
      color: "green",
      progress: 0.4,
      done: false,
    });
    const icon = view.svg.querySelector(".drone-icon")!;
    expect(icon.getAttribute("fill")).toBe("green");
    expect(view.svg.querySelector(".drone-label")!.textContent).toBe("Start interval");
    view.setDrone(null);
    expect(view.svg.querySelector(".drone-icon")).toBeNull();
  });
});
