// Map view controls: camera tilt and rotation plus the map type
// toggle. Pure view layer, implemented as CSS custom properties and a
// class on the map container; no server interaction.

export type MapKind = "structures" | "satellite";

export interface ViewState {
  tiltDeg: number;
  rotateDeg: number;
  kind: MapKind;
}

export const DEFAULT_VIEW: ViewState = { tiltDeg: 0, rotateDeg: 0, kind: "structures" };

export function applyView(container: HTMLElement, view: ViewState): void {
  container.style.transform =
    `perspective(1200px) rotateX(${view.tiltDeg}deg) rotateZ(${view.rotateDeg}deg)`;
  container.classList.toggle("map-satellite", view.kind === "satellite");
  container.classList.toggle("map-structures", view.kind === "structures");
}

export interface ViewControlHandlers {
  onChange: (view: ViewState) => void;
}

export function renderViewControls(
  doc: Document,
  container: HTMLElement,
  view: ViewState,
  handlers: ViewControlHandlers,
): void {
  container.textContent = "";

  const tiltLabel = doc.createElement("label");
  tiltLabel.textContent = "Tilt";
  const tilt = doc.createElement("input");
  tilt.className = "tilt-slider";
  tilt.type = "range";
  tilt.min = "0";
  tilt.max = "60";
  tilt.value = String(view.tiltDeg);
  tilt.addEventListener("input", () =>
    handlers.onChange({ ...view, tiltDeg: Number(tilt.value) }),
  );
  tiltLabel.appendChild(tilt);
  container.appendChild(tiltLabel);

  const rotateLabel = doc.createElement("label");
  rotateLabel.textContent = "Rotate";
  const rotate = doc.createElement("input");
  rotate.className = "rotate-slider";
  rotate.type = "range";
  rotate.min = "-180";
  rotate.max = "180";
  rotate.value = String(view.rotateDeg);
  rotate.addEventListener("input", () =>
    handlers.onChange({ ...view, rotateDeg: Number(rotate.value) }),
  );
  rotateLabel.appendChild(rotate);
  container.appendChild(rotateLabel);

  const toggle = doc.createElement("button");
  toggle.className = "map-type-toggle";
  toggle.textContent =
    view.kind === "satellite" ? "Show structures" : "Show satellite";
  toggle.addEventListener("click", () =>
    handlers.onChange({
      ...view,
      kind: view.kind === "satellite" ? "structures" : "satellite",
    }),
  );
  container.appendChild(toggle);
}
