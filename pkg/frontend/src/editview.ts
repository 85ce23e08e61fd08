// Edit sidebar: description, one detail row per waypoint (1-based
// order), altitude slider plus numeric input kept equivalent, task
// selector and instruction field, and the save button. The view is
// rebuilt from the working copy after each change.

import { TASK_OPTIONS, TASK_COLORS, taskColor } from "./palette.js";
import { ALTITUDE_MAX_M, ALTITUDE_MIN_M, EditState, waypointRows } from "./state.js";

export interface EditHandlers {
  onDescription: (text: string) => void;
  onAltitude: (index: number, altitude_m: number) => void;
  onTask: (index: number, task: number) => void;
  onInstruction: (index: number, text: string) => void;
  onRemove: (index: number) => void;
  onSave: () => void;
  onBack: () => void;
}

export function renderLegend(doc: Document, container: HTMLElement): void {
  container.textContent = "";
  const title = doc.createElement("span");
  title.className = "legend-title";
  title.textContent = "Tasks:";
  container.appendChild(title);
  for (const option of TASK_OPTIONS) {
    const item = doc.createElement("span");
    item.className = "legend-item";
    const swatch = doc.createElement("span");
    swatch.className = "legend-swatch";
    swatch.dataset.task = String(option.task);
    swatch.style.backgroundColor = TASK_COLORS[option.task];
    const label = doc.createElement("span");
    label.textContent = option.label;
    item.appendChild(swatch);
    item.appendChild(label);
    container.appendChild(item);
  }
}

export function renderEditSidebar(
  doc: Document,
  container: HTMLElement,
  state: EditState,
  handlers: EditHandlers,
): void {
  container.textContent = "";

  const header = doc.createElement("div");
  header.className = "edit-header";
  const back = doc.createElement("button");
  back.className = "back-to-list";
  back.textContent = "Back";
  back.addEventListener("click", () => handlers.onBack());
  const title = doc.createElement("h2");
  title.textContent = `Editing ${state.routeId}`;
  header.appendChild(back);
  header.appendChild(title);
  container.appendChild(header);

  const descriptionLabel = doc.createElement("label");
  descriptionLabel.textContent = "Description";
  const description = doc.createElement("input");
  description.className = "route-description";
  description.type = "text";
  description.value = state.description;
  description.addEventListener("input", () =>
    handlers.onDescription(description.value),
  );
  descriptionLabel.appendChild(description);
  container.appendChild(descriptionLabel);

  const hint = doc.createElement("p");
  hint.className = "edit-hint";
  hint.textContent = "Click the map to add a waypoint.";
  container.appendChild(hint);

  const rows = doc.createElement("div");
  rows.className = "waypoint-rows";
  waypointRows(state).forEach((row, index) => {
    const card = doc.createElement("div");
    card.className = "waypoint-card";
    card.dataset.order = String(row.order);

    const caption = doc.createElement("div");
    caption.className = "waypoint-caption";
    const dot = doc.createElement("span");
    dot.className = "waypoint-dot";
    dot.style.backgroundColor = taskColor(row.task);
    caption.appendChild(dot);
    const captionText = doc.createElement("span");
    captionText.textContent = ` ${row.order}  (${row.latitude}, ${row.longitude})`;
    caption.appendChild(captionText);
    const remove = doc.createElement("button");
    remove.className = "remove-waypoint";
    remove.textContent = "Remove";
    remove.addEventListener("click", () => handlers.onRemove(index));
    caption.appendChild(remove);
    card.appendChild(caption);

    const altitudeLabel = doc.createElement("label");
    altitudeLabel.textContent = "Altitude (m)";
    const slider = doc.createElement("input");
    slider.className = "altitude-slider";
    slider.type = "range";
    slider.min = String(ALTITUDE_MIN_M);
    slider.max = String(ALTITUDE_MAX_M);
    slider.step = "0.5";
    slider.value = String(row.altitude_m);
    const numeric = doc.createElement("input");
    numeric.className = "altitude-input";
    numeric.type = "number";
    numeric.min = String(ALTITUDE_MIN_M);
    numeric.max = String(ALTITUDE_MAX_M);
    numeric.step = "0.5";
    numeric.value = String(row.altitude_m);
    // both controls drive the same working-copy field
    slider.addEventListener("input", () =>
      handlers.onAltitude(index, Number(slider.value)),
    );
    numeric.addEventListener("input", () =>
      handlers.onAltitude(index, Number(numeric.value)),
    );
    altitudeLabel.appendChild(slider);
    altitudeLabel.appendChild(numeric);
    card.appendChild(altitudeLabel);

    const taskLabelEl = doc.createElement("label");
    taskLabelEl.textContent = "Camera task";
    const select = doc.createElement("select");
    select.className = "task-select";
    for (const option of TASK_OPTIONS) {
      const opt = doc.createElement("option");
      opt.value = String(option.task);
      opt.textContent = option.label;
      if (option.task === row.task) opt.selected = true;
      select.appendChild(opt);
    }
    select.addEventListener("change", () =>
      handlers.onTask(index, Number(select.value)),
    );
    taskLabelEl.appendChild(select);
    card.appendChild(taskLabelEl);

    const instructionLabel = doc.createElement("label");
    instructionLabel.textContent = "Instruction";
    const instruction = doc.createElement("input");
    instruction.className = "instruction-input";
    instruction.type = "text";
    instruction.placeholder = "seconds or frame count";
    instruction.value = row.instruction;
    instruction.addEventListener("input", () =>
      handlers.onInstruction(index, instruction.value),
    );
    instructionLabel.appendChild(instruction);
    card.appendChild(instructionLabel);

    rows.appendChild(card);
  });
  container.appendChild(rows);

  const save = doc.createElement("button");
  save.className = "save-route";
  save.textContent = "Save route";
  save.addEventListener("click", () => handlers.onSave());
  container.appendChild(save);
}

/** Transient confirmation banner, e.g. after a successful save. */
export function showToast(doc: Document, container: HTMLElement, text: string): void {
  container.textContent = "";
  const toast = doc.createElement("div");
  toast.className = "toast";
  toast.textContent = text;
  const dismiss = doc.createElement("button");
  dismiss.className = "toast-dismiss";
  dismiss.textContent = "x";
  dismiss.addEventListener("click", () => {
    container.textContent = "";
  });
  toast.appendChild(dismiss);
  container.appendChild(toast);
}
