// Route list screen: one table row per stored route with edit, fly and
// delete actions. Deleting always asks for confirmation first. An empty
// store renders the header with an empty body.

import { RouteSummary } from "./api.js";

export interface ListHandlers {
  onEdit: (routeId: string) => void;
  onPlay: (routeId: string) => void;
  onDelete: (routeId: string) => void;
  onCreate: () => void;
  /** Injectable for tests; defaults to window.confirm in the browser. */
  confirmDialog: (message: string) => boolean;
}

export function renderRouteList(
  doc: Document,
  container: HTMLElement,
  summaries: RouteSummary[],
  handlers: ListHandlers,
): void {
  container.textContent = "";

  const header = doc.createElement("div");
  header.className = "list-header";
  const title = doc.createElement("h2");
  title.textContent = "Routes";
  const create = doc.createElement("button");
  create.className = "create-route";
  create.textContent = "New route";
  create.addEventListener("click", () => handlers.onCreate());
  header.appendChild(title);
  header.appendChild(create);
  container.appendChild(header);

  const table = doc.createElement("table");
  table.className = "route-table";
  const head = doc.createElement("thead");
  const headRow = doc.createElement("tr");
  for (const column of ["Name", "Waypoints", "Location", "Actions"]) {
    const cell = doc.createElement("th");
    cell.textContent = column;
    headRow.appendChild(cell);
  }
  head.appendChild(headRow);
  table.appendChild(head);

  const body = doc.createElement("tbody");
  for (const summary of summaries) {
    const row = doc.createElement("tr");
    row.className = "route-row";
    row.dataset.routeId = summary.route_id;

    const name = doc.createElement("td");
    name.textContent = summary.description
      ? `${summary.route_id} (${summary.description})`
      : summary.route_id;
    row.appendChild(name);

    const count = doc.createElement("td");
    count.textContent = String(summary.waypoint_count);
    row.appendChild(count);

    // location content is not part of the stored route; placeholder
    const location = doc.createElement("td");
    location.textContent = ".";
    row.appendChild(location);

    const actions = doc.createElement("td");
    const edit = doc.createElement("button");
    edit.className = "edit-route";
    edit.textContent = "Edit";
    edit.addEventListener("click", () => handlers.onEdit(summary.route_id));
    const play = doc.createElement("button");
    play.className = "play-route";
    play.textContent = "Fly";
    play.addEventListener("click", () => handlers.onPlay(summary.route_id));
    const remove = doc.createElement("button");
    remove.className = "delete-route";
    remove.textContent = "Delete";
    remove.addEventListener("click", () => {
      if (handlers.confirmDialog(`Delete ${summary.route_id}?`)) {
        handlers.onDelete(summary.route_id);
      }
    });
    actions.appendChild(edit);
    actions.appendChild(play);
    actions.appendChild(remove);
    row.appendChild(actions);

    body.appendChild(row);
  }
  table.appendChild(body);
  container.appendChild(table);
}
