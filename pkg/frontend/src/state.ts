// Client-side working copy for edit mode. Every mutation returns a new
// state; nothing is persisted until save() issues the PUT, so closing
// the editor without saving leaves the stored route untouched.

import { Route, Waypoint } from "./api.js";

export const DEFAULT_ALTITUDE_M = 10.0;
export const ALTITUDE_MIN_M = 0.0;
export const ALTITUDE_MAX_M = 120.0;

export interface EditState {
  routeId: string;
  description: string;
  points: Waypoint[];
  dirty: boolean;
}

export interface WaypointRowView {
  order: number;
  latitude: string;
  longitude: string;
  altitude_m: number;
  task: number;
  instruction: string;
}

export function startEdit(route: Route): EditState {
  return {
    routeId: route.route_id,
    description: route.description ?? "",
    points: route.points.map((p) => ({ ...p })),
    dirty: false,
  };
}

function withPoints(state: EditState, points: Waypoint[]): EditState {
  return { ...state, points, dirty: true };
}

/** Click-to-add: new waypoints start at the default altitude, no task. */
export function addWaypoint(
  state: EditState,
  latitude_deg: number,
  longitude_deg: number,
): EditState {
  const point: Waypoint = {
    id: state.points.length,
    latitude_deg,
    longitude_deg,
    altitude_m: DEFAULT_ALTITUDE_M,
    task: 0,
    instruction: "",
  };
  return withPoints(state, [...state.points, point]);
}

export function removeWaypoint(state: EditState, index: number): EditState {
  const points = state.points
    .filter((_, i) => i !== index)
    .map((p, i) => ({ ...p, id: i }));
  return withPoints(state, points);
}

function updatePoint(
  state: EditState,
  index: number,
  change: Partial<Waypoint>,
): EditState {
  if (index < 0 || index >= state.points.length) {
    throw new Error(`no waypoint at index ${index}`);
  }
  const points = state.points.map((p, i) =>
    i === index ? { ...p, ...change } : p,
  );
  return withPoints(state, points);
}

/** Slider and numeric input share this; both clamp to the legal range. */
export function setAltitude(
  state: EditState,
  index: number,
  altitude_m: number,
): EditState {
  const clamped = Math.min(ALTITUDE_MAX_M, Math.max(ALTITUDE_MIN_M, altitude_m));
  return updatePoint(state, index, { altitude_m: clamped });
}

export function setTask(state: EditState, index: number, task: number): EditState {
  return updatePoint(state, index, { task });
}

export function setInstruction(
  state: EditState,
  index: number,
  instruction: string,
): EditState {
  return updatePoint(state, index, { instruction });
}

export function setDescription(state: EditState, description: string): EditState {
  return { ...state, description, dirty: true };
}

export function moveWaypoint(
  state: EditState,
  latitude_deg: number,
  longitude_deg: number,
  index: number,
): EditState {
  return updatePoint(state, index, { latitude_deg, longitude_deg });
}

/** Body for PUT /paths/{id}. */
export function toRoute(state: EditState): Route {
  return {
    route_id: state.routeId,
    description: state.description === "" ? null : state.description,
    points: state.points.map((p) => ({ ...p })),
  };
}

/** Sidebar rows; order is 1-based for display. */
export function waypointRows(state: EditState): WaypointRowView[] {
  return state.points.map((p, i) => ({
    order: i + 1,
    latitude: p.latitude_deg.toFixed(6),
    longitude: p.longitude_deg.toFixed(6),
    altitude_m: p.altitude_m,
    task: p.task,
    instruction: p.instruction,
  }));
}
