// Marker colors and labels per camera task, mirroring the service's
// web palette. The on-screen legend and every marker must use exactly
// these values; the integration tests cross-check them against the
// colors the service reports in its stream frames.

export const TASK_COLORS: Readonly<Record<number, string>> = {
  0: "#000000",
  1: "blue",
  2: "red",
  3: "green",
  4: "yellow",
};

export const TASK_LABELS: Readonly<Record<number, string>> = {
  0: "do nothing",
  1: "Take Picture",
  2: "Start video",
  3: "Start interval",
  4: "Take Panorama Picture",
};

export const TASK_OPTIONS: ReadonlyArray<{ task: number; label: string }> = [
  0, 1, 2, 3, 4,
].map((task) => ({ task, label: TASK_LABELS[task] }));

export function taskColor(task: number): string {
  const color = TASK_COLORS[task];
  if (color === undefined) throw new Error(`unknown task code ${task}`);
  return color;
}

export function taskLabel(task: number): string {
  const label = TASK_LABELS[task];
  if (label === undefined) throw new Error(`unknown task code ${task}`);
  return label;
}
