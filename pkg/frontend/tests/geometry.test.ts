import { describe, expect, it } from "vitest";

import { MapProjection } from "../src/geometry.js";

const POINTS = [
  { latitude_deg: 4.6006, longitude_deg: -74.0627 },
  { latitude_deg: 4.6011, longitude_deg: -74.0622 },
  { latitude_deg: 4.6009, longitude_deg: -74.0631 },
];

describe("map projection", () => {
  it("fits every point inside the padded viewport", () => {
    const projection = new MapProjection(900, 600, 60);
    projection.fit(POINTS);
    for (const point of POINTS) {
      const { x, y } = projection.project(point);
      expect(x).toBeGreaterThanOrEqual(60 - 1e-9);
      expect(x).toBeLessThanOrEqual(900 - 60 + 1e-9);
      expect(y).toBeGreaterThanOrEqual(60 - 1e-9);
      expect(y).toBeLessThanOrEqual(600 - 60 + 1e-9);
    }
  });

  it("project and unproject are inverse", () => {
    const projection = new MapProjection(900, 600);
    projection.fit(POINTS);
    for (const point of POINTS) {
      const screen = projection.project(point);
      const back = projection.unproject(screen.x, screen.y);
      expect(back.latitude_deg).toBeCloseTo(point.latitude_deg, 12);
      expect(back.longitude_deg).toBeCloseTo(point.longitude_deg, 12);
    }
  });

  it("north appears above south on screen", () => {
    const projection = new MapProjection(900, 600);
    projection.fit(POINTS);
    const north = projection.project({ latitude_deg: 4.6011, longitude_deg: -74.0627 });
    const south = projection.project({ latitude_deg: 4.6006, longitude_deg: -74.0627 });
    expect(north.y).toBeLessThan(south.y);
  });

  it("a single point still yields a usable scale", () => {
    const projection = new MapProjection(900, 600);
    projection.fit([POINTS[0]]);
    expect(projection.scale()).toBeGreaterThan(0);
    expect(Number.isFinite(projection.scale())).toBe(true);
    const { x, y } = projection.project(POINTS[0]);
    expect(x).toBeCloseTo(450, 6);
    expect(y).toBeCloseTo(300, 6);
  });

  it("an empty fit keeps projection finite", () => {
    const projection = new MapProjection(900, 600);
    projection.fit([]);
    const spot = projection.project({ latitude_deg: 0, longitude_deg: 0 });
    expect(Number.isFinite(spot.x)).toBe(true);
    expect(Number.isFinite(spot.y)).toBe(true);
  });
});
