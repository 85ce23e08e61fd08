// Display projection for the map: degrees scale to meters around the
// route's mid latitude, then meters fit into the SVG viewport. This is
// view-layer math only; the service owns the authoritative conversions.

const EARTH_RADIUS_M = 6378137.0;
const METERS_PER_DEGREE = (Math.PI * EARTH_RADIUS_M) / 180.0;

// a route with no horizontal extent still needs a nonzero scale
const MIN_SPAN_M = 40.0;

export interface GeoPointLike {
  latitude_deg: number;
  longitude_deg: number;
}

export interface ScreenPoint {
  x: number;
  y: number;
}

export class MapProjection {
  private centerLat = 0;
  private centerLon = 0;
  private cosFactor = 1;
  private pxPerMeter = 1;

  constructor(
    readonly width: number,
    readonly height: number,
    readonly padding: number = 60,
  ) {}

  /** Center and scale so every point fits inside the padded viewport. */
  fit(points: GeoPointLike[]): void {
    if (points.length === 0) {
      this.centerLat = 0;
      this.centerLon = 0;
      this.cosFactor = 1;
      this.pxPerMeter = (this.width - 2 * this.padding) / MIN_SPAN_M;
      return;
    }
    const lats = points.map((p) => p.latitude_deg);
    const lons = points.map((p) => p.longitude_deg);
    this.centerLat = (Math.min(...lats) + Math.max(...lats)) / 2;
    this.centerLon = (Math.min(...lons) + Math.max(...lons)) / 2;
    this.cosFactor = Math.cos((this.centerLat * Math.PI) / 180);
    const spanX = Math.max(
      (Math.max(...lons) - Math.min(...lons)) * METERS_PER_DEGREE * this.cosFactor,
      MIN_SPAN_M,
    );
    const spanZ = Math.max(
      (Math.max(...lats) - Math.min(...lats)) * METERS_PER_DEGREE,
      MIN_SPAN_M,
    );
    this.pxPerMeter = Math.min(
      (this.width - 2 * this.padding) / spanX,
      (this.height - 2 * this.padding) / spanZ,
    );
  }

  /** Pixels per meter at the current fit; altitude stems reuse it. */
  scale(): number {
    return this.pxPerMeter;
  }

  project(point: GeoPointLike): ScreenPoint {
    const xM =
      (point.longitude_deg - this.centerLon) * METERS_PER_DEGREE * this.cosFactor;
    const zM = (point.latitude_deg - this.centerLat) * METERS_PER_DEGREE;
    return {
      x: this.width / 2 + xM * this.pxPerMeter,
      // north is up on screen
      y: this.height / 2 - zM * this.pxPerMeter,
    };
  }

  unproject(x: number, y: number): GeoPointLike {
    const xM = (x - this.width / 2) / this.pxPerMeter;
    const zM = (this.height / 2 - y) / this.pxPerMeter;
    return {
      latitude_deg: this.centerLat + zM / METERS_PER_DEGREE,
      longitude_deg:
        this.centerLon + xM / (METERS_PER_DEGREE * this.cosFactor),
    };
  }
}
