// SVG map: ground track, elevated dashed guide, altitude stems, task
// colored markers, and the drone icon during playback. Marker height
// above its ground point is proportional to waypoint altitude, using
// the same pixel scale as horizontal distances.

import { StreamFrame, Waypoint } from "./api.js";
import { GeoPointLike, MapProjection } from "./geometry.js";
import { taskColor } from "./palette.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface MapClickHandler {
  (point: GeoPointLike): void;
}

export class MapView {
  readonly svg: SVGSVGElement;
  readonly projection: MapProjection;
  private readonly routeLayer: SVGGElement;
  private readonly droneLayer: SVGGElement;
  private points: Waypoint[] = [];
  onMapClick: MapClickHandler | null = null;

  constructor(
    private readonly doc: Document,
    readonly width: number = 900,
    readonly height: number = 600,
  ) {
    this.projection = new MapProjection(width, height);
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    this.svg.setAttribute("class", "map-svg");
    this.routeLayer = doc.createElementNS(SVG_NS, "g") as SVGGElement;
    this.routeLayer.setAttribute("class", "route-layer");
    this.droneLayer = doc.createElementNS(SVG_NS, "g") as SVGGElement;
    this.droneLayer.setAttribute("class", "drone-layer");
    this.svg.appendChild(this.routeLayer);
    this.svg.appendChild(this.droneLayer);
    this.svg.addEventListener("click", (event) => {
      if (this.onMapClick === null) return;
      const mouse = event as MouseEvent;
      const rect = this.svg.getBoundingClientRect();
      const x = ((mouse.clientX - rect.left) / (rect.width || width)) * width;
      const y = ((mouse.clientY - rect.top) / (rect.height || height)) * height;
      this.onMapClick(this.projection.unproject(x, y));
    });
  }

  private elevatedY(ground: { y: number }, altitude_m: number): number {
    return ground.y - altitude_m * this.projection.scale();
  }

  /** Re-fit the viewport; call before playback so the view stays put. */
  fitTo(points: GeoPointLike[]): void {
    this.projection.fit(points);
  }

  render(points: Waypoint[], refit: boolean = true): void {
    this.points = points;
    if (refit) this.projection.fit(points);
    while (this.routeLayer.firstChild) {
      this.routeLayer.removeChild(this.routeLayer.firstChild);
    }
    if (points.length === 0) return;

    const ground = points.map((p) => this.projection.project(p));
    const tops = points.map((p, i) => ({
      x: ground[i].x,
      y: this.elevatedY(ground[i], p.altitude_m),
    }));

    // ground polyline connects consecutive waypoints at the surface
    if (points.length > 1) {
      const groundLine = this.doc.createElementNS(SVG_NS, "polyline");
      groundLine.setAttribute("class", "ground-line");
      groundLine.setAttribute("points", ground.map((p) => `${p.x},${p.y}`).join(" "));
      groundLine.setAttribute("fill", "none");
      this.routeLayer.appendChild(groundLine);

      // the elevated dashed guide is the path the drone actually flies
      const guide = this.doc.createElementNS(SVG_NS, "polyline");
      guide.setAttribute("class", "guide-line");
      guide.setAttribute("points", tops.map((p) => `${p.x},${p.y}`).join(" "));
      guide.setAttribute("fill", "none");
      guide.setAttribute("stroke-dasharray", "6 4");
      this.routeLayer.appendChild(guide);
    }

    points.forEach((point, i) => {
      const stem = this.doc.createElementNS(SVG_NS, "line");
      stem.setAttribute("class", "altitude-stem");
      stem.setAttribute("x1", String(ground[i].x));
      stem.setAttribute("y1", String(ground[i].y));
      stem.setAttribute("x2", String(tops[i].x));
      stem.setAttribute("y2", String(tops[i].y));
      this.routeLayer.appendChild(stem);

      const marker = this.doc.createElementNS(SVG_NS, "circle");
      marker.setAttribute("class", "waypoint-marker");
      marker.setAttribute("data-order", String(i + 1));
      marker.setAttribute("cx", String(tops[i].x));
      marker.setAttribute("cy", String(tops[i].y));
      marker.setAttribute("r", "7");
      marker.setAttribute("fill", taskColor(point.task));
      this.routeLayer.appendChild(marker);

      const order = this.doc.createElementNS(SVG_NS, "text");
      order.setAttribute("class", "waypoint-order");
      order.setAttribute("x", String(tops[i].x + 10));
      order.setAttribute("y", String(tops[i].y - 10));
      order.textContent = String(i + 1);
      this.routeLayer.appendChild(order);
    });
  }

  /** Drone icon tinted by the frame's task color, or hidden when null. */
  setDrone(frame: StreamFrame | null): void {
    while (this.droneLayer.firstChild) {
      this.droneLayer.removeChild(this.droneLayer.firstChild);
    }
    if (frame === null) return;
    const ground = this.projection.project(frame);
    const y = this.elevatedY(ground, frame.altitude_m);

    const shadow = this.doc.createElementNS(SVG_NS, "circle");
    shadow.setAttribute("class", "drone-shadow");
    shadow.setAttribute("cx", String(ground.x));
    shadow.setAttribute("cy", String(ground.y));
    shadow.setAttribute("r", "3");
    this.droneLayer.appendChild(shadow);

    const icon = this.doc.createElementNS(SVG_NS, "circle");
    icon.setAttribute("class", "drone-icon");
    icon.setAttribute("cx", String(ground.x));
    icon.setAttribute("cy", String(y));
    icon.setAttribute("r", "9");
    icon.setAttribute("fill", frame.color);
    this.droneLayer.appendChild(icon);

    const label = this.doc.createElementNS(SVG_NS, "text");
    label.setAttribute("class", "drone-label");
    label.setAttribute("x", String(ground.x + 14));
    label.setAttribute("y", String(y + 4));
    label.textContent = frame.label;
    this.droneLayer.appendChild(label);
  }

  currentPoints(): Waypoint[] {
    return this.points;
  }
}
