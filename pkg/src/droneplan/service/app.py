"""HTTP facade over the route store, the simulator and the error analysis.

One process owns one RouteStore. Every domain failure maps to a machine
code the clients can branch on: not_found, validation, schema, pairing,
domain and conflict.
"""

from __future__ import annotations

import json
import threading

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response, StreamingResponse

from ..analysis import compare, flown_from_document, summarize
from ..errors import (
    CapacityError,
    DomainError,
    DronePlanError,
    NotFoundError,
    PairingError,
    SchemaError,
    ScheduleError,
    ValidationFailed,
)
from ..geodesy import PAPER, HomePoint, parse_mode
from ..model import MOBILE_PALETTE, WEB_PALETTE, Path, PathPoint
from ..simulator import SimConfig, default_home, simulate, stream_frames
from ..store import RouteStore
from .schemas import (
    AnalysisRequest,
    AnalysisResponse,
    ErrorRowModel,
    HomeModel,
    RoutePayload,
    RouteResource,
    RouteSummaryModel,
    SimulateRequest,
    WaypointModel,
)

_STATUS = {
    NotFoundError: (404, "not_found"),
    ValidationFailed: (422, "validation"),
    SchemaError: (422, "schema"),
    PairingError: (422, "pairing"),
    ScheduleError: (422, "domain"),
    CapacityError: (422, "domain"),
    DomainError: (422, "domain"),
}

_PALETTES = {"web": WEB_PALETTE, "mobile": MOBILE_PALETTE}


def _error_response(exc: DronePlanError) -> JSONResponse:
    for cls in type(exc).__mro__:
        if cls in _STATUS:
            status, code = _STATUS[cls]
            break
    else:
        status, code = 422, "domain"
    payload: dict = {"code": code, "message": str(exc)}
    if isinstance(exc, ValidationFailed):
        payload["violations"] = [
            {"code": v.code, "message": v.message, "point_id": v.point_id}
            for v in exc.violations
        ]
    return JSONResponse(status_code=status, content=payload)


def _to_path(route_id: str, payload: RoutePayload) -> Path:
    points = [
        PathPoint(
            point_id=wp.id,
            latitude_deg=wp.latitude_deg,
            longitude_deg=wp.longitude_deg,
            altitude_m=wp.altitude_m,
            task=wp.task,
            instruction=wp.instruction,
        )
        for wp in payload.points
    ]
    return Path(route_id=route_id, description=payload.description, points=points)


def _to_resource(path: Path) -> RouteResource:
    return RouteResource(
        route_id=path.route_id,
        description=path.description,
        points=[
            WaypointModel(
                id=p.point_id,
                latitude_deg=p.latitude_deg,
                longitude_deg=p.longitude_deg,
                altitude_m=p.altitude_m,
                task=int(p.task),
                instruction=p.instruction,
            )
            for p in path.points
        ],
    )


def _palette(name: str):
    try:
        return _PALETTES[name]
    except KeyError:
        raise DomainError(
            "unknown palette %r; expected one of %s" % (name, sorted(_PALETTES))
        ) from None


def create_app(store: RouteStore | None = None) -> FastAPI:
    """Build the service around one store (in-memory by default)."""
    store = store if store is not None else RouteStore()
    app = FastAPI(title="droneplan service", version="1.0.0")
    app.state.store = store

    # One playback stream per route at a time; a second request gets 409
    # instead of a second simulation fighting over the same animation.
    active_streams: set[str] = set()
    stream_lock = threading.Lock()
    app.state.active_streams = active_streams
    app.state.stream_lock = stream_lock

    @app.exception_handler(DronePlanError)
    async def on_domain_error(request: Request, exc: DronePlanError):
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def on_body_error(request: Request, exc: RequestValidationError):
        message = "; ".join(
            "%s: %s" % (".".join(str(part) for part in err["loc"]), err["msg"])
            for err in exc.errors()
        )
        return JSONResponse(status_code=422, content={"code": "schema", "message": message})

    @app.get("/")
    def index():
        return {"service": "droneplan", "version": app.version}

    @app.get("/paths", response_model=list[RouteSummaryModel])
    def list_paths():
        return [
            RouteSummaryModel(
                route_id=s.route_id,
                description=s.description,
                waypoint_count=s.waypoint_count,
            )
            for s in store.list_routes()
        ]

    @app.post("/paths", response_model=RouteResource, status_code=201)
    def create_path(payload: RoutePayload):
        route_id = store.next_route_id()
        path = _to_path(route_id, payload)
        store.save_route(path)
        return _to_resource(path)

    @app.get("/paths/{route_id}", response_model=RouteResource)
    def get_path(route_id: str):
        return _to_resource(store.load_route(route_id))

    @app.put("/paths/{route_id}", response_model=RouteResource)
    def put_path(route_id: str, payload: RoutePayload):
        """Create or replace the route stored under route_id."""
        path = _to_path(route_id, payload)
        store.save_route(path)
        return _to_resource(path)

    @app.delete("/paths/{route_id}", status_code=204)
    def delete_path(route_id: str):
        store.delete_route(route_id)
        return Response(status_code=204)

    def _run(route_id: str, request: SimulateRequest):
        path = store.load_route(route_id)
        config = SimConfig(
            speed_mps=request.speed_mps,
            tick_s=request.tick_s,
            default_interval_s=request.default_interval_s,
            panorama_frames=request.panorama_frames,
            panorama_rotation_s=request.panorama_rotation_s,
            noise_sigma_m=request.noise_sigma_m,
            rng_seed=request.rng_seed,
        )
        home = None
        if request.home is not None:
            home = HomePoint(request.home.latitude_deg, request.home.longitude_deg)
        return simulate(path, home, config, parse_mode(request.mode))

    @app.post("/paths/{route_id}/simulate")
    def run_simulation(route_id: str, request: SimulateRequest | None = None):
        result = _run(route_id, request or SimulateRequest())
        return result.to_document()

    def _stream_request(
        mode: str = "corrected",
        speed_mps: float = 5.0,
        tick_s: float = 0.1,
        default_interval_s: float = 2.0,
        panorama_frames: int = 8,
        panorama_rotation_s: float = 8.0,
        noise_sigma_m: float = 0.0,
        rng_seed: int = 0,
        home_latitude_deg: float | None = None,
        home_longitude_deg: float | None = None,
    ) -> SimulateRequest:
        home = None
        if home_latitude_deg is not None and home_longitude_deg is not None:
            home = HomeModel(
                latitude_deg=home_latitude_deg, longitude_deg=home_longitude_deg
            )
        return SimulateRequest(
            home=home,
            mode=mode,
            speed_mps=speed_mps,
            tick_s=tick_s,
            default_interval_s=default_interval_s,
            panorama_frames=panorama_frames,
            panorama_rotation_s=panorama_rotation_s,
            noise_sigma_m=noise_sigma_m,
            rng_seed=rng_seed,
        )

    @app.get("/paths/{route_id}/simulate/stream")
    def stream_simulation(
        route_id: str,
        mode: str = "corrected",
        speed_mps: float = 5.0,
        tick_s: float = 0.1,
        default_interval_s: float = 2.0,
        panorama_frames: int = 8,
        panorama_rotation_s: float = 8.0,
        noise_sigma_m: float = 0.0,
        rng_seed: int = 0,
        home_latitude_deg: float | None = None,
        home_longitude_deg: float | None = None,
        palette: str = "web",
    ):
        """Animation frames as newline-delimited JSON at tick cadence."""
        colors = _palette(palette)
        request = _stream_request(
            mode,
            speed_mps,
            tick_s,
            default_interval_s,
            panorama_frames,
            panorama_rotation_s,
            noise_sigma_m,
            rng_seed,
            home_latitude_deg,
            home_longitude_deg,
        )
        result = _run(route_id, request)
        with stream_lock:
            if route_id in active_streams:
                return JSONResponse(
                    status_code=409,
                    content={
                        "code": "conflict",
                        "message": "a stream for %s is already active" % route_id,
                    },
                )
            active_streams.add(route_id)

        def lines():
            try:
                for frame in stream_frames(result, colors):
                    yield json.dumps(frame, separators=(",", ":")) + "\n"
            finally:
                with stream_lock:
                    active_streams.discard(route_id)

        return StreamingResponse(lines(), media_type="application/x-ndjson")

    @app.get("/paths/{route_id}/simulate/state")
    def simulation_state(
        route_id: str,
        t: float = 0.0,
        mode: str = "corrected",
        speed_mps: float = 5.0,
        tick_s: float = 0.1,
        default_interval_s: float = 2.0,
        panorama_frames: int = 8,
        panorama_rotation_s: float = 8.0,
        noise_sigma_m: float = 0.0,
        rng_seed: int = 0,
        home_latitude_deg: float | None = None,
        home_longitude_deg: float | None = None,
        palette: str = "web",
    ):
        """Polling fallback: the stream frame in effect at time t."""
        colors = _palette(palette)
        request = _stream_request(
            mode,
            speed_mps,
            tick_s,
            default_interval_s,
            panorama_frames,
            panorama_rotation_s,
            noise_sigma_m,
            rng_seed,
            home_latitude_deg,
            home_longitude_deg,
        )
        result = _run(route_id, request)
        at = max(t, 0.0)
        chosen = None
        for frame in stream_frames(result, colors):
            if chosen is None or frame["time_s"] <= at:
                chosen = frame
            else:
                break
        chosen["total_time_s"] = result.total_time_s
        return chosen

    @app.post("/paths/{route_id}/analysis", response_model=AnalysisResponse)
    def analyze_path(route_id: str, request: AnalysisRequest):
        path = store.load_route(route_id)
        record, doc_home, doc_mode = flown_from_document(request.flown)
        if request.home is not None:
            home = HomePoint(request.home.latitude_deg, request.home.longitude_deg)
        elif doc_home is not None:
            home = doc_home
        else:
            home = default_home(path)
        if request.mode is not None:
            mode = parse_mode(request.mode)
        else:
            mode = doc_mode or PAPER
        report = compare(path, record, home, mode)
        return AnalysisResponse(
            route_id=route_id,
            mode=mode.name,
            home=HomeModel(
                latitude_deg=home.latitude_deg, longitude_deg=home.longitude_deg
            ),
            rows=[
                ErrorRowModel(
                    order=r.order,
                    x_planned=r.x_planned,
                    z_planned=r.z_planned,
                    x_flown=r.x_flown,
                    z_flown=r.z_flown,
                    error_x=r.error_x,
                    error_z=r.error_z,
                )
                for r in report.rows
            ],
            mean_error_x=report.mean_error_x,
            mean_error_z=report.mean_error_z,
            summary=list(summarize(report)),
        )

    return app
