"""Request and response bodies for the HTTP service.

These are deliberately thin: they carry plain floats and ints, and the
conversion helpers in app.py translate to and from the core dataclasses.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class WaypointModel(BaseModel):
    id: int
    latitude_deg: float
    longitude_deg: float
    altitude_m: float = 10.0
    task: int = 0
    instruction: str = ""


class RoutePayload(BaseModel):
    """Route body for create and replace. Waypoint ids must run 0..n-1."""

    description: str | None = None
    points: list[WaypointModel] = Field(default_factory=list)


class RouteResource(RoutePayload):
    route_id: str


class RouteSummaryModel(BaseModel):
    route_id: str
    description: str
    waypoint_count: int


class HomeModel(BaseModel):
    latitude_deg: float
    longitude_deg: float


class SimulateRequest(BaseModel):
    """Simulation knobs; defaults mirror SimConfig.

    home defaults to the ground under the first waypoint.
    """

    home: HomeModel | None = None
    mode: str = "corrected"
    speed_mps: float = 5.0
    tick_s: float = 0.1
    default_interval_s: float = 2.0
    panorama_frames: int = 8
    panorama_rotation_s: float = 8.0
    noise_sigma_m: float = 0.0
    rng_seed: int = 0


class AnalysisRequest(BaseModel):
    """Flown-record document plus optional overrides.

    home and mode fall back to the document's HOME and MODE blocks, then to
    the first planned waypoint and the legacy projection.
    """

    flown: dict
    home: HomeModel | None = None
    mode: str | None = None


class ErrorRowModel(BaseModel):
    order: int
    x_planned: float
    z_planned: float
    x_flown: float
    z_flown: float
    error_x: float
    error_z: float


class AnalysisResponse(BaseModel):
    route_id: str
    mode: str
    home: HomeModel
    rows: list[ErrorRowModel]
    mean_error_x: float
    mean_error_z: float
    # (max_x, max_z, mean_x, mean_z) rounded for display
    summary: list[float]
