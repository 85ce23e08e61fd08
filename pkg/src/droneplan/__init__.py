"""Waypoint-mission planning, flight simulation, and flown-route error analysis.

The package splits into small layers: ``model`` (routes, waypoints, camera
tasks, validation), ``geodesy`` (home-relative planar projection in two
modes), ``store`` (document-tree persistence), ``editor`` (interactive
editing sessions with undo), ``simulator`` (deterministic kinematic
execution with camera events), ``analysis`` (planned-versus-flown error
reports), plus an HTTP service and a command-line front end on top.
"""

from .analysis import (
    ErrorReport,
    ErrorRow,
    FlownRecord,
    compare,
    flown_from_document,
    flown_to_document,
    parse_flown,
    render_report,
    summarize,
)
from .editor import DEFAULT_ALTITUDE_M, EditSession, WaypointRow, open_session
from .errors import (
    CapacityError,
    DomainError,
    DronePlanError,
    NotFoundError,
    PairingError,
    SchemaError,
    ScheduleError,
    ValidationFailed,
)
from .geodesy import (
    CORRECTED,
    MODES,
    PAPER,
    GeodesyMode,
    GeoPoint,
    HomePoint,
    LocalCoord,
    from_local,
    leg_length_3d,
    parse_mode,
    to_local,
)
from .model import (
    DEFAULT_LIMITS,
    MOBILE_PALETTE,
    TASK_LABELS,
    WEB_PALETTE,
    CameraTaskKind,
    Path,
    PathPoint,
    RouteLimits,
    TaskPalette,
    Violation,
    check_instruction,
    interval_seconds,
    panorama_frames,
    task_color,
    task_label,
    validate_path,
    video_signal,
)
from .simulator import (
    CameraEvent,
    Schedule,
    SimConfig,
    SimulationResult,
    compile_schedule,
    default_home,
    simulate,
    stream_frames,
)
from .store import RouteStore, RouteSummary, decode_route, encode_route, route_number

__version__ = "1.0.0"

__all__ = [
    "CORRECTED",
    "DEFAULT_ALTITUDE_M",
    "DEFAULT_LIMITS",
    "MOBILE_PALETTE",
    "MODES",
    "PAPER",
    "TASK_LABELS",
    "WEB_PALETTE",
    "CameraEvent",
    "CameraTaskKind",
    "CapacityError",
    "DomainError",
    "DronePlanError",
    "EditSession",
    "ErrorReport",
    "ErrorRow",
    "FlownRecord",
    "GeodesyMode",
    "GeoPoint",
    "HomePoint",
    "LocalCoord",
    "NotFoundError",
    "PairingError",
    "Path",
    "PathPoint",
    "RouteLimits",
    "RouteStore",
    "RouteSummary",
    "SchemaError",
    "Schedule",
    "ScheduleError",
    "SimConfig",
    "SimulationResult",
    "TaskPalette",
    "ValidationFailed",
    "Violation",
    "WaypointRow",
    "check_instruction",
    "compare",
    "compile_schedule",
    "decode_route",
    "default_home",
    "encode_route",
    "flown_from_document",
    "flown_to_document",
    "from_local",
    "interval_seconds",
    "leg_length_3d",
    "open_session",
    "panorama_frames",
    "parse_flown",
    "parse_mode",
    "render_report",
    "route_number",
    "simulate",
    "stream_frames",
    "summarize",
    "task_color",
    "task_label",
    "to_local",
    "validate_path",
    "video_signal",
]
