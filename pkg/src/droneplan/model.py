"""Core domain types: routes, waypoints, camera tasks, and validation.

Task codes are stored as small integers but travel as the string codes
"0".."4" in every persisted document, matching the storage schema the rest
of the architecture shares.
"""

from __future__ import annotations

import copy
import enum
import re
from dataclasses import dataclass, field

from .errors import DomainError

ROUTE_ID_PATTERN = re.compile(r"^PATH-([1-9][0-9]*)$")


class CameraTaskKind(enum.IntEnum):
    """The five camera tasks a waypoint can carry."""

    DO_NOTHING = 0
    TAKE_PICTURE = 1
    START_VIDEO = 2
    START_INTERVAL = 3
    TAKE_PANORAMA = 4

    @property
    def storage_code(self) -> str:
        """Code as persisted: the decimal string "0".."4"."""
        return str(self.value)

    @classmethod
    def parse(cls, code) -> "CameraTaskKind":
        """Parse an int or string code; anything outside {0..4} is rejected."""
        try:
            value = int(str(code).strip())
        except (TypeError, ValueError):
            raise DomainError(f"unknown task code {code!r}") from None
        try:
            return cls(value)
        except ValueError:
            raise DomainError(f"unknown task code {value}") from None


TASK_LABELS = {
    CameraTaskKind.DO_NOTHING: "do nothing",
    CameraTaskKind.TAKE_PICTURE: "Take Picture",
    CameraTaskKind.START_VIDEO: "Start video",
    CameraTaskKind.START_INTERVAL: "Start interval",
    CameraTaskKind.TAKE_PANORAMA: "Take Panorama Picture",
}


def task_label(kind: CameraTaskKind) -> str:
    """Fixed display label for a task kind."""
    return TASK_LABELS[CameraTaskKind(kind)]


@dataclass(frozen=True)
class TaskPalette:
    """Marker color per task kind, as used by the planning surfaces."""

    name: str
    colors: dict

    def color(self, kind: CameraTaskKind) -> str:
        return self.colors[CameraTaskKind(kind)]


WEB_PALETTE = TaskPalette(
    name="web",
    colors={
        CameraTaskKind.DO_NOTHING: "#000000",
        CameraTaskKind.TAKE_PICTURE: "blue",
        CameraTaskKind.START_VIDEO: "red",
        CameraTaskKind.START_INTERVAL: "green",
        CameraTaskKind.TAKE_PANORAMA: "yellow",
    },
)

# The handheld planner colors interval markers orange instead of green.
MOBILE_PALETTE = TaskPalette(
    name="mobile",
    colors={**WEB_PALETTE.colors, CameraTaskKind.START_INTERVAL: "orange"},
)


def task_color(kind: CameraTaskKind, palette: TaskPalette = WEB_PALETTE) -> str:
    """Palette color for a task kind (web palette unless told otherwise)."""
    return palette.color(kind)


def interval_seconds(instruction: str, default_s: float = 2.0) -> float:
    """Interval-task period from its instruction text.

    The instruction holds whole seconds as decimal text; empty means the
    configured default.
    """
    text = (instruction or "").strip()
    if not text:
        return float(default_s)
    try:
        seconds = int(text)
    except ValueError:
        raise DomainError(f"interval instruction must be whole seconds, got {instruction!r}") from None
    if seconds <= 0:
        raise DomainError(f"interval seconds must be positive, got {seconds}")
    return float(seconds)


def panorama_frames(instruction: str, default: int = 8) -> int:
    """Frame count for a panorama task; empty instruction means the default."""
    text = (instruction or "").strip()
    if not text:
        return int(default)
    try:
        frames = int(text)
    except ValueError:
        raise DomainError(f"panorama instruction must be a frame count, got {instruction!r}") from None
    if frames <= 0:
        raise DomainError(f"panorama frame count must be positive, got {frames}")
    return frames


def video_signal(instruction: str) -> str:
    """Video-task signal: "start", "stop", or "toggle" for empty text.

    Toggle pairs occurrences in route order: the first opens recording,
    the next closes it.
    """
    text = (instruction or "").strip().lower()
    if text == "":
        return "toggle"
    if text in ("start", "stop"):
        return text
    raise DomainError(f'video instruction must be "", "start" or "stop", got {instruction!r}')


def check_instruction(kind: CameraTaskKind, instruction: str) -> None:
    """Reject instruction text that is malformed for the given task kind."""
    kind = CameraTaskKind(kind)
    if kind is CameraTaskKind.START_INTERVAL:
        interval_seconds(instruction)
    elif kind is CameraTaskKind.TAKE_PANORAMA:
        panorama_frames(instruction)
    elif kind is CameraTaskKind.START_VIDEO:
        video_signal(instruction)
    # DO_NOTHING and TAKE_PICTURE carry free text.


@dataclass
class PathPoint:
    """One waypoint: position, altitude, and an optional camera task.

    ``point_id`` doubles as the storage order; id 0 is the first waypoint
    flown. ``instruction`` is the free-text task parameter (interval
    seconds, video start/stop, panorama frame count).
    """

    point_id: int
    latitude_deg: float
    longitude_deg: float
    altitude_m: float = 0.0
    task: CameraTaskKind = CameraTaskKind.DO_NOTHING
    instruction: str = ""


@dataclass
class Path:
    """A planned route: identifier, optional description, ordered waypoints."""

    route_id: str
    description: str | None = None
    points: list[PathPoint] = field(default_factory=list)

    def copy(self) -> "Path":
        return copy.deepcopy(self)


@dataclass(frozen=True)
class RouteLimits:
    """Configurable bounds applied during validation and editing."""

    altitude_max_m: float = 120.0
    max_waypoints: int = 99


DEFAULT_LIMITS = RouteLimits()


@dataclass(frozen=True)
class Violation:
    """One validation finding. Violations are data, not exceptions."""

    code: str
    message: str
    point_id: int | None = None


def _check_point(point: PathPoint, limits: RouteLimits) -> list[Violation]:
    found = []
    pid = point.point_id
    if not -90.0 <= point.latitude_deg <= 90.0:
        found.append(Violation("latitude", f"latitude {point.latitude_deg} out of range at id {pid}", pid))
    if not -180.0 <= point.longitude_deg <= 180.0:
        found.append(Violation("longitude", f"longitude {point.longitude_deg} out of range at id {pid}", pid))
    if not 0.0 <= point.altitude_m <= limits.altitude_max_m:
        found.append(
            Violation(
                "altitude",
                f"altitude out of range at id {pid}: {point.altitude_m} not in [0, {limits.altitude_max_m}]",
                pid,
            )
        )
    try:
        CameraTaskKind.parse(point.task if not isinstance(point.task, CameraTaskKind) else point.task.value)
    except DomainError:
        found.append(Violation("task", f"unknown task code {point.task} at id {pid}", pid))
    return found


def validate_path(path: Path, limits: RouteLimits = DEFAULT_LIMITS) -> list[Violation]:
    """Collect every invariant violation in ``path``; empty list means valid.

    Pure: never mutates the input, and identical inputs yield identical
    reports.
    """
    violations: list[Violation] = []
    if not ROUTE_ID_PATTERN.match(path.route_id or ""):
        violations.append(Violation("route_id", f"malformed route id {path.route_id!r}"))
    ids = [p.point_id for p in path.points]
    if ids != list(range(len(ids))):
        if len(set(ids)) != len(ids):
            violations.append(Violation("ids", f"duplicate point ids {sorted(ids)}"))
        else:
            violations.append(Violation("ids", f"non-consecutive ids {ids}"))
    if len(path.points) > limits.max_waypoints:
        violations.append(
            Violation("capacity", f"{len(path.points)} waypoints exceed limit {limits.max_waypoints}")
        )
    for point in path.points:
        violations.extend(_check_point(point, limits))
    return violations
