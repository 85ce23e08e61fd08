"""Session-based route editing, independent of any UI.

A session owns a working copy of one route. Every mutation snapshots the
prior copy onto an undo stack, keeps point ids dense (ids are storage
order, so deletion re-indexes), and flips the dirty flag. Nothing touches
the store until :meth:`EditSession.commit`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, DomainError, NotFoundError, ValidationFailed
from .model import (
    DEFAULT_LIMITS,
    CameraTaskKind,
    Path,
    PathPoint,
    RouteLimits,
    check_instruction,
    task_label,
    validate_path,
)

DEFAULT_ALTITUDE_M = 10.0
UNDO_DEPTH = 32


@dataclass(frozen=True)
class WaypointRow:
    """Display row for the waypoint details table (1-based order, 5-decimal
    coordinates; the underlying data stays unrounded)."""

    order: int
    latitude_deg: float
    longitude_deg: float
    height: str
    task_label: str


class EditSession:
    def __init__(self, working: Path, limits: RouteLimits = DEFAULT_LIMITS):
        self.working = working
        self.limits = limits
        self.dirty = False
        self._undo: list[Path] = []

    # -- helpers -------------------------------------------------------

    def _snapshot(self) -> None:
        self._undo.append(self.working.copy())
        if len(self._undo) > UNDO_DEPTH:
            self._undo.pop(0)

    def _point(self, point_id: int) -> PathPoint:
        for point in self.working.points:
            if point.point_id == point_id:
                return point
        raise NotFoundError(f"no waypoint with id {point_id} in {self.working.route_id}")

    # -- operations ----------------------------------------------------

    def add_waypoint(self, latitude_deg: float, longitude_deg: float) -> PathPoint:
        """Append a waypoint at the default altitude with no task."""
        if not -90.0 <= latitude_deg <= 90.0:
            raise DomainError(f"latitude {latitude_deg} out of range [-90, 90]")
        if not -180.0 <= longitude_deg <= 180.0:
            raise DomainError(f"longitude {longitude_deg} out of range [-180, 180]")
        if len(self.working.points) >= self.limits.max_waypoints:
            raise CapacityError(f"route already has {self.limits.max_waypoints} waypoints")
        self._snapshot()
        point = PathPoint(
            point_id=len(self.working.points),
            latitude_deg=latitude_deg,
            longitude_deg=longitude_deg,
            altitude_m=DEFAULT_ALTITUDE_M,
        )
        self.working.points.append(point)
        self.dirty = True
        return point

    def remove_waypoint(self, point_id: int) -> None:
        """Drop a waypoint and re-index the rest, preserving relative order."""
        self._point(point_id)
        self._snapshot()
        remaining = [p for p in self.working.points if p.point_id != point_id]
        for index, point in enumerate(remaining):
            point.point_id = index
        self.working.points = remaining
        self.dirty = True

    def set_altitude(self, point_id: int, meters: float) -> PathPoint:
        if not 0.0 <= meters <= self.limits.altitude_max_m:
            raise DomainError(f"altitude {meters} out of range [0, {self.limits.altitude_max_m}]")
        point = self._point(point_id)
        self._snapshot()
        point.altitude_m = meters
        self.dirty = True
        return point

    def set_task(self, point_id: int, kind, instruction: str = "") -> PathPoint:
        kind = CameraTaskKind.parse(kind if not isinstance(kind, CameraTaskKind) else kind.value)
        check_instruction(kind, instruction)
        point = self._point(point_id)
        self._snapshot()
        point.task = kind
        point.instruction = instruction
        self.dirty = True
        return point

    def set_description(self, text: str) -> None:
        """Set the route description; empty text clears it to absent."""
        self._snapshot()
        self.working.description = text if text else None
        self.dirty = True

    def waypoint_details(self) -> list[WaypointRow]:
        rows = []
        for point in self.working.points:
            rows.append(
                WaypointRow(
                    order=point.point_id + 1,
                    latitude_deg=round(point.latitude_deg, 5),
                    longitude_deg=round(point.longitude_deg, 5),
                    height=f"{point.altitude_m:g} m",
                    task_label=task_label(point.task),
                )
            )
        return rows

    def undo(self) -> bool:
        """Restore the previous working copy; False when nothing to undo."""
        if not self._undo:
            return False
        self.working = self._undo.pop()
        self.dirty = True
        return True

    def commit(self, store) -> str:
        """Persist the working copy; the session is untouched on failure."""
        route_id = store.save_route(self.working.copy())
        self.dirty = False
        return route_id


def open_session(
    source: Path | None = None,
    new_id: str | None = None,
    limits: RouteLimits = DEFAULT_LIMITS,
) -> EditSession:
    """Start editing: a deep copy of ``source``, or an empty route under
    ``new_id``."""
    if source is not None:
        violations = validate_path(source, limits)
        if violations:
            raise ValidationFailed(violations)
        return EditSession(source.copy(), limits)
    if not new_id:
        raise DomainError("a new route needs an id")
    return EditSession(Path(route_id=new_id), limits)
