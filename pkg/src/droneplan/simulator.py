"""Deterministic kinematic execution of a route.

The simulator turns a route into a timed mission: the drone starts on the
ground under waypoint 0, climbs vertically, flies each leg as a straight
segment in the home-relative local frame at constant speed, and hovers in
place while panoramas are captured.  Camera tasks attached to waypoints
become timestamped events:

* kind 1 fires one photo at arrival,
* kind 2 opens or closes a video recording (start/stop/toggle pairing),
* kind 3 fires interval shots along the leg leaving that waypoint,
* kind 4 hovers and emits evenly spaced panorama frames.

Arrival measurements optionally carry seeded Gaussian noise per horizontal
axis so the error-analysis pipeline can be exercised without hardware; the
trace itself is always exact.  Identical inputs (including the seed) give
identical results.
"""

from __future__ import annotations

import dataclasses
import math
import random
from typing import Iterator

from .errors import DomainError, ScheduleError, ValidationFailed
from .geodesy import CORRECTED, GeodesyMode, GeoPoint, HomePoint, LocalCoord, from_local, to_local
from .model import (
    CameraTaskKind,
    Path,
    TaskPalette,
    WEB_PALETTE,
    interval_seconds,
    panorama_frames,
    task_label,
    validate_path,
    video_signal,
)

# Event kinds on the wire.  Single-shot kinds use sequence 0; multi-shot
# kinds (interval_shot, panorama_frame) number their shots from 0.
PHOTO = "photo"
VIDEO_START = "video_start"
VIDEO_STOP = "video_stop"
INTERVAL_SHOT = "interval_shot"
PANORAMA_FRAME = "panorama_frame"
PANORAMA_COMPLETE = "panorama_complete"

EVENT_KINDS = (PHOTO, VIDEO_START, VIDEO_STOP, INTERVAL_SHOT, PANORAMA_FRAME, PANORAMA_COMPLETE)

# Which camera-task code an event reports, for palette lookups.
EVENT_TASK_CODE = {
    PHOTO: 1,
    VIDEO_START: 2,
    VIDEO_STOP: 2,
    INTERVAL_SHOT: 3,
    PANORAMA_FRAME: 4,
    PANORAMA_COMPLETE: 4,
}

STATUS_COMPLETED = "Completed"
COMPLETION_MESSAGE = "Simulation finished"

# Slack when deciding whether an interval shot lands exactly on the leg end.
# Leg durations come from a coordinate round trip, so "shot at leg end" can
# miss by a few ULPs; the convention is inclusive at the end of the leg.
_END_SLACK_S = 1e-9


@dataclasses.dataclass(frozen=True)
class SimConfig:
    """Knobs for one simulation run."""

    speed_mps: float = 5.0
    tick_s: float = 0.1
    default_interval_s: float = 2.0
    panorama_frames: int = 8
    panorama_rotation_s: float = 8.0
    noise_sigma_m: float = 0.0
    rng_seed: int = 0

    def __post_init__(self):
        if not self.speed_mps > 0:
            raise DomainError("speed_mps must be positive")
        if not self.tick_s > 0:
            raise DomainError("tick_s must be positive")
        if not self.default_interval_s > 0:
            raise DomainError("default_interval_s must be positive")
        if self.panorama_frames < 1:
            raise DomainError("panorama_frames must be at least 1")
        if not self.panorama_rotation_s > 0:
            raise DomainError("panorama_rotation_s must be positive")
        if self.noise_sigma_m < 0:
            raise DomainError("noise_sigma_m must not be negative")


@dataclasses.dataclass(frozen=True)
class ArrivalAction:
    """One camera action executed when a waypoint is reached."""

    waypoint_id: int
    action: str  # photo | video_start | video_stop | panorama
    frames: int = 0  # panorama only


@dataclasses.dataclass(frozen=True)
class Schedule:
    """Symbolic task program: what happens where, with no geometry yet."""

    arrivals: tuple[ArrivalAction, ...]
    intervals: dict[int, float]  # waypoint id -> shot spacing on the departing leg
    warnings: tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class CameraEvent:
    time_s: float
    kind: str
    waypoint_id: int
    sequence: int = 0


@dataclasses.dataclass(frozen=True)
class TracePoint:
    time_s: float
    latitude_deg: float
    longitude_deg: float
    altitude_m: float


@dataclasses.dataclass(frozen=True)
class Arrival:
    """Measured position when a waypoint is reached (noise applies here)."""

    waypoint_id: int
    time_s: float
    latitude_deg: float
    longitude_deg: float
    altitude_m: float


@dataclasses.dataclass(frozen=True)
class Segment:
    """One piece of the mission timeline, linear in the local frame."""

    kind: str  # climb | leg | hover
    start_s: float
    end_s: float
    x0: float
    y0: float
    z0: float
    x1: float
    y1: float
    z1: float
    waypoint_id: int  # target waypoint (climb/leg) or the hovered waypoint
    active_task: int = 0  # 3 on interval legs, 4 on panorama hovers

    def position_at(self, t: float) -> tuple[float, float, float]:
        span = self.end_s - self.start_s
        if span <= 0:
            return (self.x1, self.y1, self.z1)
        f = min(max((t - self.start_s) / span, 0.0), 1.0)
        return (
            self.x0 + (self.x1 - self.x0) * f,
            self.y0 + (self.y1 - self.y0) * f,
            self.z0 + (self.z1 - self.z0) * f,
        )


@dataclasses.dataclass(frozen=True)
class SimulationResult:
    route_id: str
    home: HomePoint
    mode: GeodesyMode
    config: SimConfig
    total_time_s: float
    trace: tuple[TracePoint, ...]
    arrivals: tuple[Arrival, ...]
    events: tuple[CameraEvent, ...]
    warnings: tuple[str, ...]
    timeline: tuple[Segment, ...]
    status: str = STATUS_COMPLETED

    def to_document(self) -> dict:
        """Serialize to the flown-record document format.

        The output is a superset of what the error analysis consumes: HOME,
        MODE and the FLOWN block pair directly with a planned route, while
        TRACE, EVENTS, CONFIG and friends carry the full run for replay.
        """
        flown = {}
        for arr in self.arrivals:
            flown["FLOWNPOINT-%d" % arr.waypoint_id] = {
                "ID": arr.waypoint_id,
                "XLongitude": repr(arr.longitude_deg),
                "ZLatitude": repr(arr.latitude_deg),
                "YAltitude": repr(arr.altitude_m),
                "time_s": arr.time_s,
            }
        return {
            "ROUTE": self.route_id,
            "STATUS": self.status,
            "HOME": {
                "ZLatitude": repr(self.home.latitude_deg),
                "XLongitude": repr(self.home.longitude_deg),
            },
            "MODE": self.mode.name,
            "CONFIG": dataclasses.asdict(self.config),
            "TOTAL_TIME_S": self.total_time_s,
            "FLOWN": flown,
            "TRACE": [
                [p.time_s, p.latitude_deg, p.longitude_deg, p.altitude_m] for p in self.trace
            ],
            "EVENTS": [dataclasses.asdict(e) for e in self.events],
            "WARNINGS": list(self.warnings),
        }


def default_home(path: Path) -> HomePoint:
    """Home position when none is given: the ground under waypoint 0."""
    if not path.points:
        raise DomainError("route has no waypoints")
    first = path.points[0]
    return HomePoint(first.latitude_deg, first.longitude_deg)


def compile_schedule(path: Path, default_interval_s: float = 2.0) -> Schedule:
    """Turn per-waypoint tasks into a symbolic program.

    Video pairing: an explicit "start" on an already-open recording or a
    "stop" with nothing open is a schedule error; empty instruction toggles.
    A recording still open after the last waypoint is auto-closed there and
    flagged as a warning, as is an interval task on the final waypoint
    (there is no following leg, so it can never fire).
    """
    arrivals: list[ArrivalAction] = []
    intervals: dict[int, float] = {}
    warnings: list[str] = []
    video_open_at: int | None = None
    last_id = path.points[-1].point_id if path.points else -1

    for point in path.points:
        kind = CameraTaskKind(point.task)
        if kind is CameraTaskKind.TAKE_PICTURE:
            arrivals.append(ArrivalAction(point.point_id, PHOTO))
        elif kind is CameraTaskKind.START_VIDEO:
            signal = video_signal(point.instruction)
            if signal == "toggle":
                signal = "stop" if video_open_at is not None else "start"
            if signal == "start":
                if video_open_at is not None:
                    raise ScheduleError(
                        "video started at id %d while the recording from id %d is still open"
                        % (point.point_id, video_open_at)
                    )
                video_open_at = point.point_id
                arrivals.append(ArrivalAction(point.point_id, VIDEO_START))
            else:
                if video_open_at is None:
                    raise ScheduleError(
                        "video stop at id %d with no open recording" % point.point_id
                    )
                video_open_at = None
                arrivals.append(ArrivalAction(point.point_id, VIDEO_STOP))
        elif kind is CameraTaskKind.START_INTERVAL:
            seconds = interval_seconds(point.instruction, default_s=default_interval_s)
            if point.point_id == last_id:
                warnings.append(
                    "interval task on final waypoint id %d has no following leg"
                    % point.point_id
                )
            else:
                intervals[point.point_id] = seconds
        elif kind is CameraTaskKind.TAKE_PANORAMA:
            frames = panorama_frames(point.instruction)
            arrivals.append(ArrivalAction(point.point_id, "panorama", frames=frames))

    if video_open_at is not None:
        warnings.append(
            "video opened at id %d was still recording at mission end; auto-closed"
            % video_open_at
        )
        arrivals.append(ArrivalAction(last_id, VIDEO_STOP))

    return Schedule(tuple(arrivals), intervals, tuple(warnings))


def _local_waypoints(path, home, mode):
    coords = []
    for point in path.points:
        local = to_local(home, GeoPoint(point.latitude_deg, point.longitude_deg), mode)
        coords.append((local.x_m, point.altitude_m, local.z_m))
    return coords


def simulate(
    path: Path,
    home: HomePoint | None = None,
    config: SimConfig | None = None,
    mode: GeodesyMode = CORRECTED,
) -> SimulationResult:
    """Run the mission and return trace, arrivals, events and warnings.

    A mission with zero total duration (single waypoint on the ground with
    nothing to do) is rejected.  With noise disabled the arrival coordinates
    are copied from the plan verbatim, so downstream error reports come out
    exactly zero rather than within rounding of it.
    """
    config = config or SimConfig()
    violations = validate_path(path)
    if violations:
        raise ValidationFailed(violations)
    if not path.points:
        raise DomainError("route has no waypoints: nothing to fly")
    if home is None:
        home = default_home(path)
    schedule = compile_schedule(path, config.default_interval_s)

    speed = config.speed_mps
    coords = _local_waypoints(path, home, mode)
    actions_by_wp: dict[int, list[ArrivalAction]] = {}
    for action in schedule.arrivals:
        actions_by_wp.setdefault(action.waypoint_id, []).append(action)

    segments: list[Segment] = []
    events: list[CameraEvent] = []
    arrival_truth: list[tuple[int, float, float, float, float]] = []  # id, t, x, y, z
    now = 0.0

    def arrive(wp_index: int):
        nonlocal now
        point = path.points[wp_index]
        x, y, z = coords[wp_index]
        arrival_truth.append((point.point_id, now, x, y, z))
        hover_frames = 0
        hover_span = 0.0
        for action in actions_by_wp.get(point.point_id, ()):
            if action.action == PHOTO:
                events.append(CameraEvent(now, PHOTO, point.point_id))
            elif action.action == VIDEO_START:
                events.append(CameraEvent(now, VIDEO_START, point.point_id))
            elif action.action == VIDEO_STOP:
                events.append(CameraEvent(now, VIDEO_STOP, point.point_id))
            elif action.action == "panorama":
                hover_frames = action.frames
                hover_span = config.panorama_rotation_s
        if hover_frames:
            for i in range(hover_frames):
                shot_t = now + hover_span * (i + 1) / hover_frames
                events.append(CameraEvent(shot_t, PANORAMA_FRAME, point.point_id, sequence=i))
            end = now + hover_span
            events.append(CameraEvent(end, PANORAMA_COMPLETE, point.point_id, sequence=hover_frames))
            segments.append(
                Segment("hover", now, end, x, y, z, x, y, z, point.point_id, active_task=4)
            )
            now = end

    # Climb from the ground under waypoint 0.
    x0, y0, z0 = coords[0]
    climb_time = y0 / speed
    if climb_time > 0:
        segments.append(
            Segment("climb", 0.0, climb_time, x0, 0.0, z0, x0, y0, z0, path.points[0].point_id)
        )
        now = climb_time
    arrive(0)

    for i in range(len(path.points) - 1):
        ax, ay, az = coords[i]
        bx, by, bz = coords[i + 1]
        leg_len = math.sqrt((bx - ax) ** 2 + (by - ay) ** 2 + (bz - az) ** 2)
        leg_time = leg_len / speed
        from_id = path.points[i].point_id
        to_id = path.points[i + 1].point_id
        interval = schedule.intervals.get(from_id)
        if leg_time > 0:
            segments.append(
                Segment(
                    "leg",
                    now,
                    now + leg_time,
                    ax,
                    ay,
                    az,
                    bx,
                    by,
                    bz,
                    to_id,
                    active_task=3 if interval else 0,
                )
            )
        if interval:
            shots = int((leg_time + _END_SLACK_S) // interval)
            for j in range(1, shots + 1):
                shot_t = now + min(j * interval, leg_time)
                events.append(CameraEvent(shot_t, INTERVAL_SHOT, from_id, sequence=j - 1))
        now += leg_time
        arrive(i + 1)

    total_time = now
    if total_time <= 0:
        raise DomainError("mission has zero duration: nothing to fly")

    events.sort(key=lambda e: e.time_s)

    # Exact trace at tick boundaries plus the exact final instant.
    trace: list[TracePoint] = []
    ticks = int(total_time / config.tick_s)
    times = [i * config.tick_s for i in range(ticks + 1)]
    if total_time - times[-1] > 1e-12:
        times.append(total_time)
    seg_index = 0
    for t in times:
        while seg_index + 1 < len(segments) and t > segments[seg_index].end_s:
            seg_index += 1
        x, y, z = segments[seg_index].position_at(t)
        geo = from_local(home, LocalCoord(x, z), mode)
        trace.append(TracePoint(t, geo.latitude_deg, geo.longitude_deg, y))

    # Arrival measurements: plan + seeded horizontal noise.  The noise is
    # drawn in local meters (x then z, waypoint order) and mapped back.
    rng = random.Random(config.rng_seed)
    arrivals: list[Arrival] = []
    sigma = config.noise_sigma_m
    for (wp_id, t, x, y, z), point in zip(arrival_truth, path.points):
        if sigma > 0:
            nx = rng.gauss(0.0, sigma)
            nz = rng.gauss(0.0, sigma)
            geo = from_local(home, LocalCoord(x + nx, z + nz), mode)
            lat, lon = geo.latitude_deg, geo.longitude_deg
        else:
            lat, lon = point.latitude_deg, point.longitude_deg
        arrivals.append(Arrival(wp_id, t, lat, lon, y))

    return SimulationResult(
        route_id=path.route_id,
        home=home,
        mode=mode,
        config=config,
        total_time_s=total_time,
        trace=tuple(trace),
        arrivals=tuple(arrivals),
        events=tuple(events),
        warnings=schedule.warnings,
        timeline=tuple(segments),
    )


def _video_windows(events):
    windows = []
    start_t = None
    for event in events:
        if event.kind == VIDEO_START:
            start_t = event.time_s
        elif event.kind == VIDEO_STOP and start_t is not None:
            windows.append((start_t, event.time_s))
            start_t = None
    return windows


def _active_task(result, t, window_s):
    """Task code a frame at time t should display.

    An instantaneous event inside the frame window wins; otherwise a
    panorama hover, then an interval leg, then an open video recording.
    """
    last_kind = None
    for event in result.events:
        if t - window_s < event.time_s <= t + _END_SLACK_S:
            last_kind = event.kind
    if last_kind is not None:
        return EVENT_TASK_CODE[last_kind]
    for seg in result.timeline:
        if seg.start_s <= t <= seg.end_s and seg.active_task:
            return seg.active_task
    for start_t, stop_t in _video_windows(result.events):
        if start_t <= t < stop_t:
            return 2
    return 0


def stream_frames(result: SimulationResult, palette: TaskPalette = WEB_PALETTE) -> Iterator[dict]:
    """Yield animation frames at tick cadence.

    Each frame carries the position, the task being executed (code, label
    and palette color) and the mission progress.  The last frame is flagged
    done and carries the completion message; the generator then ends, so
    stepping past completion raises StopIteration naturally.
    """
    tick = result.config.tick_s
    total = result.total_time_s
    # Full ticks, then one closing frame at the exact end; the count stays
    # within one of total/tick while keeping both the t=0 ground frame and
    # the completion frame.
    ticks = max(int(total / tick), 1)
    times = [i * tick for i in range(ticks)]
    times.append(total)
    by_time = {p.time_s: p for p in result.trace}
    seg_index = 0
    for i, t in enumerate(times):
        point = by_time.get(t)
        if point is None:
            while seg_index + 1 < len(result.timeline) and t > result.timeline[seg_index].end_s:
                seg_index += 1
            x, y, z = result.timeline[seg_index].position_at(t)
            geo = from_local(result.home, LocalCoord(x, z), result.mode)
            point = TracePoint(t, geo.latitude_deg, geo.longitude_deg, y)
        code = _active_task(result, t, tick)
        done = i == len(times) - 1
        frame = {
            "time_s": t,
            "latitude_deg": point.latitude_deg,
            "longitude_deg": point.longitude_deg,
            "altitude_m": point.altitude_m,
            "task": code,
            "label": task_label(code),
            "color": palette.color(code),
            "progress": t / total,
            "done": done,
        }
        if done:
            frame["message"] = COMPLETION_MESSAGE
        yield frame
