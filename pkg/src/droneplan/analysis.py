"""Planned-versus-flown error analysis in home-relative meters.

Given a planned route and the positions actually reached (a flown record),
both sides are projected into the home-relative local frame and compared
waypoint by waypoint: per-axis absolute differences plus their arithmetic
means.  Pairing is strictly by order; there is no nearest-point matching.

The default projection mode here is "paper" so that reports stay directly
comparable with the legacy field-test tables this project tracks; callers
doing fresh planning work should pass the corrected mode explicitly.
"""

from __future__ import annotations

import dataclasses
import json
import math
import re

from .errors import DomainError, PairingError, SchemaError
from .geodesy import PAPER, GeodesyMode, GeoPoint, HomePoint, parse_mode, to_local
from .model import Path

FLOWN_KEY_PATTERN = re.compile(r"^FLOWNPOINT-(0|[1-9][0-9]*)$")

CSV_HEADER = "order,x_planned,z_planned,x_flown,z_flown,error_x,error_z"


@dataclasses.dataclass(frozen=True)
class FlownRecord:
    """Positions actually reached, one per planned waypoint, in order."""

    points: tuple[GeoPoint, ...]
    altitudes: tuple = ()  # optional, parallel to points when non-empty

    def __len__(self):
        return len(self.points)


@dataclasses.dataclass(frozen=True)
class ErrorRow:
    order: int  # 1-based, matching the report tables
    x_planned: float
    z_planned: float
    x_flown: float
    z_flown: float
    error_x: float
    error_z: float


@dataclasses.dataclass(frozen=True)
class ErrorReport:
    rows: tuple[ErrorRow, ...]
    mean_error_x: float
    mean_error_z: float
    mode: GeodesyMode
    home: HomePoint


def compare(
    planned: Path,
    flown: FlownRecord,
    home: HomePoint,
    mode: GeodesyMode = PAPER,
) -> ErrorReport:
    """Per-waypoint per-axis absolute errors and their means, unrounded.

    Errors are differences of the projected coordinate columns, the same
    way the field-test spreadsheets computed them.
    """
    if len(planned.points) != len(flown.points):
        raise PairingError(
            "planned route has %d waypoints but flown record has %d points"
            % (len(planned.points), len(flown.points))
        )
    if not planned.points:
        raise PairingError("nothing to compare: route is empty")

    rows = []
    for i, (point, measured) in enumerate(zip(planned.points, flown.points)):
        p = to_local(home, GeoPoint(point.latitude_deg, point.longitude_deg), mode)
        f = to_local(home, measured, mode)
        rows.append(
            ErrorRow(
                order=i + 1,
                x_planned=p.x_m,
                z_planned=p.z_m,
                x_flown=f.x_m,
                z_flown=f.z_m,
                error_x=abs(p.x_m - f.x_m),
                error_z=abs(p.z_m - f.z_m),
            )
        )
    mean_x = math.fsum(r.error_x for r in rows) / len(rows)
    mean_z = math.fsum(r.error_z for r in rows) / len(rows)
    return ErrorReport(tuple(rows), mean_x, mean_z, mode, home)


def summarize(report: ErrorReport) -> tuple[float, float, float, float]:
    """(max_x, max_z, mean_x, mean_z) display-rounded to 0.1 m."""
    if not report.rows:
        raise DomainError("empty report: nothing to summarize")
    max_x = max(r.error_x for r in report.rows)
    max_z = max(r.error_z for r in report.rows)
    return (
        round(max_x, 1),
        round(max_z, 1),
        round(report.mean_error_x, 1),
        round(report.mean_error_z, 1),
    )


def render_report(report: ErrorReport, fmt: str = "csv") -> str:
    """Report text: csv or a fixed-width table, each with a trailing mean row."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in report.rows:
            lines.append(
                "%d,%s,%s,%s,%s,%s,%s"
                % (
                    r.order,
                    repr(r.x_planned),
                    repr(r.z_planned),
                    repr(r.x_flown),
                    repr(r.z_flown),
                    repr(r.error_x),
                    repr(r.error_z),
                )
            )
        lines.append("mean,,,,,%s,%s" % (repr(report.mean_error_x), repr(report.mean_error_z)))
        return "\n".join(lines) + "\n"
    if fmt == "table":
        header = "%5s %18s %18s %18s %18s %15s %15s" % (
            "order",
            "x_planned",
            "z_planned",
            "x_flown",
            "z_flown",
            "error_x",
            "error_z",
        )
        lines = [header]
        for r in report.rows:
            lines.append(
                "%5d %18.9f %18.9f %18.9f %18.9f %15.9f %15.9f"
                % (r.order, r.x_planned, r.z_planned, r.x_flown, r.z_flown, r.error_x, r.error_z)
            )
        lines.append(
            "%5s %18s %18s %18s %18s %15.9f %15.9f"
            % ("mean", "", "", "", "", report.mean_error_x, report.mean_error_z)
        )
        return "\n".join(lines) + "\n"
    raise DomainError("unknown report format %r: expected csv or table" % fmt)


def _coordinate(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise SchemaError("coordinate must be a number or decimal text", where)
    try:
        number = float(value)
    except ValueError:
        raise SchemaError("coordinate %r is not a decimal number" % value, where) from None
    if not math.isfinite(number):
        raise SchemaError("coordinate %r is not finite" % value, where)
    return number


def flown_to_document(record: FlownRecord, home: HomePoint | None = None, mode=None) -> dict:
    """Serialize a flown record to its document form."""
    doc: dict = {}
    if home is not None:
        doc["HOME"] = {
            "ZLatitude": repr(home.latitude_deg),
            "XLongitude": repr(home.longitude_deg),
        }
    if mode is not None:
        doc["MODE"] = mode.name if isinstance(mode, GeodesyMode) else str(mode)
    flown = {}
    for i, p in enumerate(record.points):
        entry = {
            "ID": i,
            "XLongitude": repr(p.longitude_deg),
            "ZLatitude": repr(p.latitude_deg),
        }
        if record.altitudes:
            entry["YAltitude"] = repr(float(record.altitudes[i]))
        flown["FLOWNPOINT-%d" % i] = entry
    doc["FLOWN"] = flown
    return doc


def flown_from_document(doc) -> tuple[FlownRecord, HomePoint | None, GeodesyMode | None]:
    """Read a flown record document; HOME and MODE blocks are optional.

    Simulation-result documents are a superset of this format, so their
    extra keys (TRACE, EVENTS, ...) are ignored here.
    """
    if not isinstance(doc, dict):
        raise SchemaError("flown record must be an object")
    flown = doc.get("FLOWN")
    if not isinstance(flown, dict):
        raise SchemaError("missing FLOWN block", "FLOWN")
    orders = {}
    for key, entry in flown.items():
        m = FLOWN_KEY_PATTERN.match(key)
        if not m:
            raise SchemaError("bad point key %r" % key, "FLOWN")
        orders[int(m.group(1))] = (key, entry)
    if not orders:
        raise SchemaError("FLOWN block has no points", "FLOWN")
    points = []
    altitudes = []
    has_altitude = False
    for order in range(len(orders)):
        if order not in orders:
            raise SchemaError("missing order %d" % order, "FLOWN")
        key, entry = orders[order]
        if not isinstance(entry, dict):
            raise SchemaError("point must be an object", key)
        if "ID" in entry and entry["ID"] != order:
            raise SchemaError("ID %r does not match order %d" % (entry["ID"], order), key)
        for field in ("ZLatitude", "XLongitude"):
            if field not in entry:
                raise SchemaError("missing %s" % field, key)
        lat = _coordinate(entry["ZLatitude"], "%s.ZLatitude" % key)
        lon = _coordinate(entry["XLongitude"], "%s.XLongitude" % key)
        points.append(GeoPoint(lat, lon))
        if "YAltitude" in entry:
            has_altitude = True
            altitudes.append(_coordinate(entry["YAltitude"], "%s.YAltitude" % key))
        else:
            altitudes.append(0.0)

    home = None
    if "HOME" in doc:
        block = doc["HOME"]
        if not isinstance(block, dict):
            raise SchemaError("HOME must be an object", "HOME")
        for field in ("ZLatitude", "XLongitude"):
            if field not in block:
                raise SchemaError("missing %s" % field, "HOME")
        home = HomePoint(
            _coordinate(block["ZLatitude"], "HOME.ZLatitude"),
            _coordinate(block["XLongitude"], "HOME.XLongitude"),
        )
    mode = None
    if "MODE" in doc:
        try:
            mode = parse_mode(doc["MODE"])
        except DomainError as exc:
            raise SchemaError(str(exc), "MODE") from None
    record = FlownRecord(tuple(points), tuple(altitudes) if has_altitude else ())
    return record, home, mode


def parse_flown(text: str) -> tuple[FlownRecord, HomePoint | None, GeodesyMode | None]:
    """Parse flown-record JSON text, reporting the position of bad syntax."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            "invalid JSON: %s (line %d column %d)" % (exc.msg, exc.lineno, exc.colno)
        ) from None
    return flown_from_document(doc)
