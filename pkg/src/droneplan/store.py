"""File-backed route store using the shared document-tree schema.

The tree nests ``PATH-{id} -> "PATH" -> PATHPOINT-{order}`` with point
fields ID, XLongitude, ZLatitude, YAltitude, task, instruction and an
optional route-level ``description``. Coordinates are written as decimal
text so they survive round-trips digit-for-digit; readers accept numeric
and text forms. Records that predate the task extension (no task or
instruction fields) load with defaults and are upgraded on the next save.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path as FsPath

from .errors import NotFoundError, SchemaError, ValidationFailed
from .model import (
    DEFAULT_LIMITS,
    ROUTE_ID_PATTERN,
    CameraTaskKind,
    Path,
    PathPoint,
    RouteLimits,
    validate_path,
)

POINT_KEY_PATTERN = re.compile(r"^PATHPOINT-(\d+)$")

DESCRIPTION_PLACEHOLDER = "."


@dataclass(frozen=True)
class RouteSummary:
    route_id: str
    description: str
    waypoint_count: int


def route_number(route_id: str) -> int:
    m = ROUTE_ID_PATTERN.match(route_id or "")
    if not m:
        raise SchemaError(f"malformed route key {route_id!r}")
    return int(m.group(1))


def _number_text(value: float) -> str:
    # repr() round-trips doubles exactly; ints stay readable.
    return repr(float(value))


def _parse_number(value, key: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise SchemaError(f"expected a number, got {value!r}", location=key) from None


def encode_route(path: Path) -> dict:
    """Route record for the document tree (canonical field order)."""
    record: dict = {}
    if path.description:
        record["description"] = path.description
    points = {}
    for point in path.points:
        points[f"PATHPOINT-{point.point_id}"] = {
            "ID": point.point_id,
            "XLongitude": _number_text(point.longitude_deg),
            "ZLatitude": _number_text(point.latitude_deg),
            "YAltitude": _number_text(point.altitude_m),
            "task": CameraTaskKind(point.task).storage_code,
            "instruction": point.instruction,
        }
    record["PATH"] = points
    return record


def decode_route(route_id: str, record: dict) -> tuple[Path, bool]:
    """Rebuild a Path from its tree record.

    Returns ``(path, legacy)`` where ``legacy`` is True when any point was
    missing the task or instruction fields (pre-extension schema).
    """
    if not isinstance(record, dict):
        raise SchemaError("route record is not an object", location=route_id)
    description = record.get("description")
    if description is not None and not isinstance(description, str):
        raise SchemaError("description is not text", location=route_id)
    children = record.get("PATH", {})
    if not isinstance(children, dict):
        raise SchemaError("PATH is not an object", location=route_id)

    by_order: dict[int, dict] = {}
    for key, value in children.items():
        m = POINT_KEY_PATTERN.match(key)
        if not m:
            raise SchemaError(f"unexpected key {key!r}", location=f"{route_id}/PATH")
        order = int(m.group(1))
        if not isinstance(value, dict):
            raise SchemaError("point record is not an object", location=f"{route_id}/PATH/{key}")
        by_order[order] = value

    legacy = False
    points = []
    for order in range(len(by_order)):
        if order not in by_order:
            raise SchemaError(f"missing order {order}", location=f"{route_id}/PATH")
        raw = by_order[order]
        where = f"{route_id}/PATH/PATHPOINT-{order}"
        for required in ("ID", "XLongitude", "ZLatitude"):
            if required not in raw:
                raise SchemaError(f"missing {required}", location=where)
        point_id = int(_parse_number(raw["ID"], f"{where}/ID"))
        if point_id != order:
            raise SchemaError(f"ID {point_id} does not match order {order}", location=where)
        if "task" not in raw or "instruction" not in raw:
            legacy = True
        points.append(
            PathPoint(
                point_id=point_id,
                latitude_deg=_parse_number(raw["ZLatitude"], f"{where}/ZLatitude"),
                longitude_deg=_parse_number(raw["XLongitude"], f"{where}/XLongitude"),
                altitude_m=_parse_number(raw.get("YAltitude", 0.0), f"{where}/YAltitude"),
                task=CameraTaskKind.parse(raw.get("task", "0")),
                instruction=str(raw.get("instruction", "")),
            )
        )
    return Path(route_id=route_id, description=description, points=points), legacy


class RemoteSync:
    """Seam for mirroring whole routes to a remote backend.

    Only in-process implementations ship; the interface is the contract a
    real backend client would fill in.
    """

    def push(self, route_id: str, record: dict) -> None:
        raise NotImplementedError

    def remove(self, route_id: str) -> None:
        raise NotImplementedError

    def pull(self, route_id: str) -> dict | None:
        raise NotImplementedError


class NoopSync(RemoteSync):
    def push(self, route_id: str, record: dict) -> None:
        pass

    def remove(self, route_id: str) -> None:
        pass

    def pull(self, route_id: str) -> dict | None:
        return None


class LoopbackSync(RemoteSync):
    """In-memory remote; share one instance between stores to test syncing."""

    def __init__(self):
        self.records: dict[str, dict] = {}

    def push(self, route_id: str, record: dict) -> None:
        self.records[route_id] = json.loads(json.dumps(record))

    def remove(self, route_id: str) -> None:
        self.records.pop(route_id, None)

    def pull(self, route_id: str) -> dict | None:
        record = self.records.get(route_id)
        return None if record is None else json.loads(json.dumps(record))


class RouteStore:
    """Document store over one JSON file, with an in-memory working tree.

    Mutations are serialized behind a lock and hit the file via
    write-temp-then-rename; on any failure the in-memory tree is left
    untouched. Readers work against whatever tree snapshot is current, so
    they never block behind the writer.
    """

    def __init__(self, store_file=None, *, limits: RouteLimits = DEFAULT_LIMITS, sync: RemoteSync | None = None):
        self._file = FsPath(store_file) if store_file is not None else None
        self._limits = limits
        self._sync = sync or NoopSync()
        self._lock = threading.Lock()
        self._tree: dict = {}
        if self._file is not None and self._file.exists():
            self._tree = _parse_tree(self._file.read_text(encoding="utf-8"))

    @property
    def limits(self) -> RouteLimits:
        return self._limits

    def _ordered(self, tree: dict) -> dict:
        return {key: tree[key] for key in sorted(tree, key=route_number)}

    def _persist(self, tree: dict) -> None:
        if self._file is None:
            return
        directory = self._file.parent
        fd, tmp_name = tempfile.mkstemp(dir=directory, prefix=self._file.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(tree, handle, indent=2, ensure_ascii=False)
                handle.write("\n")
            os.replace(tmp_name, self._file)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise

    def _commit(self, tree: dict) -> None:
        tree = self._ordered(tree)
        self._persist(tree)
        self._tree = tree

    # -- reads ---------------------------------------------------------

    def snapshot(self) -> dict:
        """Current tree (treat as immutable)."""
        return self._tree

    def load_route(self, route_id: str) -> Path:
        tree = self._tree
        if route_id not in tree:
            raise NotFoundError(f"route {route_id!r} not found")
        path, _legacy = decode_route(route_id, tree[route_id])
        return path

    def list_routes(self) -> list[RouteSummary]:
        summaries = []
        for route_id in sorted(self._tree, key=route_number):
            record = self._tree[route_id]
            description = record.get("description") or DESCRIPTION_PLACEHOLDER
            count = len(record.get("PATH", {}))
            summaries.append(RouteSummary(route_id, description, count))
        return summaries

    def next_route_id(self) -> str:
        numbers = [route_number(route_id) for route_id in self._tree]
        return f"PATH-{max(numbers) + 1 if numbers else 1}"

    def export_tree(self) -> str:
        return json.dumps(self._ordered(self._tree), indent=2, ensure_ascii=False)

    # -- mutations -----------------------------------------------------

    def save_route(self, path: Path) -> str:
        violations = validate_path(path, self._limits)
        if violations:
            raise ValidationFailed(violations)
        record = encode_route(path)
        with self._lock:
            tree = dict(self._tree)
            tree[path.route_id] = record
            self._commit(tree)
        self._sync.push(path.route_id, record)
        return path.route_id

    def delete_route(self, route_id: str) -> None:
        with self._lock:
            if route_id not in self._tree:
                raise NotFoundError(f"route {route_id!r} not found")
            tree = dict(self._tree)
            del tree[route_id]
            self._commit(tree)
        self._sync.remove(route_id)

    def import_tree(self, text: str) -> int:
        incoming = _parse_tree(text)
        with self._lock:
            tree = dict(self._tree)
            tree.update(incoming)
            self._commit(tree)
        for route_id, record in incoming.items():
            self._sync.push(route_id, record)
        return len(incoming)

    def pull_route(self, route_id: str) -> Path:
        """Fetch one route from the remote seam and adopt it locally."""
        record = self._sync.pull(route_id)
        if record is None:
            raise NotFoundError(f"route {route_id!r} not found on remote")
        path, _legacy = decode_route(route_id, record)
        with self._lock:
            tree = dict(self._tree)
            tree[route_id] = record
            self._commit(tree)
        return path


def _parse_tree(text: str) -> dict:
    try:
        tree = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"malformed document: {exc.msg}", location=f"line {exc.lineno} column {exc.colno}"
        ) from None
    if not isinstance(tree, dict):
        raise SchemaError("document root is not an object")
    for route_id, record in tree.items():
        route_number(route_id)  # key shape
        decode_route(route_id, record)  # full record check
    return tree
