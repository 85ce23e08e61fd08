"""Command line for the route store, the simulator and the error analysis.

Exit codes: 0 success, 2 usage, 3 missing route, 4 invalid data
(validation, schema or domain), 5 planned/flown pairing failure, 6 file
system trouble. Simulation documents go to stdout as JSON so they pipe
straight into ``analyze``; warnings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import compare, parse_flown, render_report, summarize
from .editor import EditSession
from .errors import (
    CapacityError,
    DomainError,
    NotFoundError,
    PairingError,
    SchemaError,
    ScheduleError,
    ValidationFailed,
)
from .geodesy import CORRECTED, PAPER, GeoPoint, HomePoint, parse_mode, to_local
from .model import validate_path
from .simulator import SimConfig, default_home, simulate
from .store import RouteStore, encode_route

EXIT_OK = 0
EXIT_NOT_FOUND = 3
EXIT_VALIDATION = 4
EXIT_PAIRING = 5
EXIT_IO = 6

STORE_ENV = "DRONEPLAN_STORE"
DEFAULT_STORE = "routes.json"


def _store(args) -> RouteStore:
    return RouteStore(args.store)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_or_print(text: str, out: str | None) -> None:
    if out is None or out == "-":
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _home_from_args(args) -> HomePoint | None:
    if args.home is None:
        return None
    return HomePoint(args.home[0], args.home[1])


def _resolve_frame(args, planned, doc_home, doc_mode, default_mode):
    """Home and mode for analysis commands: flags beat the document, the
    document beats the defaults."""
    home = _home_from_args(args) or doc_home or default_home(planned)
    if args.mode is not None:
        mode = parse_mode(args.mode)
    else:
        mode = doc_mode or default_mode
    return home, mode


def cmd_list(args) -> int:
    for summary in _store(args).list_routes():
        print("%-10s %3d  %s" % (summary.route_id, summary.waypoint_count, summary.description))
    return EXIT_OK


def cmd_show(args) -> int:
    path = _store(args).load_route(args.route_id)
    if args.rows:
        print("%5s %11s %12s %8s  %s" % ("order", "latitude", "longitude", "height", "task"))
        for row in EditSession(path).waypoint_details():
            print(
                "%5d %11.5f %12.5f %8s  %s"
                % (row.order, row.latitude_deg, row.longitude_deg, row.height, row.task_label)
            )
    else:
        print(json.dumps(encode_route(path), indent=2, ensure_ascii=False))
    return EXIT_OK


def cmd_validate(args) -> int:
    path = _store(args).load_route(args.route_id)
    violations = validate_path(path)
    if not violations:
        print("ok: %s, %d waypoints" % (path.route_id, len(path.points)))
        return EXIT_OK
    for violation in violations:
        print("%s: %s" % (violation.code, violation.message))
    return EXIT_VALIDATION


def cmd_export(args) -> int:
    _write_or_print(_store(args).export_tree(), args.out)
    return EXIT_OK


def cmd_import(args) -> int:
    count = _store(args).import_tree(_read_text(args.file))
    print("imported %d routes" % count)
    return EXIT_OK


def cmd_delete(args) -> int:
    _store(args).delete_route(args.route_id)
    print("deleted %s" % args.route_id)
    return EXIT_OK


def _sim_config(args) -> SimConfig:
    return SimConfig(
        speed_mps=args.speed,
        tick_s=args.tick,
        default_interval_s=args.interval,
        panorama_frames=args.frames,
        panorama_rotation_s=args.rotation,
        noise_sigma_m=args.noise,
        rng_seed=args.seed,
    )


def cmd_simulate(args) -> int:
    path = _store(args).load_route(args.route_id)
    result = simulate(path, _home_from_args(args), _sim_config(args), parse_mode(args.mode))
    for warning in result.warnings:
        print("warning: %s" % warning, file=sys.stderr)
    _write_or_print(json.dumps(result.to_document(), indent=2), args.out)
    return EXIT_OK


def _load_comparison(args):
    planned = _store(args).load_route(args.route_id)
    record, doc_home, doc_mode = parse_flown(_read_text(args.flown))
    home, mode = _resolve_frame(args, planned, doc_home, doc_mode, PAPER)
    return compare(planned, record, home, mode)


def cmd_analyze(args) -> int:
    report = _load_comparison(args)
    _write_or_print(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    report = _load_comparison(args)
    max_x, max_z, mean_x, mean_z = summarize(report)
    print("waypoints compared: %d" % len(report.rows))
    print("max |x| error:  %.1f m" % max_x)
    print("max |z| error:  %.1f m" % max_z)
    print("mean |x| error: %.1f m" % mean_x)
    print("mean |z| error: %.1f m" % mean_z)
    return EXIT_OK


def cmd_plotdata(args) -> int:
    planned = _store(args).load_route(args.route_id)
    record = doc_home = doc_mode = None
    if args.flown is not None:
        record, doc_home, doc_mode = parse_flown(_read_text(args.flown))
    home, mode = _resolve_frame(args, planned, doc_home, doc_mode, CORRECTED)
    lines = ["series,order,x_m,z_m"]
    for i, point in enumerate(planned.points):
        local = to_local(home, GeoPoint(point.latitude_deg, point.longitude_deg), mode)
        lines.append("planned,%d,%s,%s" % (i + 1, repr(local.x_m), repr(local.z_m)))
    if record is not None:
        for i, point in enumerate(record.points):
            local = to_local(home, point, mode)
            lines.append("flown,%d,%s,%s" % (i + 1, repr(local.x_m), repr(local.z_m)))
    _write_or_print("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(_store(args)), host=args.host, port=args.port)
    return EXIT_OK


def _add_sim_flags(sub) -> None:
    sub.add_argument("--mode", default="corrected", help="projection mode (corrected or paper)")
    sub.add_argument("--speed", type=float, default=5.0, help="cruise speed in m/s")
    sub.add_argument("--tick", type=float, default=0.1, help="trace tick in seconds")
    sub.add_argument("--interval", type=float, default=2.0, help="default interval-shot spacing in s")
    sub.add_argument("--frames", type=int, default=8, help="panorama frames per rotation")
    sub.add_argument("--rotation", type=float, default=8.0, help="panorama rotation time in s")
    sub.add_argument("--noise", type=float, default=0.0, help="horizontal arrival noise sigma in m")
    sub.add_argument("--seed", type=int, default=0, help="noise RNG seed")
    sub.add_argument("--home", nargs=2, type=float, metavar=("LAT", "LON"))
    sub.add_argument("--out", default=None, help="write to file instead of stdout")


def _add_analysis_flags(sub) -> None:
    sub.add_argument("flown", help="flown-record JSON file, or - for stdin")
    sub.add_argument("--mode", default=None, help="override the document projection mode")
    sub.add_argument("--home", nargs=2, type=float, metavar=("LAT", "LON"))
    sub.add_argument("--out", default=None, help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="droneplan",
        description="Plan waypoint routes, simulate the flight, measure the error.",
    )
    parser.add_argument(
        "--store",
        default=os.environ.get(STORE_ENV, DEFAULT_STORE),
        help="route store file (or set %s)" % STORE_ENV,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("list", help="list stored routes")
    sub.set_defaults(func=cmd_list)

    sub = commands.add_parser("show", help="print one route")
    sub.add_argument("route_id")
    sub.add_argument("--rows", action="store_true", help="waypoint table instead of JSON")
    sub.set_defaults(func=cmd_show)

    sub = commands.add_parser("validate", help="check route invariants")
    sub.add_argument("route_id")
    sub.set_defaults(func=cmd_validate)

    sub = commands.add_parser("export", help="dump the whole store as JSON")
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_export)

    sub = commands.add_parser("import", help="merge a JSON document tree into the store")
    sub.add_argument("file", help="tree file, or - for stdin")
    sub.set_defaults(func=cmd_import)

    sub = commands.add_parser("delete", help="remove a route")
    sub.add_argument("route_id")
    sub.set_defaults(func=cmd_delete)

    sub = commands.add_parser("simulate", help="fly a route and print the flight document")
    sub.add_argument("route_id")
    _add_sim_flags(sub)
    sub.set_defaults(func=cmd_simulate)

    sub = commands.add_parser("analyze", help="planned-vs-flown error table")
    sub.add_argument("route_id")
    _add_analysis_flags(sub)
    sub.add_argument("--format", choices=("csv", "table"), default="csv")
    sub.set_defaults(func=cmd_analyze)

    sub = commands.add_parser("report", help="rounded error summary")
    sub.add_argument("route_id")
    _add_analysis_flags(sub)
    sub.set_defaults(func=cmd_report)

    sub = commands.add_parser("plotdata", help="planned and flown local coordinates as CSV")
    sub.add_argument("route_id")
    sub.add_argument("flown", nargs="?", default=None, help="optional flown-record JSON file")
    sub.add_argument("--mode", default=None)
    sub.add_argument("--home", nargs=2, type=float, metavar=("LAT", "LON"))
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_plotdata)

    sub = commands.add_parser("serve", help="run the HTTP service")
    sub.add_argument("--host", default="127.0.0.1")
    sub.add_argument("--port", type=int, default=8000)
    sub.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NOT_FOUND
    except PairingError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PAIRING
    except ValidationFailed as exc:
        print("error: route failed validation", file=sys.stderr)
        for violation in exc.violations:
            print("  %s: %s" % (violation.code, violation.message), file=sys.stderr)
        return EXIT_VALIDATION
    except (SchemaError, ScheduleError, CapacityError, DomainError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
