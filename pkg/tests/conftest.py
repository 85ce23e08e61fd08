import json
import pathlib

import pytest

from droneplan import GeoPoint, HomePoint, FlownRecord, decode_route, flown_from_document

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

# The four field-test routes and the home points their tables were built
# around, kept together so golden tests read one way everywhere.
FIELD_ROUTE_IDS = ("PATH-96", "PATH-103", "PATH-3", "PATH-97")


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text())


def load_field_route(route_id: str):
    tree = load_fixture("field_routes.json")
    path, legacy = decode_route(route_id, tree[route_id])
    assert not legacy
    return path


def load_flight(route_id: str):
    number = route_id.split("-")[1]
    record, home, mode = flown_from_document(load_fixture(f"ruta{number}_flight.json"))
    assert home is not None and mode is not None
    return record, home, mode


def load_expected(route_id: str):
    entry = load_fixture("expected_errors.json")[route_id]
    return (
        [float(v) for v in entry["error_x"]],
        [float(v) for v in entry["error_z"]],
        float(entry["mean_error_x"]),
        float(entry["mean_error_z"]),
    )


@pytest.fixture
def tmp_store_file(tmp_path):
    return tmp_path / "routes.json"
