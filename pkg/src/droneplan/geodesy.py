"""Home-relative planar projection between geographic degrees and meters.

The local frame puts the takeoff (home) position at (0, 0): ``z_m`` runs
along the latitude axis and ``x_m`` along the longitude axis, scaled by
pi * R / 180 meters per degree with the longitude axis shrunk by a cosine
of the home latitude.

Two modes ship. ``CORRECTED`` uses the WGS84 equatorial radius and a
cosine of the home latitude in radians, and is the planning default.
``PAPER`` reproduces the arithmetic of the legacy field-test tables this
project must stay comparable with: R = 6,378,000 m and a cosine whose
argument is the home latitude in degrees scaled by 180/pi. That scaling is
a degrees-for-radians slip in the original tooling, preserved verbatim
here because the published reference numbers are unreproducible without
it. Use PAPER for analysis against those tables, CORRECTED for planning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class GeoPoint:
    latitude_deg: float
    longitude_deg: float


@dataclass(frozen=True)
class HomePoint:
    """Takeoff position; origin of the local frame."""

    latitude_deg: float
    longitude_deg: float


@dataclass(frozen=True)
class LocalCoord:
    """Planar offset from home in meters (x: longitude axis, z: latitude axis)."""

    x_m: float
    z_m: float


@dataclass(frozen=True)
class GeodesyMode:
    name: str
    earth_radius_m: float
    degree_scaled_cos: bool

    def meters_per_degree(self) -> float:
        return math.pi * self.earth_radius_m / 180.0

    def cos_factor(self, home: HomePoint) -> float:
        # degree_scaled_cos feeds cos() the latitude in degrees times
        # 180/pi, i.e. 57.3x too large; the factor then depends on the
        # home latitude in a fast-oscillating, physically meaningless way.
        if self.degree_scaled_cos:
            return math.cos(home.latitude_deg * 180.0 / math.pi)
        return math.cos(math.radians(home.latitude_deg))

    @staticmethod
    def parse(name) -> "GeodesyMode":
        return parse_mode(name)


PAPER = GeodesyMode(name="paper", earth_radius_m=6_378_000.0, degree_scaled_cos=True)
CORRECTED = GeodesyMode(name="corrected", earth_radius_m=6_378_137.0, degree_scaled_cos=False)
MODES = {"paper": PAPER, "corrected": CORRECTED}


def parse_mode(name) -> GeodesyMode:
    if isinstance(name, GeodesyMode):
        return name
    try:
        return MODES[name.strip().lower()]
    except (KeyError, AttributeError):
        raise DomainError(f"unknown geodesy mode {name!r}; expected one of {sorted(MODES)}") from None


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"non-finite {name}: {value}")


def to_local(home: HomePoint, p: GeoPoint, mode: GeodesyMode = CORRECTED) -> LocalCoord:
    """Project a geographic point into home-relative meters.

    z_m = pi * R * (lat - lat_home) / 180
    x_m = pi * R * cos_factor(home) * (lon - lon_home) / 180

    Swapping ``p`` and ``home`` negates z exactly, but negates x only if
    the cosine factor is held at the original home: the factor follows
    whatever is passed as ``home``.
    """
    _require_finite(
        home_latitude=home.latitude_deg,
        home_longitude=home.longitude_deg,
        latitude=p.latitude_deg,
        longitude=p.longitude_deg,
    )
    mpd = mode.meters_per_degree()
    z = mpd * (p.latitude_deg - home.latitude_deg)
    x = mpd * mode.cos_factor(home) * (p.longitude_deg - home.longitude_deg)
    return LocalCoord(x_m=x, z_m=z)


def from_local(home: HomePoint, c: LocalCoord, mode: GeodesyMode = CORRECTED) -> GeoPoint:
    """Exact algebraic inverse of :func:`to_local` in the same mode."""
    _require_finite(home_latitude=home.latitude_deg, home_longitude=home.longitude_deg, x_m=c.x_m, z_m=c.z_m)
    mpd = mode.meters_per_degree()
    cosf = mode.cos_factor(home)
    if cosf == 0.0:
        raise DomainError(f"degenerate home latitude {home.latitude_deg}: longitude scale factor is zero")
    return GeoPoint(
        latitude_deg=home.latitude_deg + c.z_m / mpd,
        longitude_deg=home.longitude_deg + c.x_m / (mpd * cosf),
    )


def leg_length_3d(a, b, home: HomePoint, mode: GeodesyMode = CORRECTED) -> float:
    """Straight-line meters between two waypoints, altitude included."""
    la = to_local(home, GeoPoint(a.latitude_deg, a.longitude_deg), mode)
    lb = to_local(home, GeoPoint(b.latitude_deg, b.longitude_deg), mode)
    return math.sqrt((lb.x_m - la.x_m) ** 2 + (lb.z_m - la.z_m) ** 2 + (b.altitude_m - a.altitude_m) ** 2)
