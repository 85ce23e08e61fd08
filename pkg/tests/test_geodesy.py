import math

import pytest
from hypothesis import given, settings, strategies as st

from droneplan import (
    CORRECTED,
    PAPER,
    DomainError,
    GeodesyMode,
    GeoPoint,
    HomePoint,
    LocalCoord,
    from_local,
    leg_length_3d,
    parse_mode,
    to_local,
)

HOME = HomePoint(4.600616698046521, -74.0626963974056)

# One degree of latitude in meters, per mode. Frozen from the defining
# expression pi * R / 180 evaluated at double precision.
MPD_LEGACY = math.pi * 6_378_000.0 / 180.0
MPD_WGS = math.pi * 6_378_137.0 / 180.0


class TestModes:
    def test_mode_constants(self):
        assert PAPER.earth_radius_m == 6_378_000.0
        assert CORRECTED.earth_radius_m == 6_378_137.0
        assert PAPER.meters_per_degree() == pytest.approx(111317.09969219835, abs=1e-9)
        assert CORRECTED.meters_per_degree() == pytest.approx(111319.49079327358, abs=1e-9)

    def test_legacy_cosine_takes_degrees_scaled_argument(self):
        # The legacy projection feeds cos() the latitude in degrees times
        # 180/pi. At this home that lands on 0.9559658..., far from the
        # physically sensible cos(radians(lat)) = 0.99678.
        assert PAPER.cos_factor(HOME) == math.cos(HOME.latitude_deg * 180.0 / math.pi)
        assert PAPER.cos_factor(HOME) == pytest.approx(0.9559658497, abs=1e-9)
        assert CORRECTED.cos_factor(HOME) == math.cos(math.radians(HOME.latitude_deg))
        assert CORRECTED.cos_factor(HOME) == pytest.approx(0.9967780152, abs=1e-9)

    def test_parse_mode(self):
        assert parse_mode("paper") is PAPER
        assert parse_mode(" Corrected ") is CORRECTED
        assert parse_mode(CORRECTED) is CORRECTED
        with pytest.raises(DomainError, match="unknown geodesy mode"):
            parse_mode("wgs84")
        with pytest.raises(DomainError):
            parse_mode(None)


class TestToLocal:
    def test_home_maps_to_origin(self):
        c = to_local(HOME, GeoPoint(HOME.latitude_deg, HOME.longitude_deg), PAPER)
        assert c.x_m == 0.0 and c.z_m == 0.0

    def test_one_degree_north(self):
        c = to_local(HOME, GeoPoint(HOME.latitude_deg + 1.0, HOME.longitude_deg), PAPER)
        assert c.z_m == pytest.approx(MPD_LEGACY, abs=1e-9)
        assert c.x_m == 0.0

    def test_one_degree_east_scales_by_cos_factor(self):
        c = to_local(HOME, GeoPoint(HOME.latitude_deg, HOME.longitude_deg + 1.0), PAPER)
        assert c.x_m == pytest.approx(MPD_LEGACY * PAPER.cos_factor(HOME), rel=1e-12)
        d = to_local(HOME, GeoPoint(HOME.latitude_deg, HOME.longitude_deg + 1.0), CORRECTED)
        assert d.x_m == pytest.approx(MPD_WGS * CORRECTED.cos_factor(HOME), rel=1e-12)

    def test_default_mode_is_corrected(self):
        p = GeoPoint(HOME.latitude_deg + 0.001, HOME.longitude_deg)
        assert to_local(HOME, p).z_m == to_local(HOME, p, CORRECTED).z_m

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError, match="non-finite"):
            to_local(HOME, GeoPoint(float("nan"), -74.0), PAPER)
        with pytest.raises(DomainError):
            to_local(HomePoint(4.6, float("inf")), GeoPoint(4.6, -74.0))

    def test_swapping_point_and_home_negates_z_exactly(self):
        p = GeoPoint(4.60076522102383, -74.0626736305917)
        a = to_local(HOME, p, PAPER)
        b = to_local(HomePoint(p.latitude_deg, p.longitude_deg),
                     GeoPoint(HOME.latitude_deg, HOME.longitude_deg), PAPER)
        assert b.z_m == -a.z_m
        # x is not antisymmetric: the cosine factor moves with the home.


class TestFromLocal:
    def test_inverse_of_one_degree(self):
        p = from_local(HOME, LocalCoord(0.0, MPD_LEGACY), PAPER)
        assert p.latitude_deg - HOME.latitude_deg == pytest.approx(1.0, abs=1e-9)
        assert p.longitude_deg == HOME.longitude_deg

    def test_origin_maps_home(self):
        p = from_local(HOME, LocalCoord(0.0, 0.0), CORRECTED)
        assert (p.latitude_deg, p.longitude_deg) == (HOME.latitude_deg, HOME.longitude_deg)

    @given(
        st.floats(-10_000, 10_000),
        st.floats(-10_000, 10_000),
        st.sampled_from([PAPER, CORRECTED]),
    )
    @settings(max_examples=300)
    def test_round_trip_within_nanometer_scale(self, x, z, mode):
        c = LocalCoord(x, z)
        p = from_local(HOME, c, mode)
        back = to_local(HOME, GeoPoint(p.latitude_deg, p.longitude_deg), mode)
        assert abs(back.x_m - x) < 1e-9
        assert abs(back.z_m - z) < 1e-9


class TestLinearity:
    @given(st.floats(-0.05, 0.05), st.floats(-0.05, 0.05))
    @settings(max_examples=100)
    def test_projection_is_linear_in_deltas(self, dlat, dlon):
        p = GeoPoint(HOME.latitude_deg + dlat, HOME.longitude_deg + dlon)
        c = to_local(HOME, p, PAPER)
        assert c.z_m == pytest.approx(MPD_LEGACY * dlat, abs=1e-7)
        assert c.x_m == pytest.approx(MPD_LEGACY * PAPER.cos_factor(HOME) * dlon, abs=1e-7)


def test_leg_length_matches_pythagoras():
    from droneplan import PathPoint

    far = from_local(HOME, LocalCoord(30.0, 40.0), CORRECTED)
    a = PathPoint(0, HOME.latitude_deg, HOME.longitude_deg, 0.0)
    b = PathPoint(1, far.latitude_deg, far.longitude_deg, 0.0)
    assert leg_length_3d(a, b, HOME, CORRECTED) == pytest.approx(50.0, abs=1e-6)
    b.altitude_m = 120.0
    assert leg_length_3d(a, b, HOME, CORRECTED) == pytest.approx(130.0, abs=1e-6)


def test_custom_mode_scales_with_radius():
    double_r = GeodesyMode(name="2r", earth_radius_m=2 * 6_378_000.0, degree_scaled_cos=True)
    p = GeoPoint(HOME.latitude_deg + 0.001, HOME.longitude_deg + 0.001)
    base = to_local(HOME, p, PAPER)
    scaled = to_local(HOME, p, double_r)
    assert scaled.z_m == pytest.approx(2 * base.z_m, rel=1e-12)
    assert scaled.x_m == pytest.approx(2 * base.x_m, rel=1e-12)
