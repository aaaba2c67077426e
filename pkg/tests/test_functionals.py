import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vecquad.errors import DomainError, ParseError
from vecquad.functionals import (
    CATALOG,
    EUCLIDEAN,
    MAX_NORM,
    lp,
    n_of_phi,
    parse_functional,
    q_of_z,
    q_star,
    weighted_lp,
)

coords = st.floats(-1e3, 1e3, allow_nan=False)
angles = st.floats(-10.0, 10.0, allow_nan=False)
catalog = st.sampled_from(CATALOG)


def test_eval_examples():
    assert EUCLIDEAN((3.0, 4.0)) == 5.0
    assert lp(1)((1.0, 1.0)) == 2.0
    # (|1|**0.5 + |1|**0.5)**2 = 2**2
    assert lp(0.5)((1.0, 1.0)) == pytest.approx(4.0, rel=1e-15)
    assert MAX_NORM((-2.0, 1.5)) == 2.0
    # sqrt(2 * 1 + 1 * 4)
    assert weighted_lp(2, 2, 1)((1.0, 2.0)) == pytest.approx(math.sqrt(6.0), rel=1e-15)


def test_eval_rejects_non_finite():
    with pytest.raises(DomainError):
        EUCLIDEAN((math.nan, 0.0))
    with pytest.raises(DomainError):
        lp(3)((1.0, math.inf))


def test_large_exponent_does_not_overflow():
    f = lp(64)
    assert f((1e300, 1e300)) == pytest.approx(1e300 * 2 ** (1 / 64), rel=1e-14)


@pytest.mark.parametrize("f", CATALOG, ids=str)
def test_positive_definite(f):
    assert f((0.0, 0.0)) == 0.0
    rng = np.random.default_rng(1)
    for x, y in rng.uniform(-5, 5, size=(200, 2)):
        assert f((x, y)) > 0.0


@pytest.mark.parametrize("f", CATALOG, ids=str)
def test_homogeneity_seeded(f):
    rng = np.random.default_rng(7)
    for _ in range(1000):
        x, y = rng.uniform(-10, 10, size=2)
        lam = rng.uniform(0, 10)
        nz = f((x, y))
        assert abs(f((lam * x, lam * y)) - lam * nz) <= 1e-12 * (1 + lam * nz)


@given(catalog, coords, coords, st.floats(0, 1e3))
def test_homogeneity_property(f, x, y, lam):
    nz = f((x, y))
    assert abs(f((lam * x, lam * y)) - lam * nz) <= 1e-12 * (1 + lam * nz)


@given(catalog, coords, coords)
def test_vectorized_matches_scalar(f, x, y):
    assert f.evaluate(np.array([x]), np.array([y]))[0] == pytest.approx(f((x, y)), rel=1e-14, abs=0)


def test_n_of_phi_examples():
    for phi in (0.0, 0.3, 2.0, -4.0):
        assert n_of_phi(EUCLIDEAN, phi) == pytest.approx(1.0, abs=1e-15)
    assert n_of_phi(lp(1), math.pi / 4) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert n_of_phi(MAX_NORM, math.pi / 2) == 1.0


def test_q_star_examples():
    assert q_star(EUCLIDEAN, 0.7) == pytest.approx(1.0, abs=1e-15)
    assert q_star(lp(1), math.pi / 2) == pytest.approx(1.0, abs=1e-15)
    # N(pi/4) = sqrt 2, N(pi/2) = 1
    assert q_star(lp(1), math.pi / 4) == pytest.approx(2.0, rel=1e-15)


def test_q_of_z_examples():
    assert q_of_z(EUCLIDEAN, (2.0, 3.0)) == pytest.approx(1.0, abs=1e-15)
    # ||(1,1)||_1**2 / ||(0,2)||_1 = 4 / 2
    assert q_of_z(lp(1), (1.0, 1.0)) == pytest.approx(2.0, rel=1e-15)
    with pytest.raises(DomainError):
        q_of_z(lp(1), (0.0, 0.0))


@pytest.mark.parametrize("f", [f for f in CATALOG if f.wx == 1.0], ids=str)
@pytest.mark.parametrize("x", [-3.0, -0.5, 0.25, 7.0])
def test_q_of_real_axis_point_is_one(f, x):
    assert q_of_z(f, (x, 0.0)) == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("x", [-3.0, 0.25, 7.0])
def test_q_of_real_axis_point_for_weighted_first_axis(x):
    # Q((x, 0)) = ||(1, 0)|| in general; it is one only for normalized functionals.
    f = weighted_lp(2, 2, 1)
    assert q_of_z(f, (x, 0.0)) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert q_of_z(f, (x, 0.0)) == pytest.approx(n_of_phi(f, 0.0), rel=1e-15)


@given(catalog, coords, coords, st.floats(1e-3, 1e3))
def test_q_of_z_scale_invariant(f, x, y, lam):
    if math.hypot(x, y) < 1e-3:
        return
    assert q_of_z(f, (lam * x, lam * y)) == pytest.approx(q_of_z(f, (x, y)), rel=1e-12)


def _well_conditioned(f, phi):
    # Antinorms are not Lipschitz on the axes: near angles where phi or 2 phi
    # hits an axis a one-ulp change in the angle moves N by about eps**e.
    if not f.is_antinorm:
        return True
    k = phi / (math.pi / 4)
    return abs(k - round(k)) * (math.pi / 4) >= 1e-3


@given(catalog, angles)
def test_q_star_consistent_with_q_of_z(f, phi):
    if not _well_conditioned(f, phi):
        return
    assert abs(q_star(f, phi) - q_of_z(f, (math.cos(phi), math.sin(phi)))) <= 1e-12


@given(catalog, angles)
def test_n_of_phi_periodic(f, phi):
    if not _well_conditioned(f, phi):
        return
    assert abs(n_of_phi(f, phi) - n_of_phi(f, phi + 2 * math.pi)) <= 1e-12


@pytest.mark.parametrize("f", CATALOG, ids=str)
def test_invariants_on_seeded_angles(f):
    rng = np.random.default_rng(3)
    checked = 0
    for phi in rng.uniform(-2 * math.pi, 2 * math.pi, size=1000):
        if not _well_conditioned(f, phi):
            continue
        checked += 1
        assert abs(n_of_phi(f, phi) - n_of_phi(f, phi + 2 * math.pi)) <= 1e-12
        assert abs(q_star(f, phi) - q_of_z(f, (math.cos(phi), math.sin(phi)))) <= 1e-12
    assert checked > 990


def test_antinorm_axis_conditioning():
    f = lp(0.5)
    # sin(2 pi) is -2.4e-16 in floating point and its square root is 1.6e-8.
    assert abs(n_of_phi(f, 2 * math.pi) - 1.0) == pytest.approx(3.13e-8, rel=1e-2)
    assert n_of_phi(f, 0.0) == 1.0


@pytest.mark.parametrize(
    "text, expected",
    [
        ("euclidean", EUCLIDEAN),
        ("max", MAX_NORM),
        ("lp:1.5", lp(1.5)),
        ("lp:1", lp(1)),
        ("wlp:0.5:2:1", weighted_lp(0.5, 2, 1)),
        ("lp:64", lp(64)),
    ],
)
def test_parse(text, expected):
    assert parse_functional(text) == expected


@pytest.mark.parametrize(
    "text",
    ["", "lp", "lp:", "lp:0", "lp:-1", "lp:65", "lp:nan", "lp:inf", "lp: 1", "wlp:2:0:1",
     "wlp:2:1", "wlp:2:1:-1", "max:1", "euclid", "l2", "lp:1:2"],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_functional(text)


@pytest.mark.parametrize("f", CATALOG, ids=str)
def test_text_round_trip(f):
    assert parse_functional(str(f)) == f
    assert str(parse_functional(str(f))) == str(f)


def test_normalized_spelling():
    assert str(parse_functional("lp:1.0")) == "lp:1"
    assert str(parse_functional("wlp:0.50:2.0:1")) == "wlp:0.5:2:1"


def test_antinorm_flag():
    assert lp(0.5).is_antinorm
    assert not lp(1).is_antinorm
    assert not MAX_NORM.is_antinorm
