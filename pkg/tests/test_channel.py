import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spincat.channel import build_channel, concurrence_analytic, concurrence_numeric
from spincat.core import ChannelParams
from spincat.errors import DegenerateCat, InvalidParams


def test_ghz_limit():
    ch = build_channel(ChannelParams(0.0, 2))
    assert ch.state == pytest.approx(np.array([1, 0, 0, 1]) / math.sqrt(2))
    assert ch.concurrence == pytest.approx(1.0, abs=1e-15)


def test_ground_limit():
    ch = build_channel(ChannelParams(1.0, 3))
    assert ch.state == pytest.approx([1, 0, 0, 0])
    assert ch.concurrence == 0.0


def test_generic_even_cat():
    # A^2 = 3/4, B^2 = 1/4 -> (3, 0, 0, 1) / sqrt(10)
    ch = build_channel(ChannelParams(0.5, 1))
    assert ch.state == pytest.approx(np.array([3, 0, 0, 1]) / math.sqrt(10), abs=1e-15)
    assert ch.concurrence == pytest.approx(0.6, abs=1e-15)


def test_odd_cat_is_maximally_entangled():
    for p in (0.0, 0.3, 0.9, 0.999):
        ch = build_channel(ChannelParams(p, 2, 1))
        assert ch.state[0] == 0 and ch.state[3] == 0
        assert ch.concurrence == pytest.approx(1.0, abs=1e-12)


def test_numeric_examples():
    assert concurrence_numeric(np.array([1, 0, 0, 1]) / math.sqrt(2)) == pytest.approx(1.0)
    assert concurrence_numeric(np.array([1, 0, 0, 0])) == 0.0
    assert concurrence_numeric(np.array([3, 0, 0, 1]) / math.sqrt(10)) == pytest.approx(0.6, abs=1e-15)


def test_analytic_endpoints_exact():
    for j in (0.5, 1, 1.5, 2.5, 15.5):
        assert concurrence_analytic(ChannelParams(0.0, j)) == 1.0
        assert concurrence_analytic(ChannelParams(1.0, j)) == 0.0
        assert concurrence_analytic(ChannelParams(0.4, j, 1)) == 1.0


def test_strict_construction_guards():
    with pytest.raises(InvalidParams):
        build_channel(ChannelParams(0.5, 1.5))
    with pytest.raises(DegenerateCat):
        build_channel(ChannelParams(1.0, 1, 1))
    with pytest.raises(DegenerateCat):
        build_channel(ChannelParams(1.0, 1.5, 1), formal=True)


@given(p=st.floats(0, 1), j=st.sampled_from([0.5, 1, 1.5, 2, 2.5, 4, 15.5]))
@settings(max_examples=200, deadline=None)
def test_wootters_matches_closed_form(p, j):
    params = ChannelParams(p, j)
    ch = build_channel(params, formal=True)
    assert np.linalg.norm(ch.state) == pytest.approx(1.0, abs=1e-12)
    assert ch.concurrence == pytest.approx(concurrence_analytic(params), abs=1e-12)


@given(p1=st.floats(0, 1), p2=st.floats(0, 1), j=st.sampled_from([0.5, 1, 2, 15.5]))
@settings(max_examples=200, deadline=None)
def test_concurrence_decreases_with_overlap(p1, p2, j):
    lo, hi = sorted((p1, p2))
    assert concurrence_analytic(ChannelParams(lo, j)) >= concurrence_analytic(ChannelParams(hi, j))


def test_concurrence_increases_with_spin():
    for p in (0.2, 0.5, 0.8):
        vals = [concurrence_analytic(ChannelParams(p, j)) for j in (0.5, 1, 1.5, 2.5, 15.5)]
        assert vals == sorted(vals)
