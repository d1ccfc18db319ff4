import json
import math

import pytest

from spincat.errors import InvalidSpec
from spincat.figures import FIGURES, SweepSpec, default_spec, emit_figure, figure_rows, maximizing_omega, render
from spincat.core import ChannelParams

NAMED = [f for f in FIGURES if f != "custom"]


def _rows(fig, **kw):
    cols, rows = figure_rows(default_spec(fig, **kw))
    return [dict(zip(cols, r)) for r in rows]


@pytest.mark.parametrize("fig", NAMED)
def test_byte_identical_across_runs(fig, tmp_path):
    a = emit_figure(default_spec(fig, out=str(tmp_path / "a.csv")))
    b = emit_figure(default_spec(fig, out=str(tmp_path / "b.csv")))
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_fig1_endpoints_and_interior():
    rows = _rows("fig1")
    assert {r["j"] for r in rows} == {0.5, 1.0, 1.5, 2.5, 15.5}
    for r in rows:
        if r["p"] == 0.0:
            assert r["concurrence"] == 1.0
        if r["p"] == 1.0:
            assert r["concurrence"] == 0.0
    mid = [r for r in rows if r["j"] == 1.0 and r["p"] == 0.5][0]
    assert mid["concurrence"] == pytest.approx(0.6, abs=1e-15)


def test_fig3_endpoints_and_consistency():
    fa, fb = _rows("fig3a"), _rows("fig3b")
    for ra, rb in zip(fa, fb):
        assert (ra["j"], ra["p"], ra["omega"]) == (rb["j"], rb["p"], rb["omega"])
        params = ChannelParams(ra["p"], ra["j"], 0)
        assert ra["omega"] == maximizing_omega(params)
        if ra["p"] == 1.0:
            assert ra["f_av_max"] == 1.0
        if ra["p"] == 0.0:
            assert ra["f_av_max"] == 0.5 and rb["p_success"] == 0.5
    # j = 2, p = 1/2: q = 1/4, so 1/2 + q/(1 + q^2) = 25/34
    mid = [r for r in fa if r["j"] == 2.0 and r["p"] == 0.5][0]
    assert mid["f_av_max"] == pytest.approx(25 / 34, abs=1e-15)


def test_fig3_decreases_with_spin():
    rows = _rows("fig3a")
    at = {(r["j"], r["p"]): r["f_av_max"] for r in rows}
    for p in (0.3, 0.5, 0.8):
        vals = [at[(j, p)] for j in (1.0, 2.0, 4.0, 8.0, 15.5)]
        assert vals == sorted(vals, reverse=True)


def test_fig4_values():
    a, b = _rows("fig4a"), _rows("fig4b")
    # omega = pi, depth 1, C = 1/2: (6 - 2 sqrt(3/4)) / 8
    r = [r for r in a if r["depth"] == 1 and r["concurrence"] == 0.5][0]
    assert r["f_av"] == pytest.approx((6 - math.sqrt(3)) / 8, abs=1e-15)
    for row in b:
        if row["concurrence"] == 0.0:
            assert row["f_av"] == pytest.approx(1.0)
    ends = {(r["depth"]): r["f_av"] for r in a if r["concurrence"] == 1.0}
    assert ends == pytest.approx({0: 0.5, 1: 0.75, 2: 0.875})


def test_fig5b_constants():
    rows = _rows("fig5b")
    for r in rows:
        assert r["p_success"] == {0: 0.5, 1: 0.75, 2: 0.875}[r["depth"]]


def test_fig5_depth_improves():
    for fig in ("fig5a", "fig5c"):
        rows = _rows(fig)
        by = {}
        for r in rows:
            by.setdefault(r["concurrence"], []).append(r["p_success"])
        for vals in by.values():
            assert vals == sorted(vals)


def test_row_order_series_then_x():
    rows = _rows("fig5a", steps=4)
    assert [r["depth"] for r in rows] == [0] * 4 + [1] * 4 + [2] * 4
    assert [r["concurrence"] for r in rows[:4]] == sorted(r["concurrence"] for r in rows[:4])


def test_csv_format():
    text = render(default_spec("fig1", steps=3, j=(1.0,)))
    assert text == "j,p,concurrence\n1,0,1\n1,0.5,0.59999999999999998\n1,1,0\n"


def test_json_mirrors_csv():
    spec = default_spec("fig4b", steps=5)
    records = json.loads(render(SweepSpec(**{**spec.__dict__, "format": "json"})))
    cols, rows = figure_rows(spec)
    assert all(list(r) == cols for r in records)
    assert [[r[c] for c in cols] for r in records] == [list(row) for row in rows]


def test_custom_sweeps():
    rows = _rows("custom", x="omega", start=0.0, stop=math.pi, steps=3, p=(1.0,), quantity="repetitions")
    assert [r["repetitions"] for r in rows] == [2.0, pytest.approx(4.0), math.inf]
    text = render(default_spec("custom", x="omega", start=0.0, stop=math.pi, steps=3, p=(1.0,),
                               quantity="repetitions", format="json"))
    assert json.loads(text)[-1]["repetitions"] is None
    rows = _rows("custom", x="C", m=(1,), depths=(3,), quantity="p_success", steps=2)
    assert [r["p_success"] for r in rows] == [15 / 16, 15 / 16]
    rows = _rows("custom", x="p", j=(2.0,), quantity="f_av", depths=(2,), omega=(math.pi / 2,), steps=3)
    assert [r["f_av"] for r in rows] == pytest.approx([7 / 16] * 3)


@pytest.mark.parametrize("kw", [dict(steps=1), dict(start=0.5, stop=0.2), dict(stop=1.5),
                                dict(format="xml"), dict(j=(-1.0,)), dict(m=(2,)), dict(x="q")])
def test_invalid_specs(kw):
    with pytest.raises(InvalidSpec):
        default_spec("fig1", **kw)


def test_invalid_custom_and_output():
    with pytest.raises(InvalidSpec):
        default_spec("custom", quantity="entropy")
    with pytest.raises(InvalidSpec):
        figure_rows(default_spec("custom", x="C", quantity="repetitions"))
    with pytest.raises(InvalidSpec):
        default_spec("fig9")
    with pytest.raises(InvalidSpec):
        emit_figure(default_spec("fig1"))
