import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fucik.eigenfunction import (
    SUP_NORM,
    JunctionError,
    build,
    evaluate,
    ode_residual,
    to_record,
)
from fucik.spectrum import FucikPoint, point_from_gamma, solve_beta


def test_two_arc_profile_geometry():
    p = FucikPoint(2, 6.25, solve_beta(2, 6.25))
    f = build(p)
    assert len(f.bumps) == 2
    pos, neg = f.bumps
    assert pos.sign == 1 and neg.sign == -1
    assert pos.start == 0.0 and neg.end == math.pi
    assert pos.end == pytest.approx(math.pi / 2.5, abs=1e-15)
    assert f.junctions == (pos.end,)
    # slope continuity pins the amplitude ratio to sqrt(beta/alpha)
    assert pos.amplitude * math.sqrt(p.alpha) == pytest.approx(
        neg.amplitude * math.sqrt(p.beta), rel=1e-13
    )
    # the slower, wider arc carries the sup norm
    assert neg.amplitude == SUP_NORM
    assert pos.amplitude == pytest.approx(SUP_NORM * 2.0 / 3.0, rel=1e-13)


def test_boundary_values_vanish():
    for n, gamma in ((2, 4.7), (6, 8.3), (10, 5.0), (16, 6.25)):
        f = build(point_from_gamma(n, gamma))
        assert evaluate(f, 0.0) == 0.0
        assert abs(evaluate(f, math.pi)) < 1e-14
        for j in f.junctions:
            assert abs(evaluate(f, j)) < 1e-13


def test_index_one_profile_is_the_first_mode():
    f = build(FucikPoint(1, 1.0, 1.0))
    xs = np.linspace(0.0, math.pi, 501)
    assert np.max(np.abs(evaluate(f, xs) - SUP_NORM * np.sin(xs))) < 1e-15


def test_diagonal_profile_is_a_plain_mode():
    for n in (2, 3, 5, 8):
        f = build(FucikPoint(n, float(n * n), float(n * n)))
        xs = np.linspace(0.0, math.pi, 700)
        assert np.max(np.abs(evaluate(f, xs) - SUP_NORM * np.sin(n * xs))) < 5e-13


def test_profile_alternates_signs_and_counts_arcs():
    p = FucikPoint(7, 64.0, solve_beta(7, 64.0))
    f = build(p)
    signs = [b.sign for b in f.bumps]
    assert signs == [1, -1, 1, -1, 1, -1, 1]
    widths_pos = {b.end - b.start for b in f.bumps if b.sign == 1}
    assert max(widths_pos) - min(widths_pos) < 1e-15


def test_evaluate_scalar_and_array_agree():
    f = build(point_from_gamma(4, 6.0))
    xs = np.linspace(0.0, math.pi, 37)
    arr = evaluate(f, xs)
    for x, v in zip(xs, arr):
        assert evaluate(f, float(x)) == v


def test_evaluate_rejects_points_outside_domain():
    f = build(FucikPoint(2, 4.0, 4.0))
    with pytest.raises(ValueError):
        evaluate(f, -0.1)
    with pytest.raises(ValueError):
        evaluate(f, math.pi + 0.1)
    with pytest.raises(ValueError):
        evaluate(f, np.array([0.5, 3.5]))


def test_ode_residual_small_inside_arcs():
    p = FucikPoint(3, 16.0, 4.0)
    f = build(p)
    for b in f.bumps:
        for x in np.linspace(b.start, b.end, 40)[1:-1]:
            assert abs(ode_residual(f, float(x))) < 1e-11


def test_ode_residual_refuses_junction_neighborhood():
    f = build(FucikPoint(2, 6.25, solve_beta(2, 6.25)))
    j = f.junctions[0]
    with pytest.raises(JunctionError):
        ode_residual(f, j + 1e-12)
    # just outside the guard band it works
    assert abs(ode_residual(f, j + 1e-6)) < 1e-9


def test_record_layout():
    rec = to_record(build(FucikPoint(3, 16.0, 4.0)))
    assert rec["n"] == 3
    assert rec["alpha"] == 16.0 and rec["beta"] == 4.0
    assert rec["sup_norm"] == SUP_NORM
    assert [b["sign"] for b in rec["bumps"]] == [1, -1, 1]
    assert rec["bumps"][0]["frequency"] == pytest.approx(4.0, abs=1e-14)


def test_sup_norm_is_attained_at_a_bump_midpoint():
    f = build(point_from_gamma(2, 7.3))
    neg = f.bumps[1]
    mid = 0.5 * (neg.start + neg.end)
    assert abs(evaluate(f, mid)) == pytest.approx(SUP_NORM, abs=1e-15)


@settings(max_examples=40)
@given(
    n=st.integers(min_value=1, max_value=15),
    gamma=st.floats(min_value=4.0, max_value=8.99),
    frac=st.floats(min_value=0.0, max_value=1.0),
)
def test_profiles_stay_within_sup_norm(n, gamma, frac):
    f = build(point_from_gamma(2 * n, gamma))
    x = frac * math.pi
    assert abs(evaluate(f, x)) <= SUP_NORM + 1e-13


@settings(max_examples=30)
@given(
    n=st.integers(min_value=2, max_value=12),
    rel=st.floats(min_value=1.0001, max_value=1.4),
)
def test_odd_profiles_solve_the_equation(n, rel):
    m = 2 * n + 1
    alpha = (m * rel) ** 2
    f = build(FucikPoint(m, alpha, solve_beta(m, alpha)))
    for b in f.bumps[:2]:
        x = 0.5 * (b.start + b.end)
        assert abs(ode_residual(f, x)) < 1e-9
