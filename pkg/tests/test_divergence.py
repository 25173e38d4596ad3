"""Sawtooth witnesses, Hoelder bounds, and the lower-bound inequality chain."""

import numpy as np
import pytest

from su2fourier.group import GroupElement, haar_grid, random_elements
from su2fourier.fourier import classical_dirichlet, lebesgue_constant
from su2fourier.divergence import (
    divergence_table,
    functional_split,
    holder_bound,
    holder_quotient_estimate,
    partial_sum_at_identity,
    sawtooth,
    sawtooth_breakpoints,
    sawtooth_normalized,
    verify_chain,
)


# ---------------------------------------------------------------- sawtooth

def test_sawtooth_values():
    g = sawtooth(5)
    assert g(0.0) == pytest.approx(1.0, abs=1e-15)
    assert g(np.pi) == pytest.approx(0.0, abs=1e-15)
    # midpoint of the first interval (2n+3 = 13) interpolates +1 and -1
    assert g(np.pi / 13) == pytest.approx(0.0, abs=1e-14)


def test_sawtooth_breakpoint_pattern():
    th, va = sawtooth_breakpoints(5)
    M = 13
    for k in range(7):
        assert th[k] == pytest.approx(2 * k * np.pi / M, abs=1e-15)
        assert va[k] == (-1.0) ** k
    assert th[-1] == np.pi and va[-1] == 0.0


def test_sawtooth_rejects_small_n():
    for n in (0, 1, -3):
        with pytest.raises(ValueError):
            sawtooth(n)


def test_sawtooth_bounded_by_one():
    g = sawtooth(11)
    th = np.linspace(0, np.pi, 20000)
    assert np.abs(g(th)).max() <= 1.0 + 1e-15


def test_sawtooth_eval_is_breakpoint_interpolation():
    g = sawtooth(7)
    th, va = g.breakpoints
    probe = np.linspace(0, np.pi, 777)
    assert np.abs(g(probe) - np.interp(probe, th, va)).max() < 1e-14


# ---------------------------------------------------------------- Hoelder machinery

def test_holder_bound_below_pi():
    ns = np.arange(2, 1025)
    for alpha in np.linspace(0.1, 0.9, 9):
        assert np.all(holder_bound(ns, alpha) <= np.pi + 1e-15)


def test_holder_bound_values():
    # alpha -> 1 collapses the width factor
    assert holder_bound(10, 1.0 - 1e-12) == pytest.approx(np.pi / 2, rel=1e-9)
    want = np.sqrt(np.pi / 2) * np.sqrt(2 * np.pi / 23)
    assert holder_bound(10, 0.5) == pytest.approx(want, rel=1e-14)


def test_holder_quotient_constant_function():
    from su2fourier.fourier import const_fn

    assert holder_quotient_estimate(const_fn(3.0), 0.5, 2000, seed=1) == 0.0


@pytest.mark.parametrize("n", [2, 5, 17, 64])
def test_holder_quotient_of_normalized_witnesses_below_bound(n):
    f = sawtooth_normalized(n)
    for alpha in (0.1, 0.5, 0.9):
        est = holder_quotient_estimate(f, alpha, sample_count=10_000, seed=n)
        assert est <= float(holder_bound(n, alpha)) + 1e-9
        assert est <= np.pi + 1e-9


def test_holder_quotient_unit_amplitude_exceeds_pi():
    # why the normalization matters: adjacent breakpoint classes of the
    # unit-amplitude witness sit at distance 2 sin(pi/(2n+3)) with values
    # +-1, so the quotient 2/(2 sin(pi/M))^alpha outgrows pi
    from su2fourier.group import GroupElement, metric_d

    n, alpha = 17, 0.5
    M = 2 * n + 3
    f = sawtooth(n)
    x = GroupElement(np.exp(2j * np.pi * 1 / M), 0j)
    y = GroupElement(np.exp(2j * np.pi * 2 / M), 0j)
    d = metric_d(x, y)
    quotient = abs(float(f(2 * np.pi / M)) - float(f(4 * np.pi / M))) / d**alpha
    assert quotient == pytest.approx(2 / (2 * np.sin(np.pi / M)) ** alpha, rel=1e-12)
    assert quotient > np.pi
    # and the sampler finds such pairs too
    est = holder_quotient_estimate(f, alpha, sample_count=20_000, seed=0)
    assert est > np.pi


def test_normalized_witness_scaling():
    f = sawtooth_normalized(9)
    g = sawtooth(9)
    th = np.linspace(0, np.pi, 101)
    scale = np.pi / 21
    assert np.abs(f(th) - scale * g(th)).max() < 1e-15


def test_holder_quotient_angle_function_oracle():
    # f(omega(theta)) = theta: on a one-parameter torus pair the quotient is
    # (theta1-theta2)/(2 sin((theta1-theta2)/2))^alpha, maximized over the gap.
    from su2fourier.fourier import CentralFn

    f = CentralFn(fn=lambda th: th, name="angle")
    alpha = 0.9
    gaps = np.linspace(1e-6, np.pi, 200001)
    oracle = np.max(gaps / (2 * np.sin(gaps / 2)) ** alpha)
    est = holder_quotient_estimate(f, alpha, sample_count=40_000, seed=3)
    assert est <= oracle + 1e-9
    assert est >= 0.9 * oracle


# ---------------------------------------------------------------- two-term split

@pytest.mark.parametrize("n", [2, 5, 17, 64, 100])
def test_split_consistent_with_coefficient_path(n):
    split = functional_split(n)
    want = partial_sum_at_identity(n)
    assert abs(split.value - want) <= 1e-6 * abs(want)


def test_split_bounded_term_below_lebesgue():
    for n in (2, 10, 50):
        split = functional_split(n)
        assert abs(split.bounded_term) <= lebesgue_constant(n) + 1e-10


def test_split_oscillatory_term_lower_bound():
    # summing the per-interval bounds and the cosine-sum identity gives
    # oscillatory >= (D_{n+1}(pi/(2n+3)) - 1)/3.  (The factor is 1/3: the
    # cosine sum is half of D-1, not all of it.)
    for n in (2, 10, 100):
        split = functional_split(n)
        D = classical_dirichlet(n + 1, np.pi / (2 * n + 3))
        assert split.oscillatory_term >= (D - 1) / 3 - 1e-10


# ---------------------------------------------------------------- chain reports

def test_chain_small_n_margins():
    rep = verify_chain(2)
    assert rep.intervals.shape == (3, 3)
    assert rep.min_margin >= 0.0
    assert rep.tail_integral >= -1e-10
    assert rep.ok()


def test_chain_identity_at_17():
    rep = verify_chain(17)
    # both sides computed independently: cosine sum vs closed-form kernel value
    assert rep.identity_error < 1e-10
    assert rep.cosine_sum == pytest.approx((rep.dirichlet_value - 1) / 2, abs=1e-10)


def test_chain_dirichlet_floor_large_n():
    n = 10_000
    M = 2 * n + 3
    D = classical_dirichlet(n + 1, np.pi / M)
    assert D >= 2 * M / np.pi


@pytest.mark.parametrize("n", [2, 3, 5, 9, 17, 32])
def test_chain_all_margins(n):
    rep = verify_chain(n)
    assert rep.ok(1e-8), rep.margins
    assert rep.identity_error < 1e-10
    assert rep.lip_norm_bound <= 1 + np.pi + 1e-12


def test_chain_underresolved_rule_reports_not_raises():
    # 1 node per cell cannot integrate the oscillation: margins go negative,
    # which the report carries instead of raising.
    rep = verify_chain(8, nodes_per_cell=1)
    assert not rep.ok(1e-8)


# ---------------------------------------------------------------- growth and tables

def test_monotone_blowup_along_diagonal():
    vals = [abs(partial_sum_at_identity(n)) for n in (25, 50, 100, 200, 400)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_growth_rate():
    for n in (50, 100, 200):
        assert abs(partial_sum_at_identity(n)) >= 0.5 * n


def test_divergence_table_identity_point():
    rule = haar_grid(48)
    rows = divergence_table([GroupElement(1.0 + 0j, 0j)], [4], rule)
    assert len(rows) == 1
    assert rows[0].rel_gap < 1e-4
    assert rows[0].central_abs == pytest.approx(abs(partial_sum_at_identity(4)), abs=1e-14)
    assert rows[0].growth == pytest.approx(rows[0].central_abs / 4, abs=1e-14)


def test_divergence_table_random_point():
    rng = np.random.default_rng(8)
    a, b = random_elements(rng, 1)
    z = GroupElement(complex(a[0]), complex(b[0]))
    rule = haar_grid(96)
    rows = divergence_table([z], [8], rule)
    assert rows[0].rel_gap < 1e-4
