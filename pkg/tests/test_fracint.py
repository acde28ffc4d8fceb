import math

import numpy as np
import pytest

from betrans.fracint import (
    G_IDENTITY,
    G_LOG,
    G_SQUARE,
    FracSpec,
    MonotoneFunction,
    ek_integral,
    frac_by_function,
    neg_inv_x_deriv_power,
    right_derivative_power,
    rl_integral,
)
from betrans.numgrid import DecayHint, SampledFunction, make_grid, norm_l2


def test_spec_validation():
    with pytest.raises(ValueError):
        FracSpec("rl_left", -0.5)
    with pytest.raises(ValueError):
        FracSpec("nope", 1.0)
    with pytest.raises(ValueError):
        FracSpec("by_function", 1.0)


def test_rl_left_order_one_is_running_integral(grid_main):
    ones = SampledFunction(grid_main, np.ones_like(grid_main.points), DecayHint.power(0.0))
    out = rl_integral(FracSpec("rl_left", 1.0), ones)
    assert np.max(np.abs(out.values - grid_main.points) / grid_main.points) < 1e-10


def test_rl_left_power_rule(grid_main):
    # I^(1/2) t = Gamma(2)/Gamma(5/2) x^(3/2) = (4/(3 sqrt(pi))) x^(3/2)
    x = grid_main.points
    f = SampledFunction(grid_main, x.copy(), DecayHint.power(-1.0))
    out = rl_integral(FracSpec("rl_left", 0.5), f)
    exact = x**1.5 * 4.0 / (3.0 * math.sqrt(math.pi))
    assert np.max(np.abs(out.values - exact) / exact) < 1e-7


def test_rl_right_exponential(grid_main):
    f = SampledFunction.from_callable(lambda t: np.exp(-t), grid_main, DecayHint.exponential())
    out = rl_integral(FracSpec("rl_right", 1.0), f)
    x = grid_main.points
    m = x < 20.0
    assert np.max(np.abs(out.values[m] - np.exp(-x[m])) / np.exp(-x[m])) < 1e-6


def test_ek_left_constant(grid_main):
    # alpha = 1, eta = -1/2 maps the constant 1 to 1/(eta+1) = 2
    ones = SampledFunction(grid_main, np.ones_like(grid_main.points), DecayHint.power(0.0))
    out = ek_integral(FracSpec("ek_left", 1.0, -0.5), ones)
    assert np.max(np.abs(out.values - 2.0)) < 1e-10


def test_ek_power_rule_small_alpha_grid(grid_main):
    # EK power rule: x^b -> x^b Gamma(eta + b/2 + 1)/Gamma(alpha + eta + b/2 + 1)
    x = grid_main.points
    f = SampledFunction(grid_main, x**2, DecayHint.power(-2.0))
    m = x > 1e-3  # below this the head model of the operand dominates the scale
    for alpha in (0.25, 0.5, 1.0):
        out = ek_integral(FracSpec("ek_left", alpha, 0.25), f)
        exact = x**2 * math.gamma(0.25 + 1.0 + 1.0) / math.gamma(alpha + 0.25 + 2.0)
        assert np.max(np.abs(out.values - exact)[m] / exact[m]) < 1e-7


def test_ek_right_gaussian_tail(grid_main):
    from scipy.special import exp1

    f = SampledFunction.from_callable(lambda t: np.exp(-(t**2)), grid_main, DecayHint.exponential())
    out = ek_integral(FracSpec("ek_right", 1.0, 0.0), f)
    x = grid_main.points
    m = (x > 1e-3) & (x < 3.0)
    exact = exp1(x[m] ** 2)
    assert np.max(np.abs(out.values[m] - exact) / exact) < 1e-6


def test_by_function_identity_reduces_to_rl(grid_main):
    f = SampledFunction.from_callable(lambda t: t * np.exp(-t), grid_main, DecayHint.exponential())
    a = frac_by_function(FracSpec("by_function", 0.7, g=G_IDENTITY), f)
    b = rl_integral(FracSpec("rl_left", 0.7), f)
    assert np.max(np.abs(a.values - b.values)) < 1e-12


def test_by_function_hadamard():
    # g = log, alpha = 1, f = 1/t on a hull starting at 1: int_1^x dt/t = ln x
    grid = make_grid(256, (1.0, 50.0), "log")
    x = grid.points
    ones = SampledFunction(grid, np.ones_like(x), DecayHint.power(0.0))
    out = frac_by_function(FracSpec("by_function", 1.0, g=G_LOG), ones)
    m = x > 1.5
    expect = np.log(x[m])
    assert np.max(np.abs(out.values[m] - expect) / expect) < 1e-9


def test_by_function_square_matches_ek(grid_main):
    ones = SampledFunction(grid_main, np.ones_like(grid_main.points), DecayHint.power(0.0))
    a = frac_by_function(FracSpec("by_function", 0.5, g=G_SQUARE), ones)
    b = ek_integral(FracSpec("ek_left", 0.5, 0.0), ones)
    x = grid_main.points
    assert np.max(np.abs(a.values - x**1.0 * b.values)) < 1e-8


def test_by_function_rejects_nonmonotone(grid_main):
    bad = MonotoneFunction("bad", lambda x: -x, lambda x: -np.ones_like(x))
    ones = SampledFunction(grid_main, np.ones_like(grid_main.points))
    with pytest.raises(ValueError):
        frac_by_function(FracSpec("by_function", 1.0, g=bad), ones)


def test_semigroup_property():
    grid = make_grid(1024)

    def bump_fn(t):
        t = np.asarray(t, float)
        out = np.zeros_like(t)
        m = (t > 1) & (t < 2)
        out[m] = np.sin(np.pi * (t[m] - 1.0)) ** 8
        return out

    f = SampledFunction.from_callable(bump_fn, grid, DecayHint.compact(1, 2))
    for a, b in ((0.25, 0.5), (0.5, 1.0), (0.25, 1.0)):
        lhs = rl_integral(FracSpec("rl_left", a), rl_integral(FracSpec("rl_left", b), f))
        rhs = rl_integral(FracSpec("rl_left", a + b), f)
        resid = norm_l2(lhs - rhs) / norm_l2(f)
        assert resid < 1e-6, (a, b, resid)


def test_identity_limit_on_polynomial(grid_main):
    x = grid_main.points
    f = SampledFunction(grid_main, x**2, DecayHint.power(-2.0))
    out = rl_integral(FracSpec("rl_left", 1.0), f)
    exact = x**3 / 3.0
    m = x > 1e-2
    assert np.max(np.abs(out.values[m] - exact[m]) / exact[m]) < 1e-10


def test_integer_derivative_operators(grid_main):
    x = grid_main.points
    f = SampledFunction.from_callable(lambda t: np.exp(-(t**2)), grid_main, DecayHint.exponential())
    d2 = right_derivative_power(2, f)
    exact = (4 * x**2 - 2) * np.exp(-(x**2))
    mask = grid_main.interior_mask(0.6)
    assert np.max(np.abs(d2.values - exact)[mask]) < 1e-5
    nd = neg_inv_x_deriv_power(1, f)
    assert np.max(np.abs(nd.values - 2.0 * np.exp(-(x**2)))[mask]) < 1e-5
