import numpy as np
import pytest

from betrans.beops import (
    OperatorSpec,
    OperatorSpecError,
    apply_first_kind,
    apply_katrakhov,
    apply_second_kind,
    apply_second_kind_2param,
    apply_zero_order,
    format_operator,
    parse_operator,
)
from betrans.classicops import hardy_shifted
from betrans.fracint import FracSpec, ek_integral, rl_integral
from betrans.numgrid import DecayHint, PVInterior, SampledFunction, norm_l2, quad_singular
from betrans.testfuncs import suite_on_grid


# ----------------------------------------------------------------------
# operator grammar
# ----------------------------------------------------------------------


def test_parse_zero_order_example():
    spec = parse_operator("zero:S0+:nu=1")
    assert spec.family == "zero_order" and spec.variant == "S0+" and spec.nu == 1.0


def test_grammar_round_trip():
    for text in [
        "zero:S0+:nu=1",
        "first:B0+:nu=0.5:mu=0.3",
        "second:S:nu=-0.5",
        "kat:P:nu=1.5",
        "third:S:nu=0.5:phi=one:trig=sin",
        "spd:P:nu=0.25",
        "uhardy:U7",
        "stieltjes",
    ]:
        spec = parse_operator(text)
        assert parse_operator(format_operator(spec)) == spec


def test_grammar_rejects_bad_input():
    with pytest.raises(OperatorSpecError):
        parse_operator("nope:X")
    with pytest.raises(OperatorSpecError):
        parse_operator("zero:S0+")  # missing nu
    with pytest.raises(OperatorSpecError):
        parse_operator("first:B0+:nu=1:mu=1.5")  # mu >= 1
    with pytest.raises(OperatorSpecError):
        parse_operator("third:S:nu=0.5:phi=one")  # missing trig


# ----------------------------------------------------------------------
# zero-order family
# ----------------------------------------------------------------------


def test_zero_order_identity_at_degree_zero(grid_fine):
    for name in ("xexp", "x2gauss"):
        f = suite_on_grid(name, grid_fine)
        for var in ("S0+", "P0+", "S-", "P-"):
            out = apply_zero_order(OperatorSpec("zero_order", var, nu=0.0), f)
            resid = norm_l2(out - f) / norm_l2(f)
            assert resid < 1e-8, (name, var, resid)


def test_zero_order_hardy_reductions(grid_fine):
    f = suite_on_grid("xexp", grid_fine)
    mask = grid_fine.interior_mask(0.8)
    p1 = apply_zero_order(OperatorSpec("zero_order", "P0+", nu=1.0), f)
    direct = hardy_shifted("H1", f)
    assert np.max(np.abs(p1.values - direct.values)[mask]) < 1e-8
    s1 = apply_zero_order(OperatorSpec("zero_order", "S-", nu=1.0), f)
    direct = hardy_shifted("H2", f)
    assert np.max(np.abs(s1.values - direct.values)[mask]) < 1e-8


def test_zero_order_outer_fd_cross_check(bump):
    # differentiate-the-result path agrees with the kernel-side default
    a = apply_zero_order(OperatorSpec("zero_order", "S-", nu=0.7), bump)
    b = apply_zero_order(OperatorSpec("zero_order", "S-", nu=0.7), bump, outer_fd=True)
    # the differencing path is finite-difference limited on sharp operands
    assert norm_l2(a - b, interior=0.8) / norm_l2(bump) < 5e-3


# ----------------------------------------------------------------------
# first kind
# ----------------------------------------------------------------------


def test_first_kind_degree_zero_running_integral(grid_main):
    ones = SampledFunction(grid_main, np.ones_like(grid_main.points), DecayHint.power(0.0))
    out = apply_first_kind(OperatorSpec("first_kind", "B0+", nu=0.0, mu=0.0), ones)
    x = grid_main.points
    assert np.max(np.abs(out.values - x) / x) < 1e-10


def test_first_kind_erdelyi_kober_reduction(bump, grid_main):
    # order mu = -nu: B0+ reduces to a power-weighted Erdelyi-Kober integral
    nu = 0.5
    x = grid_main.points
    lhs = apply_first_kind(OperatorSpec("first_kind", "B0+", nu=nu, mu=-nu), bump)
    ek = ek_integral(FracSpec("ek_left", nu + 1.0, -(nu + 1.0) / 2.0), bump)
    rhs = x ** (nu + 1.0) / 2.0 ** (nu + 1.0) * ek.values
    assert norm_l2(SampledFunction(grid_main, lhs.values - rhs)) / norm_l2(bump) < 1e-6


def test_first_kind_generic_point_quadrature_oracle(bump, grid_main):
    # independent fine-grid quadrature of the kernel at a handful of abscissae
    from betrans.numgrid import EndpointPower
    from betrans.specfun import legendre_p_assoc

    nu, mu = 0.5, 0.3
    out = apply_first_kind(OperatorSpec("first_kind", "B0+", nu=nu, mu=mu), bump)
    x = grid_main.points
    for target in (1.5, 2.5, 5.0):
        i = int(np.argmin(np.abs(x - target)))
        xi = float(x[i])

        def integrand(t):
            return (xi**2 - t**2) ** (-mu / 2.0) * legendre_p_assoc(nu, mu, xi / t, "off_cut") * bump(t)

        ref = quad_singular(integrand, (1.0, min(xi, 2.0)), EndpointPower(-mu, min(xi, 2.0)) if xi < 2.0 else None)
        assert abs(out.values[i] - ref) < 1e-6 * max(1.0, abs(ref))


def test_first_kind_factorization_through_zero_order(bump, grid_main):
    # the mu < 1 operator factors into a fractional integral after the
    # zero-order operator
    nu, mu = 1.0, 0.5
    lhs = apply_first_kind(OperatorSpec("first_kind", "B0+", nu=nu, mu=mu), bump)
    inner = apply_zero_order(OperatorSpec("zero_order", "S0+", nu=nu), bump)
    rhs = rl_integral(FracSpec("rl_left", 1.0 - mu), inner)
    assert norm_l2(lhs - rhs) / norm_l2(bump) < 1e-5


# ----------------------------------------------------------------------
# second kind
# ----------------------------------------------------------------------


def test_second_kind_hilbert_degenerations(grid_main):
    x = grid_main.points
    interior = grid_main.interior_mask(0.7)
    pts = x[interior][:: max(1, np.count_nonzero(interior) // 12)]
    for name in ("x2gauss", "xexp"):
        f = suite_on_grid(name, grid_main)
        for nu, num in ((0.0, "y"), (-1.0, "x")):
            out = apply_second_kind(OperatorSpec("second_kind", "S", nu=nu), f)
            for x0 in pts:
                x0 = float(x0)

                def integrand(y):
                    w = y if num == "y" else x0
                    return 2.0 / np.pi * w * f(y) / (x0 * x0 - y * y)

                ref = quad_singular(integrand, grid_main.hull, PVInterior(x0))
                i = int(np.argmin(np.abs(x - x0)))
                assert abs(out.values[i] - ref) < 1e-5 * max(1.0, norm_l2(f))


def test_second_kind_2param_unit_order_reduction(bump):
    a = apply_second_kind_2param(OperatorSpec("second_kind_2param", "S", nu=0.3, mu=1.0), bump)
    b = apply_second_kind(OperatorSpec("second_kind", "S", nu=0.3), bump)
    assert norm_l2(a - b) / norm_l2(bump) < 1e-6


def test_second_kind_2param_rejects_other_orders(bump):
    with pytest.raises(OperatorSpecError):
        apply_second_kind_2param(OperatorSpec("second_kind_2param", "S", nu=0.3, mu=0.5), bump)


# ----------------------------------------------------------------------
# third kind (unitary combinations)
# ----------------------------------------------------------------------


def test_katrakhov_identity_at_zero(bump, grid_main):
    out = apply_katrakhov(OperatorSpec("katrakhov", "S", nu=0.0), bump)
    assert norm_l2(out - bump) / norm_l2(bump) < 1e-8


def test_katrakhov_degree_one_is_pure_second_kind(bump, grid_main):
    su = apply_katrakhov(OperatorSpec("katrakhov", "S", nu=1.0), bump)
    sk = apply_second_kind(OperatorSpec("second_kind", "S", nu=1.0), bump)
    assert norm_l2(SampledFunction(grid_main, su.values + sk.values)) / norm_l2(bump) < 1e-7
    # and the two evaluation paths agree
    su_i = apply_katrakhov(OperatorSpec("katrakhov", "S", nu=1.0), bump, path="integral")
    assert norm_l2(su - su_i) / norm_l2(bump) < 1e-5


def test_katrakhov_isometry_and_inverse(bump, grid_main):
    for nu in (0.5, 1.5):
        su = apply_katrakhov(OperatorSpec("katrakhov", "S", nu=nu), bump)
        assert abs(norm_l2(su) - norm_l2(bump)) / norm_l2(bump) < 1e-4
        pu = apply_katrakhov(OperatorSpec("katrakhov", "P", nu=nu), su)
        assert norm_l2(pu - bump) / norm_l2(bump) < 1e-4
