"""Zero-order-smoothness operators: the mu = 1 limit of the first kind.

Four variants with Legendre-polynomial/function kernels P_nu(x/t) or
P_nu(t/x), with the derivative outside the integral (S0+, S-) or on the
operand (P0+, P-).  The outer derivative is taken after quadrature by
4th-order differences; a kernel-side differentiation path exists behind a
flag for cross-checks.
"""

from __future__ import annotations

import warnings

import numpy as np

from .._engine import build_lower_plan, build_upper_plan, deriv_on_grid
from ..numgrid import Grid, SampledFunction
from ..specfun import legendre_p
from ..specfun.legendre import legendre_p_deriv, legendre_p_deriv_oncut
from .specs import OperatorSpec, OperatorSpecError

__all__ = ["apply_zero_order"]

_PLANS: dict = {}


def _grid_key(grid: Grid):
    return (grid.n, grid.hull, grid.spacing)


def _plan(key, builder):
    if key not in _PLANS:
        _PLANS[key] = builder()
    return _PLANS[key]


def _check_lower_decay(nu: float, f: SampledFunction) -> None:
    """The 0+ Sonine form needs f/t^nu integrable at the origin."""
    if nu < 0.5:
        return
    scale = float(np.max(np.abs(f.values))) or 1.0
    head = float(np.max(np.abs(f.values[:4])))
    a = f.grid.points[0]
    if head * a ** (1.0 - nu) > 1e-6 * scale:
        warnings.warn(
            "operand may violate the origin decay needed by this variant",
            stacklevel=3,
        )


def apply_zero_order(spec: OperatorSpec, f: SampledFunction, outer_fd: bool = False) -> SampledFunction:
    """Apply one zero-order-smoothness operator.

    The derivative-outside variants (S0+, S-) differentiate the kernel by
    default (the kernel is smooth at the diagonal for this family, and the
    outer-difference route loses several digits on sharp operands); set
    outer_fd=True for the differentiate-the-result cross-check path.
    """
    if spec.family != "zero_order":
        raise OperatorSpecError("apply_zero_order expects a zero_order spec")
    nu = float(np.real(spec.nu))
    grid = f.grid
    gk = _grid_key(grid)

    if spec.variant == "S0+":
        _check_lower_decay(nu, f)
        if outer_fd:
            plan = _plan(
                ("S0+fd", nu, gk),
                lambda: build_lower_plan(grid, lambda x, t: legendre_p(nu, x / t, "off_cut")),
            )
            vals = deriv_on_grid(plan.apply(f), grid)
        else:
            plan = _plan(
                ("S0+", nu, gk),
                lambda: build_lower_plan(grid, lambda x, t: legendre_p_deriv(nu, x / t) / t),
            )
            vals = f.values + plan.apply(f)
    elif spec.variant == "P0+":
        plan = _plan(
            ("P0+", nu, gk),
            lambda: build_lower_plan(
                grid, lambda x, t: legendre_p(nu, t / x, "on_cut"), use_deriv=True
            ),
        )
        vals = plan.apply(f)
    elif spec.variant == "S-":
        if outer_fd:
            plan = _plan(
                ("S-fd", nu, gk),
                lambda: build_upper_plan(grid, lambda x, t: legendre_p(nu, x / t, "on_cut")),
            )
            vals = -deriv_on_grid(plan.apply(f), grid)
        else:
            plan = _plan(
                ("S-", nu, gk),
                lambda: build_upper_plan(grid, lambda x, t: legendre_p_deriv_oncut(nu, x / t) / t),
            )
            vals = f.values - plan.apply(f)
    elif spec.variant == "P-":
        plan = _plan(
            ("P-", nu, gk),
            lambda: build_upper_plan(
                grid, lambda x, t: legendre_p(nu, t / x, "off_cut"), use_deriv=True
            ),
        )
        vals = -plan.apply(f)
    else:
        raise OperatorSpecError(f"unknown zero-order variant {spec.variant!r}")
    return f.with_values(vals, decay_hint=None)
