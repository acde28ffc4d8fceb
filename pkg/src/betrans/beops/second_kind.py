"""Second-kind operators: Legendre-Q kernels with principal-value integrals.

The kernels carry a simple pole across the diagonal; near y = x both terms
combine into r(x, y)/(x - y) plus integrable corrections, so application
uses symmetric excision with epsilon-ladder extrapolation.  At nu = 0 and
nu = -1 the family degenerates to the half-line Hilbert-transform pair,
which is also available as a dedicated closed-kernel path.
"""

from __future__ import annotations

import numpy as np

from .._engine import build_pv_plan
from ..numgrid import DecayHint, SampledFunction
from ..specfun import legendre_q1
from .specs import OperatorSpec, OperatorSpecError
from .zero_order import _grid_key, _plan

__all__ = ["apply_second_kind", "apply_second_kind_2param", "hilbert_pair_kernels"]

_TWO_OVER_PI = 2.0 / np.pi
_INT_TOL = 1e-9


def hilbert_pair_kernels(which: int):
    """Closed kernels of the nu = 0 / nu = -1 degenerations (y or x over x^2-y^2)."""
    if which == 0:

        def k(x, y):
            return _TWO_OVER_PI * y / (x * x - y * y)

    else:

        def k(x, y):
            return _TWO_OVER_PI * x / (x * x - y * y)

    return k, k


def _kernels_s(nu: float):
    def k_lower(x, y):  # y < x, argument x/y > 1
        return -_TWO_OVER_PI * (x * x - y * y) ** (-0.5) * legendre_q1(nu, x / y, "off_cut")

    def k_upper(x, y):  # y > x, argument x/y < 1
        return _TWO_OVER_PI * (y * y - x * x) ** (-0.5) * legendre_q1(nu, x / y, "on_cut")

    return k_lower, k_upper


def _kernels_p(nu: float):
    def k_lower(x, y):  # y < x, argument y/x < 1
        return _TWO_OVER_PI * (x * x - y * y) ** (-0.5) * legendre_q1(nu, y / x, "on_cut")

    def k_upper(x, y):  # y > x, argument y/x > 1
        return -_TWO_OVER_PI * (y * y - x * x) ** (-0.5) * legendre_q1(nu, y / x, "off_cut")

    return k_lower, k_upper


def apply_second_kind(spec: OperatorSpec, f: SampledFunction) -> SampledFunction:
    if spec.family != "second_kind":
        raise OperatorSpecError("apply_second_kind expects a second_kind spec")
    nu = float(np.real(spec.nu))
    grid = f.grid
    gk = _grid_key(grid)
    # outputs decay algebraically; leave hints unset so downstream Mellin
    # quadrature fits the observed tail instead of trusting a nominal power
    hint_s = None
    hint_p = None
    if abs(nu + 1.0) < _INT_TOL:
        # Legendre-Q kernels degenerate at nu = -1; use the closed Hilbert forms:
        # S variant is the x/(x^2-y^2) pair, the mirrored P variant is minus the
        # y/(x^2-y^2) pair.
        kl, ku = hilbert_pair_kernels(-1 if spec.variant == "S" else 0)
        plan = _plan(("2K", spec.variant, -1.0, gk), lambda: build_pv_plan(grid, kl, ku))
        sign = 1.0 if spec.variant == "S" else -1.0
        return f.with_values(sign * plan.apply(f), decay_hint=None)
    kl, ku = _kernels_s(nu) if spec.variant == "S" else _kernels_p(nu)
    plan = _plan(("2K", spec.variant, nu, gk), lambda: build_pv_plan(grid, kl, ku))
    return f.with_values(plan.apply(f), decay_hint=hint_s if spec.variant == "S" else hint_p)


def apply_second_kind_2param(spec: OperatorSpec, f: SampledFunction) -> SampledFunction:
    """Two-parameter second-kind operator; mu = 1 reproduces the one-parameter S."""
    if spec.family != "second_kind_2param":
        raise OperatorSpecError("apply_second_kind_2param expects a second_kind_2param spec")
    if abs(spec.mu - 1.0) > 1e-12:
        raise OperatorSpecError(
            "two-parameter second-kind application is experimental away from mu = 1; "
            "only mu = 1 is supported"
        )
    if float(np.real(spec.nu)) >= 1.0:
        raise OperatorSpecError("two-parameter second-kind requires Re nu < 1")
    one_param = OperatorSpec("second_kind", "S", nu=spec.nu)
    return apply_second_kind(one_param, f)
