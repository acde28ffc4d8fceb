"""Third-kind unitary combinations of first- and second-kind operators.

The Sonine-side operator is cos(pi nu/2) times the zero-order "-" Sonine
operator minus sin(pi nu/2) times the second-kind operator; the Poisson
side combines the mirrored pieces and inverts it for every real nu.  Both
a combination path (composing the public operators) and a direct
integral-form path (fused quadrature with an independent discretization)
are provided; they must agree.
"""

from __future__ import annotations

import numpy as np

from .. import _engine
from .._engine import build_pv_plan, build_upper_plan, build_lower_plan, deriv_on_grid
from ..numgrid import DecayHint, SampledFunction
from ..specfun import legendre_p
from ..specfun.legendre import legendre_p_deriv_oncut
from .second_kind import _kernels_p, _kernels_s, apply_second_kind
from .specs import OperatorSpec, OperatorSpecError
from .zero_order import _grid_key, _plan, apply_zero_order

__all__ = ["apply_katrakhov"]


def _coeffs(nu: float) -> tuple[float, float]:
    return np.cos(np.pi * nu / 2.0), np.sin(np.pi * nu / 2.0)


def _fused_plans(variant: str, nu: float, grid):
    """Integral-form plans built at a finer, independent discretization."""
    stride, ngl = _engine._BODY_STRIDE, _engine._N_GL_SMALL
    _engine._BODY_STRIDE, _engine._N_GL_SMALL = 2, 10
    try:
        if variant == "S":
            smooth = build_upper_plan(grid, lambda x, t: legendre_p_deriv_oncut(nu, x / t) / t)
            kl, ku = _kernels_s(nu)
            pv = build_pv_plan(grid, kl, ku)
        else:
            smooth = build_lower_plan(
                grid, lambda x, t: legendre_p(nu, t / x, "on_cut"), use_deriv=True
            )
            kl, ku = _kernels_p(nu)
            pv = build_pv_plan(grid, kl, ku)
    finally:
        _engine._BODY_STRIDE, _engine._N_GL_SMALL = stride, ngl
    return smooth, pv


def apply_katrakhov(spec: OperatorSpec, f: SampledFunction, path: str = "combination") -> SampledFunction:
    """Apply the unitary third-kind operator S_U (variant S) or P_U (variant P).

    path="combination" assembles the result from the first- and second-kind
    operators; path="integral" evaluates the fused direct integral forms.
    """
    if spec.family != "katrakhov":
        raise OperatorSpecError("apply_katrakhov expects a katrakhov spec")
    nu = float(np.real(spec.nu))
    kappa, tau = _coeffs(nu)
    if path == "combination":
        if spec.variant == "S":
            zo = apply_zero_order(OperatorSpec("zero_order", "S-", nu=nu), f)
            sk = apply_second_kind(OperatorSpec("second_kind", "S", nu=nu), f)
        else:
            zo = apply_zero_order(OperatorSpec("zero_order", "P0+", nu=nu), f)
            sk = apply_second_kind(OperatorSpec("second_kind", "P", nu=nu), f)
        vals = kappa * zo.values - tau * sk.values
    elif path == "integral":
        key = ("katrakhov", spec.variant, nu, _grid_key(f.grid))
        smooth, pv = _plan(key, lambda: _fused_plans(spec.variant, nu, f.grid))
        if spec.variant == "S":
            vals = kappa * (f.values - smooth.apply(f)) - tau * pv.apply(f)
        else:
            vals = kappa * smooth.apply(f) - tau * pv.apply(f)
    else:
        raise OperatorSpecError(f"unknown path {path!r}")
    return f.with_values(vals, decay_hint=None)
