"""Buschman-Erdelyi operator families and the operator-spec grammar."""

from __future__ import annotations

from ..numgrid import SampledFunction
from .first_kind import apply_first_kind
from .katrakhov import apply_katrakhov
from .second_kind import apply_second_kind, apply_second_kind_2param
from .specs import OperatorSpec, OperatorSpecError, format_operator, parse_operator
from .transforms import (
    apply_weighted_third,
    default_spectral_grid,
    fourier_cosine,
    fourier_sine,
    hankel,
    hankel_inverse,
    weight_function,
)
from .zero_order import apply_zero_order

__all__ = [
    "OperatorSpec",
    "OperatorSpecError",
    "parse_operator",
    "format_operator",
    "apply",
    "apply_first_kind",
    "apply_zero_order",
    "apply_second_kind",
    "apply_second_kind_2param",
    "apply_katrakhov",
    "apply_weighted_third",
    "fourier_sine",
    "fourier_cosine",
    "hankel",
    "hankel_inverse",
    "default_spectral_grid",
    "weight_function",
]

_DISPATCH = {
    "first_kind": apply_first_kind,
    "zero_order": apply_zero_order,
    "second_kind": apply_second_kind,
    "second_kind_2param": apply_second_kind_2param,
    "katrakhov": apply_katrakhov,
    "weighted_third": apply_weighted_third,
}


def apply(spec: OperatorSpec, f: SampledFunction, **kwargs) -> SampledFunction:
    """Apply any Buschman-Erdelyi-family operator described by spec."""
    if spec.family in _DISPATCH:
        return _DISPATCH[spec.family](spec, f, **kwargs)
    # classical operators live in betrans.classicops; route through its dispatch
    from .. import classicops

    return classicops.apply_classic(spec, f, **kwargs)
