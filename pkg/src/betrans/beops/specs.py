"""Operator descriptors and the CLI string grammar.

Grammar: ``family:variant[:nu=<r>][:mu=<r>][:phi=<name>][:trig=sin|cos]``,
e.g. ``zero:S0+:nu=1`` or ``third:S:nu=0.5:phi=one:trig=sin``.  Families
without parameters (``stieltjes``) may omit everything after the name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

__all__ = ["OperatorSpec", "OperatorSpecError", "parse_operator", "format_operator"]


class OperatorSpecError(ValueError):
    pass


_FAMILY_TOKENS = {
    "first": "first_kind",
    "zero": "zero_order",
    "second": "second_kind",
    "second2": "second_kind_2param",
    "kat": "katrakhov",
    "third": "weighted_third",
    "spd": "spd",
    "hardy": "hardy",
    "hardy1": "hardy_shifted",
    "uhardy": "unitary_hardy",
    "stieltjes": "stieltjes",
}
_TOKEN_OF_FAMILY = {v: k for k, v in _FAMILY_TOKENS.items()}

_VARIANTS = {
    "first_kind": {"B0+", "E0+", "B-", "E-"},
    "zero_order": {"S0+", "P0+", "S-", "P-"},
    "second_kind": {"S", "P"},
    "second_kind_2param": {"S"},
    "katrakhov": {"S", "P"},
    "weighted_third": {"S", "P"},
    "spd": {"S", "P"},
    "hardy": {"H1", "H2"},
    "hardy_shifted": {"H1", "H2"},
    "unitary_hardy": {f"U{k}" for k in range(3, 11)},
    "stieltjes": {""},
}

_NEEDS_NU = {
    "first_kind",
    "zero_order",
    "second_kind",
    "second_kind_2param",
    "katrakhov",
    "weighted_third",
    "spd",
}


@dataclass(frozen=True)
class OperatorSpec:
    """Tagged description of one operator: family, variant, and parameters."""

    family: str
    variant: str = ""
    nu: Optional[Union[float, complex]] = None
    mu: Optional[float] = None
    phi: Optional[str] = None
    trig: Optional[str] = None

    def __post_init__(self):
        if self.family not in _VARIANTS:
            raise OperatorSpecError(f"unknown family {self.family!r}")
        if self.variant not in _VARIANTS[self.family]:
            raise OperatorSpecError(
                f"variant {self.variant!r} not valid for family {self.family!r}"
            )
        if self.family in _NEEDS_NU and self.nu is None:
            raise OperatorSpecError(f"family {self.family!r} requires nu")
        if self.family in ("first_kind", "second_kind_2param"):
            if self.mu is None:
                raise OperatorSpecError(f"family {self.family!r} requires mu")
            if self.family == "first_kind" and self.mu >= 1.0:
                raise OperatorSpecError("first_kind requires mu < 1")
        if self.family == "weighted_third":
            if self.trig not in ("sin", "cos"):
                raise OperatorSpecError("weighted_third requires trig=sin|cos")
            if not self.phi:
                raise OperatorSpecError("weighted_third requires a phi name")

    @property
    def label(self) -> str:
        return format_operator(self)


def parse_operator(text: str) -> OperatorSpec:
    parts = [p for p in text.strip().split(":") if p != ""]
    if not parts:
        raise OperatorSpecError("empty operator string")
    token = parts[0].lower()
    if token not in _FAMILY_TOKENS:
        raise OperatorSpecError(f"unknown operator family token {parts[0]!r}")
    family = _FAMILY_TOKENS[token]
    variant = ""
    kwargs: dict = {}
    for part in parts[1:]:
        if "=" in part:
            key, _, val = part.partition("=")
            key = key.strip().lower()
            val = val.strip()
            if key == "nu":
                kwargs["nu"] = complex(val) if "j" in val else float(val)
            elif key == "mu":
                kwargs["mu"] = float(val)
            elif key == "phi":
                kwargs["phi"] = val
            elif key == "trig":
                kwargs["trig"] = val.lower()
            else:
                raise OperatorSpecError(f"unknown parameter {key!r}")
        else:
            variant = part
    return OperatorSpec(family=family, variant=variant, **kwargs)


def format_operator(spec: OperatorSpec) -> str:
    parts = [_TOKEN_OF_FAMILY[spec.family]]
    if spec.variant:
        parts.append(spec.variant)
    if spec.nu is not None:
        nu = spec.nu
        parts.append(f"nu={nu.real:g}{nu.imag:+g}j" if isinstance(nu, complex) else f"nu={nu:g}")
    if spec.mu is not None:
        parts.append(f"mu={spec.mu:g}")
    if spec.phi is not None:
        parts.append(f"phi={spec.phi}")
    if spec.trig is not None:
        parts.append(f"trig={spec.trig}")
    return ":".join(parts)
