"""Unit conversions and validated configuration records.

All records are immutable value types shared by every other module.  The
squeezing conventions are:

* amplitude ``s`` relates to decibels by ``s = s_db * ln(10) / 20`` (so that
  ``s_db = -10 * log10(exp(-2 s))``),
* the squeezing parameter is ``y = tanh(s) / 2``, always in ``[0, 0.5)``,
* a beam splitter with transmission amplitude ``t`` is parameterized by
  ``B = (1 - t^2) / t^2`` with intensity coefficients ``T = 1/(1+B)`` and
  ``R = B/(1+B)``,
* after the splitter the reference squeezing parameter becomes
  ``y1 = y / (1 + B)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Any, Mapping

from .errors import DomainError

#: Largest supported heralding photon number.  The normalization polynomials
#: need derivatives of Z up to order k + 4; double precision is validated in
#: this range.
K_MAX = 12

#: Auxiliary squeezing amplitude above which the two-term auxiliary state is a
#: poor approximation; constructors emit a warning past this point.
AUX_WARN_THRESHOLD = 0.2

_LN10_OVER_20 = math.log(10.0) / 20.0


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _require_nonnegative(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value < 0.0:
        raise DomainError(f"{name} must be >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class SqueezeSpec:
    """One squeezed-vacuum parameterization.

    Attributes:
        s_db: squeezing in decibels, >= 0.
        s: squeezing amplitude (dimensionless), >= 0.
        y: squeezing parameter tanh(s)/2, in [0, 0.5).
    """

    s_db: float
    s: float
    y: float


@dataclass(frozen=True)
class AuxSpec:
    """Weak auxiliary squeeze and the derived two-photon superposition.

    The auxiliary mode carries ``(|0> + b2 e^{i phi} |2>) / sqrt(n2)`` with
    ``b2 = tanh(s2) / sqrt(2)`` and ``n2 = 1 + b2**2``.
    """

    squeeze: SqueezeSpec
    b2: float
    n2: float


@dataclass(frozen=True)
class BeamSplitterSpec:
    """Beam-splitter parameterization.

    Attributes:
        big_b: the B parameter, (1 - t^2)/t^2, >= 0.
        t: transmission amplitude in (0, 1].
        r: reflection amplitude in [0, 1).
        cap_t: transmission coefficient T = 1/(1+B).
        cap_r: reflection coefficient R = B/(1+B).
    """

    big_b: float
    t: float
    r: float
    cap_t: float
    cap_r: float


@dataclass(frozen=True)
class ProbeConfig:
    """Full protocol point: squeezes, splitter, heralding count and phase."""

    reference: SqueezeSpec
    aux: AuxSpec
    splitter: BeamSplitterSpec
    k: int
    phi: float

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise DomainError(f"k must be a nonnegative integer, got {self.k!r}")
        if self.k > K_MAX:
            raise DomainError(f"k = {self.k} exceeds the supported maximum {K_MAX}")
        _require_finite("phi", self.phi)
        y1 = self.reference.y / (1.0 + self.splitter.big_b)
        if not 0.0 <= y1 < 0.5:
            raise DomainError(f"derived y1 = {y1!r} is outside [0, 0.5)")


def squeeze_from_amplitude(s: float) -> SqueezeSpec:
    """Builds a :class:`SqueezeSpec` from the squeezing amplitude ``s``."""
    s = _require_nonnegative("s", s)
    return SqueezeSpec(s_db=s / _LN10_OVER_20, s=s, y=math.tanh(s) / 2.0)


def squeeze_from_db(s_db: float) -> SqueezeSpec:
    """Builds a :class:`SqueezeSpec` from squeezing in decibels."""
    s_db = _require_nonnegative("s_db", s_db)
    s = s_db * _LN10_OVER_20
    return SqueezeSpec(s_db=s_db, s=s, y=math.tanh(s) / 2.0)


def aux_from_db(s2_db: float) -> AuxSpec:
    """Builds the auxiliary two-photon superposition spec from decibels.

    Warns when the auxiliary amplitude exceeds :data:`AUX_WARN_THRESHOLD`,
    where the two-term truncation of the auxiliary state becomes inaccurate.
    """
    squeeze = squeeze_from_db(s2_db)
    if squeeze.s > AUX_WARN_THRESHOLD:
        warnings.warn(
            f"auxiliary squeeze s2 = {squeeze.s:.4f} exceeds {AUX_WARN_THRESHOLD}; "
            "the two-term auxiliary state is a small-s2 approximation",
            stacklevel=2,
        )
    b2 = math.tanh(squeeze.s) / math.sqrt(2.0)
    return AuxSpec(squeeze=squeeze, b2=b2, n2=1.0 + b2 * b2)


def bs_from_big_b(big_b: float) -> BeamSplitterSpec:
    """Builds a :class:`BeamSplitterSpec` from the B parameter."""
    big_b = _require_nonnegative("big_b", big_b)
    cap_t = 1.0 / (1.0 + big_b)
    cap_r = big_b / (1.0 + big_b)
    return BeamSplitterSpec(
        big_b=big_b,
        t=math.sqrt(cap_t),
        r=math.sqrt(cap_r),
        cap_t=cap_t,
        cap_r=cap_r,
    )


def effective_y1(cfg: ProbeConfig) -> float:
    """Reference squeezing parameter after beam-splitter attenuation."""
    return cfg.reference.y / (1.0 + cfg.splitter.big_b)


def probe_config(
    s_db: float, s2_db: float, big_b: float, k: int, phi: float
) -> ProbeConfig:
    """Convenience constructor from the five scalar protocol parameters."""
    return ProbeConfig(
        reference=squeeze_from_db(s_db),
        aux=aux_from_db(s2_db),
        splitter=bs_from_big_b(big_b),
        k=int(k),
        phi=float(phi),
    )


_CONFIG_KEYS = ("s_db", "s2_db", "big_b", "k", "phi")


def probe_config_from_dict(data: Mapping[str, Any]) -> ProbeConfig:
    """Builds a :class:`ProbeConfig` from a JSON-style mapping.

    The mapping must contain exactly the keys ``s_db``, ``s2_db``, ``big_b``,
    ``k`` and ``phi``; unknown keys are rejected.
    """
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    missing = set(_CONFIG_KEYS) - set(data)
    if missing:
        raise DomainError(f"missing config keys: {sorted(missing)}")
    k = data["k"]
    if isinstance(k, float):
        if not k.is_integer():
            raise DomainError(f"k must be an integer, got {k!r}")
        k = int(k)
    return probe_config(data["s_db"], data["s2_db"], data["big_b"], k, data["phi"])
