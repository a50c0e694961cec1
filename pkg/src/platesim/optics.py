"""Partially reflecting plate: splitting, two-arm states, overlap identities.

A normalized packet hitting the plate splits into an amplitude-r copy on
the plate->D1 axis and an amplitude-t copy on the plate->D2 axis.  Both
arms reuse the incoming coordinate, relabeled with the plate at the
origin; the split is instantaneous and pointlike.  Because the plate is
unitary (|r|^2 + |t|^2 = 1) and free flight is a translation, the overlap
of two such states equals the overlap of the inputs and does not change
with time; the operations here expose that identity directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .packets import Packet, inner_product, norm2, propagate, scale

__all__ = [
    "UNITARITY_TOL",
    "BeamSplitter",
    "Detector",
    "ExperimentGeometry",
    "NonUnitaryPlateError",
    "TwoArmState",
    "arrival_time",
    "balanced_splitter",
    "overlap_at_time",
    "overlap_post",
    "overlap_pre",
    "propagate_state",
    "split",
]

UNITARITY_TOL = 1e-9


class NonUnitaryPlateError(ValueError):
    """|r|^2 + |t|^2 strays too far from 1."""


class Detector(Enum):
    D1 = "D1"
    D2 = "D2"


@dataclass(frozen=True)
class BeamSplitter:
    """Plate amplitudes: r reflected toward D1, t transmitted toward D2."""

    r: complex
    t: complex

    def unitarity_defect(self) -> float:
        return abs(abs(self.r) ** 2 + abs(self.t) ** 2 - 1.0)


def balanced_splitter() -> BeamSplitter:
    """Symmetric lossless 50/50 plate, (r, t) = (1, i) / sqrt(2)."""
    s = math.sqrt(0.5)
    return BeamSplitter(complex(s), 1j * s)


@dataclass(frozen=True)
class TwoArmState:
    """Packets on the plate->D1 and plate->D2 axes right after the split."""

    arm1: Packet
    arm2: Packet

    def total_norm2(self) -> float:
        return norm2(self.arm1) + norm2(self.arm2)


def split(p: Packet, bs: BeamSplitter) -> TwoArmState:
    """Split a normalized packet on the plate into its two arm packets."""
    if bs.unitarity_defect() > UNITARITY_TOL:
        raise NonUnitaryPlateError("non-unitary plate")
    return TwoArmState(arm1=scale(p, bs.r), arm2=scale(p, bs.t))


def overlap_pre(alpha: Packet, beta: Packet) -> complex:
    """Overlap of two packets before they reach the plate."""
    return inner_product(alpha, beta)


def overlap_post(sa: TwoArmState, sb: TwoArmState) -> complex:
    """Overlap of two post-plate states: <a1|b1> + <a2|b2>."""
    return inner_product(sa.arm1, sb.arm1) + inner_product(sa.arm2, sb.arm2)


def propagate_state(s: TwoArmState, t: float, c: float = 1.0) -> TwoArmState:
    """Advance both arms by t; each arm flies freely along its own axis."""
    return TwoArmState(propagate(s.arm1, t, c), propagate(s.arm2, t, c))


def overlap_at_time(sa: TwoArmState, sb: TwoArmState, t: float, c: float = 1.0) -> complex:
    """overlap_post after evolving all four arm packets to time t.

    Propagation is unitary, so for any admissible t this equals
    overlap_post(sa, sb) up to roundoff.
    """
    return overlap_post(propagate_state(sa, t, c), propagate_state(sb, t, c))


@dataclass(frozen=True)
class ExperimentGeometry:
    """Plate-to-detector distances and the propagation speed."""

    l1: float
    l2: float
    c: float = 1.0

    def __post_init__(self) -> None:
        if self.l1 <= 0 or self.l2 <= 0:
            raise ValueError("detector distances must be positive")
        if self.c <= 0:
            raise ValueError("c must be positive")


def arrival_time(geom: ExperimentGeometry, detector: Detector) -> float:
    """Time of flight from the plate to the chosen detector."""
    length = geom.l1 if detector is Detector.D1 else geom.l2
    return length / geom.c
