"""Exact versus plane-wave predictions for the two-detector experiment.

``exact_epsilon`` evaluates the overlap of the two candidate packets once,
before the plate; unitarity makes every later evaluation agree with it.
``plane_wave_epsilon`` deliberately reproduces a tempting shortcut: replace
each localized packet by an infinite wave at its carrier frequency, which
tags the two terms of the overlap with phases exp(i*(omega_a - omega_b)*t)
and invites evaluating each term at its own detector's arrival time.  The
shortcut makes the D1 counting rate appear to depend on where D2 sits;
``sweep_d2`` tabulates both predictions against the D2 distance so the
artifact sits next to the constant exact value.

The counting rate itself is a modeling choice, not a derived formula: the
photon is prepared in the equal-weight superposition
(|alpha> + e^{i*phi} |beta>) / normalizer and the D1 rate is the squared
norm of the prepared state's D1-arm component,

    rate = (n_a1 + n_b1 + 2 Re(e^{i phi} x1)) / (2 + 2 Re(e^{i phi} eps)),

the minimal standard-quantum-mechanics functional through which eps enters
a measurable number.  In the plane-wave variant the same formula is fed
the phase-tagged cross terms instead of the true ones.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .optics import BeamSplitter, ExperimentGeometry, TwoArmState, overlap_pre, split
from .packets import Packet, inner_product, norm2

__all__ = [
    "DEGENERACY_TOL",
    "DegeneratePreparationError",
    "PlaneWaveModel",
    "Preparation",
    "SweepResult",
    "SweepRow",
    "counting_rate_d1",
    "counting_rate_d2",
    "derive_plane_wave_model",
    "exact_epsilon",
    "plane_wave_epsilon",
    "spatial_period",
    "sweep_d2",
]

DEGENERACY_TOL = 1e-9


class DegeneratePreparationError(ValueError):
    """The prepared superposition has (near-)zero norm."""


@dataclass(frozen=True)
class PlaneWaveModel:
    """Carrier frequencies and t = 0 term amplitudes of the shortcut.

    a1 and a2 are the arm-1 and arm-2 overlap terms at the moment of the
    split; the shortcut evolves each by its own phase factor instead of
    keeping their sum fixed.
    """

    omega_alpha: float
    omega_beta: float
    a1: complex
    a2: complex

    @property
    def delta_omega(self) -> float:
        return self.omega_alpha - self.omega_beta


@dataclass(frozen=True)
class Preparation:
    """Relative phase of the prepared superposition (|a> + e^{i phi} |b>)/N."""

    phi: float = 0.0


def derive_plane_wave_model(
    sa: TwoArmState,
    sb: TwoArmState,
    k_alpha: float,
    k_beta: float,
    c: float = 1.0,
) -> PlaneWaveModel:
    """Read the shortcut's ingredients off two freshly split states.

    Frequencies follow the dispersionless rule omega = c * k; the term
    amplitudes are the per-arm overlaps at the split time.
    """
    return PlaneWaveModel(
        omega_alpha=c * k_alpha,
        omega_beta=c * k_beta,
        a1=inner_product(sa.arm1, sb.arm1),
        a2=inner_product(sa.arm2, sb.arm2),
    )


def plane_wave_epsilon(m: PlaneWaveModel, t1: float, t2: float) -> complex:
    """Overlap under the plane-wave shortcut, term-wise at (t1, t2).

    Returns a1*exp(i*d_omega*t1) + a2*exp(i*d_omega*t2).  Evaluating the
    two terms at different times is exactly the step the exact treatment
    forbids; the resulting t2 dependence is the artifact under study.
    """
    d_omega = m.delta_omega
    return m.a1 * cmath.exp(1j * d_omega * t1) + m.a2 * cmath.exp(1j * d_omega * t2)


def exact_epsilon(alpha: Packet, beta: Packet) -> complex:
    """Overlap of the two candidate packets, fixed once they are chosen.

    The signature takes no time or geometry on purpose: the value is a
    property of the initial packets alone.
    """
    return overlap_pre(alpha, beta)


def _rate(n_a: float, n_b: float, x: complex, eps: complex, phi: float) -> float:
    rot = cmath.exp(1j * phi)
    denom = 2.0 + 2.0 * (rot * complex(eps)).real
    if denom <= DEGENERACY_TOL:
        raise DegeneratePreparationError("degenerate preparation")
    raw = (n_a + n_b + 2.0 * (rot * complex(x)).real) / denom
    # The true value lies in [0, 1] (Cauchy-Schwarz on the cross term);
    # clamp only the roundoff excursions.
    return min(1.0, max(0.0, raw))


def counting_rate_d1(
    eps: complex, n_a1: float, n_b1: float, x1: complex, prep: Preparation
) -> float:
    """Fraction of prepared photons that fire D1.

    n_a1 and n_b1 are the squared norms of the two D1-arm packets and x1
    their overlap; eps normalizes the preparation.
    """
    return _rate(n_a1, n_b1, x1, eps, prep.phi)


def counting_rate_d2(
    eps: complex, n_a2: float, n_b2: float, x2: complex, prep: Preparation
) -> float:
    """D2 mirror of counting_rate_d1; the two rates sum to 1 when the
    plate is lossless."""
    return _rate(n_a2, n_b2, x2, eps, prep.phi)


def spatial_period(delta_omega: float, c: float = 1.0) -> float:
    """D2-distance period of the shortcut's t2 dependence, 2*pi*c/|d_omega|.

    Infinite when the carriers coincide: the shortcut then collapses onto
    the exact prediction.
    """
    if delta_omega == 0.0:
        return math.inf
    return 2.0 * math.pi * c / abs(delta_omega)


@dataclass(frozen=True)
class SweepRow:
    """Both predictions at one D2 position."""

    l2: float
    t2: float
    eps_exact: complex
    eps_plane_wave: complex
    rate_exact: float
    rate_plane_wave: float


@dataclass(frozen=True)
class SweepResult:
    """Sweep rows, ordered as the requested l2 values."""

    rows: tuple[SweepRow, ...]

    def column(self, field: str) -> np.ndarray:
        return np.array([getattr(row, field) for row in self.rows])

    def spread(self, field: str) -> float:
        """Largest |difference| between any two rows of the column."""
        values = self.column(field)
        return float(np.abs(values[:, None] - values[None, :]).max())


def sweep_d2(
    alpha: Packet,
    beta: Packet,
    bs: BeamSplitter,
    geom_base: ExperimentGeometry,
    l2_values,
    prep: Preparation,
    k_alpha: float,
    k_beta: float,
) -> SweepResult:
    """Tabulate both predictions while the D2 distance walks l2_values.

    D1 stays at geom_base.l1.  The exact columns are constant by
    construction; the plane-wave columns pick up the spurious t2 = l2/c
    dependence.
    """
    values = [float(v) for v in l2_values]
    if not values:
        raise ValueError("l2_values must be nonempty")
    if any(v <= 0.0 for v in values):
        raise ValueError("detector distances must be positive")

    sa = split(alpha, bs)
    sb = split(beta, bs)
    model = derive_plane_wave_model(sa, sb, k_alpha, k_beta, geom_base.c)
    n_a1 = norm2(sa.arm1)
    n_b1 = norm2(sb.arm1)

    eps = exact_epsilon(alpha, beta)
    rate_exact = counting_rate_d1(eps, n_a1, n_b1, model.a1, prep)

    t1 = geom_base.l1 / geom_base.c
    x1_pw = model.a1 * cmath.exp(1j * model.delta_omega * t1)

    rows = []
    for l2 in values:
        t2 = l2 / geom_base.c
        eps_pw = plane_wave_epsilon(model, t1, t2)
        rate_pw = counting_rate_d1(eps_pw, n_a1, n_b1, x1_pw, prep)
        rows.append(
            SweepRow(
                l2=l2,
                t2=t2,
                eps_exact=eps,
                eps_plane_wave=eps_pw,
                rate_exact=rate_exact,
                rate_plane_wave=rate_pw,
            )
        )
    return SweepResult(rows=tuple(rows))
