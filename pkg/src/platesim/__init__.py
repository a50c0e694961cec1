"""Single-photon packets on a partially reflecting plate.

The library computes the overlap of two candidate wave packets exactly
(a constant of the motion) and under the plane-wave shortcut (which
falsely depends on the detector positions), and exposes the contrast
through a sweep-and-export command line.
"""

__version__ = "0.1.0"

from .config import (
    ConfigError,
    InvariantError,
    ScenarioConfig,
    SchemaError,
    load_config,
    parse_config,
)
from .models import (
    DegeneratePreparationError,
    PlaneWaveModel,
    Preparation,
    SweepResult,
    SweepRow,
    counting_rate_d1,
    counting_rate_d2,
    derive_plane_wave_model,
    exact_epsilon,
    plane_wave_epsilon,
    spatial_period,
    sweep_d2,
)
from .optics import (
    BeamSplitter,
    Detector,
    ExperimentGeometry,
    NonUnitaryPlateError,
    TwoArmState,
    arrival_time,
    balanced_splitter,
    overlap_at_time,
    overlap_post,
    overlap_pre,
    propagate_state,
    split,
)
from .packets import (
    DegeneratePacketError,
    GaussianPacket,
    GridPacket,
    IncompatibleGridsError,
    Packet,
    ScaledGaussian,
    SpatialGrid,
    WraparoundError,
    fits_after,
    gaussian_amplitude,
    inner_product,
    negative_wavenumber_fraction,
    norm,
    norm2,
    normalize,
    propagate,
    sample,
    scale,
    spectral_centroid,
)

__all__ = [
    "__version__",
    "BeamSplitter",
    "ConfigError",
    "DegeneratePacketError",
    "DegeneratePreparationError",
    "Detector",
    "ExperimentGeometry",
    "GaussianPacket",
    "GridPacket",
    "IncompatibleGridsError",
    "InvariantError",
    "NonUnitaryPlateError",
    "Packet",
    "PlaneWaveModel",
    "Preparation",
    "ScaledGaussian",
    "ScenarioConfig",
    "SchemaError",
    "SpatialGrid",
    "SweepResult",
    "SweepRow",
    "TwoArmState",
    "WraparoundError",
    "arrival_time",
    "balanced_splitter",
    "counting_rate_d1",
    "counting_rate_d2",
    "derive_plane_wave_model",
    "exact_epsilon",
    "fits_after",
    "gaussian_amplitude",
    "inner_product",
    "load_config",
    "negative_wavenumber_fraction",
    "norm",
    "norm2",
    "normalize",
    "overlap_at_time",
    "overlap_post",
    "overlap_pre",
    "parse_config",
    "plane_wave_epsilon",
    "propagate",
    "propagate_state",
    "sample",
    "scale",
    "spatial_period",
    "spectral_centroid",
    "split",
    "sweep_d2",
]
