"""Sparse co-prime sampling schemes and correlogram spectral estimation.

The toolkit builds prototype co-prime, super-Nyquist co-prime, and
multi-level sampling patterns on an exact integer virtual grid, derives
their difference coarrays and weight functions (enumerated and in closed
form), evaluates correlogram bias windows, and estimates power spectra
from sub-Nyquist snapshots, all reproducibly from a single seed.
"""

from .bias import BiasWindow, bias_closed, bias_from_weights, main_lobe_width, pattern_transform
from .diffsets import (
    DifferenceSets,
    LagTable,
    StructureReport,
    difference_sets,
    verify_structure,
    weight_closed,
    weight_enumerated,
)
from .errors import (
    AsymmetricLagTableError,
    CoprimeSpecError,
    FrequencyOutOfRangeError,
    InvalidConfigError,
    InvalidPeriodsError,
    LengthMismatchError,
    NoMinimumFoundError,
    NonPositiveInputError,
    NotCoprimeError,
    TooFewLevelsError,
    UnsupportedSchemeError,
)
from .estimator import (
    LagAccumulator,
    accumulate_snapshot,
    autocorrelation_estimate,
    correlogram_psd,
    find_peaks,
    psd_direct,
    psd_from_accumulator,
)
from .experiments import (
    ExperimentConfig,
    PRESETS,
    UNREPRESENTABLE,
    fold_alias,
    map_frequency,
    run_experiment,
    run_preset,
    tones_for_scheme,
)
from .schemes import InstantSet, SchemeConfig, SchemeKind, make_scheme, sample_instants
from .signals import SignalSpec, generate_samples, reference_spectrum
from .spectra import SpectrumEstimate, frequency_grid, nearest_bin

__version__ = "0.1.0"

__all__ = [
    "AsymmetricLagTableError",
    "BiasWindow",
    "CoprimeSpecError",
    "DifferenceSets",
    "ExperimentConfig",
    "FrequencyOutOfRangeError",
    "InstantSet",
    "InvalidConfigError",
    "InvalidPeriodsError",
    "LagAccumulator",
    "LagTable",
    "LengthMismatchError",
    "NoMinimumFoundError",
    "NonPositiveInputError",
    "NotCoprimeError",
    "PRESETS",
    "SchemeConfig",
    "SchemeKind",
    "SignalSpec",
    "SpectrumEstimate",
    "StructureReport",
    "TooFewLevelsError",
    "UNREPRESENTABLE",
    "UnsupportedSchemeError",
    "accumulate_snapshot",
    "autocorrelation_estimate",
    "bias_closed",
    "bias_from_weights",
    "correlogram_psd",
    "difference_sets",
    "find_peaks",
    "fold_alias",
    "frequency_grid",
    "generate_samples",
    "main_lobe_width",
    "make_scheme",
    "map_frequency",
    "nearest_bin",
    "pattern_transform",
    "psd_direct",
    "psd_from_accumulator",
    "reference_spectrum",
    "run_experiment",
    "run_preset",
    "sample_instants",
    "tones_for_scheme",
    "verify_structure",
    "weight_closed",
    "weight_enumerated",
]
