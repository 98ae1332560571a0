"""Numerical spectral toolkit for the classical periodic Benjamin-Ono
equation: truncated Lax operators, dispersive and convex action profiles,
multi-phase waves, and small-dispersion limits."""

from .symbol import (
    FourierSymbol,
    SymbolError,
    constant,
    cosine,
    evaluate,
    inf_estimate,
    mean,
    negated,
    shifted,
    sup_estimate,
    symbol_from_fourier,
    symbol_from_json_dict,
    symbol_from_samples,
    symbol_to_json_dict,
)
from .linalg import (
    EigenSolveError,
    NonHermitianError,
    SingularMatrixError,
    complex_solve,
    hermitian_eigenvalues,
)
from .lax import (
    InterlacedSpectra,
    InterlacingError,
    ResolventDomainError,
    TruncatedLaxPair,
    TruncationResult,
    adaptive_truncation,
    baker_akhiezer_average,
    build_lax_pair,
    gap_threshold,
    product_formula,
    spectra,
    spectral_shift,
)
from .profiles import (
    ConvexProfile,
    DiscreteMeasure,
    Profile,
    ProfileError,
    convex_profile_from_samples,
    convex_profile_from_symbol,
    exp_series_from_logmoments,
    moments_and_logmoments,
    profile_distance,
    profile_from_json_dict,
    profile_from_spectra,
    profile_from_transition_measure,
    profile_to_json_dict,
    t_up_observable,
    transition_measure,
)
from .multiphase import (
    ConservationReport,
    FiniteGapReport,
    MultiPhaseError,
    MultiPhaseParams,
    NearSingularWaveError,
    conservation_check,
    dk_profile,
    evaluate_wave,
    fit_wave_symbol,
    params_from_json_dict,
    params_to_json_dict,
    reflected_gap_counts,
    verify_finite_gap,
)
from .smalldisp import (
    BreakingTimeError,
    BurgersReport,
    DispersionSweep,
    SweepResult,
    breaking_time_estimate,
    burgers_conservation_check,
    dispersion_sweep,
    evolved_convex_profile,
    sinusoidal_functional_equation,
    szego_geometric_mean,
    vkls_profile,
)

__version__ = "0.1.0"
