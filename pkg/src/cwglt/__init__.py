"""Mean-field spin matrix sequences, their exact block spectra, and
spectral-distribution checks against the limiting symbol."""

from .cwanalysis import (
    CoherentState,
    ConvergenceTable,
    NonPositiveGapError,
    NuMeasure,
    ZeroDistRow,
    berezin_deviation,
    berezin_symbol,
    chernoff_bound,
    coherent_state,
    extremal_convergence,
    full_cw_spectrum,
    nu_measure,
    resolution_identity_check,
    zero_dist_trace_test,
)
from .distribution import (
    DistanceReport,
    WeightedSpectrum,
    compare_quantiles,
    empirical_functional,
    from_eigenvalues,
    ks_distance,
    perturbation_robustness,
    schatten_zero_test,
)
from .eigen import (
    EigenResult,
    backend_name,
    dense_sym_eigenvalues,
    singular_values,
    tridiag_eigenvalues,
)
from .matrices import (
    FourierCoefficients,
    ModelParams,
    SpinSectorSpec,
    SymTridiagonal,
    allowed_two_j,
    cw_restricted,
    dense_cw_oracle,
    diag_sampling,
    fd_dirichlet,
    fd_schrodinger,
    fourier_coeffs,
    sector_list,
    spin_block,
    toeplitz_from_coeffs,
)
from .symbols import (
    MonotoneRearrangement,
    SeparableSymbol,
    SymbolExtrema,
    classical_h0,
    cw_symbol,
    quantile,
    rearrangement,
    sample_grid,
    symbol_extrema,
    weak_star_functional,
)

__version__ = "0.1.0"

__all__ = [
    "CoherentState",
    "ConvergenceTable",
    "DistanceReport",
    "EigenResult",
    "FourierCoefficients",
    "ModelParams",
    "MonotoneRearrangement",
    "NonPositiveGapError",
    "NuMeasure",
    "SeparableSymbol",
    "SpinSectorSpec",
    "SymTridiagonal",
    "SymbolExtrema",
    "WeightedSpectrum",
    "ZeroDistRow",
    "allowed_two_j",
    "backend_name",
    "berezin_deviation",
    "berezin_symbol",
    "chernoff_bound",
    "classical_h0",
    "coherent_state",
    "compare_quantiles",
    "cw_restricted",
    "cw_symbol",
    "dense_cw_oracle",
    "dense_sym_eigenvalues",
    "diag_sampling",
    "empirical_functional",
    "extremal_convergence",
    "fd_dirichlet",
    "fd_schrodinger",
    "fourier_coeffs",
    "from_eigenvalues",
    "full_cw_spectrum",
    "ks_distance",
    "nu_measure",
    "perturbation_robustness",
    "quantile",
    "rearrangement",
    "resolution_identity_check",
    "sample_grid",
    "schatten_zero_test",
    "sector_list",
    "singular_values",
    "spin_block",
    "symbol_extrema",
    "toeplitz_from_coeffs",
    "tridiag_eigenvalues",
    "weak_star_functional",
    "zero_dist_trace_test",
]
