"""Graded modules by Hilbert series, their zeta-type functions, and residues."""

from .exact import (
    Rational,
    RatPolynomial,
    WeightSeq,
    bernoulli_barnes_number,
    bernoulli_barnes_poly,
    bernoulli_numbers,
    sum_powers,
)
from .hilbert import (
    BettiTable,
    HilbertSeries,
    ModuleSeriesWarning,
    MultiplicityData,
    QuasiPolynomial,
    a_invariant,
    betti_from_numerator,
    bounded_denumerant,
    dimension,
    direct_sum,
    expand,
    free_series,
    hilbert_polynomial,
    iterate,
    multiplicity,
    quasi_polynomial,
    regular_quotient,
    restricted_partition,
    series_from_betti,
    shift,
    validate,
)
from .analytic import (
    DEFAULT_CONFIG,
    EvalConfig,
    PoleError,
    ResidueTable,
    hurwitz_zeta,
    hurwitz_zeta_deflated,
    iterated_residues_closed,
    iterated_residues_limit,
    iterated_zeta_closed,
    iterated_zeta_limit,
    residue_oracle,
    residues_betti,
    residues_closed,
    residues_from_resolution,
    residues_limit,
    theta,
    zeta_closed,
    zeta_direct,
    zeta_limit,
)
from .verify import (
    NonIntegralBettiWarning,
    PureIdentityReport,
    PureResolutionSpec,
    SamuelInput,
    check_ci_identity,
    check_pure_identity,
    default_z_samples,
    pure_betti,
    samuel_multiplicity,
)

__version__ = "0.1.0"
