"""Nielsen complexity of thermofield-double states of a magnetic oscillator."""

__version__ = "0.1.0"

from .analysis import (
    LloydReport,
    PeriodEstimate,
    SweepPoint,
    TimeSeries,
    estimate_beat_period,
    estimate_period,
    lloyd_report,
    sample_series,
    sweep,
)
from .complexity import (
    ComplexitySample,
    EvaluationContext,
    complexity_at,
    complexity_equal_ref,
    complexity_high_temp_approx,
    complexity_rate_at,
    complexity_zero_temp_limit,
    default_rate_window,
    lloyd_rhs,
    max_abs_rate,
    rate_high_temp_limit,
)
from .covariance import (
    CovarianceBlock,
    ReferenceFrequencies,
    RelativeSpectrum,
    SectorLabel,
    k_generator_matrix,
    relative_block,
    relative_eigenvalues,
    relative_spectrum,
    sector_a,
    squeezer_matrix,
    target_block,
    vacuum_block,
)
from .errors import (
    DivergenceError,
    InsufficientDataError,
    MagtfdError,
    NumericDomainError,
    ParameterError,
    SingularRateError,
)
from .model import (
    ModeFrequencies,
    OscillatorParams,
    TfdCoefficients,
    ThermalParams,
    cyclotron_frequency,
    energy_nk,
    energy_nl,
    ground_state_energy,
    internal_energy,
    normal_mode_frequencies,
    partition_function,
    tfd_alphas,
)
