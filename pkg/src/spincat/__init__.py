"""Probabilistic teleportation of spin coherent superpositions over cat-state channels."""
from .channel import ChannelDescriptor, build_channel, concurrence_analytic, concurrence_numeric
from .core import (
    CatCoefficients,
    ChannelParams,
    LimitingForm,
    TargetState,
    basis_weights,
    cat_coefficients,
    cat_normalization,
    limiting_form,
    overlap_from_eta,
    overlap_power,
    target_logical,
)
from .engine import (
    GHZ_BASIS,
    AttemptReport,
    PairOutcome,
    best_correction,
    compose_tripartite,
    fidelity_raw,
    measure_pair,
    primary_attempt,
)
from .errors import (
    DegenerateCat,
    DegenerateTarget,
    InfiniteRepetitions,
    InvalidParams,
    InvalidSpec,
    SingularBasis,
    SpinCatError,
    TreeTooDeep,
    UnsupportedDepth,
    ZeroBranch,
)
from .figures import SweepSpec, default_spec, emit_figure, render
from .protocol import (
    AttemptTree,
    CumulativeStats,
    build_tree,
    f_av_closed,
    p_success_closed,
    post_measurement_state,
    repetitions_required,
    run_repeated,
)

__version__ = "0.1.0"
