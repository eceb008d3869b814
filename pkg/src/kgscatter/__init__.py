"""Scattering observables of the 1D Klein-Gordon equation for a step
potential joined to a hyperbolic-tangent tail.

Exact hypergeometric solutions give R and T per energy; two independent
numerical oracles (backward RK4 and a staircase transfer matrix) verify them.
"""

from .errors import (
    ConfigInvalid,
    ConnectionDegenerate,
    GammaPole,
    IllConditioned,
    IoFailure,
    KgScatterError,
    ParameterPole,
    SeriesNoConvergence,
    StepTooCoarse,
    ThresholdSingular,
)
from .model import (
    DispersionSet,
    EnergyRegime,
    PotentialParams,
    classify_regime,
    dispersion,
    potential_value,
)
from .oracle import OracleMethod, OracleResult, ode_scatter, staircase_scatter
from .solver import (
    MatchSystem,
    ScatteringPoint,
    WaveEval,
    build_match_system,
    eval_ref_inc,
    eval_region_I,
    eval_region_II,
    eval_trans,
    solve_point,
)
from .specfun import hyp2f1, hyp2f1_dz, lngamma
from .cli import SweepConfig, SweepRow, emit_csv, emit_svg, find_resonances, run_sweep

__version__ = "0.1.0"

__all__ = [
    "ConfigInvalid", "ConnectionDegenerate", "GammaPole", "IllConditioned",
    "IoFailure", "KgScatterError", "ParameterPole", "SeriesNoConvergence",
    "StepTooCoarse", "ThresholdSingular",
    "DispersionSet", "EnergyRegime", "PotentialParams", "classify_regime",
    "dispersion", "potential_value",
    "OracleMethod", "OracleResult", "ode_scatter", "staircase_scatter",
    "MatchSystem", "ScatteringPoint", "WaveEval", "build_match_system",
    "eval_ref_inc", "eval_region_I", "eval_region_II", "eval_trans", "solve_point",
    "hyp2f1", "hyp2f1_dz", "lngamma",
    "SweepConfig", "SweepRow", "emit_csv", "emit_svg", "find_resonances", "run_sweep",
    "__version__",
]
