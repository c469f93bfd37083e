"""Differential and boomerang spectra of power functions over GF(2^n), with the Niho family tooling."""

__version__ = "0.1.0"

from .closed_forms import (
    PredictionReport,
    ddt2_trace_criterion,
    predicted_boom_spectrum,
    predicted_diff_spectrum,
    verify_theorems,
)
from .field import DomainError, FieldCtx, make_field
from .niho import (
    NihoParams,
    ParameterError,
    build_niho,
    exponent_orbit,
    gcd_criterion,
    inv_mod,
    is_permutation_exponent,
)
from .spectra import (
    BoomSpectrum,
    DiffSpectrum,
    PowerFunction,
    bct_fiber,
    bct_naive,
    boom_spectrum,
    ddt_row,
    diff_spectrum,
    is_locally_apn,
)
from .survey import remark4_instances, survey_niho
