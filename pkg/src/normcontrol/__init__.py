"""Certified norm-controlled inversion in unitized convolution algebras on
finite abelian groups: exact Fourier analysis under normalized Haar measure,
the unitized algebras with the AP and LP norm families, constructive
inversion pipelines with certified bounds for every gap level, a randomized
certification harness, and a CLI.
"""

from ._backend import available_backends, get_backend
from ._version import __version__
from .algebra import (
    AlgebraKind,
    Family,
    UnitizedElement,
    conv_power,
    convolve,
    gelfand_transform,
    identity_function,
    involution,
    norm,
    unit_one,
    unitized_involution,
    unitized_multiply,
    zero_function,
)
from .errors import (
    ConsistencyError,
    GroupMismatchError,
    HypothesisViolated,
    NormControlError,
    NotInvertible,
    SamplingExhausted,
)
from .fourier import (
    FunctionOnG,
    SpectralVector,
    forward,
    forward_direct,
    inverse,
    inverse_direct,
    norm_lp_dual,
    norm_lp_group,
)
from .group import DualCharacter, Group, GroupElement, pairing
from .harness import (
    CertificationReport,
    ExtremalEstimate,
    SampleSpec,
    Strategy,
    SweepCell,
    certify_campaign,
    extremal_search,
    sample_admissible,
    sweep,
)
from .inversion import (
    BezoutSolution,
    CertifiedInverse,
    Diagnostics,
    GapReport,
    Theorem,
    applicability,
    auto_invert,
    bezout_solve,
    certified_bound_value,
    choose_odd_m_lp,
    choose_odd_n_ap,
    choose_odd_n_lp,
    gap_report,
    hy_reduce_power,
    invert_ap_general,
    invert_ap_large_p_third,
    invert_ap_small_p,
    invert_lp_large_p,
    invert_lp_small_p,
    invert_splitting,
    invert_with,
    oracle_invert,
)

__all__ = [
    "__version__",
    "available_backends",
    "get_backend",
    "AlgebraKind",
    "Family",
    "UnitizedElement",
    "conv_power",
    "convolve",
    "gelfand_transform",
    "identity_function",
    "involution",
    "norm",
    "unit_one",
    "unitized_involution",
    "unitized_multiply",
    "zero_function",
    "ConsistencyError",
    "GroupMismatchError",
    "HypothesisViolated",
    "NormControlError",
    "NotInvertible",
    "SamplingExhausted",
    "FunctionOnG",
    "SpectralVector",
    "forward",
    "forward_direct",
    "inverse",
    "inverse_direct",
    "norm_lp_dual",
    "norm_lp_group",
    "DualCharacter",
    "Group",
    "GroupElement",
    "pairing",
    "CertificationReport",
    "ExtremalEstimate",
    "SampleSpec",
    "Strategy",
    "SweepCell",
    "certify_campaign",
    "extremal_search",
    "sample_admissible",
    "sweep",
    "BezoutSolution",
    "CertifiedInverse",
    "Diagnostics",
    "GapReport",
    "Theorem",
    "applicability",
    "auto_invert",
    "bezout_solve",
    "certified_bound_value",
    "choose_odd_m_lp",
    "choose_odd_n_ap",
    "choose_odd_n_lp",
    "gap_report",
    "hy_reduce_power",
    "invert_ap_general",
    "invert_ap_large_p_third",
    "invert_ap_small_p",
    "invert_lp_large_p",
    "invert_lp_small_p",
    "invert_splitting",
    "invert_with",
    "oracle_invert",
]
