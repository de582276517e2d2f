"""Exact lattice pmf convolution and local-limit-theorem diagnostics."""

from .convolve import (
    SupportOverflowError,
    convolve_fft,
    convolve_naive,
    convolve_sequence,
    iid_power,
)
from .families import FamilySpec, realize, sum_law
from .limit_laws import LimitLaw, get_law, modulus_of_continuity, standard_normal
from .pmf import (
    LatticePmf,
    Normalization,
    delta,
    make_pmf,
    mean_and_std,
    mod_deviation,
    residue_distribution,
)
from .stats import (
    LltReport,
    ProofDecomposition,
    choose_window,
    full_report,
    interval_prob,
    interval_shift_diff,
    kolmogorov_eps,
    llt_error,
    proof_decomposition,
    shift_sup_diff,
    window_sup_diff,
)

__all__ = [
    "FamilySpec",
    "LatticePmf",
    "LimitLaw",
    "LltReport",
    "Normalization",
    "ProofDecomposition",
    "SupportOverflowError",
    "choose_window",
    "convolve_fft",
    "convolve_naive",
    "convolve_sequence",
    "delta",
    "full_report",
    "get_law",
    "iid_power",
    "interval_prob",
    "interval_shift_diff",
    "kolmogorov_eps",
    "llt_error",
    "make_pmf",
    "mean_and_std",
    "mod_deviation",
    "modulus_of_continuity",
    "proof_decomposition",
    "realize",
    "residue_distribution",
    "shift_sup_diff",
    "standard_normal",
    "sum_law",
    "window_sup_diff",
]

__version__ = "0.1.0"
