"""Ternary linear codes from partial spreads of GF(3)^n.

The package builds two families of [3^n - 1, n + 1] codes over GF(3)
from functions supported on partial spread members, computes their Walsh
spectra exactly over the Eisenstein integers, derives weight
distributions both by enumeration and in closed form, and decides
minimality by independent methods: a brute-force covering scan and a
spectral criterion. The headline family is minimal although its
wt_min/wt_max ratio sits far below the classical 2/3 threshold.
"""

from .gf3 import (
    ExtFieldElem,
    TritVec,
    all_vectors,
    dot,
    index_vec,
    irreducible_poly,
    vec_index,
)
from .subspaces import (
    PartialSpread,
    Subspace,
    full_spread,
    kernel3,
    rref3,
    section_counts,
)
from .spread_functions import (
    SpreadFunction,
    characteristic_function,
    linear_form,
    member_indicator,
    pair_indicator,
    tabulate_linear,
    ternary_function,
)
from .walsh import (
    Eisenstein,
    SpectrumCase,
    WalshSpectrum,
    classify,
    closed_spectrum,
    closed_twice_re,
    closed_walsh_value,
    walsh_spectrum,
    walsh_transform,
)
from .codes import (
    LinearFunctionError,
    TernaryLinearCode,
    WeightDistribution,
    build_code,
    closed_form_distribution,
    codeword,
    codeword_index,
    distribution_from_spectrum,
    weight_distribution,
    weight_from_walsh,
)
from .minimality import (
    CoverWitness,
    MinimalityReport,
    TripleWitness,
    ashikhmin_barg_check,
    brute_force_minimality,
    covers,
    covers_by_weight_identity,
    walsh_criterion_minimality,
)
from .reproduce import ReproductionReport, run_reproduction

__version__ = "0.1.0"
