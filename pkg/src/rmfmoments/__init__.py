"""Moments of random multiplicative functions.

Exact moment counts, Monte Carlo estimates, Euler-product and polytope
constants, the sup prime-sum statistic, and theta moments over even
Dirichlet characters.
"""

__version__ = "0.1.0"

from .constants import (
    EULER_MASCHERONI,
    BirkhoffReference,
    EulerProductValue,
    birkhoff_reference,
    ck_asymptotic,
    euler_ck,
    mckay_asymptotic_volume,
    moment_shape_prediction,
    rademacher_H_half,
    theorem_moment_prediction,
)
from . import kernels, kernels_py
from .errors import ResourceLimitError, UnsupportedMethodError
from .exact import (
    ExactMomentCount,
    product_count_total,
    rademacher_moment_bruteforce,
    steinhaus_fourth_moment_fast,
    steinhaus_moment_bruteforce,
    steinhaus_moment_product_map,
)
from .geometry import VolumeEstimate, birkhoff_volume_mc, min_exp_integral, vol_Ak_estimate
from .halasz import (
    HalaszStatistic,
    SupDistribution,
    shift_grid,
    sup_distribution,
    sup_statistic,
)
from .samples import (
    RADEMACHER,
    STEINHAUS,
    MomentEstimate,
    MultiplicativeSample,
    decomposition_stat,
    evaluate_f,
    f_values,
    mc_decomposition_moment,
    mc_moment,
    partial_sum,
    sample_multiplicative,
)
from .sieve import (
    FactorSieve,
    Factorization,
    build_factor_sieve,
    factorize,
    is_squarefree,
    primes_in_range,
    primes_up_to,
    squarefree_count,
    squarefree_mask,
)
from .theta import (
    CharacterTable,
    ThetaValue,
    char_value,
    character_table,
    conjecture_ratio,
    min_abs_theta_even,
    theta_moment,
    theta_value,
)
