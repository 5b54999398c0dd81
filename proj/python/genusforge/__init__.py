"""Exact genus distribution of random polygon gluings."""

from genusforge._core import (
    __version__,
    binomial,
    bruteforce_law,
    catalan,
    chi_hook_general,
    chi_hook_on_involution,
    chi_hook_on_ncycle,
    class_size,
    dimension,
    double_factorial,
    enumerate_census,
    epsilon_counts,
    f_weight,
    factorial,
    frobenius_count,
    genus_distribution,
    hook_only_law,
    mn_character,
    partitions_of,
    product_law_pointmass,
    run_mc,
    stirling_cycle,
)

__all__ = [
    "__version__",
    "binomial",
    "bruteforce_law",
    "catalan",
    "chi_hook_general",
    "chi_hook_on_involution",
    "chi_hook_on_ncycle",
    "class_size",
    "dimension",
    "double_factorial",
    "enumerate_census",
    "epsilon_counts",
    "f_weight",
    "factorial",
    "frobenius_count",
    "genus_distribution",
    "hook_only_law",
    "mn_character",
    "partitions_of",
    "product_law_pointmass",
    "run_mc",
    "stirling_cycle",
]
