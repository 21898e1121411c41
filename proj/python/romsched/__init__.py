"""Random-order makespan scheduling: simulators, oracles and experiment helpers.

The heavy lifting lives in the compiled extension; this package re-exports
its public names.
"""

from ._core import (  # noqa: F401
    avg_load,
    check_stable,
    complexity_R,
    exact_opt,
    gen_degenerate,
    gen_lower_bound,
    gen_random_uniform,
    gen_random_bimodal,
    gen_random_pareto,
    graham,
    is_simple,
    lightload,
    lightload_bpre,
    lightload_rom,
    load_estimate,
    lower_bound_c,
    lowerbound_experiment,
    lpt_makespan,
    md_binomial,
    md_hypergeom_bruteforce,
    nmd_monte_carlo,
    permutation,
    run_trials_json,
    secretary,
)

__all__ = [
    "avg_load",
    "check_stable",
    "complexity_R",
    "exact_opt",
    "gen_degenerate",
    "gen_lower_bound",
    "gen_random_uniform",
    "gen_random_bimodal",
    "gen_random_pareto",
    "graham",
    "is_simple",
    "lightload",
    "lightload_bpre",
    "lightload_rom",
    "load_estimate",
    "lower_bound_c",
    "lowerbound_experiment",
    "lpt_makespan",
    "md_binomial",
    "md_hypergeom_bruteforce",
    "nmd_monte_carlo",
    "permutation",
    "run_trials_json",
    "secretary",
]
