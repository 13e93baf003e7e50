"""Lattice-based period recovery from two phase-estimation samples."""

from ._shorlat import (
    ShorlatError,
    build_lattice,
    cf_recover,
    closest_integer,
    convergents,
    estimate_r,
    gauss_reduce,
    ideal_sample,
    iteration_bound,
    iteration_bound_t,
    make_params,
    modpow,
    multiplicative_order,
    recover_k_l,
    recover_period,
    shor_classical,
    shortest_vector,
)

__all__ = [
    "ShorlatError",
    "build_lattice",
    "cf_recover",
    "closest_integer",
    "convergents",
    "estimate_r",
    "gauss_reduce",
    "ideal_sample",
    "iteration_bound",
    "iteration_bound_t",
    "make_params",
    "modpow",
    "multiplicative_order",
    "recover_k_l",
    "recover_period",
    "shor_classical",
    "shortest_vector",
]
