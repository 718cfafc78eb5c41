"""Radial power maps, bounds for the p-angular distance, and quasiconformal special functions."""

from radialqc.bounds import (
    BoundSet,
    all_bounds,
    bound_2j,
    bound_2k,
    bound_2kk,
    bound_B,
    bound_D,
    bound_K,
    bound_M,
    bound_M_tabulated,
)
from radialqc.errors import DomainError, PreconditionError
from radialqc.geometry import RadialExponents, inversion, radial_inverse, radial_map, radial_projection
from radialqc.metrics import j_metric, p_angular, q_ratio, rho0
from radialqc.special import CONSTANTS, ell_K, mu, mu_inv, phi

__version__ = "0.1.0"

__all__ = [
    "BoundSet",
    "CONSTANTS",
    "DomainError",
    "PreconditionError",
    "RadialExponents",
    "all_bounds",
    "bound_2j",
    "bound_2k",
    "bound_2kk",
    "bound_B",
    "bound_D",
    "bound_K",
    "bound_M",
    "bound_M_tabulated",
    "ell_K",
    "inversion",
    "j_metric",
    "mu",
    "mu_inv",
    "p_angular",
    "phi",
    "q_ratio",
    "radial_inverse",
    "radial_map",
    "radial_projection",
    "rho0",
]
