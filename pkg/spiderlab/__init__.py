"""
Workspaces, Morse censuses and robust Hooke or Coulomb control of planar tripod spiders.
"""

from .charges import (
    equilibria,
    is_trapped,
    robust_domain,
    stationary_charges,
    trapping_domain,
    trapping_hessian,
)
from .control import (
    coulomb_charges_for,
    gradient_flow,
    hooke_weights_for,
)
from .cspace import covering_degree, lift_census
from .definitions import Leg, SpiderSpec, define_spider
from .geom import Point, Triangle
from .io import file_spider, render_svg
from .morse import census
from .potentials import (
    ChargeTriple,
    CoulombPotential,
    HookePotential,
    Weights,
    weighted_minimum,
)
from .presets import S1, S2, T1
from .workspace import build_workspace

__version__ = "0.1.0"
__all__ = [
    "ChargeTriple",
    "CoulombPotential",
    "HookePotential",
    "Leg",
    "Point",
    "S1",
    "S2",
    "SpiderSpec",
    "T1",
    "Triangle",
    "Weights",
    "build_workspace",
    "census",
    "coulomb_charges_for",
    "covering_degree",
    "define_spider",
    "equilibria",
    "file_spider",
    "gradient_flow",
    "hooke_weights_for",
    "is_trapped",
    "lift_census",
    "render_svg",
    "robust_domain",
    "stationary_charges",
    "trapping_domain",
    "trapping_hessian",
    "weighted_minimum",
]
