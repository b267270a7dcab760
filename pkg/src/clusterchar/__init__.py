"""Cluster characters on small 2-Calabi-Yau categories, computed exactly.

Two models of the cluster category are available: diagonals of a polygon
(type A) and modules over a Dynkin path algebra.  On top of them sit the
cluster character, strata of morphism spaces and checkers for the refined
multiplication formula, specialization of a cluster variable to 1 and
friezes.
"""

from .cccharacter import IotaMap, cc, compute_iota
from .clustercat import ArcCategory, ModuleCategory
from .errors import ClusterCharError
from .exactalg import LaurentPoly
from .quiver import ExchangeQuiver, Seed

__version__ = "0.1.0"

__all__ = [
    "ArcCategory",
    "ClusterCharError",
    "ExchangeQuiver",
    "IotaMap",
    "LaurentPoly",
    "ModuleCategory",
    "Seed",
    "cc",
    "compute_iota",
]
