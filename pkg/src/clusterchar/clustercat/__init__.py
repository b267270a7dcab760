"""Cluster-category models: polygon arcs and Dynkin modules."""

from .arcs import ArcCategory, ArcObject
from .base import CatObject, CategoryBase, MorphismSpace
from .module import ModObject, ModuleCategory

__all__ = ["ArcCategory", "ArcObject", "CatObject", "CategoryBase", "ModObject", "ModuleCategory", "MorphismSpace"]
