"""Pieri operators on posets and graphs, and the quasi-symmetric functions they generate."""

from .combinat import Composition, Partition, SignedPermutation, compositions
from .nc import NCElem, R, S
from .pieri import (
    Descent, Halved, ModifiedDescent, PathCount, PieriFamily, Quantum, RankSelection,
    is_eulerian, is_symmetric, kfunction, kfunction_chains, make_family, peak_kfunction,
)
from .poset import LabelledReseau, double, erase_negative
from .qsym import F, M, QSymElem, theta

__all__ = [
    "Composition", "Partition", "SignedPermutation", "compositions",
    "NCElem", "R", "S",
    "Descent", "Halved", "ModifiedDescent", "PathCount", "PieriFamily", "Quantum", "RankSelection",
    "is_eulerian", "is_symmetric", "kfunction", "kfunction_chains", "make_family", "peak_kfunction",
    "LabelledReseau", "double", "erase_negative",
    "F", "M", "QSymElem", "theta",
]
