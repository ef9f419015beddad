from .chi import ChiTable, characteristic_formulas, distinguishing_formula
from .lts import Lts, encode_ltsA, encode_ltsC, set_label
from .minimal import minimal_model
from .partition import Partition, lift
from .pipeline import METHODS, minimize, minimize_all
from .refine import branching_bisim, strong_bisim
from .weak import lcc_classes, weak_pm_relation

__all__ = [
    "ChiTable", "Lts", "METHODS", "Partition", "branching_bisim",
    "characteristic_formulas", "distinguishing_formula", "encode_ltsA",
    "encode_ltsC", "lcc_classes", "lift", "minimal_model", "minimize",
    "minimize_all", "set_label", "strong_bisim", "weak_pm_relation",
]
