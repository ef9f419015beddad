from .checker import encode_E, eta_mask, gamma_mask, sat, sat_list, sat_mask
from .formula import (FALSE, TRUE, And, Atom, Eta, Formula, Gamma, Not, Or, Top,
                      conj, depth, diamond, disj, letters, parse, to_text, walk)
from .oracle import sat_enumerate, sat_oracle

__all__ = [
    "And", "Atom", "Eta", "FALSE", "Formula", "Gamma", "Not", "Or", "TRUE", "Top",
    "conj", "depth", "diamond", "disj", "encode_E", "eta_mask", "gamma_mask",
    "letters", "parse", "sat", "sat_enumerate", "sat_list", "sat_mask",
    "sat_oracle", "to_text", "walk",
]
