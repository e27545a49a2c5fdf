"""Mod-2 reductions of two-dimensional crystalline representations of
GL_2(Q_2) with slope in (0, 1]: 2-adic and finite field arithmetic, symmetric
power modules, the Hecke operator on the Bruhat-Tits tree, and the
classification with its verification witnesses."""

from .classify import (
    AutomorphicKind,
    AutomorphicSide,
    Parameters,
    ReductionResult,
    classify,
    llc_inverse,
    llc_translate,
    parameters,
    verify_witness,
    witness_function,
)
from .expr import parse_a2
from .field2adic import ExtElement, ExtensionTower, build_tower
from .gf2m import FFElement, FiniteField
from .symmod import SymPoly
from .tree import TreeFunction, Vertex, hecke

__version__ = "0.1.0"
