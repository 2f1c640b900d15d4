"""Exact computations with Omega-tridendriform algebras.

Index tables and their axioms live in :mod:`tridend.omega`, decorated
Schroeder trees in :mod:`tridend.trees` and the free products in
:mod:`tridend.free`.  Typed words, Rota-Baxter families, the tensor collapse
and the operad computations have their own modules.
"""

__version__ = "0.1.0"

from .exact import LinComb, format_rational
from .omega import (AxiomReport, OmegaTable, TableError, Violation, builtin, check_diassociative, check_eds,
                    check_ets, is_ets, load_table, opposite)
from .trees import Leaf, Vertex, corolla, count, enumerate_trees, parse, render, schroeder
from .axioms import TridendImpl, TripleSource, check_axioms, check_commutative, ets_equivalence_probe
from .free import UNIT, FreeTridend, combo_product, evaluate, tree_product
from .words import MatchingAlgebra, TypedWord, WordAlgebra, check_matching, universal_morphism, word_product
from .rota_baxter import OmegaRBAlgebra, check_rb, induced_tridend
from .tensor import CollapsedAlgebra, freeness_probe, generation_probe, phi_properties
from .operad import (CoefficientTriple, assoc_conditions, assoc_remark_equivalence, koszul_dual,
                     prop43_relations, relation_space)

__all__ = [
    "LinComb", "format_rational",
    "AxiomReport", "OmegaTable", "TableError", "Violation", "builtin", "check_diassociative", "check_eds",
    "check_ets", "is_ets", "load_table", "opposite",
    "Leaf", "Vertex", "corolla", "count", "enumerate_trees", "parse", "render", "schroeder",
    "TridendImpl", "TripleSource", "check_axioms", "check_commutative", "ets_equivalence_probe",
    "UNIT", "FreeTridend", "combo_product", "evaluate", "tree_product",
    "MatchingAlgebra", "TypedWord", "WordAlgebra", "check_matching", "universal_morphism", "word_product",
    "OmegaRBAlgebra", "check_rb", "induced_tridend",
    "CollapsedAlgebra", "freeness_probe", "generation_probe", "phi_properties",
    "CoefficientTriple", "assoc_conditions", "assoc_remark_equivalence", "koszul_dual", "prop43_relations",
    "relation_space",
]
