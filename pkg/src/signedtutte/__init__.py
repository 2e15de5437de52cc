"""Exact signed Tutte polynomials, joint matroid Tutte polynomials, and
brute-force enumerators of flows, colorings and tensions of signed graphs."""
from .graph import ComponentProfile, EdgeClass, GraphError, SignedGraph, bouquet, handcuff
from .group import FiniteAbelianGroup, GroupError
from .io import GraphDocument, ParseError, load_graph, parse_graph, render_graph
from .matroid import (
    Matroid,
    MatroidAxiomError,
    MatroidError,
    cycle_matroid,
    dual,
    frame_matroid,
    is_perspective,
    joint_tutte,
    matroid_tutte,
    specialize_to_m1,
    specialize_to_m2,
)
from .poly import NotDivisibleError, PolyError, TriPoly
from .tutte import (
    EvaluationPoint,
    RecipeParams,
    dichromatic,
    recipe_evaluate,
    signed_tutte,
    signed_tutte_dc,
    signed_tutte_subset,
    table1_point,
)

__version__ = "0.1.0"
