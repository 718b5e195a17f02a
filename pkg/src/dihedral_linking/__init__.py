"""Linking numbers of curve lifts in 3-fold irregular dihedral branched covers of S^3."""

from .chains import ChainResult, Mode, branch_chain, branch_chain_system, pseudo_chain_system, pseudo_chains, solve_chain
from .diagram import (
    CurvePresentation,
    KnotPresentation,
    OverKind,
    Scene,
    SceneParseError,
    Violation,
    load_scene,
    make_curve,
    make_knot,
    parse_scene,
    planar_linking,
    serialize_scene,
    validate_scene,
)
from .lifts import A2Placement, LiftTrace, PlacementError, a2_placement, trace_lifts, wall_color_change
from .linalg import rref, solve_affine
from .linking import LinkingMatrix, aggregate, branch_linking, intersection_matrix, symmetry_check

__version__ = "0.1.0"
