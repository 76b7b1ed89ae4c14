"""Rectilinear Steiner arborescence and arborescence-forest solvers.

Terminals live in the first quadrant; every terminal must be joined to a
covering root by a path whose length equals their L1 distance (equivalently,
an x- and y-monotone staircase).  The package provides an exact subset DP, a
fixed-parameter sweep, a guillotine-based approximation scheme, a guarded
greedy baseline, a brute-force oracle for cross-validation, and a reduction
for growing a fixed arborescence to absorb extra points.
"""

from .geometry import (ORIGIN, GridPoint, Instance, covers, l1_dist, meet,
                       nearest_covering_root, norm)
from .rectgraph import (RectGraph, Segment, ServiceReport, normalize,
                        path_is_staircase, seg, validate_rsfa, weight)
from .hanan import HananGrid, build
from .exact import (precompute_local_root_services, solve_rsa, solve_rsfa_core,
                    solve_rsfa_exact)
from .fpt import FptResult, solve_rsfa_fpt
from .oracle import DEFAULT_EDGE_BUDGET, OracleBudgetError, constrained_optimum, oracle_optimum
from .greedy import greedy_baseline
from .prespecified import (PrespecifiedInstance, attachments_within_subgrid,
                           build_subgrid, essential_endpoints, essential_vertices,
                           extensions, solve_prespecified, to_rsfa_instance)
from .ptas import (CutProfile, PtasBudgetError, PtasResult, PtasSubproblem,
                   cut_profile, discretized_coordinates, ensure_general_position,
                   is_k_perfect, k_span, solve_rsfa_ptas)

__all__ = [
    "ORIGIN", "GridPoint", "Instance", "covers", "l1_dist", "meet",
    "nearest_covering_root", "norm",
    "RectGraph", "Segment", "ServiceReport", "normalize", "path_is_staircase",
    "seg", "validate_rsfa", "weight",
    "HananGrid", "build",
    "precompute_local_root_services", "solve_rsa", "solve_rsfa_core",
    "solve_rsfa_exact",
    "FptResult", "solve_rsfa_fpt",
    "DEFAULT_EDGE_BUDGET", "OracleBudgetError", "constrained_optimum", "oracle_optimum",
    "greedy_baseline",
    "PrespecifiedInstance", "attachments_within_subgrid", "build_subgrid",
    "essential_endpoints", "essential_vertices", "extensions",
    "solve_prespecified", "to_rsfa_instance",
    "CutProfile", "PtasBudgetError", "PtasResult", "PtasSubproblem",
    "cut_profile", "discretized_coordinates", "ensure_general_position",
    "is_k_perfect", "k_span", "solve_rsfa_ptas",
]
