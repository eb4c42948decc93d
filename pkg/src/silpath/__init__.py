"""Exact combinatorics of semi-infinite LS paths and level-zero crystals."""

from .cartan import AffineCartanData, AffineRoot, LevelZeroWeight, build_cartan, coroot_of, pairing, rho
from .crystal import (
    LabeledCrystalBall,
    ParNode,
    PartitionTuple,
    TensorElem,
    component_rep_search,
    decomposition_check,
    extremal_verify,
    generate_ball,
    iso_check,
    reference_seed,
    theta_map,
    turn_set,
    weyl_action,
    xi_map,
)
from .errors import *  # noqa: F401,F403
from .graphs import (
    has_path,
    qb_out_edges,
    semiinfinite_leq,
    sib_a_out_edges,
    sib_edge_alt_check,
    sib_in_edges,
    sib_out_edges,
    translation_path_criterion,
)
from .parabolic import (
    adjust,
    is_peterson_rep,
    min_coset_rep,
    parabolic,
    peterson_decompose,
    proj_J,
    project_Jc,
)
from .paths import PLPath, SiLSPath, concat, dilate, n_lambda, sigma_N, validate_sils
from .weyl import AffineWeylElem, FiniteWeylElem, bruhat_leq, reflection, sil_J
