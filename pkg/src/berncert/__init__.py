"""Nonnegativity certificates for Bernstein-form polynomials on [0,1].

The package decides or sufficiently certifies nonnegativity of univariate
polynomials and symmetric polynomial matrices given in the Bernstein basis:
coefficient tests (``in_nb``/``in_nb_matrix``), the strictly larger
geometric-mean tests (``in_gb``/``in_gb_matrix``) with explicit certificate
witnesses, exact cubic conditions, and a criterion-parameterized subdivision
engine with split counting.  ``berncert.cli`` reproduces the subdivision
experiments as CSV.
"""

from .bernstein import (
    ConePoint,
    DegreeConstants,
    RemappedPoly,
    ScalarPoly,
    basis_eval,
    binomial,
    cone_member,
    degree_constants,
    degree_elevate,
    evaluate,
    from_monomial,
    remap_interval,
    shift,
    split,
    to_monomial,
)
from .experiments import (
    ExperimentConfig,
    RunRecord,
    instance_rng,
    quad_poly,
    run_matrix_experiment,
    run_quad_histogram,
    run_quad_roots,
    sample_random_matrix_poly,
    sample_random_nonneg_cubic,
    write_csv,
)
from .matpoly import (
    MatrixPoly,
    check_block_certificate,
    coefficient_scale,
    eval_matrix,
    gb_matrix_bound,
    gb_matrix_witness,
    in_gb_matrix,
    in_nb_matrix,
    min_eig_over_interval,
    shift_matrix,
    split_matrix,
)
from .scalar import (
    CubicBranch,
    CubicVerdict,
    check_tridiag_certificate,
    cubic_discriminant,
    cubic_positive_exact,
    cubic_socp_feasible,
    cubic_socp_witness,
    gb_lower_bound,
    gb_witness,
    gram_pair,
    in_gb,
    in_nb,
    nonneg_oracle,
    st_decompose,
)
from .subdivide import Criterion, SubdivisionReport, certify_matrix, certify_scalar
from .symkernel import EigDecomp, eig_sym, geo_mean, psd_project, sqrt_psd, symmetrize

__version__ = "0.1.0"

__all__ = [
    "ConePoint",
    "CubicBranch",
    "CubicVerdict",
    "Criterion",
    "DegreeConstants",
    "EigDecomp",
    "ExperimentConfig",
    "MatrixPoly",
    "RemappedPoly",
    "RunRecord",
    "ScalarPoly",
    "SubdivisionReport",
    "basis_eval",
    "binomial",
    "certify_matrix",
    "certify_scalar",
    "check_block_certificate",
    "check_tridiag_certificate",
    "coefficient_scale",
    "cone_member",
    "cubic_discriminant",
    "cubic_positive_exact",
    "cubic_socp_feasible",
    "cubic_socp_witness",
    "degree_constants",
    "degree_elevate",
    "eig_sym",
    "eval_matrix",
    "evaluate",
    "from_monomial",
    "gb_lower_bound",
    "gb_matrix_bound",
    "gb_matrix_witness",
    "gb_witness",
    "geo_mean",
    "gram_pair",
    "in_gb",
    "in_gb_matrix",
    "in_nb",
    "in_nb_matrix",
    "instance_rng",
    "min_eig_over_interval",
    "nonneg_oracle",
    "psd_project",
    "quad_poly",
    "remap_interval",
    "run_matrix_experiment",
    "run_quad_histogram",
    "run_quad_roots",
    "sample_random_matrix_poly",
    "sample_random_nonneg_cubic",
    "shift",
    "shift_matrix",
    "split",
    "split_matrix",
    "sqrt_psd",
    "st_decompose",
    "symmetrize",
    "to_monomial",
    "write_csv",
]
