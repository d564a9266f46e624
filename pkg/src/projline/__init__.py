"""Lagrangian subspaces, SL(2,R) actions and spectral probes on the operator projective line."""

from .mobius import (
    GroupElement,
    a,
    a_lambda,
    act_subspace,
    act_vector,
    k,
    linear_fractional_operator,
    mu_matrix,
    n,
    n_lambda,
    n_prime,
    orbit_classify,
)
from .projective import (
    BiFredholmPair,
    LagrangianPoint,
    check_compatible,
    decompose,
    extract_operator,
    graph_extended,
    graph_of_operator,
    lagrangian_point,
    point_from_basis,
)
from .spectral import (
    INFINITY,
    EigenReport,
    ProbeResult,
    adjunct_contains,
    eigen_sweep,
    infinity_eigen_test,
    is_eigenvalue,
    nlambda_fixed_subspace,
    resolvent_probe,
)
from .subspace import (
    Subspace,
    TolerancePolicy,
    contains,
    intersect,
    orthogonal_complement,
    orthonormalize,
    principal_angles,
    project,
    subspace_equal,
    subspace_sum,
)
from .symplectic import (
    Polarization,
    build_polarization,
    is_isotropic,
    is_lagrangian,
    omega,
    symplectic_complement,
    u_from_omega,
)

__version__ = "0.1.0"
