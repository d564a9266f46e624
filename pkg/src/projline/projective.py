"""Points of the operator projective line.

A point is a Lagrangian subspace N of the polarised space. It splits as
``N = N_0 + N_1 + N_inf`` (orthogonal) with ``N_0 = N & M`` (kernel of
the operator), ``N_inf = N & M-perp`` (eigenvalue at infinity) and
``N_1`` the rest. Two symmetric operators describe N in two charts:
``T_hat`` on ``M_0 + M_00`` whose graph ``{(U T x, x)}`` is ``N_1 + N_0``,
and ``T_check`` on ``M_1 + M_10`` whose graph ``{(y, U^T T y)}`` is
``N_1 + N_inf``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IllConditionedChart, InconsistentBlocks, NotLagrangian, NotSymmetric
from .subspace import (
    Subspace,
    as_matrix,
    complement_within,
    direct_sum,
    intersect,
    orthogonal_complement,
    orthonormalize,
    principal_angles,
)
from .symplectic import Polarization, require_lagrangian

DEFAULT_MAX_CONDITION = 1e10


@dataclass(frozen=True, eq=False)
class LagrangianPoint:
    polarization: Polarization
    space: Subspace
    n0: Subspace
    n1: Subspace
    ninf: Subspace

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis

    @property
    def finite_part(self) -> Subspace:
        """``N_1 + N_0``: the graph of ``U T_hat``."""
        return direct_sum(self.n1, self.n0)

    @property
    def cofinite_part(self) -> Subspace:
        """``N_1 + N_inf``: the graph of ``U^T T_check``."""
        return direct_sum(self.n1, self.ninf)


def lagrangian_point(P: Polarization, space: Subspace) -> LagrangianPoint:
    """Validate ``space`` as Lagrangian and cache its three-part splitting."""
    require_lagrangian(P, space)
    policy = P.policy
    n0 = intersect(space, P.M, policy)
    ninf = intersect(space, P.M_perp, policy)
    n1 = complement_within(space, direct_sum(n0, ninf))
    return LagrangianPoint(P, space, n0, n1, ninf)


def point_from_basis(P: Polarization, vectors) -> LagrangianPoint:
    return lagrangian_point(P, orthonormalize(vectors, P.policy))


def check_compatible(P: Polarization, s: Subspace) -> bool:
    P.check_subspace(s)
    try:
        require_lagrangian(P, s)
    except NotLagrangian:
        return False
    return True


@dataclass(frozen=True, eq=False)
class TwoSubspaceDecomposition:
    M00: Subspace
    M01: Subspace
    M10: Subspace
    M11: Subspace
    M0: Subspace
    M1: Subspace
    generic_angles: np.ndarray

    def dims(self) -> dict:
        return {name: getattr(self, name).rank for name in ("M00", "M01", "M10", "M11", "M0", "M1")}


def decompose(P: Polarization, N: LagrangianPoint) -> TwoSubspaceDecomposition:
    """Halmos-type decomposition of the pair (M, N).

    For a Lagrangian N the dimensions pair up (``M00 ~ M11``,
    ``M01 ~ M10``, ``M0 ~ M1``); a violation means the input was only
    numerically Lagrangian and raises :class:`NotLagrangian`.
    ``generic_angles`` are the principal angles between ``N_1`` and M.
    """
    policy = P.policy
    space = N.space
    perp = orthogonal_complement(space)
    m00 = intersect(P.M, space, policy)
    m01 = intersect(P.M, perp, policy)
    m10 = intersect(P.M_perp, space, policy)
    m11 = intersect(P.M_perp, perp, policy)
    m0 = complement_within(P.M, direct_sum(m00, m01))
    m1 = complement_within(P.M_perp, direct_sum(m10, m11))
    for left, right, a, b in (("M00", "M11", m00, m11), ("M01", "M10", m01, m10), ("M0", "M1", m0, m1)):
        if a.rank != b.rank:
            raise NotLagrangian(
                f"dim {left} = {a.rank} but dim {right} = {b.rank}; "
                f"N is not Lagrangian within angle tolerance {policy.angle_tol:.3g}"
            )
    angles = principal_angles(N.n1, P.M) if N.n1.rank else np.zeros(0)
    return TwoSubspaceDecomposition(m00, m01, m10, m11, m0, m1, angles)


def _symmetric_tolerance(P: Polarization, A: np.ndarray) -> float:
    return P.policy.angle_tol * max(1.0, float(np.max(np.abs(A))) if A.size else 1.0)


def _require_symmetric(P: Polarization, T: np.ndarray, what: str):
    asym = float(np.max(np.abs(T - T.T))) if T.size else 0.0
    tol = _symmetric_tolerance(P, T)
    if asym > tol:
        raise NotSymmetric(f"{what} is not symmetric: max|T - T^T| = {asym:.3g} > {tol:.3g}")


def graph_of_operator(P: Polarization, T) -> LagrangianPoint:
    """The point ``{(U T x, x) : x in M}`` for a symmetric n x n matrix T."""
    t = as_matrix(T, "T")
    if t.shape != (P.n, P.n):
        raise InconsistentBlocks(f"operator must be {P.n} x {P.n}, got {t.shape}")
    _require_symmetric(P, t, "operator")
    basis = P.join(P.U @ t, np.eye(P.n))
    return lagrangian_point(P, orthonormalize(basis, P.policy))


def _inside_M(P: Polarization, s: Subspace, what: str):
    P.check_subspace(s)
    leak = float(np.max(np.abs(P.y_part(s.basis)))) if s.rank else 0.0
    if leak > P.policy.angle_tol:
        raise InconsistentBlocks(f"{what} is not contained in M (M-perp component {leak:.3g})")


def graph_extended(
    P: Polarization,
    T0,
    M00: Subspace,
    M01: Subspace,
    m0: Subspace | None = None,
) -> LagrangianPoint:
    """Point with prescribed kernel ``M00`` and infinity directions ``M01``.

    The remaining block ``M0 = M - (M00 + M01)`` carries the symmetric
    invertible ``T0``, written in the basis of ``m0`` (by default the
    orthogonal complement computed here). The result is
    ``graph(T0 on M0) + (0, M00) + (U M01, 0)``.
    """
    _inside_M(P, M00, "M00")
    _inside_M(P, M01, "M01")
    tol = P.policy.angle_tol
    if M00.rank and M01.rank and np.max(np.abs(M00.basis.T @ M01.basis)) > tol:
        raise InconsistentBlocks("M00 and M01 are not orthogonal")
    rest = complement_within(P.M, direct_sum(M00, M01))
    if m0 is None:
        m0 = rest
    else:
        _inside_M(P, m0, "M0 basis")
        if m0.rank != rest.rank or (m0.rank and np.max(np.abs(m0.basis.T @ direct_sum(M00, M01).basis)) > tol):
            raise InconsistentBlocks("given M0 basis does not complement M00 + M01 in M")
    k = m0.rank
    t0 = as_matrix(T0, "T0") if np.size(T0) else np.zeros((0, 0))
    if t0.shape != (k, k):
        raise InconsistentBlocks(f"T0 must be {k} x {k} on the remaining block, got {t0.shape}")
    if k:
        _require_symmetric(P, t0, "T0")
        sv = np.linalg.svd(t0, compute_uv=False)
        if sv[-1] <= P.policy.rank_tol * max(sv[0], 1.0):
            raise InconsistentBlocks(f"T0 is not invertible (sigma_min = {sv[-1]:.3g})")
    x0 = P.x_part(m0.basis)
    graph = P.join(P.U @ x0 @ t0, x0)
    kernel = M00.basis
    infinity = P.embed_y(P.U @ P.x_part(M01.basis))
    space = orthonormalize(np.hstack([graph, kernel, infinity]), P.policy)
    return lagrangian_point(P, space)


@dataclass(frozen=True, eq=False)
class BiFredholmPair:
    """Two chart operators of a point.

    ``T_hat`` is n x n in M coordinates and ``T_check`` n x n in M-perp
    coordinates; each is symmetric and vanishes on the orthogonal
    complement of its domain (``M01`` resp. ``M11``). ``dom_hat`` and
    ``dom_check`` are ambient subspaces. ``T_hat_block``/``T_check_block``
    are the same operators in the orthonormal bases of the domains.
    """

    T_hat: np.ndarray
    T_check: np.ndarray
    dom_hat: Subspace
    dom_check: Subspace
    T_hat_block: np.ndarray
    T_check_block: np.ndarray


def _chart_operator(P: Polarization, part: Subspace, *, swap: bool, max_condition: float):
    """Solve the chart equation on ``part``.

    Without ``swap``: returns ``A = U^T Y X^+`` (n x n, M coordinates) where
    X, Y are the x and y blocks of the basis. With ``swap`` the roles of
    the blocks exchange: ``A = U X Y^+`` in M-perp coordinates.
    """
    nn = P.n
    if part.rank == 0:
        return np.zeros((nn, nn))
    b = part.basis
    src, img = (P.y_part(b), P.x_part(b)) if swap else (P.x_part(b), P.y_part(b))
    q, sv, vt = np.linalg.svd(src, full_matrices=False)
    # the basis is orthonormal, so 1 / sigma_min bounds both the solve's
    # error amplification and the size of the resulting operator
    cond = 1.0 / sv[-1] if sv[-1] > 0 else np.inf
    if cond > max_condition:
        # columns of src are cosines of angles between `part` and the chart axis
        angle = float(np.arccos(np.clip(sv[-1], 0.0, 1.0)))
        raise IllConditionedChart(
            f"chart solve has condition number {cond:.3g} > {max_condition:.3g}; "
            f"offending principal angle {angle:.17g} rad",
            angle=angle,
            condition=cond,
        )
    pinv = vt.T @ np.diag(1.0 / sv) @ q.T
    return (P.U @ img @ pinv) if swap else (P.U.T @ img @ pinv)


def _symmetrize(P: Polarization, a: np.ndarray, what: str) -> np.ndarray:
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    tol = _symmetric_tolerance(P, a)
    if asym > tol:
        raise NotLagrangian(
            f"{what} is not symmetric (max asymmetry {asym:.3g} > {tol:.3g}); N is not numerically Lagrangian"
        )
    return 0.5 * (a + a.T)


def extract_operator(
    P: Polarization, N: LagrangianPoint, max_condition: float = DEFAULT_MAX_CONDITION
) -> BiFredholmPair:
    nn = P.n
    require_lagrangian(P, N.space)
    t_hat = _symmetrize(P, _chart_operator(P, N.finite_part, swap=False, max_condition=max_condition), "T_hat")
    t_check = _symmetrize(
        P, _chart_operator(P, N.cofinite_part, swap=True, max_condition=max_condition), "T_check"
    )
    # domains: x-projection of N_1 + N_0 and y-projection of N_1 + N_inf
    dom_hat_x = orthonormalize(P.x_part(N.finite_part.basis), P.policy) if N.finite_part.rank else None
    dom_check_y = orthonormalize(P.y_part(N.cofinite_part.basis), P.policy) if N.cofinite_part.rank else None
    if dom_hat_x is None:
        dom_hat = Subspace.zero(2 * nn, P.policy.rank_tol)
        hat_block = np.zeros((0, 0))
    else:
        dom_hat = Subspace(P.embed_x(dom_hat_x.basis), P.policy.rank_tol)
        hat_block = dom_hat_x.basis.T @ t_hat @ dom_hat_x.basis
    if dom_check_y is None:
        dom_check = Subspace.zero(2 * nn, P.policy.rank_tol)
        check_block = np.zeros((0, 0))
    else:
        dom_check = Subspace(P.embed_y(dom_check_y.basis), P.policy.rank_tol)
        check_block = dom_check_y.basis.T @ t_check @ dom_check_y.basis
    return BiFredholmPair(t_hat, t_check, dom_hat, dom_check, hat_block, check_block)
