"""Spectral probes driven by subgroup actions on a Lagrangian point.

Eigenvalues: a vector of N is fixed by every element of the parabolic
subgroup ``N_lam = {I + t X_lam}`` iff it lies in ``{z in N : X z in N}``
for the lifted generator X; that subspace is nonzero exactly when lam is
an eigenvalue of the point's operator. The same test with the generator
of the shift subgroup detects the eigenvalue at infinity.

Resolvent distance: the dilation semigroup conjugated to fix lam pushes
N into its epsilon-adjunct neighbourhood for all ``t`` up to a threshold
``t*``, and ``eps / (exp(2 t*) - 1)`` recovers ``sigma_min(T - lam)``.

The membership residual of the generator test is quadratic in the
distance from lam to the spectrum (the subgroup is parabolic), so the
rank decision uses ``rank_tol`` on that residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, ChartDegenerate, NontrivialInfinity, VerificationFailed, ZeroVector
from .mobius import a_lambda, act_subspace, block_matrix, image_basis, n, n_lambda_generator
from .projective import LagrangianPoint, lagrangian_point
from .subspace import DEFAULT_POLICY, Subspace, TolerancePolicy, orthonormalize
from .symplectic import Polarization, require_lagrangian

SHIFT_GENERATOR = np.array([[0.0, 1.0], [0.0, 0.0]])


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous pair ``[x1 : x2]``; ``[1 : 0]`` is infinity."""

    x1: float
    x2: float

    @classmethod
    def finite(cls, lam: float) -> "ProjectivePoint":
        return cls(float(lam), 1.0)

    @property
    def is_infinite(self) -> bool:
        return self.x2 == 0.0

    @property
    def value(self) -> float:
        if self.is_infinite:
            raise ValueError("the point at infinity has no affine value")
        return self.x1 / self.x2

    def __str__(self):
        return "inf" if self.is_infinite else f"{self.value:.12g}"


INFINITY = ProjectivePoint(1.0, 0.0)


@dataclass(frozen=True, eq=False)
class EigenReport:
    """``fixed`` is the common fixed subspace inside N (ambient R^2n);
    ``eigenspace`` the eigenvectors of the operator, in M coordinates (R^n).
    """

    point: ProjectivePoint
    fixed: Subspace
    eigenspace: Subspace

    @property
    def multiplicity(self) -> int:
        return self.fixed.rank


@dataclass(frozen=True)
class ProbeResult:
    lam: float
    epsilon: float
    t_star: float
    sigma_est: float
    saturated: bool

    @property
    def status(self) -> str:
        return "saturated" if self.saturated else "ok"


def _as_point(P: Polarization, N) -> LagrangianPoint:
    if isinstance(N, LagrangianPoint):
        require_lagrangian(P, N.space)
        return N
    return lagrangian_point(P, N)


def generator_fixed_subspace(P: Polarization, N: LagrangianPoint, generator, scale: float = 1.0) -> Subspace:
    """``{z in N : X z in N}`` for the lift X of a 2x2 nilpotent generator.

    Computed as the null space of ``(I - P_N) X`` on N. Singular values at
    most ``rank_tol * scale`` count as zero.
    """
    X = block_matrix(P, generator)
    B = N.space.basis
    XB = X @ B
    resid = XB - B @ (B.T @ XB)
    _, sv, vt = np.linalg.svd(resid, full_matrices=False)
    keep = sv <= P.policy.rank_tol * scale
    return Subspace(B @ vt[keep].T, P.policy.rank_tol)


def nlambda_fixed_subspace(P: Polarization, N, lam: float) -> Subspace:
    """Intersection of ``N^g`` over the subgroup ``N_lam``."""
    N = _as_point(P, N)
    return generator_fixed_subspace(P, N, n_lambda_generator(lam), scale=1.0 + lam * lam)


def _residual_bound(P: Polarization, lam: float) -> float:
    # a membership residual r allows an eigen-residual of about sqrt(r)
    return 4.0 * math.sqrt(P.policy.rank_tol * (1.0 + lam * lam))


def is_eigenvalue(P: Polarization, N, lam: float) -> EigenReport | None:
    N = _as_point(P, N)
    fixed = nlambda_fixed_subspace(P, N, lam)
    if fixed.rank == 0:
        return None
    B = fixed.basis
    x, y = P.x_part(B), P.y_part(B)
    resid = float(np.max(np.linalg.norm(y - lam * (P.U @ x), axis=0)))
    if resid > _residual_bound(P, lam):
        raise VerificationFailed(f"fixed vectors violate y = lam U x by {resid:.3g} at lam = {lam!r}")
    return EigenReport(ProjectivePoint.finite(lam), fixed, orthonormalize(x, P.policy))


def infinity_eigen_test(P: Polarization, N) -> EigenReport | None:
    N = _as_point(P, N)
    fixed = generator_fixed_subspace(P, N, SHIFT_GENERATOR)
    if fixed.rank == 0:
        return None
    B = fixed.basis
    resid = float(np.max(np.linalg.norm(P.x_part(B), axis=0)))
    if resid > _residual_bound(P, 0.0):
        raise VerificationFailed(f"vectors fixed by the shift subgroup have M-part {resid:.3g}")
    return EigenReport(INFINITY, fixed, orthonormalize(P.U.T @ P.y_part(B), P.policy))


def eigen_sweep(P: Polarization, N, grid) -> list[EigenReport]:
    """Eigen reports over a grid of lam values plus the infinity test.

    Grid entries may be ``math.inf``; the infinity test runs regardless.
    Values within ``angle_tol`` of an already reported one are skipped.
    Sorted by lam, infinity last.
    """
    N = _as_point(P, N)
    finite = sorted({float(v) for v in grid if not math.isinf(float(v))})
    reports: list[EigenReport] = []
    for lam in finite:
        if reports and abs(lam - reports[-1].point.value) <= P.policy.angle_tol:
            continue
        rep = is_eigenvalue(P, N, lam)
        if rep is not None:
            reports.append(rep)
    inf_rep = infinity_eigen_test(P, N)
    if inf_rep is not None:
        reports.append(inf_rep)
    return reports


def _check_epsilon(eps: float):
    if not (0.0 < eps < 1.0):
        raise BadParameter(f"epsilon must lie in (0, 1), got {eps!r}")


def adjunct_contains(P: Polarization, N, eps: float, z) -> bool:
    """Is ``z = w + y`` with ``w in N``, ``y in M-perp``, ``|y| < eps |P_M w|``?

    ``P_M w = P_M z`` is forced. When ``N_inf`` is nontrivial the choice of
    w is free along ``N_inf`` and the smallest y is used; if ``P_M z`` is
    not reachable from N the question leaves the chart and
    :class:`ChartDegenerate` is raised.
    """
    _check_epsilon(eps)
    N = _as_point(P, N)
    v = P.check_vector(z)
    if not np.any(v):
        raise ZeroVector("adjunct membership of the zero vector")
    x = P.x_part(v)
    B = N.space.basis
    X, Y = P.x_part(B), P.y_part(B)
    coef, *_ = np.linalg.lstsq(X, x, rcond=None)
    miss = np.linalg.norm(X @ coef - x)
    if miss > P.policy.angle_tol * max(np.linalg.norm(x), 1e-300):
        raise ChartDegenerate(
            f"M-part of z is not reachable from N (residual {miss:.3g}); N_inf has rank {N.ninf.rank}"
        )
    y = P.y_part(v) - Y @ coef
    if N.ninf.rank:
        Yinf = P.y_part(N.ninf.basis)
        y = y - Yinf @ (Yinf.T @ y)
    return bool(np.linalg.norm(y) < eps * np.linalg.norm(x))


def adjunct_gap(P: Polarization, N: LagrangianPoint, S) -> float:
    """Smallest ratio ``|y| / |P_M z|`` over nonzero z in the subspace S.

    ``S`` is a basis matrix (ambient) or a :class:`Subspace`. S meets the
    epsilon-adjunct neighbourhood of N in a nonzero vector iff this ratio
    is below eps. Requires trivial ``N_inf`` and an invertible M-block of S.
    """
    Bs = S.basis if isinstance(S, Subspace) else np.asarray(S, dtype=float)
    if N.ninf.rank:
        raise NontrivialInfinity(f"N_inf has rank {N.ninf.rank}")
    Bn = N.space.basis
    Xn, Yn = P.x_part(Bn), P.y_part(Bn)
    Xs, Ys = P.x_part(Bs), P.y_part(Bs)
    # w-coefficients matching the M-part of each basis vector of S
    R = Ys - Yn @ np.linalg.solve(Xn, Xs)
    sx = np.linalg.svd(Xs, compute_uv=False)
    if sx[-1] <= P.policy.rank_tol * sx[0]:
        raise ChartDegenerate("subspace has vectors with zero M-part")
    return float(np.linalg.svd(np.linalg.solve(Xs.T, R.T).T, compute_uv=False)[-1])


def resolvent_probe(
    P: Polarization,
    N,
    lam: float,
    eps: float,
    t_max: float = 20.0,
    bisect_tol: float = 1e-8,
) -> ProbeResult:
    """Bisect for the largest t with ``N_eps & N^{a(t)} != 0`` after shifting lam to 0.

    Returns ``sigma_est = eps / (exp(2 t*) - 1)``. The horizon is capped
    where the test stops being resolvable in floating point
    (``sigma ~ rank_tol * |T - lam|``); reaching it is reported as
    saturated with ``t* = t_max``.
    """
    _check_epsilon(eps)
    if not t_max > 0 or not bisect_tol > 0:
        raise BadParameter("t_max and bisect_tol must be positive")
    N = _as_point(P, N)
    if N.ninf.rank:
        raise NontrivialInfinity(
            f"resolvent probe needs trivial N_inf; this point has an infinite eigenvalue of multiplicity {N.ninf.rank}"
        )
    shifted = lagrangian_point(P, act_subspace(P, n(-lam), N.space))
    Bn = shifted.space.basis
    scale = max(1.0, float(np.linalg.norm(P.y_part(Bn) @ np.linalg.inv(P.x_part(Bn)), 2)))
    t_prec = 0.5 * math.log1p(eps / (P.policy.rank_tol * scale))
    horizon = min(t_max, t_prec)

    def meets(t: float) -> bool:
        return adjunct_gap(P, shifted, image_basis(P, a_lambda(0.0, t), shifted.space)) < eps

    if meets(horizon):
        return ProbeResult(lam, eps, t_max, eps / math.expm1(2.0 * t_max), True)
    lo, hi = 0.0, horizon
    while hi - lo > bisect_tol:
        mid = 0.5 * (lo + hi)
        if meets(mid):
            lo = mid
        else:
            hi = mid
    t_star = 0.5 * (lo + hi)
    return ProbeResult(lam, eps, t_star, eps / math.expm1(2.0 * t_star), False)
