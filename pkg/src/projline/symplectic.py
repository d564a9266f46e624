"""Polarised symplectic structure on R^(2n).

Coordinates are ``z = (y, x)``: the first n entries are the M-perp block,
the last n the reference Lagrangian M. The isometry ``U: M -> M-perp``
is stored as an orthogonal n x n matrix, and

    W = [[0, U], [-U^T, 0]],    omega(z, z') = <W z, z'> = z^T W^T z'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    DegenerateForm,
    DimensionMismatch,
    NotLagrangian,
    NotOrthogonal,
    NotSkew,
    NotUnitary,
)
from .subspace import (
    DEFAULT_POLICY,
    Subspace,
    TolerancePolicy,
    as_matrix,
    as_vector,
    orthogonal_complement,
    _frozen,
)


@dataclass(frozen=True, eq=False)
class Polarization:
    """The triple (M, M-perp, U) in block coordinates.

    ``frame`` is the orthogonal 2n x 2n matrix whose columns are the
    adapted coordinate axes in the original ambient space; it is the
    identity unless the polarisation was recovered from a form.
    """

    U: np.ndarray
    policy: TolerancePolicy = DEFAULT_POLICY
    frame: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "U", _frozen(as_matrix(self.U, "U")))
        if self.frame is not None:
            object.__setattr__(self, "frame", _frozen(as_matrix(self.frame, "frame")))

    @property
    def n(self) -> int:
        return self.U.shape[0]

    @property
    def dim(self) -> int:
        return 2 * self.n

    @cached_property
    def W(self) -> np.ndarray:
        n = self.n
        w = np.zeros((2 * n, 2 * n))
        w[:n, n:] = self.U
        w[n:, :n] = -self.U.T
        return _frozen(w)

    @cached_property
    def omega_matrix(self) -> np.ndarray:
        """Gram matrix of the form: ``omega(z, z') = z @ omega_matrix @ z'``."""
        return _frozen(self.W.T.copy())

    @cached_property
    def M(self) -> Subspace:
        return Subspace(self.embed_x(np.eye(self.n)), self.policy.rank_tol)

    @cached_property
    def M_perp(self) -> Subspace:
        return Subspace(self.embed_y(np.eye(self.n)), self.policy.rank_tol)

    def y_part(self, z) -> np.ndarray:
        return np.asarray(z)[: self.n]

    def x_part(self, z) -> np.ndarray:
        return np.asarray(z)[self.n :]

    def embed_x(self, x) -> np.ndarray:
        """Place vectors (or columns) of M-coordinates into the x block."""
        x = np.asarray(x, dtype=float)
        return np.concatenate([np.zeros_like(x), x], axis=0)

    def embed_y(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        return np.concatenate([y, np.zeros_like(y)], axis=0)

    def join(self, y, x) -> np.ndarray:
        return np.concatenate([np.asarray(y, float), np.asarray(x, float)], axis=0)

    def check_vector(self, z) -> np.ndarray:
        v = as_vector(z)
        if v.shape[0] != self.dim:
            raise DimensionMismatch(f"vector of length {v.shape[0]}, expected {self.dim}")
        return v

    def check_subspace(self, s: Subspace):
        if s.ambient_dim != self.dim:
            raise DimensionMismatch(f"subspace lives in R^{s.ambient_dim}, expected R^{self.dim}")

    def u_image(self, s: Subspace) -> Subspace:
        """Image of a subspace of M under U, as a subspace of M-perp."""
        self.check_subspace(s)
        b = s.basis
        return Subspace(self.embed_y(self.U @ self.x_part(b)), s.tol)


def build_polarization(U, policy: TolerancePolicy = DEFAULT_POLICY) -> Polarization:
    u = as_matrix(U, "U")
    if u.shape[0] != u.shape[1] or u.shape[0] == 0:
        raise DimensionMismatch(f"U must be square and nonempty, got {u.shape}")
    n = u.shape[0]
    dev = max(np.max(np.abs(u.T @ u - np.eye(n))), np.max(np.abs(u @ u.T - np.eye(n))))
    if dev > policy.rank_tol:
        raise NotOrthogonal(
            f"U is not an isometry: max|U^T U - I| = {dev:.3g} exceeds tolerance {policy.rank_tol:.3g}"
        )
    return Polarization(u, policy)


def identity_polarization(n: int, policy: TolerancePolicy = DEFAULT_POLICY) -> Polarization:
    return Polarization(np.eye(n), policy)


def omega(P: Polarization, z1, z2) -> float:
    a, b = P.check_vector(z1), P.check_vector(z2)
    y1, x1 = P.y_part(a), P.x_part(a)
    y2, x2 = P.y_part(b), P.x_part(b)
    return float((P.U @ x1) @ y2 - (P.U.T @ y1) @ x2)


def isotropy_defect(P: Polarization, s: Subspace) -> float:
    """max |omega(b_i, b_j)| over the orthonormal basis of ``s``."""
    P.check_subspace(s)
    if s.rank == 0:
        return 0.0
    b = s.basis
    return float(np.max(np.abs(b.T @ P.omega_matrix @ b)))


def is_isotropic(P: Polarization, s: Subspace) -> bool:
    return isotropy_defect(P, s) <= P.policy.angle_tol


def is_lagrangian(P: Polarization, s: Subspace) -> bool:
    return s.rank == P.n and is_isotropic(P, s)


def require_lagrangian(P: Polarization, s: Subspace):
    P.check_subspace(s)
    if s.rank != P.n:
        raise NotLagrangian(f"subspace has rank {s.rank}, a Lagrangian subspace needs rank {P.n}")
    defect = isotropy_defect(P, s)
    if defect > P.policy.angle_tol:
        raise NotLagrangian(
            f"subspace is not isotropic: max|omega| = {defect:.3g} exceeds tolerance {P.policy.angle_tol:.3g}"
        )


def symplectic_complement(P: Polarization, s: Subspace) -> Subspace:
    """``{z : omega(z, z') = 0 for all z' in s}``.

    The form matrix is orthogonal, so this is the orthogonal complement of
    ``W s`` and needs no rank decision.
    """
    P.check_subspace(s)
    if s.rank == 0:
        return Subspace.full(P.dim, s.tol)
    return orthogonal_complement(Subspace(P.W @ s.basis, s.tol))


def _polar(a: np.ndarray) -> np.ndarray | None:
    u, sv, vt = np.linalg.svd(a, full_matrices=False)
    if sv.size == 0 or sv[-1] < 1e-6:
        return None
    return u @ vt


def u_from_omega(Omega, M: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Polarization:
    """Recover the isometry U from a symplectic form and a Lagrangian M.

    ``Omega`` is the Gram matrix, ``omega(z, z') = z @ Omega @ z'``. U is
    the map ``x -> y`` with ``<z, x> = omega(z, y)`` for every z in M. The
    returned polarisation is expressed in an orthonormal frame adapted to
    (M-perp, M); the frame is chosen as close as possible to the standard
    axes, so a form built from a standard polarisation round-trips exactly.
    """
    om = as_matrix(Omega, "Omega")
    d = om.shape[0]
    if om.shape != (d, d) or d % 2:
        raise DimensionMismatch(f"Omega must be square of even size, got {om.shape}")
    if M.ambient_dim != d:
        raise DimensionMismatch(f"M lives in R^{M.ambient_dim}, Omega is {d} x {d}")
    n = d // 2
    scale = max(1.0, float(np.max(np.abs(om))))
    skew = float(np.max(np.abs(om + om.T)))
    if skew > policy.rank_tol * scale:
        raise NotSkew(f"Omega is not skew-symmetric: max|Omega + Omega^T| = {skew:.3g}")
    sv = np.linalg.svd(om, compute_uv=False)
    if sv[-1] <= policy.rank_tol * sv[0]:
        raise DegenerateForm(f"Omega is degenerate: sigma_min / sigma_max = {sv[-1] / sv[0]:.3g}")
    if M.rank != n:
        raise NotLagrangian(f"M has rank {M.rank}, expected {n}")
    defect = float(np.max(np.abs(M.basis.T @ om @ M.basis)))
    if defect > policy.angle_tol * scale:
        raise NotLagrangian(f"M is not isotropic for Omega: max|omega| = {defect:.3g}")

    eye = np.eye(d)
    pm = M.projector
    bm = _polar(pm @ eye[:, n:])
    if bm is None:
        bm = M.basis
    bperp = _polar((eye - pm) @ eye[:, :n])
    if bperp is None:
        bperp = orthogonal_complement(M).basis
    g = bm.T @ om @ bperp
    u = np.linalg.inv(g)
    dev = max(np.max(np.abs(u.T @ u - np.eye(n))), np.max(np.abs(u @ u.T - np.eye(n))))
    if dev > policy.angle_tol:
        raise NotUnitary(f"map M -> M-perp defined by Omega is not unitary: max|U^T U - I| = {dev:.3g}")
    frame = np.hstack([bperp, bm])
    P = Polarization(u, policy, frame)
    mismatch = float(np.max(np.abs(frame.T @ om @ frame - P.omega_matrix)))
    if mismatch > policy.angle_tol * scale:
        raise NotLagrangian(
            f"M-perp is not Lagrangian for Omega, so the form is not of block type "
            f"(mismatch {mismatch:.3g})"
        )
    return P
