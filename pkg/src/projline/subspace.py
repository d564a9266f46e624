"""Dense linear algebra on subspaces of R^d.

A :class:`Subspace` is stored as an orthonormal basis (d x r). The zero
subspace (r = 0) is an ordinary value and every operation accepts it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, EmptySubspace, NonFiniteInput


@dataclass(frozen=True)
class TolerancePolicy:
    """Rank and angle thresholds.

    ``rank_tol`` is relative to the largest singular value of whatever
    matrix is being ranked; ``angle_tol`` is in radians.
    """

    rank_tol: float = 1e-10
    angle_tol: float = 1e-8

    def __post_init__(self):
        for name in ("rank_tol", "angle_tol"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie in (0, 1), got {value!r}")


DEFAULT_POLICY = TolerancePolicy()


def as_matrix(a, name="matrix") -> np.ndarray:
    """Float copy of ``a`` as a 2-D array; 1-D input becomes a column."""
    m = np.array(a, dtype=float)
    if m.ndim == 1:
        m = m[:, None]
    if m.ndim != 2:
        raise DimensionMismatch(f"{name} must be 1-D or 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteInput(f"{name} has non-finite entries")
    return m


def as_vector(v, name="vector") -> np.ndarray:
    x = np.array(v, dtype=float).reshape(-1)
    if not np.all(np.isfinite(x)):
        raise NonFiniteInput(f"{name} has non-finite entries")
    return x


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Subspace:
    basis: np.ndarray
    tol: float = field(default=DEFAULT_POLICY.rank_tol)

    def __post_init__(self):
        b = as_matrix(self.basis, "basis")
        r = b.shape[1]
        if r > b.shape[0]:
            raise DimensionMismatch(f"basis has {r} columns in R^{b.shape[0]}")
        if r:
            dev = np.max(np.abs(b.T @ b - np.eye(r)))
            if dev > self.tol:
                raise ValueError(f"basis is not orthonormal (deviation {dev:.3g} > {self.tol:.3g})")
        object.__setattr__(self, "basis", _frozen(b))

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    @property
    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T

    def __repr__(self):
        return f"Subspace(rank={self.rank}, ambient_dim={self.ambient_dim})"

    @classmethod
    def zero(cls, d: int, tol: float = DEFAULT_POLICY.rank_tol) -> "Subspace":
        return cls(np.zeros((d, 0)), tol)

    @classmethod
    def full(cls, d: int, tol: float = DEFAULT_POLICY.rank_tol) -> "Subspace":
        return cls(np.eye(d), tol)


def _check_same_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )


def orthonormalize(vectors, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Orthonormal basis of the column space of ``vectors``.

    Singular values below ``policy.rank_tol * sigma_max`` are dropped; the
    zero matrix gives the zero subspace.
    """
    a = as_matrix(vectors, "vectors")
    d, k = a.shape
    if d < 1:
        raise DimensionMismatch("ambient dimension must be at least 1")
    if k == 0:
        return Subspace.zero(d, policy.rank_tol)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    if s[0] == 0.0:
        return Subspace.zero(d, policy.rank_tol)
    r = int(np.sum(s >= policy.rank_tol * s[0]))
    return Subspace(u[:, :r], policy.rank_tol)


def project(s: Subspace, v) -> np.ndarray:
    """Orthogonal projection of a vector (or the columns of a matrix) onto ``s``."""
    x = np.asarray(v, dtype=float)
    if x.shape[0] != s.ambient_dim:
        raise DimensionMismatch(f"vector of length {x.shape[0]} in R^{s.ambient_dim}")
    return s.basis @ (s.basis.T @ x)


def principal_angles(s1: Subspace, s2: Subspace) -> np.ndarray:
    """Principal angles in [0, pi/2], nondecreasing, ``min(r1, r2)`` of them.

    Cosines come from the singular values of ``B1^T B2``. Angles whose
    cosine squared exceeds 1/2 are taken from sines instead, since arccos
    loses about half the digits near zero.
    """
    _check_same_ambient(s1, s2)
    if s1.rank == 0 or s2.rank == 0:
        raise EmptySubspace("principal angles need two nonzero subspaces")
    a, b = s1.basis, s2.basis
    if a.shape[1] < b.shape[1]:
        a, b = b, a
    cos = np.clip(np.linalg.svd(a.T @ b, compute_uv=False), -1.0, 1.0)
    resid = b - a @ (a.T @ b)
    sin = np.clip(np.sort(np.linalg.svd(resid, compute_uv=False)), 0.0, 1.0)
    return np.where(cos**2 >= 0.5, np.arcsin(sin), np.arccos(cos))


def intersect(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Common directions: principal vectors whose principal angle is at most ``angle_tol``."""
    _check_same_ambient(s1, s2)
    d = s1.ambient_dim
    if s1.rank == 0 or s2.rank == 0:
        return Subspace.zero(d, policy.rank_tol)
    if s1.rank > s2.rank:
        s1, s2 = s2, s1
    a, b = s1.basis, s2.basis
    # singular values of the residual of A against span(B) are the sines
    resid = a - b @ (b.T @ a)
    _, sin, vh = np.linalg.svd(resid, full_matrices=False)
    keep = sin <= np.sin(policy.angle_tol)
    if not np.any(keep):
        return Subspace.zero(d, policy.rank_tol)
    return Subspace(a @ vh[keep].T, policy.rank_tol)


def orthogonal_complement(s: Subspace) -> Subspace:
    d, r = s.ambient_dim, s.rank
    if r == 0:
        return Subspace.full(d, s.tol)
    u, _, _ = np.linalg.svd(s.basis, full_matrices=True)
    return Subspace(u[:, r:], s.tol)


def complement_within(outer: Subspace, inner: Subspace) -> Subspace:
    """``outer`` intersected with the orthogonal complement of ``inner``.

    ``inner`` is assumed to lie inside ``outer``.
    """
    _check_same_ambient(outer, inner)
    if inner.rank == 0:
        return outer
    k = inner.rank
    if k >= outer.rank:
        return Subspace.zero(outer.ambient_dim, outer.tol)
    u, _, _ = np.linalg.svd(outer.basis.T @ inner.basis, full_matrices=True)
    return Subspace(outer.basis @ u[:, k:], outer.tol)


def subspace_sum(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    _check_same_ambient(s1, s2)
    return orthonormalize(np.hstack([s1.basis, s2.basis]), policy)


def direct_sum(*parts: Subspace) -> Subspace:
    """Concatenate bases of mutually orthogonal subspaces, without re-ranking."""
    if not parts:
        raise ValueError("direct_sum needs at least one subspace")
    for p in parts[1:]:
        _check_same_ambient(parts[0], p)
    return Subspace(np.hstack([p.basis for p in parts]), parts[0].tol)


def subspace_equal(s1: Subspace, s2: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    _check_same_ambient(s1, s2)
    if s1.rank != s2.rank:
        return False
    if s1.rank == 0:
        return True
    return bool(np.max(principal_angles(s1, s2)) <= policy.angle_tol)


def contains(s: Subspace, v, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True when ``v`` lies in ``s`` up to a relative residual of ``angle_tol``."""
    x = as_vector(v)
    norm = np.linalg.norm(x)
    if norm == 0.0:
        return True
    return bool(np.linalg.norm(x - project(s, x)) <= policy.angle_tol * norm)
