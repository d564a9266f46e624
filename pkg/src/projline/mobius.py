"""SL(2,R) elements and their action on the polarised space.

``g = [[a, b], [c, d]]`` acts on ``z = (y, x)`` by

    M_U(g) = [[a I, b U], [c U^T, d I]],

which is a representation of SL(2,R) preserving omega. On graphs
``{(U T x, x)}`` it induces ``T -> (aT + b)(cT + d)^-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, DimensionMismatch, SingularDenominator, ZeroVector
from .subspace import Subspace, TolerancePolicy, as_matrix, orthonormalize
from .symplectic import Polarization

DET_TOL = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """A real 2x2 matrix with unit determinant.

    The determinant is checked to ``DET_TOL`` relative to the size of the
    products ``a*d`` and ``b*c``; nothing is renormalised.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(v) for v in vals):
            raise BadParameter(f"group element entries must be finite, got {vals}")
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, float(v))
        det = self.a * self.d - self.b * self.c
        scale = max(1.0, abs(self.a * self.d) + abs(self.b * self.c))
        if abs(det - 1.0) > DET_TOL * scale:
            raise BadParameter(f"determinant {det!r} differs from 1 by more than {DET_TOL * scale:.3g}")

    @classmethod
    def from_matrix(cls, m) -> "GroupElement":
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2):
            raise DimensionMismatch(f"group element must be 2x2, got {m.shape}")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def apply(self, point):
        """Linear-fractional action on a homogeneous pair ``(x1, x2)``."""
        x1, x2 = point
        return (self.a * x1 + self.b * x2, self.c * x1 + self.d * x2)


IDENTITY = GroupElement(1.0, 0.0, 0.0, 1.0)


def k(t: float) -> GroupElement:
    c, s = math.cos(t), math.sin(t)
    return GroupElement(c, s, -s, c)


def n(t: float) -> GroupElement:
    return GroupElement(1.0, t, 0.0, 1.0)


def n_prime(t: float) -> GroupElement:
    return GroupElement(1.0, 0.0, t, 1.0)


def a(t: float) -> GroupElement:
    return GroupElement(math.exp(t), 0.0, 0.0, math.exp(-t))


def n_lambda(lam: float, t: float) -> GroupElement:
    """One-parameter subgroup fixing [lam : 1]; equals ``I + t * X_lam``."""
    return GroupElement(1.0 - lam * t, lam * lam * t, -t, 1.0 + lam * t)


def n_lambda_generator(lam: float) -> np.ndarray:
    """Nilpotent generator ``X_lam = [[-lam, lam^2], [-1, lam]]``."""
    return np.array([[-lam, lam * lam], [-1.0, lam]])


def a_lambda(lam: float, t: float) -> GroupElement:
    """Dilation semigroup fixing [lam : 1] and [1 : 0]; ``t > 0`` only."""
    if not t > 0:
        raise BadParameter(f"semigroup parameter must be positive, got {t!r}")
    et, emt = math.exp(t), math.exp(-t)
    return GroupElement(et, lam * (emt - et), 0.0, emt)


def block_matrix(P: Polarization, m) -> np.ndarray:
    """``[[a I, b U], [c U^T, d I]]`` for any 2x2 array, not only group elements."""
    m = np.asarray(m, dtype=float)
    nn = P.n
    out = np.empty((2 * nn, 2 * nn))
    eye = np.eye(nn)
    out[:nn, :nn] = m[0, 0] * eye
    out[:nn, nn:] = m[0, 1] * P.U
    out[nn:, :nn] = m[1, 0] * P.U.T
    out[nn:, nn:] = m[1, 1] * eye
    return out


def mu_matrix(P: Polarization, g: GroupElement) -> np.ndarray:
    return block_matrix(P, g.matrix)


def act_vector(P: Polarization, g: GroupElement, z) -> np.ndarray:
    v = P.check_vector(z)
    y, x = P.y_part(v), P.x_part(v)
    return P.join(g.a * y + g.b * (P.U @ x), g.c * (P.U.T @ y) + g.d * x)


def image_basis(P: Polarization, g: GroupElement, s: Subspace) -> np.ndarray:
    """``M_U(g)`` applied to the basis of ``s`` without re-orthonormalising."""
    P.check_subspace(s)
    return mu_matrix(P, g) @ s.basis


def act_subspace(P: Polarization, g: GroupElement, s: Subspace) -> Subspace:
    """Image subspace ``M_U(g) s``.

    ``M_U(g)`` is invertible, so the rank is kept as is and the leading
    left singular vectors of the image basis are returned.
    """
    img = image_basis(P, g, s)
    if s.rank == 0:
        return s
    u, _, _ = np.linalg.svd(img, full_matrices=False)
    return Subspace(u[:, : s.rank], s.tol)


def linear_fractional_operator(g: GroupElement, T, floor: float = 1e-12, left: bool = False) -> np.ndarray:
    """``(aT + bI)(cT + dI)^-1``, or ``(cT + dI)^-1 (aT + bI)`` with ``left=True``.

    Raises :class:`SingularDenominator` when ``sigma_min(cT + dI)`` is at
    most ``floor`` times its largest singular value, i.e. ``-d/c`` is in
    the spectrum of T to that precision.
    """
    t = as_matrix(T, "T")
    if t.shape[0] != t.shape[1]:
        raise DimensionMismatch(f"T must be square, got {t.shape}")
    eye = np.eye(t.shape[0])
    num = g.a * t + g.b * eye
    den = g.c * t + g.d * eye
    sv = np.linalg.svd(den, compute_uv=False)
    if sv.size and sv[-1] <= floor * max(sv[0], 1.0):
        raise SingularDenominator(
            f"cT + dI is singular: sigma_min = {sv[-1]:.3g} <= floor {floor * max(sv[0], 1.0):.3g}; "
            f"-d/c = {(-g.d / g.c) if g.c else math.inf!r} lies in the spectrum"
        )
    if left:
        return np.linalg.solve(den, num)
    return np.linalg.solve(den.T, num.T).T


@dataclass(frozen=True, eq=False)
class PlanarOrbit:
    """The orbit is the 2-plane ``span{(0, x), (U x, 0)}``."""

    plane: Subspace
    direction: np.ndarray


@dataclass(frozen=True, eq=False)
class GenericOrbit:
    """The orbit sits non-linearly in the span of four vectors."""

    spanning_vectors: np.ndarray
    span: Subspace


def orbit_classify(P: Polarization, z, policy: TolerancePolicy | None = None):
    policy = policy or P.policy
    v = P.check_vector(z)
    total = np.linalg.norm(v)
    if total == 0.0:
        raise ZeroVector("orbit of the zero vector")
    x = P.x_part(v)
    y = P.y_part(v)
    ux = P.U @ x
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    small = policy.rank_tol * total
    if nx <= small or ny <= small:
        collinear = True
    else:
        u_hat = ux / np.linalg.norm(ux)
        resid = np.linalg.norm(y - (y @ u_hat) * u_hat) / ny
        collinear = resid <= math.sin(policy.angle_tol)
    if collinear:
        direction = x / nx if nx > small else P.U.T @ y / ny
        plane = np.column_stack([P.embed_x(direction), P.embed_y(P.U @ direction)])
        return PlanarOrbit(Subspace(plane, policy.rank_tol), direction)
    vecs = np.column_stack([P.embed_x(x), P.embed_y(ux), P.embed_y(y), P.embed_x(P.U.T @ y)])
    return GenericOrbit(vecs, orthonormalize(vecs, policy))
