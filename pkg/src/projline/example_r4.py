"""The four-dimensional worked example.

``M = span(e1, e2)``, ``U e1 = e3``, ``U e2 = e4`` and
``N = span(e1 + e3, e2 + 2 e4)``, all listed with the M block first. The
library uses ``(y, x)`` order (M-perp first), so listed vectors go
through :func:`from_m_first` before use. Read that way N is the graph of
``T = diag(1, 2)``.

The orbit set printed for the example,
``{(x(c+d), y(c+2d), x(a+b), y(a+2b))}``, is reproduced only when the
vectors of N are taken literally in ``(y, x)`` order and the printed
tuple is read with its two blocks swapped; :func:`orbit_tuple_matches`
checks every combination.
"""

from __future__ import annotations

import numpy as np

from .mobius import GroupElement, act_subspace
from .projective import LagrangianPoint, extract_operator, point_from_basis
from .spectral import eigen_sweep, infinity_eigen_test
from .subspace import orthonormalize, principal_angles, subspace_equal
from .symplectic import Polarization, identity_polarization

LISTED_BASIS = np.array([[1.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 2.0]]).T
GRID = (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, float("inf"))


def from_m_first(v) -> np.ndarray:
    """Reorder coordinates listed as ``(x, y)`` into ``(y, x)``."""
    v = np.asarray(v, dtype=float)
    half = v.shape[0] // 2
    return np.concatenate([v[half:], v[:half]], axis=0)


def listed_omega(z, w) -> float:
    """The example's form in its own (M-first) coordinates."""
    return z[0] * w[2] + z[1] * w[3] - z[2] * w[0] - z[3] * w[1]


def build() -> tuple[Polarization, LagrangianPoint]:
    P = identity_polarization(2)
    return P, point_from_basis(P, from_m_first(LISTED_BASIS))


def printed_orbit_basis(g: GroupElement) -> np.ndarray:
    """Columns spanning the printed orbit set, coefficients (x, y) = e1, e2."""
    a, b, c, d = g.a, g.b, g.c, g.d
    return np.array([[c + d, 0.0, a + b, 0.0], [0.0, c + 2 * d, 0.0, a + 2 * b]]).T


def orbit_tuple_matches(g: GroupElement) -> dict[tuple[str, str], bool]:
    """Which reading of N and of the printed tuple agree with the action.

    Keys are ``(reading of N, reading of the tuple)`` where each reading is
    ``"literal"`` (entries taken in ``(y, x)`` order) or ``"m-first"``
    (entries converted with :func:`from_m_first`).
    """
    P = identity_polarization(2)
    printed = printed_orbit_basis(g)
    readings = {"literal": lambda m: m, "m-first": from_m_first}
    out = {}
    for n_name, n_read in readings.items():
        image = act_subspace(P, g, orthonormalize(n_read(LISTED_BASIS)))
        for t_name, t_read in readings.items():
            out[(n_name, t_name)] = subspace_equal(image, orthonormalize(t_read(printed)))
    return out


def report() -> str:
    """Golden comparison for the example, one fact per line."""
    P, N = build()
    lines = []
    reps = eigen_sweep(P, N, GRID)
    for rep in reps:
        lines.append(f"eigenvalue {rep.point} multiplicity {rep.multiplicity}")
    inf_rep = infinity_eigen_test(P, N)
    lines.append(f"infinity {'present' if inf_rep else 'absent'}")
    pair = extract_operator(P, N)
    diag = " ".join(f"{v:.12g}" for v in np.diag(pair.T_hat))
    off = float(np.max(np.abs(pair.T_hat - np.diag(np.diag(pair.T_hat)))))
    lines.append(f"T_hat diagonal {diag} offdiag_max {off:.3g}")
    cos = np.sort(np.cos(principal_angles(P.M, N.space)))[::-1]
    lines.append("cosines M,N " + " ".join(f"{v:.12g}" for v in cos))
    g = GroupElement(2.0, 0.7, 0.3, (1.0 + 0.7 * 0.3) / 2.0)
    for (n_name, t_name), ok in sorted(orbit_tuple_matches(g).items()):
        lines.append(f"orbit tuple N={n_name} tuple={t_name} {'match' if ok else 'differ'}")
    return "\n".join(lines) + "\n"
