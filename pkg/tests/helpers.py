"""Random generators shared by the test modules."""

import numpy as np

from projline.mobius import GroupElement


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def random_symmetric(rng, n, scale=1.0):
    a = rng.standard_normal((n, n)) * scale
    return 0.5 * (a + a.T)


def random_group_element(rng, spread=1.0):
    while True:
        m = rng.standard_normal((2, 2)) * spread
        det = np.linalg.det(m)
        if abs(det) > 0.05 * spread**2:
            break
    if det < 0:
        m[0] *= -1
        det = -det
    m /= np.sqrt(det)
    # rebuild d from a, b, c so the determinant is 1 to rounding
    a, b, c = m[0, 0], m[0, 1], m[1, 0]
    if abs(a) > 1e-3:
        return GroupElement(a, b, c, (1.0 + b * c) / a)
    return GroupElement.from_matrix(m)


def random_subspace_basis(rng, d, r):
    return rng.standard_normal((d, r))
