"""Regenerate the eig fixture: a random symmetric operator, a grid of its
eigenvalues plus off-spectrum midpoints, and the expected `eig` report.

The expected report comes from numpy's dense symmetric eigensolver only,
not from the package under test.
"""

from pathlib import Path

import numpy as np

HERE = Path(__file__).parent


def main():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((5, 5))
    t = 0.5 * (a + a.T)
    lam = np.linalg.eigvalsh(t)
    mids = 0.5 * (lam[1:] + lam[:-1])
    grid = sorted(list(lam) + list(mids))
    with open(HERE / "random_T5.txt", "w") as fh:
        fh.write("# random symmetric operator, seed 7\n5 5\n")
        for row in t:
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")
    (HERE / "random_T5_grid.txt").write_text(",".join(repr(float(v)) for v in grid) + ",inf\n")
    (HERE / "random_T5_eig.txt").write_text("".join(f"{v:.12g} 1\n" for v in lam))


if __name__ == "__main__":
    main()
