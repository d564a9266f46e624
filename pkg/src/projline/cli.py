"""Batch command-line front end.

Exit status: 0 on success, 1 on domain errors (non-Lagrangian input,
singular denominators, ...), 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from dataclasses import dataclass, field

from . import example_r4, mobius
from .errors import MatrixFormatError, ProjlineError
from .matrix_io import format_matrix, read_matrix
from .projective import decompose, extract_operator, graph_of_operator, point_from_basis
from .spectral import eigen_sweep, resolvent_probe
from .subspace import TolerancePolicy, orthonormalize
from .symplectic import build_polarization, identity_polarization, is_lagrangian, isotropy_defect

COMMANDS = ("check", "transform", "extract", "decompose", "eig", "probe", "orbit", "example-r4")

SUBGROUPS = {
    "K": mobius.k,
    "N": mobius.n,
    "NP": mobius.n_prime,
    "A": mobius.a,
    "NL": mobius.n_lambda,
    "AL": mobius.a_lambda,
}


class UsageError(Exception):
    pass


def parse_group_element(spec: str) -> mobius.GroupElement:
    """``a,b,c,d`` or a subgroup shorthand such as ``K:0.5`` or ``NL:1,2``."""
    try:
        if ":" in spec:
            kind, _, args = spec.partition(":")
            ctor = SUBGROUPS.get(kind.strip().upper())
            if ctor is None:
                raise UsageError(f"unknown subgroup {kind!r}; expected one of {', '.join(SUBGROUPS)}")
            params = [float(v) for v in args.split(",")]
            return ctor(*params)
        vals = [float(v) for v in spec.split(",")]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse group element {spec!r}: {exc}") from exc
    if len(vals) != 4:
        raise UsageError(f"group element needs 4 entries a,b,c,d, got {len(vals)}")
    return mobius.GroupElement(*vals)


def parse_grid(spec: str) -> list[float]:
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(float(tok))
        except ValueError as exc:
            raise UsageError(f"bad grid value {tok!r}") from exc
    if any(math.isnan(v) for v in out):
        raise UsageError("grid values must not be NaN")
    return out


@dataclass
class RunConfig:
    command: str
    polarization_path: str | None = None
    point_path: str | None = None
    operator_path: str | None = None
    group_element: mobius.GroupElement | None = None
    lambda_grid: list[float] = field(default_factory=list)
    epsilon: float = 0.5
    t_max: float = 20.0
    bisect_tol: float = 1e-8
    tolerances: TolerancePolicy = field(default_factory=TolerancePolicy)
    output_path: str | None = None


def _polarization(cfg: RunConfig, n: int | None):
    if cfg.polarization_path:
        P = build_polarization(read_matrix(cfg.polarization_path), cfg.tolerances)
        if n is not None and P.n != n:
            raise UsageError(f"polarization has n = {P.n}, input needs n = {n}")
        return P
    if n is None:
        raise UsageError("cannot infer the dimension; pass --polarization")
    return identity_polarization(n, cfg.tolerances)


def _read_basis(cfg: RunConfig):
    if not cfg.point_path:
        raise UsageError(f"{cfg.command} needs --point")
    basis = read_matrix(cfg.point_path)
    if basis.shape[0] % 2:
        raise UsageError(f"point basis has {basis.shape[0]} rows; ambient dimension must be even")
    return basis, _polarization(cfg, basis.shape[0] // 2)


def _load_point(cfg: RunConfig):
    if cfg.point_path and cfg.operator_path:
        raise UsageError("give either --point or --operator, not both")
    if cfg.point_path:
        basis, P = _read_basis(cfg)
        return P, point_from_basis(P, basis)
    if cfg.operator_path:
        t = read_matrix(cfg.operator_path)
        P = _polarization(cfg, t.shape[0])
        return P, graph_of_operator(P, t)
    raise UsageError(f"{cfg.command} needs --point or --operator")


def _fmt(v: float) -> str:
    return "inf" if math.isinf(v) else f"{v:.12g}"


def _check(cfg, out):
    basis, P = _read_basis(cfg)
    s = orthonormalize(basis, cfg.tolerances)
    lag = is_lagrangian(P, s)
    out.write(f"rank: {s.rank}\n")
    out.write(f"isotropy_defect: {isotropy_defect(P, s):.3g}\n")
    out.write(f"lagrangian: {str(lag).lower()}\n")
    out.write(f"compatible: {str(lag).lower()}\n")


def _transform(cfg, out):
    if cfg.group_element is None:
        raise UsageError("transform needs --g")
    basis, P = _read_basis(cfg)
    image = mobius.act_subspace(P, cfg.group_element, orthonormalize(basis, cfg.tolerances))
    out.write(format_matrix(image.basis))


def _extract(cfg, out):
    P, N = _load_point(cfg)
    pair = extract_operator(P, N)
    out.write(f"dim_hat {pair.dom_hat.rank}\n")
    out.write(f"dim_check {pair.dom_check.rank}\n")
    out.write(f"dim_N0 {N.n0.rank}\ndim_N1 {N.n1.rank}\ndim_Ninf {N.ninf.rank}\n")
    out.write(format_matrix(pair.T_hat, "T_hat"))
    out.write(format_matrix(pair.T_check, "T_check"))


def _decompose(cfg, out):
    P, N = _load_point(cfg)
    dec = decompose(P, N)
    for name, r in dec.dims().items():
        out.write(f"{name} {r}\n")
    out.write("generic_angles" + "".join(f" {a:.12g}" for a in dec.generic_angles) + "\n")


def _eig(cfg, out):
    P, N = _load_point(cfg)
    for rep in eigen_sweep(P, N, cfg.lambda_grid):
        out.write(f"{rep.point} {rep.multiplicity}\n")


def _probe(cfg, out):
    P, N = _load_point(cfg)
    grid = sorted(v for v in cfg.lambda_grid if not math.isinf(v))
    for lam in grid:
        res = resolvent_probe(P, N, lam, cfg.epsilon, cfg.t_max, cfg.bisect_tol)
        out.write(f"{_fmt(lam)} {res.t_star:.12g} {res.sigma_est:.12g} {res.status}\n")


def _orbit(cfg, out):
    if not cfg.point_path:
        raise UsageError("orbit needs --point holding a single column vector")
    v = read_matrix(cfg.point_path)
    if v.shape[1] != 1 or v.shape[0] % 2:
        raise UsageError(f"orbit vector must be a 2n x 1 column, got {v.shape}")
    P = _polarization(cfg, v.shape[0] // 2)
    res = mobius.orbit_classify(P, v[:, 0])
    if isinstance(res, mobius.PlanarOrbit):
        out.write("orbit: planar\n")
        out.write(format_matrix(res.plane.basis, "plane"))
    else:
        out.write("orbit: generic\n")
        out.write(format_matrix(res.spanning_vectors, "spanning vectors"))


def _example(cfg, out):
    out.write(example_r4.report())


HANDLERS = {
    "check": _check,
    "transform": _transform,
    "extract": _extract,
    "decompose": _decompose,
    "eig": _eig,
    "probe": _probe,
    "orbit": _orbit,
    "example-r4": _example,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    buf = io.StringIO()
    try:
        HANDLERS[cfg.command](cfg, buf)
        if cfg.output_path:
            with open(cfg.output_path, "w") as fh:
                fh.write(buf.getvalue())
        else:
            stdout.write(buf.getvalue())
    except ProjlineError as exc:
        stderr.write(f"error ({type(exc).__name__}): {exc}\n")
        return 1
    except (MatrixFormatError, UsageError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="projline", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--polarization", help="U matrix file (default: identity)")
    p.add_argument("--point", help="2n x r basis file (a single column for 'orbit')")
    p.add_argument("--operator", help="n x n symmetric operator file")
    p.add_argument("--g", help="a,b,c,d or K:t | N:t | NP:t | A:t | NL:lambda,t | AL:lambda,t")
    p.add_argument("--grid", default="", help="comma-separated lambda values; 'inf' allowed")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--tmax", type=float, default=20.0)
    p.add_argument("--bisect-tol", type=float, default=1e-8)
    p.add_argument("--tol", type=float, default=1e-10, help="relative rank tolerance")
    p.add_argument("--angle-tol", type=float, default=1e-8)
    p.add_argument("--out", help="write the report here instead of stdout")
    return p


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    try:
        policy = TolerancePolicy(args.tol, args.angle_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return RunConfig(
        command=args.command,
        polarization_path=args.polarization,
        point_path=args.point,
        operator_path=args.operator,
        group_element=parse_group_element(args.g) if args.g else None,
        lambda_grid=parse_grid(args.grid),
        epsilon=args.eps,
        t_max=args.tmax,
        bisect_tol=args.bisect_tol,
        tolerances=policy,
        output_path=args.out,
    )


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ProjlineError as exc:
        # e.g. a --g whose determinant is not 1
        sys.stderr.write(f"error ({type(exc).__name__}): {exc}\n")
        return 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
