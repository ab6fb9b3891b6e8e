"""Show the k = 1/2 branch: the ODE explorer finds a solution and the surface classifies as stationary."""

from dataclasses import dataclass

from lorentz_stationary.catalog import make_half_branch
from lorentz_stationary.ruled import classify_ruled
from lorentz_stationary.verifier import OdeBranchSpec, ode_branch_explore, residual_scan


@dataclass
class Config:
    c1: float = 1.0
    c2: float = 0.0


def main(cfg: Config) -> None:
    rep = ode_branch_explore(OdeBranchSpec(1, 0.5))
    print(f"ODE branch mu=+1 k=1/2: {rep.verdict}")
    fam = make_half_branch(cfg.c1, cfg.c2)
    cls = classify_ruled(fam.chart)
    scan = residual_scan(fam.chart, fam.spec.claimed_alpha, (32, 16))
    print(f"{fam.spec.id}: {cls.verdict} branch={cls.branch!r} alpha={cls.alpha:+.9f}")
    print(f"residual scan at alpha={fam.spec.claimed_alpha:+g}: max {scan.max_residual:.2e} ({scan.verdict})")


if __name__ == "__main__":
    main(Config())
