"""Residual scan of every catalog family with a one-line summary each."""

import argparse
import time
from dataclasses import dataclass

from lorentz_stationary.catalog import CATALOG_IDS, resolve
from lorentz_stationary.verifier import residual_scan


@dataclass
class Config:
    tol: float = 1e-8


def main(cfg: Config) -> int:
    bad = 0
    for fid in CATALOG_IDS:
        t0 = time.perf_counter()
        fam = resolve(fid)
        a = fam.spec.claimed_alpha
        rep = residual_scan(fam.chart, 0.0 if a is None else a, tol=cfg.tol, family=fid)
        ok = rep.passed == fam.spec.expect_stationary
        bad += not ok
        alpha = "any" if a is None else f"{a:+g}"
        print(f"{'ok ' if ok else 'BAD'} {fid:30} alpha={alpha:>4} max={rep.max_residual:.1e} "
              f"fit={rep.fitted_alpha_mean if rep.fitted_alpha_mean is not None else float('nan'):+.6f} "
              f"{time.perf_counter() - t0:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-8)
    raise SystemExit(main(Config(ap.parse_args().tol)))
