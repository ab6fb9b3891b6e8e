"""Seeded sweep of the closed-form ODE branches; prints a verdict histogram per case."""

import argparse
from collections import Counter
from dataclasses import dataclass

import numpy as np

from lorentz_stationary.verifier import CASE_MU, DEFAULT_SEED, REPRESENTATIVE_K, random_branch_sweep


@dataclass
class Config:
    draws: int = 100
    seed: int = DEFAULT_SEED


def main(cfg: Config) -> None:
    for case in "abcdef":
        reps = random_branch_sweep(case, cfg.draws, cfg.seed)
        ratio = min(r.ab_sup / np.max(np.abs(r.c)) for r in reps)
        verdicts = Counter(r.verdict for r in reps)
        print(f"case {case}  mu={CASE_MU[case]:+d} k={REPRESENTATIVE_K[case]:+.2f}  "
              f"min ab/|c| = {ratio:.3e}  {dict(verdicts)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--draws", type=int, default=100)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    a = ap.parse_args()
    main(Config(a.draws, a.seed))
