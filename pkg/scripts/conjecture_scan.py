"""Tabulate Coeff_p[E_mu, m] against specialized E_nu for small mu."""
import argparse
from collections import Counter
from dataclasses import dataclass

from kzduality.combinatorics import compositions_up_to
from kzduality.reduction import conjecture_probe


@dataclass
class Config:
    n_max: int = 3
    max_weight: int = 4
    ms: tuple = (1, 2)
    ps: tuple = (1, 2)
    verbose: bool = False


def main(cfg: Config):
    tally = Counter()
    for n in range(1, cfg.n_max + 1):
        for mu in compositions_up_to(n, cfg.max_weight):
            for m in cfg.ms:
                for p in cfg.ps:
                    res = conjecture_probe(mu, m, p)
                    tally[res.status] += 1
                    if res.status == "confirmed" and cfg.verbose:
                        print(f"mu={mu} m={m} p={p} -> nu={res.nu} alpha={res.alpha}")
    for k, v in sorted(tally.items()):
        print(f"{k}: {v}")
    return 1 if tally["ambiguous"] else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--max-weight", type=int, default=4)
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.n_max, a.max_weight, verbose=a.verbose)))
