"""Exhaustive global-duality sweep on windows of growing width."""
import argparse
import time
from dataclasses import dataclass

from kzduality.masep import global_sweep


@dataclass
class Config:
    max_width: int = 8
    species: tuple = (1, 2, 3)
    max_each: int = 3


def main(cfg: Config):
    ok = True
    for r in cfg.species:
        for w in range(2, cfg.max_width + 1):
            t0 = time.perf_counter()
            rep = global_sweep(w, r, cfg.max_each)
            print(f"r={r} width={w}: {rep.summary()} [{time.perf_counter() - t0:.1f}s]")
            ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-width", type=int, default=8)
    ap.add_argument("--max-each", type=int, default=3)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.max_width, max_each=a.max_each)))
