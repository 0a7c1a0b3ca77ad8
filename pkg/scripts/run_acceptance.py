"""Run the acceptance criteria and print one line per criterion."""
import argparse
from dataclasses import dataclass, field

from kzduality.suite import CRITERIA, run_suite


@dataclass
class Config:
    only: list[int] = field(default_factory=lambda: [c.number for c in CRITERIA])
    threads: int = 1


def main(cfg: Config):
    ok = True
    for k, rep in run_suite(cfg.only, cfg.threads):
        name = CRITERIA[k - 1].name
        print(f"{'PASS' if rep.passed else 'FAIL'} [{k}] {name}: "
              f"{rep.checked} checks in {rep.info['seconds']}s")
        ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", type=int, nargs="*")
    ap.add_argument("--threads", type=int, default=1)
    a = ap.parse_args()
    cfg = Config(threads=a.threads)
    if a.only:
        cfg.only = a.only
    raise SystemExit(main(cfg))
