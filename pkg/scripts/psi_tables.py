"""Print duality tables psi(nu, mu) and the measured sector constant d(t)."""
import argparse
from dataclasses import dataclass

from kzduality.combinatorics import rank_two_shape
from kzduality.reduction import d_rank_two, psi_table


@dataclass
class Config:
    n_max: int = 4
    show_entries: bool = False


def families(n_max):
    for n in range(2, n_max + 1):
        for r in (2, 3):
            for m in range(1, n // r + 1):
                yield (0,) * (n - m) + (r,) * m, None
        for m2 in range(1, n):
            for m1 in range(0, n - m2):
                delta = (0,) * (n - m1 - m2) + (1,) * m1 + (2,) * m2
                for p in range(1, min(n - m1 - m2, m2) + 1):
                    yield delta, p


def main(cfg: Config):
    for delta, p in families(cfg.n_max):
        tab = psi_table(delta, p=p) if p else psi_table(delta)
        line = f"delta={delta} m={tab.m} eps={tab.epsilon} d={tab.common_factor} closed-form={tab.consistent}"
        if p:
            m1, _ = rank_two_shape(delta)
            line += f" p={p} d==d_rank_two:{tab.common_factor == d_rank_two(m1, p)}"
        print(line)
        if cfg.show_entries:
            for (nu, mu), v in sorted(tab.entries.items()):
                if v:
                    print(f"  psi({nu}, {mu}) = {v}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--show-entries", action="store_true")
    a = ap.parse_args()
    main(Config(a.n_max, a.show_entries))
