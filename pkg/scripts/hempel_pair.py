"""Compare the worked flexible pair and print its quotient census side by side."""
import argparse
import time
from dataclasses import dataclass
from typing import Optional

from seifert4.quotients import abelianization, census, load_catalog
from seifert4.rigidity import compare, replay_witness
from seifert4.seifert import SeifertData, normalize, presentation


@dataclass
class Config:
    order: int = 5
    catalog: Optional[str] = None


def pair(order: int):
    # (n,1,0),(n,n-1,0) against its scale by 2
    M = SeifertData.make(2, [(order, 1, 0), (order, order - 1, 0)], (-1, 0))
    N = SeifertData.make(2, [(order, 2, 0), (order, order - 2, 0)], (-1, 0))
    return M, N


def main(cfg: Config):
    M, N = pair(cfg.order)
    t0 = time.perf_counter()
    v = compare(M, N)
    print(f"verdict {v.tag.value}  k={v.k}  matching units {list(v.units)}")
    if v.witness is not None:
        replay_witness(M, v)
        print("witness replays onto", normalize(N).cone_points, normalize(N).obstruction)
    print("abelianizations", abelianization(presentation(M)), abelianization(presentation(N)))
    catalog = load_catalog(cfg.catalog)
    a, b = census(presentation(M), catalog), census(presentation(N), catalog)
    print(f"{'group':>8} {'M':>12} {'N':>12}")
    for (gid, x), (_, y) in zip(a.entries, b.entries):
        flag = "" if x == y else "  <-- differs"
        print(f"{gid:>8} {x!s:>12} {y!s:>12}{flag}")
    print(f"done in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order, help="cone order (prime >= 5)")
    ap.add_argument("--catalog", default=None)
    args = ap.parse_args()
    main(Config(args.order, args.catalog))
