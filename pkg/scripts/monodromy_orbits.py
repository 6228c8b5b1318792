"""Orbit sizes of the symplectic action on (Z/m)^2g, checked against the canonical exponent."""
import argparse
from collections import Counter
from dataclasses import dataclass, field

from seifert4.monodromy import burkhardt_orbits, orbit_enumerate, reduce_to_canonical


@dataclass
class Config:
    orders: list = field(default_factory=lambda: [2, 3, 4, 6])
    genera: list = field(default_factory=lambda: [1, 2])
    burkhardt: bool = False


def main(cfg: Config):
    for m in cfg.orders:
        for g in cfg.genera:
            orbits = burkhardt_orbits(m, g) if cfg.burkhardt else orbit_enumerate(m, g)
            by_c = Counter()
            for orbit in orbits:
                cs = {reduce_to_canonical(v, m, g)[0] for v in orbit}
                assert len(cs) == 1, (m, g, cs)
                by_c[cs.pop()] = len(orbit)
            sizes = ", ".join(f"c={c}: {n}" for c, n in sorted(by_c.items()))
            print(f"m={m} g={g}  {len(orbits)} orbits  [{sizes}]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4, 6])
    ap.add_argument("--genera", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--burkhardt", action="store_true", help="use Burkhardt generators instead of SE_ij")
    args = ap.parse_args()
    main(Config(args.orders, args.genera, args.burkhardt))
