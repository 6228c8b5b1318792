"""Random scaling families: every Isomorphic verdict must come with equal census spectra."""
import argparse
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from seifert4.quotients import census, load_catalog
from seifert4.rigidity import Tag, compare, unit_residues
from seifert4.seifert import SeifertData, is_hyperbolic_base, presentation, scale


@dataclass
class Config:
    seed: int = 0
    trials: int = 20
    catalog_size: int = 30


def random_flexible(rng):
    """Genus 1 or 2, cones paired with their negatives so e = 0."""
    while True:
        genus = rng.randint(1, 2)
        half = [rng.choice([3, 4, 5, 6]) for _ in range(rng.randint(1, 2))]
        first = []
        for m in half:
            a = rng.choice([x for x in range(1, m) if math.gcd(x, m) == 1])
            first.append((m, a, rng.randrange(m)))
        cones = first + [(m, m - a, (m - b) % m) for m, a, b in first]
        ob = (-int(sum(Fraction(a, m) for m, a, _ in cones)), -int(sum(Fraction(b, m) for m, _, b in cones)))
        data = SeifertData.make(genus, cones, ob)
        if is_hyperbolic_base(data) and len(presentation(data).generators) <= 12:
            return data


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    catalog = load_catalog()[: cfg.catalog_size]
    contradictions = 0
    for i in range(cfg.trials):
        M = random_flexible(rng)
        k = rng.choice(unit_residues(math.prod(M.cone_orders)))
        N = scale(M, k)
        v = compare(M, N)
        same = census(presentation(M), catalog) == census(presentation(N), catalog)
        if v.tag == Tag.ISOMORPHIC and not same:
            contradictions += 1
        print(f"{i:3d} cones={list(M.cone_points)} k={k} verdict={v.tag.value} k'={v.k} spectra_equal={same}")
    print(f"contradictions: {contradictions}")
    return contradictions


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--catalog-size", type=int, default=30)
    args = ap.parse_args()
    raise SystemExit(1 if main(Config(args.seed, args.trials, args.catalog_size)) else 0)
