"""Brute-force oracles, deliberately sharing no code with the library paths."""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


def det(rows):
    """Laplace expansion in exact integers."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * det([r[:j] + r[j + 1 :] for r in rows[1:]])
        for j in range(n)
        if rows[0][j]
    )


def determinantal_divisors_snf(rows, ncols):
    """Smith diagonal via gcds of k x k minors (textbook definition)."""
    nrows = len(rows)
    diag = []
    prev = 1
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for ri in itertools.combinations(range(nrows), k):
            for ci in itertools.combinations(range(ncols), k):
                g = math.gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            diag += [0] * (min(nrows, ncols) - len(diag))
            break
        diag.append(g // prev)
        prev = g
    return tuple(diag)


def span_mod(rows, n, t):
    span = {(0,) * n}
    frontier = list(span)
    gens = [tuple(x % t for x in r) for r in rows]
    while frontier:
        nxt = []
        for v in frontier:
            for r in gens:
                w = tuple((x + y) % t for x, y in zip(v, r))
                if w not in span:
                    span.add(w)
                    nxt.append(w)
        frontier = nxt
    return span


def coset_count(rows, n, t):
    """|(Z/t)^n / span(rows)| by enumerating the span."""
    return t**n // len(span_mod(rows, n, t))


def solve_mod_bruteforce(rows, v, t):
    """Some c with c @ rows == v mod t, or None, by exhausting (Z/t)^r."""
    r = len(rows)
    n = len(v)
    for c in itertools.product(range(t), repeat=r):
        if all((sum(c[i] * rows[i][j] for i in range(r)) - v[j]) % t == 0 for j in range(n)):
            return c
    return None


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


def mat_pow(A, n):
    out = [[int(i == j) for j in range(len(A))] for i in range(len(A))]
    for _ in range(n):
        out = mat_mul(out, A)
    return out


def abelian_hom_count(ab_factors, cyclic_orders):
    """|Hom(G^ab, Z/n_1 x ... x Z/n_s)| = prod gcd(d, n_j), gcd(0, n) = n."""
    out = 1
    for d in ab_factors:
        for n in cyclic_orders:
            out *= math.gcd(d, n)
    return out


def content_class(v, m):
    g = m
    for x in v:
        g = math.gcd(g, x)
    return g % m  # 0 for the zero vector


def random_sl2(rng, bound=3):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c == 1:
            return [[a, b], [c, d]]


def random_cone(rng, m, spread=3):
    while True:
        a, b = rng.randint(-spread * m, spread * m), rng.randint(-spread * m, spread * m)
        if math.gcd(m, a, b) == 1:
            return (m, a, b)


def lcm(xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def random_trivial_data(rng, max_lcm=30, zero_euler=None):
    """(genus, cones, obstruction) with lcm of orders <= max_lcm.

    zero_euler=True pairs each cone with its negative so e can vanish.
    """
    if zero_euler is None:
        zero_euler = rng.random() < 0.5
    while True:
        genus = rng.randint(0, 2)
        if zero_euler:
            half = [rng.choice([2, 3, 4, 5, 6]) for _ in range(rng.randint(0, 2))]
            orders = half + half
        else:
            orders = [rng.choice([2, 3, 4, 5, 6]) for _ in range(rng.randint(0, 3))]
        if lcm(orders) <= max_lcm:
            break
    if zero_euler:
        first = [random_cone(rng, m) for m in half]
        cones = first + [(m, -a + m * rng.randint(-2, 2), -b + m * rng.randint(-2, 2)) for m, a, b in first]
        sa = sum(Fraction(a, m) for m, a, _ in cones)
        sb = sum(Fraction(b, m) for m, _, b in cones)
        obstruction = (int(-sa), int(-sb))
    else:
        cones = [random_cone(rng, m) for m in orders]
        obstruction = (rng.randint(-3, 3), rng.randint(-3, 3))
    rng.shuffle(cones)
    return genus, cones, obstruction
