"""Monodromy tuples: classification, exponent vectors, canonical form.

A finite-order monodromy tuple is a list of powers of a single periodic
matrix Q. Changing the standard generators of the base surface acts on the
exponent vector through Sp(2g, Z/m); `reduce_to_canonical` pushes every
vector to (c, 0, ..., 0) with an explicit word in the Burkhardt generators,
and `orbit_enumerate` is the brute-force check on that claim.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .exactmat import IntMatrix, sl2_element_order
from .symplectic import (
    all_fundamental_se,
    block_swap,
    burkhardt_generators,
    mixing,
    rotation,
    transvection,
)

SUPPORTED_ORDERS = (2, 3, 4, 6)
ORBIT_GUARD = 10**7


class MonodromyKind(str, Enum):
    TRIVIAL = "Trivial"
    FINITE_CYCLIC = "FiniteCyclic"
    INFINITE = "Infinite"


@dataclass(frozen=True)
class MonodromyClass:
    kind: MonodromyKind
    Q: IntMatrix | None = None
    order: int | None = None
    exponents: tuple[int, ...] = ()


def _power(Q: IntMatrix, e: int) -> IntMatrix:
    out = IntMatrix.identity(2)
    for _ in range(e):
        out = out @ Q
    return out


def classify_monodromy(tuple_: Sequence[IntMatrix]) -> MonodromyClass:
    if len(tuple_) % 2:
        raise ValueError("monodromy tuple must have even length 2g")
    for A in tuple_:
        if A.rows != 2 or A.cols != 2 or A.det() != 1:
            raise ValueError(f"monodromy matrix {A.tolist()} is not in SL(2,Z)")
    ident = IntMatrix.identity(2)
    if all(A == ident for A in tuple_):
        return MonodromyClass(MonodromyKind.TRIVIAL)
    if any(sl2_element_order(A) == math.inf for A in tuple_):
        return MonodromyClass(MonodromyKind.INFINITE)

    # finite subgroups of SL(2,Z) have order at most 6
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for X in frontier:
            for A in tuple_:
                Y = X @ A
                if Y not in group:
                    group.add(Y)
                    nxt.append(Y)
        if len(group) > 12:
            return MonodromyClass(MonodromyKind.INFINITE)
        frontier = nxt
    if any(sl2_element_order(X) == math.inf for X in group):
        return MonodromyClass(MonodromyKind.INFINITE)

    n = len(group)
    gens = [X for X in group if sl2_element_order(X) == n]
    if not gens:
        raise AssertionError(f"finite monodromy group of order {n} is not cyclic")
    # lexicographically largest generator: recovers [[0,1],[-1,0]] and [[1,1],[-1,0]]
    Q = max(gens, key=IntMatrix.flat)
    powers = {}
    P = ident
    for e in range(n):
        powers[P] = e
        P = P @ Q
    return MonodromyClass(MonodromyKind.FINITE_CYCLIC, Q, n, tuple(powers[A] for A in tuple_))


def canonical_tuple(mc: MonodromyClass, c: int, g: int) -> tuple[IntMatrix, ...]:
    """(Q^c, I, ..., I) of length 2g."""
    ident = IntMatrix.identity(2)
    return (_power(mc.Q, c),) + (ident,) * (2 * g - 1)


@dataclass
class _Reducer:
    """Applies generator moves to an integer vector, recording the product."""

    g: int
    vec: list[int]
    P: IntMatrix = None
    word: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        self.P = IntMatrix.identity(2 * self.g)

    def _apply(self, name: str, M: IntMatrix, power: int = 1):
        if power == 0:
            return
        step = M if power > 0 else _inverse_sp(M, self.g)
        for _ in range(abs(power)):
            self.vec = list(step.apply(self.vec))
            self.P = step @ self.P
        self.word.append((name, power))

    def on_block(self, k: int, op: str, power: int = 1):
        """Transvection/rotation on block k, conjugated there by block swaps."""
        M = transvection(self.g) if op == "S" else rotation(self.g)
        for j in range(k - 1, -1, -1):
            self._apply(f"W{j + 1}", block_swap(self.g, j))
        self._apply(f"{op}1", M, power)
        for j in range(k):
            self._apply(f"W{j + 1}", block_swap(self.g, j))

    def mix(self, power: int):
        self._apply("X12", mixing(self.g), power)

    def swap(self, k: int):
        self._apply(f"W{k + 1}", block_swap(self.g, k))


def _inverse_sp(M: IntMatrix, g: int) -> IntMatrix:
    # M^-1 = -J M^T J for symplectic M
    from .symplectic import standard_J

    J = standard_J(g)
    return -(J @ M.T @ J)


def _clear_block(red: _Reducer, k: int):
    """Euclid on block k: (a, b) -> (+-gcd, 0)."""
    while red.vec[2 * k + 1]:
        a, b = red.vec[2 * k], red.vec[2 * k + 1]
        red.on_block(k, "S", -(a // b))
        red.on_block(k, "T", 1)


def _merge_into_first(red: _Reducer):
    """Euclid between blocks 0 and 1, both of shape (a, 0): leaves block 1 zero."""
    while red.vec[2]:
        a, c = red.vec[0], red.vec[2]
        q = -(a // c)
        if q:
            # a += q c: rotate block 1 so c sits in y2, then x1 -= (-q) y2
            red.on_block(1, "T", 1)
            red.mix(q)
            red.on_block(1, "T", -1)
        red.swap(0)


def reduce_to_canonical(exponents: Sequence[int], m: int, g: int) -> tuple[int, IntMatrix, list[tuple[str, int]]]:
    """Return (c, P, word) with P @ exponents == (c, 0, ..., 0) mod m.

    c is gcd(entries, m), or 0 for the zero vector. P is reduced mod m and
    equals the product of the recorded generator word (later moves on the
    left).
    """
    if m not in SUPPORTED_ORDERS:
        raise ValueError(f"monodromy order {m} not in {SUPPORTED_ORDERS}")
    if len(exponents) != 2 * g or g < 1:
        raise ValueError("exponent vector must have length 2g, g >= 1")
    red = _Reducer(g, [e % m for e in exponents])
    if not any(red.vec):
        return 0, IntMatrix.identity(2 * g), []
    for k in range(g):
        _clear_block(red, k)
    for k in range(1, g):
        # bring block k next to block 0; earlier blocks are already zero
        for j in range(k - 1, 0, -1):
            red.swap(j)
        _merge_into_first(red)
    c = math.gcd(red.vec[0], m)
    if red.vec[0] % m != c:
        red.on_block(0, "T", 2)  # -I on the first block
    if red.vec[0] % m != c or any(x % m for x in red.vec[1:]):
        raise AssertionError(f"reduction stalled at {red.vec} mod {m}")
    return c, red.P.mod(m), red.word


def orbit_enumerate(m: int, g: int, generators: list[IntMatrix] | None = None) -> list[list[tuple[int, ...]]]:
    """Partition (Z/m)^2g into orbits under the symplectic generators mod m.

    Defaults to the fundamental SE_ij set, which is independent of the moves
    used by `reduce_to_canonical`. Orbits are sorted internally and by their
    minimal element.
    """
    if m ** (2 * g) > ORBIT_GUARD:
        raise OverflowError(f"(Z/{m})^{2 * g} exceeds the enumeration guard")
    gens = [G.mod(m) for G in (generators or all_fundamental_se(g))]
    n = 2 * g
    seen: set[tuple[int, ...]] = set()
    orbits = []

    def vectors():
        for code in range(m**n):
            v = []
            for _ in range(n):
                code, r = divmod(code, m)
                v.append(r)
            yield tuple(reversed(v))

    for v in vectors():
        if v in seen:
            continue
        orbit = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for G in gens:
                    u = tuple(x % m for x in G.apply(w))
                    if u not in orbit:
                        orbit.add(u)
                        nxt.append(u)
            frontier = nxt
        seen |= orbit
        orbits.append(sorted(orbit))
    orbits.sort(key=lambda o: o[0])
    return orbits


def burkhardt_orbits(m: int, g: int) -> list[list[tuple[int, ...]]]:
    return orbit_enumerate(m, g, burkhardt_generators(g))
