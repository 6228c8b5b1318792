"""Exact integer linear algebra: Smith normal form, cokernels, modular solving.

Everything here works on Python ints, so there is no overflow and no
floating point anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols required for a matrix without rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __iter__(self):
        return iter(self.data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols_b = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols_b) for r in self.data),
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.data))

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def mod(self, t: int) -> "IntMatrix":
        if t == 0:
            return self
        return IntMatrix(self.rows, self.cols, tuple(tuple(x % t for x in r) for r in self.data))

    def matmul_mod(self, other: "IntMatrix", t: int) -> "IntMatrix":
        return (self @ other).mod(t)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        # Bareiss fraction-free elimination
        a = [list(r) for r in self.data]
        n, sign, prev = self.rows, 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[-1][-1] if n else 1

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows) if self.rows == self.cols else False

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.data for x in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]


def mat2(a: int, b: int, c: int, d: int) -> IntMatrix:
    return IntMatrix(2, 2, ((a, b), (c, d)))


def inverse_sl2(A: IntMatrix) -> IntMatrix:
    (a, b), (c, d) = A.data
    if a * d - b * c != 1:
        raise ValueError("not in SL(2,Z)")
    return mat2(d, -b, -c, a)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


@dataclass(frozen=True)
class SnfResult:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Unimodular U, V and diagonal D with U @ M @ V == D.

    Diagonal entries are nonnegative and each divides the next. Pivots are
    chosen by minimal absolute value to keep entries small.
    """
    m, n = M.rows, M.cols
    A = [list(r) for r in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for row in A:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                add_col(j, t, -(A[t][j] // p))
            # leftover remainders are smaller than |p|: promote the smallest
            cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if cand:
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SnfResult(IntMatrix.from_rows(U, m), IntMatrix.from_rows(A, n), IntMatrix.from_rows(V, n))


def cokernel_invariants(M: IntMatrix, ambient_rank: int, modulus: int = 0) -> tuple[int, ...]:
    """Invariant factors of (Z/modulus)^ambient_rank modulo the row space of M.

    modulus 0 means integral. Trivial factors are dropped and a free
    factor is written 0, free factors last.
    """
    if M.cols != ambient_rank:
        raise ValueError("column count must equal the ambient rank")
    diag = smith_normal_form(M).diagonal
    factors = list(diag) + [0] * (ambient_rank - len(diag))
    factors = [math.gcd(d, modulus) for d in factors]
    torsion = sorted(d for d in factors if d > 1)
    return tuple(torsion + [0] * factors.count(0))


def image_membership(M: IntMatrix, v: Sequence[int], t: int = 0) -> Optional[tuple[int, ...]]:
    """Solve c @ M == v (mod t). Returns c, or None when v is not in the image.

    t = 0 asks for an integral solution.
    """
    if len(v) != M.cols:
        raise ValueError("vector length must equal the column count")
    snf = smith_normal_form(M)
    # c M = v  <=>  (c U^-1) D = v V
    w = snf.V.T.apply(v)
    diag = snf.diagonal
    y = [0] * M.rows
    for i, wi in enumerate(w):
        d = diag[i] if i < len(diag) else 0
        if t == 0:
            if d == 0:
                if wi:
                    return None
            elif wi % d:
                return None
            else:
                y[i] = wi // d
        else:
            g = math.gcd(d, t)
            if wi % g:
                return None
            if i < M.rows:
                tg = t // g
                y[i] = (wi // g) * pow(d // g, -1, tg) % tg if tg > 1 else 0
    c = snf.U.T.apply(y)
    if t:
        c = tuple(x % t for x in c)
    return tuple(c)


def sl2_element_order(A: IntMatrix) -> float:
    """Order of A in SL(2,Z): one of 1, 2, 3, 4, 6 or math.inf."""
    if A.rows != 2 or A.cols != 2 or A.det() != 1:
        raise ValueError("expected a 2x2 integer matrix of determinant 1")
    tr = A[0, 0] + A[1, 1]
    if A.is_identity():
        return 1
    if A == -IntMatrix.identity(2):
        return 2
    return {-1: 3, 0: 4, 1: 6}.get(tr, math.inf)


def lift_sl2(a: int, b: int, c: int, d: int, N: int) -> IntMatrix:
    """An integral SL(2,Z) matrix congruent to [[a,b],[c,d]] mod N."""
    if (a * d - b * c - 1) % N:
        raise ValueError("matrix is not in SL(2, Z/N)")
    if N == 1:
        return IntMatrix.identity(2)
    c0 = c % N or N
    d0 = d % N
    while math.gcd(c0, d0) != 1:
        d0 += N
    _, u, v = xgcd(c0, d0)  # u c0 + v d0 == 1
    # particular solution a1 d0 - b1 c0 == 1, then shift along (c0, d0)
    a1, b1 = v, -u
    lam = (a - a1) * u + (b - b1) * v
    a1, b1 = a1 + lam * c0, b1 + lam * d0
    out = mat2(a1, b1, c0, d0)
    assert out.det() == 1 and out.mod(N) == mat2(a, b, c, d).mod(N)
    return out
