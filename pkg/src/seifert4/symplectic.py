"""The standard symplectic form and two generating sets of Sp(2g, Z).

Coordinates are ordered (x1, y1, ..., xg, yg). Matrices act on column
vectors, so a coordinate map (x1, y1, ...) -> (f1, f2, ...) becomes the
matrix whose k-th row holds the coefficients of f_k.
"""
from __future__ import annotations

from .exactmat import IntMatrix


def standard_J(g: int) -> IntMatrix:
    if g < 1:
        raise ValueError("genus must be at least 1")
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for k in range(g):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return IntMatrix.from_rows(rows)


def is_symplectic(M: IntMatrix, g: int, m: int = 0) -> bool:
    """True iff M^T J M == J, modulo m (exactly when m == 0)."""
    if M.rows != 2 * g or M.cols != 2 * g:
        raise ValueError(f"expected a {2 * g}x{2 * g} matrix, got {M.rows}x{M.cols}")
    J = standard_J(g)
    return (M.T @ J @ M).mod(m) == J.mod(m)


def _sigma(i: int) -> int:
    # swaps 2k-1 <-> 2k, 1-based
    return i + 1 if i % 2 else i - 1


def fundamental_se(i: int, j: int, g: int) -> IntMatrix:
    """Fundamental symplectic matrix SE_ij, indices 1-based."""
    n = 2 * g
    if i == j:
        raise ValueError("SE_ij needs i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("index out of range")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] += 1
    if i != _sigma(j):
        rows[_sigma(j) - 1][_sigma(i) - 1] -= (-1) ** (i + j)
    return IntMatrix.from_rows(rows)


def all_fundamental_se(g: int) -> list[IntMatrix]:
    n = 2 * g
    return [fundamental_se(i, j, g) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def _embed_block(B: IntMatrix, k: int, g: int) -> IntMatrix:
    """Place a 2x2 matrix on block k (0-based), identity elsewhere."""
    n = 2 * g
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    for a in range(2):
        for b in range(2):
            rows[2 * k + a][2 * k + b] = B[a, b]
    return IntMatrix.from_rows(rows)


def transvection(g: int, k: int = 0) -> IntMatrix:
    """(xk, yk) -> (xk + yk, yk)."""
    return _embed_block(IntMatrix.from_rows([[1, 1], [0, 1]]), k, g)


def rotation(g: int, k: int = 0) -> IntMatrix:
    """(xk, yk) -> (yk, -xk)."""
    return _embed_block(IntMatrix.from_rows([[0, 1], [-1, 0]]), k, g)


def mixing(g: int, k: int = 0) -> IntMatrix:
    """(xk, yk, xk+1, yk+1) -> (xk - yk+1, yk, xk+1 - yk, yk+1)."""
    n = 2 * g
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[2 * k][2 * k + 3] = -1
    rows[2 * k + 2][2 * k + 1] = -1
    return IntMatrix.from_rows(rows)


def block_swap(g: int, k: int) -> IntMatrix:
    """Exchange the coordinate pairs of blocks k and k+1."""
    n = 2 * g
    perm = list(range(n))
    perm[2 * k], perm[2 * k + 2] = perm[2 * k + 2], perm[2 * k]
    perm[2 * k + 1], perm[2 * k + 3] = perm[2 * k + 3], perm[2 * k + 1]
    return IntMatrix.from_rows([[int(perm[a] == b) for b in range(n)] for a in range(n)])


def burkhardt_generators(g: int) -> list[IntMatrix]:
    """Burkhardt's four transformation types, extended by adjacent block swaps.

    For g == 1 only the first two types make sense and two matrices are
    returned. For g >= 2 the list is: transvection and rotation on the first
    block, the mixing map on blocks 1, 2, and every adjacent block swap.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    gens = [transvection(g), rotation(g)]
    if g >= 2:
        gens.append(mixing(g))
        gens.extend(block_swap(g, k) for k in range(g - 1))
    return gens


def closure_mod(generators: list[IntMatrix], m: int, limit: int = 10**6) -> set[IntMatrix]:
    """All products of the generators reduced mod m (a finite group)."""
    n = generators[0].rows
    ident = IntMatrix.identity(n).mod(m)
    gens = [G.mod(m) for G in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for X in frontier:
            for G in gens:
                Y = G.matmul_mod(X, m)
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
                    if len(seen) > limit:
                        raise OverflowError("closure exceeds limit")
        frontier = nxt
    return seen
