"""Seifert invariants of 4-manifolds fibred over orientable 2-orbifolds.

A fibration is recorded as genus g, cone points (m_i, a_i, b_i), an
obstruction (a, b) and 2g monodromy matrices in SL(2,Z). The fundamental
group is

    < x_i, u_j, v_j, l, h |  u_j (l,h) u_j^-1 = (l,h) A_j,  v_j (l,h) v_j^-1 = (l,h) B_j,
                             x_i^m_i l^a_i h^b_i = 1,  x_1...x_r [u_1,v_1]...[u_g,v_g] = l^a h^b,
                             [x_i,l] = [x_i,h] = [l,h] = 1 >

and the Euler number (trivial monodromy only) is (a + sum a_i/m_i, b + sum b_i/m_i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import NontrivialMonodromy, ResourceGuardExceeded, SeifertError, WitnessMismatch
from .exactmat import IntMatrix, inverse_sl2, lcm, lift_sl2, xgcd
from .monodromy import MonodromyKind, canonical_tuple, classify_monodromy, reduce_to_canonical

Cone = tuple[int, int, int]
FRAMING_GUARD = 30
IDENTITY2 = IntMatrix.identity(2)


@dataclass(frozen=True)
class SeifertData:
    genus: int
    cone_points: tuple[Cone, ...] = ()
    obstruction: tuple[int, int] = (0, 0)
    monodromy: tuple[IntMatrix, ...] = ()

    @classmethod
    def make(cls, genus, cone_points=(), obstruction=(0, 0), monodromy=None) -> "SeifertData":
        """Build from plain lists; missing monodromy means trivial."""
        if monodromy is None:
            mono = (IDENTITY2,) * (2 * max(genus, 0))
        else:
            mono = tuple(A if isinstance(A, IntMatrix) else IntMatrix.from_rows(A) for A in monodromy)
        return cls(
            int(genus),
            tuple(tuple(int(x) for x in c) for c in cone_points),
            tuple(int(x) for x in obstruction),
            mono,
        )

    @property
    def cone_orders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cone_points)

    @property
    def has_trivial_monodromy(self) -> bool:
        return all(A == IDENTITY2 for A in self.monodromy)


class Geometry(str, Enum):
    H2xE2 = "H2xE2"
    SL2xE = "SL2xE"
    NON_GEOMETRIC = "NonGeometric"
    NOT_HYPERBOLIC_BASE = "NotHyperbolicBase"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]
    # set when built from Seifert data; lets hom counting use the structure
    seifert: Optional[SeifertData] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.generators)
        for w in self.relators:
            for gen, e in w:
                if not 0 <= gen < n or e == 0:
                    raise ValueError(f"bad letter ({gen}, {e}) in relator")

    def format_relator(self, word) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[g] + (f"^{e}" if e != 1 else "") for g, e in word)


def _commutator(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return A @ B @ inverse_sl2(A) @ inverse_sl2(B)


def validate(data: SeifertData) -> list[str]:
    """Diagnostics for every violated invariant; an empty list means valid."""
    problems = []
    if data.genus < 0:
        problems.append(f"genus {data.genus} is negative")
    for i, cone in enumerate(data.cone_points, 1):
        if len(cone) != 3:
            problems.append(f"cone point {i} must be a triple (m,a,b)")
            continue
        m, a, b = cone
        if m < 2:
            problems.append(f"cone point {i} {cone}: order m={m} must be >= 2")
        elif math.gcd(m, a, b) != 1:
            problems.append(f"cone point {i} {cone}: gcd(m,a,b)={math.gcd(m, a, b)}")
    if len(data.obstruction) != 2:
        problems.append("obstruction must be a pair (a,b)")
    if len(data.monodromy) != 2 * max(data.genus, 0):
        problems.append(f"monodromy has {len(data.monodromy)} matrices, expected 2g={2 * data.genus}")
        return problems
    unimodular = True
    for j, A in enumerate(data.monodromy, 1):
        if A.rows != 2 or A.cols != 2 or A.det() != 1:
            problems.append(f"monodromy matrix {j} {A.tolist()} is not in SL(2,Z)")
            unimodular = False
    if unimodular:
        prod = IDENTITY2
        for j in range(data.genus):
            prod = prod @ _commutator(data.monodromy[2 * j], data.monodromy[2 * j + 1])
        if prod != IDENTITY2:
            problems.append(f"commutator relation fails: prod [A_j,B_j] = {prod.tolist()}")
    return problems


def require_valid(data: SeifertData) -> None:
    problems = validate(data)
    if problems:
        raise SeifertError(problems[0])


def orbifold_euler_char(data: SeifertData) -> Fraction:
    return 2 - 2 * data.genus - sum((1 - Fraction(1, m) for m in data.cone_orders), Fraction(0))


def is_hyperbolic_base(data: SeifertData) -> bool:
    return orbifold_euler_char(data) < 0


def presentation(data: SeifertData) -> GroupPresentation:
    """Generators x_1..x_r, u_1, v_1, ..., u_g, v_g, l, h and the relators above.

    Conjugation relators use the row-vector convention: with
    A = [[al, be], [ga, de]], u l u^-1 = l^al h^ga and u h u^-1 = l^be h^de.
    """
    r, g = len(data.cone_points), data.genus
    names = [f"x{i + 1}" for i in range(r)]
    for j in range(g):
        names += [f"u{j + 1}", f"v{j + 1}"]
    names += ["l", "h"]
    L, H = len(names) - 2, len(names) - 1

    def word(*letters):
        return tuple((gen, e) for gen, e in letters if e)

    rels = []
    for i, (m, a, b) in enumerate(data.cone_points):
        rels.append(word((i, m), (L, a), (H, b)))
    long = [(i, 1) for i in range(r)]
    for j in range(g):
        u, v = r + 2 * j, r + 2 * j + 1
        long += [(u, 1), (v, 1), (u, -1), (v, -1)]
    a, b = data.obstruction
    rels.append(word(*long, (L, -a), (H, -b)))
    for i in range(r):
        rels.append(word((i, 1), (L, 1), (i, -1), (L, -1)))
        rels.append(word((i, 1), (H, 1), (i, -1), (H, -1)))
    rels.append(word((L, 1), (H, 1), (L, -1), (H, -1)))
    for k, A in enumerate(data.monodromy):
        s = r + k
        (al, be), (ga, de) = A.data
        # s l s^-1 = l^al h^ga  ->  s l s^-1 h^-ga l^-al
        rels.append(word((s, 1), (L, 1), (s, -1), (H, -ga), (L, -al)))
        rels.append(word((s, 1), (H, 1), (s, -1), (H, -de), (L, -be)))
    return GroupPresentation(tuple(names), tuple(rels), seifert=data)


def euler_number(data: SeifertData) -> tuple[Fraction, Fraction]:
    if not data.has_trivial_monodromy:
        raise NontrivialMonodromy("Euler number is only defined for trivial monodromy")
    a, b = data.obstruction
    ea = a + sum((Fraction(ai, m) for m, ai, _ in data.cone_points), Fraction(0))
    eb = b + sum((Fraction(bi, m) for m, _, bi in data.cone_points), Fraction(0))
    return ea, eb


def _column(P: IntMatrix, a: int, b: int) -> tuple[int, int]:
    return P[0, 0] * a + P[0, 1] * b, P[1, 0] * a + P[1, 1] * b


def reframe(data: SeifertData, P: IntMatrix) -> SeifertData:
    """Change fibre framing: every invariant pair becomes P @ column, A_j -> P A_j P^-1."""
    if P.rows != 2 or P.cols != 2 or P.det() != 1:
        raise SeifertError("framing change must lie in SL(2,Z)")
    Pinv = inverse_sl2(P)
    return SeifertData(
        data.genus,
        tuple((m,) + _column(P, a, b) for m, a, b in data.cone_points),
        _column(P, *data.obstruction),
        tuple(P @ A @ Pinv for A in data.monodromy),
    )


def scale(data: SeifertData, k: int) -> SeifertData:
    """(m_i, a_i, b_i) -> (m_i, k a_i, k b_i) and (a, b) -> (k a, k b)."""
    if not data.has_trivial_monodromy:
        raise NontrivialMonodromy("scaling is only defined for trivial monodromy")
    for m in data.cone_orders:
        if math.gcd(k, m) != 1:
            raise SeifertError(f"k={k} is not a unit modulo cone order {m}")
    a, b = data.obstruction
    return replace(
        data,
        cone_points=tuple((m, k * x, k * y) for m, x, y in data.cone_points),
        obstruction=(k * a, k * b),
    )


def coboundary_move(data: SeifertData, shifts: Sequence[tuple[int, int]]) -> SeifertData:
    """Replace x_i by x_i l^-alpha_i h^-beta_i for each cone point.

    (a_i, b_i) -> (a_i + alpha_i m_i, b_i + beta_i m_i), (a, b) -> (a - sum alpha, b - sum beta).
    """
    if len(shifts) != len(data.cone_points):
        raise ValueError("one shift per cone point")
    cones = tuple((m, a + al * m, b + be * m) for (m, a, b), (al, be) in zip(data.cone_points, shifts))
    a, b = data.obstruction
    return replace(
        data,
        cone_points=cones,
        obstruction=(a - sum(s[0] for s in shifts), b - sum(s[1] for s in shifts)),
    )


def permute_cones(data: SeifertData, order: Sequence[int]) -> SeifertData:
    """New cone list is [old[order[0]], old[order[1]], ...]."""
    if sorted(order) != list(range(len(data.cone_points))):
        raise ValueError("order must be a permutation of the cone indices")
    return replace(data, cone_points=tuple(data.cone_points[i] for i in order))


@dataclass(frozen=True)
class Moves:
    """Framing, coboundary shifts, cone reordering and base-generator change.

    Applied in that order by `apply_moves`. `symplectic` (mod `mono_order`)
    acts on the monodromy exponent vector when the monodromy is finite cyclic.
    """

    framing: IntMatrix = IDENTITY2
    shifts: tuple[tuple[int, int], ...] = ()
    order: tuple[int, ...] = ()
    symplectic: Optional[IntMatrix] = None
    mono_order: int = 0

    def to_json(self) -> dict:
        return {
            "framing": self.framing.tolist(),
            "shifts": [list(s) for s in self.shifts],
            "order": list(self.order),
            "symplectic": self.symplectic.tolist() if self.symplectic is not None else None,
            "mono_order": self.mono_order,
        }


def apply_moves(data: SeifertData, moves: Moves) -> SeifertData:
    out = reframe(data, moves.framing)
    out = coboundary_move(out, moves.shifts or [(0, 0)] * len(out.cone_points))
    out = permute_cones(out, moves.order or range(len(out.cone_points)))
    if moves.symplectic is not None:
        mc = classify_monodromy(out.monodromy)
        if mc.kind != MonodromyKind.FINITE_CYCLIC or mc.order != moves.mono_order:
            raise WitnessMismatch("monodromy does not match the recorded change of generators")
        image = [x % mc.order for x in moves.symplectic.apply(mc.exponents)]
        if any(image[1:]):
            raise WitnessMismatch(f"recorded symplectic change sends exponents to {image}")
        out = replace(out, monodromy=canonical_tuple(mc, image[0], out.genus))
    return out


def _reduce_cones(data: SeifertData) -> tuple[SeifertData, tuple, tuple]:
    """Coboundary-reduce every (a_i, b_i) into [0, m_i) and sort the cones."""
    shifts = tuple((-(a // m), -(b // m)) for m, a, b in data.cone_points)
    reduced = coboundary_move(data, shifts)
    order = tuple(sorted(range(len(reduced.cone_points)), key=lambda i: reduced.cone_points[i]))
    return permute_cones(reduced, order), shifts, order


def framing_to_axis(e: tuple[Fraction, Fraction]) -> IntMatrix:
    """P in SL(2,Z) with P @ e^T == (0, c)^T, c > 0, for nonzero rational e."""
    D = lcm(e[0].denominator, e[1].denominator)
    p, q = int(e[0] * D), int(e[1] * D)
    g = math.gcd(p, q)
    if g == 0:
        raise ValueError("e must be nonzero")
    p, q = p // g, q // g
    _, s, t = xgcd(p, q)
    return IntMatrix.from_rows([[q, -p], [s, t]])


@lru_cache(maxsize=None)
def sl2_mod(L: int) -> tuple[tuple[int, int, int, int], ...]:
    """All of SL(2, Z/L) as (a, b, c, d) tuples, in lexicographic order."""
    out = []
    for a in range(L):
        for b in range(L):
            for c in range(L):
                for d in range(L):
                    if (a * d - b * c) % L == 1 % L:
                        out.append((a, b, c, d))
    return tuple(out)


def canonical_form(data: SeifertData) -> tuple[SeifertData, Moves]:
    """Canonical representative and the moves that reach it from `data`."""
    require_valid(data)
    if not data.has_trivial_monodromy:
        mc = classify_monodromy(data.monodromy)
        reduced, shifts, order = _reduce_cones(data)
        if mc.kind == MonodromyKind.FINITE_CYCLIC:
            c, P, _ = reduce_to_canonical(mc.exponents, mc.order, data.genus)
            moves = Moves(IDENTITY2, shifts, order, P, mc.order)
            return replace(reduced, monodromy=canonical_tuple(mc, c, data.genus)), moves
        return reduced, Moves(IDENTITY2, shifts, order)

    e = euler_number(data)
    cones = data.cone_points
    L = lcm(*data.cone_orders)
    if e != (0, 0):
        P0 = framing_to_axis(e)
        best = None
        for t in range(L):
            P = IntMatrix.from_rows([[1, 0], [t, 1]]) @ P0
            key = _framed_key(cones, P[0, 0], P[0, 1], P[1, 0], P[1, 1])
            if best is None or key < best[0]:
                best = (key, P)
        P = best[1]
    else:
        if L > FRAMING_GUARD:
            raise ResourceGuardExceeded(f"lcm of cone orders {L} exceeds framing guard {FRAMING_GUARD}")
        best = None
        for a, b, c, d in sl2_mod(L):
            key = _framed_key(cones, a, b, c, d)
            if best is None or key < best[0]:
                best = (key, (a, b, c, d))
        P = lift_sl2(*best[1], L)
    framed = reframe(data, P)
    out, shifts, order = _reduce_cones(framed)
    return out, Moves(P, shifts, order)


def _framed_key(cones, a, b, c, d):
    return tuple(sorted((m, (a * x + b * y) % m, (c * x + d * y) % m) for m, x, y in cones))


def normalize(data: SeifertData) -> SeifertData:
    """Canonical form under framing changes, coboundary moves and cone reordering.

    Trivial monodromy: cones are reduced into [0, m_i) and sorted; a nonzero
    Euler number is framed to (0, c) with c > 0 and the leftover unipotent
    freedom picks the lexicographically least cone list; when e = (0, 0) the
    least image over SL(2, Z/lcm m_i) is taken. Nontrivial monodromy: only the
    monodromy tuple is canonicalized and the cones reduced.
    """
    return canonical_form(data)[0]


def classify_geometry(data: SeifertData) -> Geometry:
    require_valid(data)
    if orbifold_euler_char(data) >= 0:
        return Geometry.NOT_HYPERBOLIC_BASE
    if data.has_trivial_monodromy:
        return Geometry.H2xE2 if euler_number(data) == (0, 0) else Geometry.SL2xE
    if classify_monodromy(data.monodromy).kind == MonodromyKind.FINITE_CYCLIC:
        return Geometry.H2xE2
    return Geometry.NON_GEOMETRIC
