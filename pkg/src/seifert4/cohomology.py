"""Second cohomology of the base orbifold group with trivial coefficients.

The orbifold group Q = < x_i, u_j, v_j | x_i^m_i, x_1...x_r prod [u_j, v_j] >
has a free resolution whose relation module is spanned by y_0 (the long
relator) and y_i = x_i^m_i. After trivializing the action, the dual
differential sends the cochain x_i* to y_0* + m_i y_i* and kills u_j*, v_j*.
A 2-cochain is stored by its raw coefficients on y_0*, y_1*, ..., y_r*; the
class of a Seifert manifold is y_0 -> (a, b), y_i -> (-a_i, -b_i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NontrivialMonodromy
from .exactmat import IntMatrix, cokernel_invariants, image_membership
from .seifert import SeifertData

Pair = tuple[int, int]


@dataclass(frozen=True)
class OrbSignature:
    genus: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if any(m < 2 for m in self.orders):
            raise ValueError("cone orders must be >= 2")

    @classmethod
    def of(cls, data: SeifertData) -> "OrbSignature":
        return cls(data.genus, data.cone_orders)

    @property
    def order_product(self) -> int:
        return math.prod(self.orders)


@dataclass(frozen=True)
class CohomClass:
    signature: OrbSignature
    modulus: int
    raw: tuple[Pair, ...]

    def __post_init__(self):
        if len(self.raw) != len(self.signature.orders) + 1:
            raise ValueError("raw needs one coefficient pair per relator y_0..y_r")
        if self.modulus:
            object.__setattr__(self, "raw", tuple((p % self.modulus, q % self.modulus) for p, q in self.raw))

    def reduce(self, t: int) -> "CohomClass":
        if self.modulus and self.modulus % t:
            raise ValueError(f"cannot reduce a class mod {self.modulus} to mod {t}")
        return CohomClass(self.signature, t, self.raw)


def boundary_matrix_d2(sig: OrbSignature) -> IntMatrix:
    """Row i is the image of x_i*: e_0 + m_i e_i."""
    r = len(sig.orders)
    rows = []
    for i, m in enumerate(sig.orders, 1):
        row = [0] * (r + 1)
        row[0], row[i] = 1, m
        rows.append(row)
    return IntMatrix.from_rows(rows, r + 1)


def h2_structure(sig: OrbSignature, t: int = 0) -> tuple[int, ...]:
    """Invariant factors of H^2(Q; Z/t) (one coefficient copy; 0 = free)."""
    return cokernel_invariants(boundary_matrix_d2(sig), len(sig.orders) + 1, t)


def cocycle_of(data: SeifertData) -> CohomClass:
    if not data.has_trivial_monodromy:
        raise NontrivialMonodromy("twisted coefficients are not supported")
    raw = (tuple(data.obstruction),) + tuple((-a, -b) for _, a, b in data.cone_points)
    return CohomClass(OrbSignature.of(data), 0, raw)


def class_equal(c1: CohomClass, c2: CohomClass, t: int) -> bool:
    """Whether c1 - c2 is a coboundary mod t (each fibre coordinate separately)."""
    if c1.signature != c2.signature:
        raise ValueError("classes live over different orbifolds")
    if t <= 0:
        raise ValueError("class comparison needs a positive modulus")
    d2 = boundary_matrix_d2(c1.signature)
    a, b = c1.reduce(t), c2.reduce(t)
    for coord in range(2):
        diff = [(x[coord] - y[coord]) % t for x, y in zip(a.raw, b.raw)]
        if image_membership(d2, diff, t) is None:
            return False
    return True


def euler_pairing(c: CohomClass) -> Pair:
    """E(raw) = raw_0 prod m - sum raw_i prod_{j != i} m_j.

    Vanishes on coboundaries and equals prod m_i times the Euler number on
    the class of a Seifert manifold.
    """
    orders = c.signature.orders
    total = c.signature.order_product
    out = [c.raw[0][k] * total for k in range(2)]
    for i, m in enumerate(orders, 1):
        for k in range(2):
            out[k] -= c.raw[i][k] * (total // m)
    if c.modulus:
        out = [x % c.modulus for x in out]
    return out[0], out[1]


def kappa_act(c: CohomClass, kappa: int) -> CohomClass:
    return CohomClass(c.signature, c.modulus, tuple((kappa * p, kappa * q) for p, q in c.raw))


def transform_class(c: CohomClass, P: IntMatrix) -> CohomClass:
    """Apply a framing change column-wise to every coefficient pair."""
    raw = tuple((P[0, 0] * p + P[0, 1] * q, P[1, 0] * p + P[1, 1] * q) for p, q in c.raw)
    return CohomClass(c.signature, c.modulus, raw)
