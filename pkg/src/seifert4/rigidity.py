"""Deciding profinite isomorphism of two Seifert 4-manifolds.

Over a hyperbolic base the orbifold and the central Z^2 are recovered from
the profinite completion, so the question reduces to the extension class.
With trivial monodromy:

* e != 0: the completion determines e up to framing, hence the manifold.
* e == 0: completions agree iff one invariant list is a unit multiple
  k * (a_i, b_i) of the other, with k taken modulo prod m_i.

Nontrivial monodromy is not settled; such pairs come back Undecided unless
their canonical forms coincide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .cohomology import class_equal, cocycle_of, kappa_act
from .errors import SeifertError, WitnessMismatch
from .exactmat import lcm
from .seifert import (
    Moves,
    SeifertData,
    _reduce_cones,
    apply_moves,
    canonical_form,
    euler_number,
    is_hyperbolic_base,
    normalize,
    require_valid,
    scale,
)


class Tag(str, Enum):
    ISOMORPHIC = "Isomorphic"
    DISTINCT = "Distinct"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Witness:
    """scale by k, then `moves`, takes the first manifold to `target`."""

    k: int
    moves: Moves
    target: SeifertData


@dataclass(frozen=True)
class Verdict:
    tag: Tag
    k: Optional[int] = None
    witness: Optional[Witness] = None
    reason: str = ""
    units: tuple[int, ...] = ()


def _isomorphic(M: SeifertData, k: int, target: SeifertData, units=()) -> Verdict:
    start = scale(M, k) if k != 1 else M
    _, moves = canonical_form(start)
    v = Verdict(Tag.ISOMORPHIC, k, Witness(k, moves, target), units=tuple(units) or (k,))
    _check_witness(M, v)
    return v


def _check_witness(M: SeifertData, v: Verdict) -> None:
    replay_witness(M, v)
    if M.has_trivial_monodromy:
        # the cohomology classes must agree after transport, mod prod m_i
        t = math.prod(M.cone_orders) or 1
        moved = apply_moves(M, v.witness.moves)
        lhs = kappa_act(cocycle_of(moved), v.k)
        if not class_equal(lhs, cocycle_of(v.witness.target), t):
            raise AssertionError("witness does not transport the extension class")


def replay_witness(M: SeifertData, verdict: Verdict) -> SeifertData:
    """Apply the recorded scaling and moves to M; must land on the target."""
    if verdict.tag != Tag.ISOMORPHIC or verdict.witness is None:
        raise ValueError("only Isomorphic verdicts carry a witness")
    w = verdict.witness
    if w.k != verdict.k:
        raise WitnessMismatch("verdict and witness disagree on k")
    try:
        start = scale(M, w.k) if w.k != 1 else M
        out = apply_moves(start, w.moves)
    except (SeifertError, ValueError) as exc:
        raise WitnessMismatch(f"witness cannot be replayed: {exc}") from exc
    if out != w.target:
        raise WitnessMismatch("replayed witness does not reproduce the target canonical form")
    return out


def unit_residues(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1] if n > 1 else [1]


def compare(M: SeifertData, N: SeifertData) -> Verdict:
    for data in (M, N):
        require_valid(data)
        if not is_hyperbolic_base(data):
            raise SeifertError("base orbifold is not hyperbolic")

    if M.genus != N.genus or sorted(M.cone_orders) != sorted(N.cone_orders):
        return Verdict(Tag.DISTINCT, reason="base orbifold")

    target = normalize(N)
    if not (M.has_trivial_monodromy and N.has_trivial_monodromy):
        if normalize(M) == target:
            return _isomorphic(M, 1, target)
        return Verdict(Tag.UNDECIDED, reason="nontrivial monodromy: open case")

    if euler_number(M) != (0, 0) or euler_number(N) != (0, 0):
        if normalize(M) == target:
            return _isomorphic(M, 1, target)
        return Verdict(Tag.DISTINCT, reason="SL2~xE profinitely rigid")

    n = math.prod(M.cone_orders)
    L = lcm(*M.cone_orders)
    by_residue: dict[int, bool] = {}
    matches = []
    for k in unit_residues(n):
        if k % L not in by_residue:
            by_residue[k % L] = normalize(scale(M, k)) == target
        if by_residue[k % L]:
            matches.append(k)
    if not matches:
        return Verdict(Tag.DISTINCT, reason="no scaling unit matches")
    # prefer a unit that works without changing the framing
    direct_N = _reduce_cones(N)[0]
    direct = [k for k in matches if _reduce_cones(scale(M, k))[0] == direct_N]
    k = direct[0] if direct else matches[0]
    return _isomorphic(M, k, target, matches)
