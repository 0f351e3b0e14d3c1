"""Base polytopes, indicator-function identities and valuativity checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping, Sequence

from .invariants import equivariant_charpoly, equivariant_tutte, evaluate_tutte, multivariate_tutte
from .matroid import Matroid, UnknownLabel, matroid_from_bases, uniform
from .poly import ZERO, MultiPoly, PolyFraction, fraction_eq


class ValuationError(ValueError):
    pass


@dataclass(frozen=True)
class SignedCombination:
    ground: tuple[str, ...]
    rank: int
    terms: tuple[tuple[int, Matroid], ...]

    def __post_init__(self):
        for coeff, M in self.terms:
            if M.ground != self.ground:
                raise ValuationError("every term must use the combination's ground order")
            if M.rank != self.rank:
                raise ValuationError(f"term of rank {M.rank} in a rank-{self.rank} combination")

    @classmethod
    def of(cls, terms: Sequence[tuple[int, Matroid]]) -> "SignedCombination":
        if not terms:
            raise ValuationError("empty combination")
        first = terms[0][1]
        return cls(first.ground, first.rank, tuple((int(c), M) for c, M in terms))

    def without(self, index: int) -> "SignedCombination":
        return SignedCombination(self.ground, self.rank, self.terms[:index] + self.terms[index + 1:])

    def relabel(self, mapping: Mapping[str, str]) -> "SignedCombination":
        terms = tuple((c, M.relabel(dict(mapping))) for c, M in self.terms)
        ground = tuple(mapping.get(g, g) for g in self.ground)
        return SignedCombination(ground, self.rank, terms)


def in_base_polytope(M: Matroid, point: Mapping[str, Fraction | int]) -> bool:
    """Membership by the rank inequalities ``sum_{e in S} p_e <= rank(S)``."""
    for label in point:
        if label not in M.ground:
            raise UnknownLabel(f"{label!r} is not in the ground set")
    values = [Fraction(point.get(e, 0)) for e in M.ground]
    if any(v < 0 or v > 1 for v in values):
        return False
    if sum(values) != M.rank:
        return False
    for mask in range(1, 1 << M.size):
        total = sum(v for i, v in enumerate(values) if mask >> i & 1)
        if total > M.rank_mask(mask):
            return False
    return True


def grid_points(size: int, rank: int, denominator: int):
    """Points of ``{0, 1/D, ..., 1}^size`` with coordinate sum ``rank``."""
    target = rank * denominator

    def rec(prefix: list[int], remaining: int, left: int):
        if left == 0:
            if remaining == 0:
                yield tuple(Fraction(k, denominator) for k in prefix)
            return
        low = max(0, remaining - denominator * (left - 1))
        for k in range(low, min(denominator, remaining) + 1):
            yield from rec(prefix + [k], remaining - k, left - 1)

    yield from rec([], target, size)


def indicator_is_zero(c: SignedCombination, denominator: int = 4) -> bool:
    """Grid check that the signed sum of polytope indicators vanishes."""
    if denominator < 1:
        raise ValuationError("grid denominator must be at least 1")
    for coords in grid_points(len(c.ground), c.rank, denominator):
        point = dict(zip(c.ground, coords))
        total = sum(coeff for coeff, M in c.terms if in_base_polytope(M, point))
        if total != 0:
            return False
    return True


def _without_pairs(ground: Sequence[str], rank: int, pairs: Sequence[tuple[str, str]]) -> Matroid:
    bases = [B for B in combinations(ground, rank) if not any(set(p) <= set(B) for p in pairs)]
    return matroid_from_bases(ground, bases)


def delta24_split_fixture() -> SignedCombination:
    """Split of the hypersimplex Delta(2,4) along its two hyperplanes.

    ``U_{2,4} - M1 - M2 + M12`` where M1 has 1,2 parallel, M2 has 3,4
    parallel and M12 both.
    """
    ground = ("1", "2", "3", "4")
    U = uniform(2, ground)
    M1 = _without_pairs(ground, 2, [("1", "2")])
    M2 = _without_pairs(ground, 2, [("3", "4")])
    M12 = _without_pairs(ground, 2, [("1", "2"), ("3", "4")])
    return SignedCombination(ground, 2, ((1, U), (-1, M1), (-1, M2), (1, M12)))


INVARIANTS: dict[str, Callable[[Matroid], MultiPoly | PolyFraction]] = {
    "EquivariantTutte": equivariant_tutte,
    "Potts": multivariate_tutte,
    "EquivariantCharPoly": equivariant_charpoly,
}


def table_evaluation(point: Sequence) -> Callable[[Matroid], MultiPoly]:
    x0, y0, r0, s0 = point
    return lambda M: evaluate_tutte(M, x0, y0, r0, s0)


def resolve_invariant(name: str) -> Callable[[Matroid], MultiPoly | PolyFraction]:
    """Named invariant; ``Table:x,y,r,s`` selects a table evaluation."""
    if name in INVARIANTS:
        return INVARIANTS[name]
    if name.startswith("Table:"):
        parts = name[len("Table:"):].split(",")
        if len(parts) != 4:
            raise ValuationError(f"bad table point {name!r}")
        return table_evaluation([Fraction(p) for p in parts])
    raise ValuationError(f"unknown invariant {name!r}")


def check_valuative(c: SignedCombination, invariant: str | Callable[[Matroid], MultiPoly | PolyFraction]) -> bool:
    """Exact check that the signed sum of the invariant vanishes."""
    fn = resolve_invariant(invariant) if isinstance(invariant, str) else invariant
    total: MultiPoly | PolyFraction = ZERO
    for coeff, M in c.terms:
        total = total + coeff * fn(M)
    if isinstance(total, PolyFraction):
        return fraction_eq(total, PolyFraction(ZERO))
    return total.is_zero()
