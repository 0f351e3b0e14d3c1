"""Localization model of the permutohedral variety and of a product of two projective spaces.

A class on the permutohedral variety is a tuple of polynomials indexed by the
permutations of the ground set (its torus-fixed points).  Pushing forward to
the product of projective spaces is a weighted sum over the fiber, kept as an
unreduced fraction and compared by cross-multiplication.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator, Sequence

from .invariants import f_at_point, f_polynomial, p_polynomial
from .matroid import ElementClass, Matroid, lex_first_mask
from .poly import (
    ONE,
    W,
    Z,
    ZERO,
    MultiPoly,
    NotDivisible,
    PolyFraction,
    divide_by_linear,
    elementary_symmetric,
    fraction_eq,
    tname,
)

MAX_GKM_GROUND = 6

Permutation = tuple[str, ...]


class GkmError(ValueError):
    pass


class BadIndex(GkmError):
    pass


class LemmaViolation(GkmError):
    pass


def T(label: str) -> MultiPoly:
    return MultiPoly.t(label)


class GkmClass:
    """Dense map from every permutation of ``ground`` to a polynomial."""

    __slots__ = ("ground", "values")

    def __init__(self, ground: Sequence[str], values: dict[Permutation, MultiPoly]):
        self.ground = tuple(ground)
        if len(self.ground) > MAX_GKM_GROUND:
            raise GkmError(f"permutation tuples are limited to {MAX_GKM_GROUND} elements")
        self.values = values

    @classmethod
    def build(cls, ground: Sequence[str], entry: Callable[[Permutation], MultiPoly]) -> "GkmClass":
        ground = tuple(ground)
        if len(ground) > MAX_GKM_GROUND:
            raise GkmError(f"permutation tuples are limited to {MAX_GKM_GROUND} elements")
        return cls(ground, {sigma: entry(sigma) for sigma in permutations(ground)})

    @classmethod
    def constant(cls, ground: Sequence[str], value=1) -> "GkmClass":
        value = MultiPoly.const(value) if not isinstance(value, MultiPoly) else value
        return cls.build(ground, lambda sigma: value)

    def __getitem__(self, sigma: Sequence[str]) -> MultiPoly:
        return self.values[tuple(sigma)]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.values)

    def __mul__(self, other: "GkmClass") -> "GkmClass":
        return GkmClass(self.ground, {s: v * other.values[s] for s, v in self.values.items()})

    def __add__(self, other: "GkmClass") -> "GkmClass":
        return GkmClass(self.ground, {s: v + other.values[s] for s, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, GkmClass):
            return NotImplemented
        return self.ground == other.ground and self.values == other.values

    __hash__ = None


# tautological classes


def _basis_split(M: Matroid, sigma: Permutation) -> tuple[list[str], list[str]]:
    basis = lex_first_mask(M, sigma)
    inside = [e for i, e in enumerate(M.ground) if basis >> i & 1]
    outside = [e for i, e in enumerate(M.ground) if not basis >> i & 1]
    return inside, outside


def chern_sub(M: Matroid, i: int) -> GkmClass:
    if not 0 <= i <= M.rank:
        raise BadIndex(f"sub class index {i} outside 0..{M.rank}")
    return GkmClass.build(M.ground, lambda s: elementary_symmetric([-T(e) for e in _basis_split(M, s)[0]], i))


def chern_quot(M: Matroid, i: int) -> GkmClass:
    if not 0 <= i <= M.corank:
        raise BadIndex(f"quotient class index {i} outside 0..{M.corank}")
    return GkmClass.build(M.ground, lambda s: elementary_symmetric([-T(e) for e in _basis_split(M, s)[1]], i))


def chern_sub_dual(M: Matroid, i: int) -> GkmClass:
    if not 0 <= i <= M.rank:
        raise BadIndex(f"dual sub class index {i} outside 0..{M.rank}")
    return GkmClass.build(M.ground, lambda s: elementary_symmetric([T(e) for e in _basis_split(M, s)[0]], i))


def graded_sub_dual_entry(M: Matroid, sigma: Permutation) -> MultiPoly:
    out = ONE
    for e in _basis_split(M, sigma)[0]:
        out = out * (1 + T(e) * Z)
    return out


def graded_quot_entry(M: Matroid, sigma: Permutation) -> MultiPoly:
    out = ONE
    for e in _basis_split(M, sigma)[1]:
        out = out * (1 - T(e) * W)
    return out


def xi_entry(M: Matroid, sigma: Permutation) -> MultiPoly:
    return graded_sub_dual_entry(M, sigma) * graded_quot_entry(M, sigma)


def xi_class(M: Matroid) -> GkmClass:
    """Product of the graded dual-sub and quotient classes."""
    return GkmClass.build(M.ground, lambda s: xi_entry(M, s))


# GKM condition


@dataclass(frozen=True)
class GkmWitness:
    sigma: Permutation
    position: int
    remainder: MultiPoly


def gkm_violation(c: GkmClass) -> GkmWitness | None:
    """First edge whose difference is not divisible by its weight, or None."""
    for sigma, value in c.values.items():
        for i in range(len(sigma) - 1):
            u, v = sigma[i], sigma[i + 1]
            if u > v:
                continue  # each edge once
            tau = sigma[:i] + (v, u) + sigma[i + 2:]
            diff = value - c.values[tau]
            try:
                divide_by_linear(diff, tname(u), T(v))
            except NotDivisible as exc:
                return GkmWitness(sigma, i, exc.remainder)
    return None


def gkm_check(c: GkmClass) -> bool:
    return gkm_violation(c) is None


# tangent weights and pushforward


def _weight_factors_perm(sigma: Permutation) -> Counter:
    return Counter((sigma[i - 1], sigma[i]) for i in range(1, len(sigma)))


def _factor_poly(factors: Counter) -> MultiPoly:
    out = ONE
    for (u, v), k in factors.items():
        out = out * (T(u) - T(v)) ** k
    return out


def tangent_weight_perm(sigma: Sequence[str]) -> MultiPoly:
    """``prod_{i>=1} (t_{sigma(i-1)} - t_{sigma(i)})``; 1 for a single element."""
    return _factor_poly(_weight_factors_perm(tuple(sigma)))


def tangent_weight_product_point(a: str, b: str, ground: Sequence[str]) -> MultiPoly:
    out = ONE
    for e in ground:
        if e != a:
            out = out * (T(e) - T(a))
        if e != b:
            out = out * (T(b) - T(e))
    return out


def _canonical(factors: Counter) -> tuple[Counter, int]:
    """Orient every linear factor ``t_u - t_v`` with ``u < v``; return the sign change."""
    out: Counter = Counter()
    sign = 1
    for (u, v), k in factors.items():
        if u > v:
            u, v = v, u
            sign *= (-1) ** k
        out[u, v] += k
    return out, sign


def pushforward_localized(c: GkmClass, point: tuple[str, str]) -> PolyFraction:
    """Weighted fiber sum over permutations starting at ``b`` and ending at ``a``.

    The common denominator is the least common multiple of the fiber weights,
    which is cheap because every weight is a product of linear forms.
    """
    a, b = point
    ground = c.ground
    if a not in ground or b not in ground:
        raise GkmError(f"point {point} is not a pair of ground labels")
    fiber = [s for s in c.values if s[0] == b and s[-1] == a]
    if not fiber:
        return PolyFraction(ZERO)
    weights = [_canonical(_weight_factors_perm(s)) for s in fiber]
    lcm: Counter = Counter()
    for factors, _ in weights:
        lcm |= factors
    num = ZERO
    for s, (factors, sign) in zip(fiber, weights):
        num = num + sign * c.values[s] * _factor_poly(lcm - factors)
    return PolyFraction(tangent_weight_product_point(a, b, ground) * num, _factor_poly(lcm))


# verification of the pushforward formula


@dataclass
class PointCheck:
    point: tuple[str, str]
    ok: bool
    lhs: PolyFraction
    rhs: MultiPoly

    @property
    def diagonal(self) -> bool:
        return self.point[0] == self.point[1]


def verify_pushforward_theorem(M: Matroid) -> list[PointCheck]:
    """Compare the localized pushforward of xi with F(-t_a, t_b, z, w) at every point.

    On the diagonal the fiber is empty for two or more elements, so the check
    there is that F vanishes; for a single element the fiber is the one
    permutation and both sides equal the xi entry.
    """
    if M.size == 0:
        raise GkmError("needs a non-empty ground set")
    F = f_polynomial(M)
    xi = xi_class(M)
    out = []
    for a in M.ground:
        for b in M.ground:
            lhs = pushforward_localized(xi, (a, b))
            rhs = f_at_point(F, a, b)
            out.append(PointCheck((a, b), fraction_eq(lhs, PolyFraction(rhs)), lhs, rhs))
    return out


def verify_top_class_pushforward(M: Matroid) -> bool:
    """Pushforward of the top quotient class against P(-t_a, t_b)."""
    P = p_polynomial(M)
    top = chern_quot(M, M.corank)
    for a in M.ground:
        for b in M.ground:
            if a == b and M.size > 1:
                continue
            lhs = pushforward_localized(top, (a, b))
            if not fraction_eq(lhs, PolyFraction(f_at_point(P, a, b))):
                return False
    return True


# insertion index and the recursion on the fiber sums


def insert_at(sigma: Sequence[str], e: str, position: int) -> Permutation:
    sigma = tuple(sigma)
    return sigma[:position] + (e,) + sigma[position:]


def compute_k_sigma(M: Matroid, sigma: Sequence[str], e: str) -> int:
    """Last insertion position of ``e`` at which the greedy basis still contains it."""
    sigma = tuple(sigma)
    if sorted(sigma + (e,)) != sorted(M.ground):
        raise GkmError("sigma must permute the ground set without e")
    n = len(sigma)
    with_e = set(_basis_split(M.contract(e), sigma)[0]) | {e}
    without_e = set(_basis_split(M.delete(e), sigma)[0])
    cls = M.element_class(e)
    if cls is ElementClass.LOOP:
        with_e = None  # every insertion must give the deletion basis
    k = -1
    for ell in range(n + 1):
        basis = set(_basis_split(M, insert_at(sigma, e, ell))[0])
        if with_e is not None and basis == with_e and k == ell - 1:
            k = ell
        elif basis != without_e:
            raise LemmaViolation(f"insertion at {ell} gives neither expected basis")
    if (k == -1) != (cls is ElementClass.LOOP) or (k == n) != (cls is ElementClass.COLOOP):
        raise LemmaViolation(f"index {k} does not match the element class {cls.value}")
    if 0 <= k < n and with_e - {e} | {sigma[k]} != without_e:
        raise LemmaViolation("deletion basis is not the contraction basis plus sigma(k)")
    return k


def insertion_identities(M: Matroid, e: str) -> bool:
    """xi at every insertion equals the matching minor entry times the e-factor.

    For a general element also checks the two graded-class relations at
    position k.
    """
    rest = tuple(x for x in M.ground if x != e)
    deleted, contracted = M.delete(e), M.contract(e)
    general = M.element_class(e) is ElementClass.GENERAL
    for sigma in permutations(rest):
        k = compute_k_sigma(M, sigma, e)
        for ell in range(len(sigma) + 1):
            entry = xi_entry(M, insert_at(sigma, e, ell))
            if ell <= k:
                expected = (1 + T(e) * Z) * xi_entry(contracted, sigma)
            else:
                expected = (1 - T(e) * W) * xi_entry(deleted, sigma)
            if entry != expected:
                return False
        if general:
            pivot = T(sigma[k])
            if (1 + pivot * Z) * graded_sub_dual_entry(contracted, sigma) != graded_sub_dual_entry(deleted, sigma):
                return False
            if (1 - pivot * W) * graded_quot_entry(deleted, sigma) != graded_quot_entry(contracted, sigma):
                return False
    return True


def pushforward_recursion_holds(M: Matroid, e: str, point: tuple[str, str]) -> bool:
    """Deletion-contraction of the fiber sum at an off-diagonal point avoiding ``e``."""
    a, b = point
    if a == b or e in point:
        raise GkmError("needs an off-diagonal point not involving e")
    lhs = pushforward_localized(xi_class(M), point)
    cls = M.element_class(e)
    ta, tb, te = T(a), T(b), T(e)
    if cls is ElementClass.LOOP:
        rhs = (1 - te * W) * (tb - ta) * pushforward_localized(xi_class(M.delete(e)), point)
    elif cls is ElementClass.COLOOP:
        rhs = (1 + te * Z) * (tb - ta) * pushforward_localized(xi_class(M.contract(e)), point)
    else:
        rhs = ((1 - ta * W) * (tb - te) * pushforward_localized(xi_class(M.delete(e)), point)
               + (1 + tb * Z) * (te - ta) * pushforward_localized(xi_class(M.contract(e)), point))
    return fraction_eq(lhs, rhs)
