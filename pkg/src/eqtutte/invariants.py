"""Polynomial invariants of labeled matroids.

Every invariant with a closed subset-sum form also has a deletion-contraction
implementation; the subset sums act as the oracle and the recursions as the
fast path, and the test suite compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .matroid import (
    ElementClass,
    Graph,
    Matroid,
    MatroidError,
    count_acyclic_orientations_free_set,
    count_strongly_connected_bidirected,
    enumerate_labeled_matroids,
    GroundTooLarge,
    matroid_from_bases,
)
from .poly import (
    ALPHA,
    BETA,
    ONE,
    Q,
    R,
    S,
    W,
    X,
    Y,
    Z,
    ZERO,
    MultiPoly,
    NotDivisible,
    Number,
    PolyError,
    PolyFraction,
    as_poly,
    coefficient_of_t_monomial,
    divide_by_linear,
    divide_exact_alpha_plus_beta,
    fraction_eq,
    substitute,
    tname,
    vname,
)


class InvariantError(ValueError):
    pass


class EmptyGround(InvariantError):
    pass


class NotDivisibleByQMinus1(InvariantError):
    pass


class ZeroParameter(InvariantError):
    pass


class InconsistentParameters(InvariantError):
    pass


class NotAMatroid(InvariantError):
    pass


class OracleRequiresGraph(InvariantError):
    pass


class InvariantMismatch(InvariantError):
    """Two independent computations of the same invariant disagree."""


def T(label: str) -> MultiPoly:
    return MultiPoly.t(label)


# subset sums


def _subset_products(M: Matroid, inside: Callable[[str], MultiPoly], outside: Callable[[str], MultiPoly]) -> list[MultiPoly]:
    """``prods[S] = prod_{e in S} inside(e) * prod_{e not in S} outside(e)`` for every mask S."""
    prods = [ONE]
    for i, e in enumerate(M.ground):
        fin, fout = inside(e), outside(e)
        # masks over the first i elements; element i becomes bit i
        prods = [p * fout for p in prods] + [p * fin for p in prods]
    return prods


def _grouped_by_rank(M: Matroid, prods: list[MultiPoly]) -> dict[tuple[int, int], MultiPoly]:
    """Sum the subset products sharing the same (rank S, nullity S)."""
    groups: dict[tuple[int, int], MultiPoly] = {}
    for mask, p in enumerate(prods):
        rk = M.rank_mask(mask)
        key = (rk, mask.bit_count() - rk)
        groups[key] = groups.get(key, ZERO) + p
    return groups


def equivariant_tutte(M: Matroid) -> MultiPoly:
    """Equivariant Tutte polynomial by the subset expansion."""
    prods = _subset_products(M, lambda e: 1 + R * T(e), lambda e: 1 + S * T(e))
    out = ZERO
    for (rk, nl), p in _grouped_by_rank(M, prods).items():
        out = out + (X - 1) ** (M.rank - rk) * (Y - 1) ** nl * p
    return out


def choose_element(M: Matroid, order: Sequence[str] | None = None) -> str:
    """Next element to remove in a recursion.

    With an explicit ``order`` the first label still present is used.
    Otherwise: the first general element in ground order, else loops
    before coloops.
    """
    if order is not None:
        present = set(M.ground)
        for e in order:
            if e in present:
                return e
        raise InvariantError("deletion order does not cover the ground set")
    classes = [(e, M.element_class(e)) for e in M.ground]
    for want in (ElementClass.GENERAL, ElementClass.LOOP, ElementClass.COLOOP):
        for e, c in classes:
            if c is want:
                return e
    raise InvariantError("empty ground set")


def _recursion(M: Matroid, base: MultiPoly, step, order, memo) -> MultiPoly:
    if M in memo:
        return memo[M]
    if M.size == 0:
        result = base
    else:
        e = choose_element(M, order)
        cls = M.element_class(e)
        t = T(e)
        if cls is ElementClass.GENERAL:
            result = step.general(t, _recursion(M.delete(e), base, step, order, memo),
                                  _recursion(M.contract(e), base, step, order, memo))
        elif cls is ElementClass.LOOP:
            result = step.loop(t) * _recursion(M.delete(e), base, step, order, memo)
        else:
            result = step.coloop(t) * _recursion(M.contract(e), base, step, order, memo)
    memo[M] = result
    return result


class _TutteStep:
    @staticmethod
    def general(t, deleted, contracted):
        return (1 + S * t) * deleted + (1 + R * t) * contracted

    @staticmethod
    def loop(t):
        return (Y - 1) * (1 + R * t) + (1 + S * t)

    @staticmethod
    def coloop(t):
        return (X - 1) * (1 + S * t) + (1 + R * t)


def equivariant_tutte_dc(M: Matroid, order: Sequence[str] | None = None) -> MultiPoly:
    """Equivariant Tutte polynomial by memoized deletion-contraction."""
    return _recursion(M, ONE, _TutteStep, order, {})


def classical_tutte(M: Matroid) -> MultiPoly:
    out = ZERO
    for mask in range(1 << M.size):
        rk = M.rank_mask(mask)
        out = out + (X - 1) ** (M.rank - rk) * (Y - 1) ** (mask.bit_count() - rk)
    return out


def swap_dual_variables(p: MultiPoly) -> MultiPoly:
    """Exchange x with y and r with s (the dual matroid's polynomial)."""
    return p.subs({"x": Y, "y": X, "r": S, "s": R})


def t_to_zero(p: MultiPoly, ground: Iterable[str]) -> MultiPoly:
    return p.subs({tname(e): 0 for e in ground})


# multivariate (Potts) form


def multivariate_tutte(M: Matroid) -> PolyFraction:
    """``sum_S q^(-rank S) prod_{e in S} v_e`` over the common denominator ``q^rank``."""
    num = ZERO
    for mask in range(1 << M.size):
        mono = ONE
        for e in M.labels(mask):
            mono = mono * MultiPoly.v(e)
        num = num + Q ** (M.rank - M.rank_mask(mask)) * mono
    return PolyFraction(num, Q ** M.rank)


def potts_from_equivariant(tutte: MultiPoly, rank: int, ground: Sequence[str]) -> PolyFraction:
    """Potts form from the equivariant Tutte polynomial of a rank-``rank`` matroid."""
    bindings = {"x": Q + 1, "y": 2, "r": 1, "s": 0}
    bindings.update({tname(e): MultiPoly.v(e) - 1 for e in ground})
    return PolyFraction(tutte.subs(bindings), Q ** rank)


def equivariant_from_potts(potts: PolyFraction, rank: int, ground: Sequence[str]) -> PolyFraction:
    """Inverse conversion; the result is a fraction equal to the equivariant Tutte polynomial."""
    bindings: dict[str, PolyFraction] = {"q": PolyFraction((X - 1) * (Y - 1))}
    prefactor = (X - 1) ** rank
    for e in ground:
        bindings[vname(e)] = PolyFraction((1 + R * T(e)) * (Y - 1), 1 + S * T(e))
        prefactor = prefactor * (1 + S * T(e))
    num = substitute(potts.num, bindings)
    den = substitute(potts.den, bindings)
    return PolyFraction(prefactor) * num / den


# the pushforward polynomial F and its top-degree part P


def _f_numerator(M: Matroid) -> MultiPoly:
    prods = _subset_products(M, lambda e: ALPHA + T(e), lambda e: BETA - T(e))
    num = ZERO
    for (rk, nl), p in _grouped_by_rank(M, prods).items():
        weight = ((1 - ALPHA * Z) ** (M.rank - rk) * (1 + ALPHA * W) ** (M.corank - nl)
                  * (1 + BETA * Z) ** rk * (1 - BETA * W) ** nl)
        num = num + weight * p
    return num


def f_polynomial(M: Matroid) -> MultiPoly:
    """Closed form in alpha, beta, z, w: a subset sum divided exactly by alpha+beta."""
    if M.size == 0:
        raise EmptyGround("F is only a polynomial for a non-empty ground set")
    return divide_exact_alpha_plus_beta(_f_numerator(M))


class _FStep:
    @staticmethod
    def general(t, deleted, contracted):
        return (1 + ALPHA * W) * (BETA - t) * deleted + (1 + BETA * Z) * (ALPHA + t) * contracted

    @staticmethod
    def loop(t):
        return (1 - t * W) * (ALPHA + BETA)

    @staticmethod
    def coloop(t):
        return (1 + t * Z) * (ALPHA + BETA)


def f_polynomial_dc(M: Matroid, order: Sequence[str] | None = None) -> MultiPoly:
    if M.size == 0:
        raise EmptyGround("F is only a polynomial for a non-empty ground set")
    memo: dict[Matroid, MultiPoly] = {}

    def rec(N: Matroid) -> MultiPoly:
        if N in memo:
            return memo[N]
        e = choose_element(N, order)
        cls = N.element_class(e)
        t = T(e)
        if N.size == 1:
            result = 1 - t * W if cls is ElementClass.LOOP else 1 + t * Z
        elif cls is ElementClass.GENERAL:
            result = _FStep.general(t, rec(N.delete(e)), rec(N.contract(e)))
        elif cls is ElementClass.LOOP:
            result = _FStep.loop(t) * rec(N.delete(e))
        else:
            result = _FStep.coloop(t) * rec(N.contract(e))
        memo[N] = result
        return result

    return rec(M)


def f_at_point(F: MultiPoly, a: str, b: str) -> MultiPoly:
    """``F(-t_a, t_b, z, w)``."""
    return F.subs({"alpha": -T(a), "beta": T(b)})


def tutte_fm_sides(M: Matroid, tutte_s_sign: int = -1) -> tuple[PolyFraction, PolyFraction]:
    """Both sides of the relation between the equivariant Tutte polynomial and F.

    The left side evaluates the Tutte polynomial at
    ``x = (r+s)/(s+z)``, ``y = (r+s)/(r+w)`` with its fourth argument set to
    ``tutte_s_sign * s``.  The right side is
    ``(rs)^(n-1) (r+s) / ((s+z)^rank (r+w)^corank) * F(1/r, 1/s, z, w)``.
    ``tutte_s_sign = -1`` is the relation that holds; ``+1`` keeps ``s``
    unchanged and is kept for comparison.
    """
    if M.size == 0:
        raise EmptyGround("relation needs a non-empty ground set")
    tutte = equivariant_tutte(M)
    lhs = substitute(tutte, {
        "x": PolyFraction(R + S, S + Z),
        "y": PolyFraction(R + S, R + W),
        "s": tutte_s_sign * S,
    })
    F = f_polynomial(M)
    rhs = substitute(F, {"alpha": PolyFraction(1, R), "beta": PolyFraction(1, S)})
    scale = PolyFraction((R * S) ** (M.size - 1) * (R + S), (S + Z) ** M.rank * (R + W) ** M.corank)
    return lhs, scale * rhs


def verify_tutte_fm_relation(M: Matroid, tutte_s_sign: int = -1) -> bool:
    lhs, rhs = tutte_fm_sides(M, tutte_s_sign)
    return fraction_eq(lhs, rhs)


def p_polynomial_direct(M: Matroid) -> MultiPoly:
    prods = _subset_products(M, lambda e: ALPHA + T(e), lambda e: BETA - T(e))
    num = ZERO
    for (rk, nl), p in _grouped_by_rank(M, prods).items():
        num = num + ALPHA ** (M.corank - nl) * (-BETA) ** nl * p
    return divide_exact_alpha_plus_beta(num)


def p_from_f(M: Matroid, F: MultiPoly | None = None) -> MultiPoly:
    F = f_polynomial(M) if F is None else F
    return F.coeff({"z": 0, "w": M.corank})


def p_polynomial(M: Matroid) -> MultiPoly:
    """Top quotient-class pushforward, computed two ways and compared."""
    direct = p_polynomial_direct(M)
    if direct != p_from_f(M):
        raise InvariantMismatch("P from F disagrees with the direct sum")
    return direct


# characteristic polynomials


def equivariant_charpoly(M: Matroid) -> MultiPoly:
    """Equivariant reduced characteristic polynomial in q and the t-variables."""
    if M.size == 0:
        raise EmptyGround("the reduced characteristic polynomial needs a non-empty ground set")
    num = (-1) ** M.rank * equivariant_tutte(M).subs({"x": 1 - Q, "y": 0, "r": Q, "s": 1})
    try:
        return divide_by_linear(num, "q", 1)
    except NotDivisible as exc:
        raise NotDivisibleByQMinus1(str(exc)) from exc


def equivariant_charpoly_subset_sum(M: Matroid) -> MultiPoly:
    if M.size == 0:
        raise EmptyGround("the reduced characteristic polynomial needs a non-empty ground set")
    prods = _subset_products(M, lambda e: 1 + Q * T(e), lambda e: 1 + T(e))
    num = ZERO
    for mask, p in enumerate(prods):
        num = num + Q ** (M.rank - M.rank_mask(mask)) * (-1) ** mask.bit_count() * p
    try:
        return divide_by_linear(num, "q", 1)
    except NotDivisible as exc:
        raise NotDivisibleByQMinus1(str(exc)) from exc


def classical_charpoly(M: Matroid) -> MultiPoly:
    """Reduced characteristic polynomial; defined as 1 on the empty matroid."""
    if M.size == 0:
        return ONE
    num = (-1) ** M.rank * classical_tutte(M).subs({"x": 1 - Q, "y": 0})
    try:
        return divide_by_linear(num, "q", 1)
    except NotDivisible as exc:
        raise NotDivisibleByQMinus1(str(exc)) from exc


@dataclass
class CharpolyCheck:
    top_class_ok: bool
    specialization_ok: dict[tuple[str, ...], bool]
    full_set_ok: bool

    @property
    def ok(self) -> bool:
        return self.top_class_ok and self.full_set_ok and all(self.specialization_ok.values())


def charpoly_checks(M: Matroid) -> CharpolyCheck:
    """Relations of the characteristic polynomial with P and with contractions.

    For ``A = E`` the contraction is empty; that case is checked separately
    with both sides multiplied by ``q - 1`` (reading the reduced polynomial of
    the empty matroid as ``1/(q-1)``).
    """
    if M.size == 0:
        raise EmptyGround("needs a non-empty ground set")
    chi = equivariant_charpoly(M)
    P = p_polynomial(M)
    lhs = substitute(P, {"alpha": PolyFraction(1, Q), "beta": -1})
    rhs = PolyFraction(chi, (-Q) ** (M.size - 1))
    top_ok = fraction_eq(lhs, rhs)

    restricted: dict[tuple[str, ...], bool] = {}
    full_ok = True
    for mask in range(1 << M.size):
        A = M.labels(mask)
        point = {tname(e): (-1 if e in A else 0) for e in M.ground}
        value = chi.subs(point)
        factor = (1 - Q) ** len(A) * (-1) ** len(A)
        if mask == M.full_mask:
            full_ok = value * (Q - 1) == factor
        else:
            restricted[A] = value == factor * classical_charpoly(M.contract_set(A))
    return CharpolyCheck(top_ok, restricted, full_ok)


def verify_charpoly_relations(M: Matroid) -> bool:
    return charpoly_checks(M).ok


# coefficient identities


def contraction_coefficient_identity(M: Matroid, A: Sequence[str]) -> bool:
    """Coefficient of t_A at (r,s)=(1,0) against the classical polynomial of M/A."""
    coeff = coefficient_of_t_monomial(equivariant_tutte(M).subs({"r": 1, "s": 0}), A)
    return coeff == (Y - 1) ** M.nullity_of(A) * classical_tutte(M.contract_set(A))


def deletion_coefficient_identity(M: Matroid, A: Sequence[str]) -> bool:
    """Coefficient of t_A at (r,s)=(0,1) against the classical polynomial of M minus A."""
    coeff = coefficient_of_t_monomial(equivariant_tutte(M).subs({"r": 0, "s": 1}), A)
    rest = [e for e in M.ground if e not in set(A)]
    return coeff == (X - 1) ** (M.rank - M.rank_of(rest)) * classical_tutte(M.delete_set(A))


def coefficient_identities(M: Matroid) -> bool:
    tutte = equivariant_tutte(M)
    at10 = tutte.subs({"r": 1, "s": 0})
    at01 = tutte.subs({"r": 0, "s": 1})
    for mask in range(1 << M.size):
        A = M.labels(mask)
        rest = M.labels(M.full_mask ^ mask)
        if coefficient_of_t_monomial(at10, A) != (Y - 1) ** M.nullity_of(A) * classical_tutte(M.contract_set(A)):
            return False
        if coefficient_of_t_monomial(at01, A) != (X - 1) ** (M.rank - M.rank_of(rest)) * classical_tutte(M.delete_set(A)):
            return False
    return True


def reciprocal_substitution_identities(M: Matroid) -> bool:
    """Setting t_e = -1/s (resp. -1/r) on A collapses to a contraction (resp. deletion)."""
    tutte = equivariant_tutte(M)
    for mask in range(1 << M.size):
        A = M.labels(mask)
        rest = M.labels(M.full_mask ^ mask)
        lhs = substitute(tutte, {tname(e): PolyFraction(-1, S) for e in A})
        rhs = (PolyFraction(S - R, S) ** len(A) * (Y - 1) ** M.nullity_of(A)
               * equivariant_tutte(M.contract_set(A)))
        if not fraction_eq(lhs, rhs):
            return False
        lhs = substitute(tutte, {tname(e): PolyFraction(-1, R) for e in A})
        rhs = (PolyFraction(R - S, R) ** len(A) * (X - 1) ** (M.rank - M.rank_of(rest))
               * equivariant_tutte(M.delete_set(A)))
        if not fraction_eq(lhs, rhs):
            return False
    return True


# Tutte-Grothendieck invariants with linear multipliers


@dataclass(frozen=True)
class TgParameters:
    a1: MultiPoly
    a2: MultiPoly
    b1: MultiPoly
    b2: MultiPoly
    alpha: MultiPoly
    beta: MultiPoly
    gamma: MultiPoly

    @classmethod
    def of(cls, a1, a2, b1, b2, alpha, beta, gamma=1) -> "TgParameters":
        return cls(*(as_poly(v) for v in (a1, a2, b1, b2, alpha, beta, gamma)))


def tg_invariant(M: Matroid, P: TgParameters, order: Sequence[str] | None = None) -> MultiPoly:
    """Deletion-contraction with multipliers linear in t_e."""

    class Step:
        @staticmethod
        def general(t, deleted, contracted):
            return (P.a1 * t + P.a2) * deleted + (P.b1 * t + P.b2) * contracted

        @staticmethod
        def loop(t):
            return (P.b1 * P.alpha + P.a1) * t + (P.b2 * P.alpha + P.a2)

        @staticmethod
        def coloop(t):
            return (P.a1 * P.beta + P.b1) * t + (P.a2 * P.beta + P.b2)

    return _recursion(M, P.gamma, Step, order, {})


def tg_invariant_closed(M: Matroid, P: TgParameters) -> MultiPoly:
    """Closed form through a fraction substitution into the equivariant Tutte polynomial."""
    if P.a2.is_zero() or P.b2.is_zero():
        raise ZeroParameter("closed form needs a2 and b2 nonzero")
    value = substitute(equivariant_tutte(M), {
        "x": PolyFraction(P.beta * P.a2 + P.b2, P.b2),
        "y": PolyFraction(P.alpha * P.b2 + P.a2, P.a2),
        "r": PolyFraction(P.b1, P.b2),
        "s": PolyFraction(P.a1, P.a2),
    })
    scaled = value * (P.gamma * P.a2 ** M.corank * P.b2 ** M.rank)
    return scaled.to_poly()


def _simplify(f: PolyFraction) -> MultiPoly | PolyFraction:
    try:
        return f.to_poly()
    except NotDivisible:
        return f


def solve_tg_parameters(c1, c2, d1, d2, a1, a2, b1, b2):
    """Solve ``c1 = b1 A + a1, c2 = b2 A + a2, d1 = a1 B + b1, d2 = a2 B + b2`` for (A, B).

    Results are polynomials when the division is exact, fractions otherwise.
    """
    c1, c2, d1, d2, a1, a2, b1, b2 = (as_poly(v) for v in (c1, c2, d1, d2, a1, a2, b1, b2))
    if a2.is_zero() or b2.is_zero():
        raise ZeroParameter("a2 and b2 must be nonzero")
    if all(v.is_zero() for v in (c1, c2, d1, d2)):
        raise InconsistentParameters("all loop and coloop multipliers vanish")
    alpha = PolyFraction(c2 - a2, b2)
    beta = PolyFraction(d2 - b2, a2)
    if not fraction_eq(PolyFraction(c1), alpha * b1 + a1):
        raise InconsistentParameters("loop multiplier is not of the required form")
    if not fraction_eq(PolyFraction(d1), beta * a1 + b1):
        raise InconsistentParameters("coloop multiplier is not of the required form")
    return _simplify(alpha), _simplify(beta)


# evaluations


def evaluate_tutte(M: Matroid, x0: Number, y0: Number, r0: Number, s0: Number) -> MultiPoly:
    return equivariant_tutte(M).subs({"x": x0, "y": y0, "r": r0, "s": s0})


ORACLES = (
    "BasesContaining",
    "IndependentContaining",
    "SpanningDisjoint",
    "PowerCount",
    "AcyclicFree",
    "StrongBidirected",
)

TABLE_POINTS = {
    (1, 1, 1, 0): "BasesContaining",
    (2, 2, 1, 0): "PowerCount",
    (2, 1, 1, 0): "IndependentContaining",
    (1, 2, 0, 1): "SpanningDisjoint",
    (2, 0, 1, 0): "AcyclicFree",
    (0, 2, 1, 0): "StrongBidirected",
}


def oracle_count(M: Matroid, oracle: str, A: Sequence[str], graph: Graph | None = None) -> int | None:
    """Combinatorial count for the coefficient of t_A; None when not asserted."""
    a = M.mask(A)
    if oracle == "BasesContaining":
        return sum(1 for b in M.bases if b & a == a)
    if oracle == "IndependentContaining":
        return sum(1 for i in M.independent_masks() if i & a == a)
    if oracle == "SpanningDisjoint":
        return sum(1 for s in range(1 << M.size) if not s & a and M.rank_mask(s) == M.rank)
    if oracle == "PowerCount":
        return 2 ** (M.size - len(A))
    if oracle in ("AcyclicFree", "StrongBidirected"):
        if graph is None:
            raise OracleRequiresGraph(f"{oracle} needs the underlying graph")
        if oracle == "AcyclicFree":
            if not M.is_independent_mask(a):
                return None
            return count_acyclic_orientations_free_set(graph, A)
        return count_strongly_connected_bidirected(graph, A)
    raise InvariantError(f"unknown oracle {oracle!r}")


@dataclass
class EvaluationReport:
    matroid: Matroid
    point: tuple[Number, Number, Number, Number]
    oracle: str
    coefficients: dict[tuple[str, ...], Number] = field(default_factory=dict)
    oracle_counts: dict[tuple[str, ...], int | None] = field(default_factory=dict)
    identities_ok: bool = True

    @property
    def match(self) -> bool:
        return all(
            count is None or self.coefficients[A] == count
            for A, count in self.oracle_counts.items()
        )

    def to_json(self) -> dict:
        rows = []
        for A, coeff in self.coefficients.items():
            count = self.oracle_counts.get(A)
            rows.append({
                "subset": list(A),
                "coefficient": str(coeff),
                "oracle": None if count is None else count,
                "ok": None if count is None else coeff == count,
            })
        return {
            "point": [str(v) for v in self.point],
            "oracle": self.oracle,
            "match": self.match,
            "identities_ok": self.identities_ok,
            "subsets": rows,
        }


def evaluation_report(M: Matroid, point: Sequence[Number], oracle: str | None = None,
                      graph: Graph | None = None) -> EvaluationReport:
    point = tuple(Fraction(v) if not isinstance(v, int) else v for v in point)
    if oracle is None:
        oracle = TABLE_POINTS.get(tuple(point))
        if oracle is None:
            raise InvariantError(f"no oracle is known for the point {point}")
    if oracle in ("AcyclicFree", "StrongBidirected") and graph is None:
        raise OracleRequiresGraph(f"{oracle} needs the underlying graph")
    value = evaluate_tutte(M, *point)
    report = EvaluationReport(M, point, oracle, identities_ok=coefficient_identities(M))
    for mask in range(1 << M.size):
        A = M.labels(mask)
        coeff = coefficient_of_t_monomial(value, A)
        report.coefficients[A] = coeff.constant_term()
        report.oracle_counts[A] = oracle_count(M, oracle, A, graph)
    return report


def recover_matroid(p: MultiPoly, ground: Sequence[str]) -> Matroid:
    """Rebuild M from its evaluation at (1,1,1,0): nonzero t_A mark independent A."""
    ground = tuple(ground)
    extra = {n for n in p.variables() if not n.startswith("t:") or n[2:] not in ground}
    if extra:
        raise NotAMatroid(f"unexpected variables {sorted(extra)}")
    try:
        independent = {
            frozenset(A)
            for k in range(len(ground) + 1)
            for A in combinations(ground, k)
            if not coefficient_of_t_monomial(p, A).is_zero()
        }
    except PolyError as exc:
        raise NotAMatroid(str(exc)) from exc
    if not independent:
        raise NotAMatroid("no independent sets")
    top = max(len(A) for A in independent)
    bases = [sorted(A) for A in independent if len(A) == top]
    try:
        M = matroid_from_bases(ground, bases)
    except MatroidError as exc:
        raise NotAMatroid(str(exc)) from exc
    if {frozenset(M.labels(m)) for m in M.independent_masks()} != independent:
        raise NotAMatroid("support is not the family of independent sets of a matroid")
    return M


MAX_SCAN_GROUND = 4


def uniqueness_scan(ground: Sequence[str], x0: Number, y0: Number, r0: Number, s0: Number) -> list[tuple[Matroid, Matroid]]:
    """All pairs of distinct labeled matroids with equal evaluations."""
    if len(ground) > MAX_SCAN_GROUND:
        raise GroundTooLarge(f"scan is limited to {MAX_SCAN_GROUND} elements")
    seen: dict[MultiPoly, list[Matroid]] = {}
    for M in enumerate_labeled_matroids(ground):
        seen.setdefault(evaluate_tutte(M, x0, y0, r0, s0), []).append(M)
    collisions = []
    for group in seen.values():
        collisions.extend(combinations(group, 2))
    return collisions
