from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from eqtutte.gkm import (
    BadIndex,
    GkmClass,
    GkmError,
    chern_quot,
    chern_sub,
    chern_sub_dual,
    compute_k_sigma,
    gkm_check,
    gkm_violation,
    insert_at,
    insertion_identities,
    pushforward_localized,
    pushforward_recursion_holds,
    tangent_weight_perm,
    tangent_weight_product_point,
    verify_pushforward_theorem,
    verify_top_class_pushforward,
    xi_class,
)
from eqtutte.invariants import f_at_point, f_polynomial
from eqtutte.matroid import coloop_matroid, direct_sum, empty_matroid, lex_first_basis, loop_matroid
from eqtutte.poly import ONE, W, Z, MultiPoly, PolyFraction, fraction_eq, fraction_eval
from conftest import bases_of, circuit3_coloop, nonempty_corpus, u
import oracles

T = MultiPoly.t

small_nonempty = st.sampled_from(nonempty_corpus(4))


# tautological classes


def test_zeroth_classes_are_constant():
    for M in nonempty_corpus(3):
        one = GkmClass.constant(M.ground)
        assert chern_sub(M, 0) == one
        assert chern_quot(M, 0) == one
        assert chern_sub_dual(M, 0) == one


def test_first_sub_class_is_minus_basis_sum():
    M = circuit3_coloop()
    c1 = chern_sub(M, 1)
    for sigma in permutations(M.ground):
        basis = lex_first_basis(M, sigma)
        expected = MultiPoly.const(0)
        for e in basis:
            expected = expected - T(e)
        assert c1[sigma] == expected


def test_quot_class_u12():
    assert chern_quot(u(1, 2), 1)[("0", "1")] == -T("1")


def test_dual_sub_class_flips_sign():
    M = u(2, 3)
    for sigma in permutations(M.ground):
        assert chern_sub_dual(M, 1)[sigma] == -chern_sub(M, 1)[sigma]
        assert chern_sub_dual(M, 2)[sigma] == chern_sub(M, 2)[sigma]


def test_class_index_guard():
    with pytest.raises(BadIndex):
        chern_sub(u(1, 2), 2)
    with pytest.raises(BadIndex):
        chern_quot(u(1, 2), 2)
    with pytest.raises(BadIndex):
        chern_sub_dual(u(1, 2), -1)


def test_xi_examples():
    assert xi_class(coloop_matroid("e"))[("e",)] == 1 + T("e") * Z
    assert xi_class(loop_matroid("e"))[("e",)] == 1 - T("e") * W
    assert xi_class(u(1, 2))[("0", "1")] == (1 + T("0") * Z) * (1 - T("1") * W)


# GKM condition


def test_constant_class_passes():
    assert gkm_check(GkmClass.constant(("0", "1", "2"), 7))


def test_perturbed_class_fails_with_witness():
    ground = ("0", "1", "2")
    bump = ("1", "0", "2")
    c = GkmClass.build(ground, lambda s: MultiPoly.const(2 if s == bump else 1))
    assert not gkm_check(c)
    witness = gkm_violation(c)
    assert witness is not None and not witness.remainder.is_zero()


def test_classes_pass_gkm_on_corpus():
    for M in nonempty_corpus(4):
        assert gkm_check(xi_class(M))
        for i in range(M.rank + 1):
            assert gkm_check(chern_sub(M, i))
            assert gkm_check(chern_sub_dual(M, i))
        for i in range(M.corank + 1):
            assert gkm_check(chern_quot(M, i))


# tangent weights


def test_tangent_weights():
    assert tangent_weight_perm(("b", "a")) == T("b") - T("a")
    assert tangent_weight_perm(("e",)) == ONE
    assert tangent_weight_product_point("a", "b", ("a", "b")) == (T("b") - T("a")) ** 2
    assert tangent_weight_product_point("e", "e", ("e",)) == ONE


# pushforward


def test_pushforward_two_elements():
    M = u(1, 2)
    xi = xi_class(M)
    value = pushforward_localized(xi, ("0", "1"))
    assert fraction_eq(value, PolyFraction((T("1") - T("0")) * xi[("1", "0")]))


def test_pushforward_diagonal_is_zero():
    for M in nonempty_corpus(3):
        if M.size < 2:
            continue
        for a in M.ground:
            assert pushforward_localized(xi_class(M), (a, a)).num.is_zero()


def test_pushforward_u33():
    M = u(3, 3)
    value = pushforward_localized(xi_class(M), ("0", "2"))
    expected = (T("2") - T("0")) ** 2 * (1 + T("0") * Z) * (1 + T("1") * Z) * (1 + T("2") * Z)
    assert fraction_eq(value, PolyFraction(expected))
    assert fraction_eq(value, PolyFraction(f_at_point(f_polynomial(M), "0", "2")))


def test_pushforward_bad_point():
    with pytest.raises(GkmError):
        pushforward_localized(xi_class(u(1, 2)), ("0", "9"))


def test_pushforward_matches_numeric_oracle():
    z, w = Fraction(2, 3), Fraction(-5, 7)
    for M in nonempty_corpus(4):
        tv = {e: Fraction(3 * i + 1, 2 + i) for i, e in enumerate(M.ground)}
        point = {"z": z, "w": w, **{f"t:{e}": tv[e] for e in M.ground}}
        xi = xi_class(M)
        for a in M.ground:
            for b in M.ground:
                if a == b and M.size > 1:
                    continue
                got = fraction_eval(pushforward_localized(xi, (a, b)), point)
                assert got == oracles.pushforward_value(M.ground, bases_of(M), a, b, z, w, tv)


def test_pushforward_theorem_examples():
    checks = {c.point: c for c in verify_pushforward_theorem(u(1, 2))}
    assert checks[("0", "0")].ok and checks[("0", "0")].rhs.is_zero()
    single = verify_pushforward_theorem(coloop_matroid("e"))
    assert len(single) == 1 and single[0].ok
    assert single[0].rhs == 1 + T("e") * Z


def test_pushforward_theorem_on_corpus():
    for M in nonempty_corpus(4):
        checks = verify_pushforward_theorem(M)
        assert len(checks) == M.size ** 2
        assert all(c.ok for c in checks)


def test_pushforward_theorem_needs_elements():
    with pytest.raises(GkmError):
        verify_pushforward_theorem(empty_matroid())


def test_top_class_pushforward_on_corpus():
    for M in nonempty_corpus(4):
        assert verify_top_class_pushforward(M)


# insertion index


def test_insert_at():
    assert insert_at(("a", "b"), "e", 0) == ("e", "a", "b")
    assert insert_at(("a", "b"), "e", 2) == ("a", "b", "e")


def test_k_sigma_examples():
    M = direct_sum(u(1, 2), loop_matroid("L"))
    assert compute_k_sigma(M, ("0", "1"), "L") == -1
    N = direct_sum(u(1, 2), coloop_matroid("C"))
    assert compute_k_sigma(N, ("0", "1"), "C") == 2
    assert compute_k_sigma(circuit3_coloop(), ("0", "1", "3"), "2") == 1


def test_k_sigma_needs_permutation_of_rest():
    with pytest.raises(GkmError):
        compute_k_sigma(circuit3_coloop(), ("0", "1"), "2")


@given(small_nonempty, st.data())
def test_k_sigma_splits_insertions(M, data):
    e = data.draw(st.sampled_from(M.ground))
    rest = [x for x in M.ground if x != e]
    sigma = tuple(data.draw(st.permutations(rest)))
    k = compute_k_sigma(M, sigma, e)
    for ell in range(len(sigma) + 1):
        contains = e in lex_first_basis(M, insert_at(sigma, e, ell))
        assert contains == (ell <= k)


def test_insertion_identities_on_corpus():
    for M in nonempty_corpus(4):
        for e in M.ground:
            assert insertion_identities(M, e)


def test_pushforward_recursion_on_corpus():
    for M in nonempty_corpus(4):
        for e in M.ground:
            for a in M.ground:
                for b in M.ground:
                    if a != b and e not in (a, b):
                        assert pushforward_recursion_holds(M, e, (a, b))


def test_pushforward_recursion_rejects_bad_point():
    with pytest.raises(GkmError):
        pushforward_recursion_holds(u(2, 3), "0", ("0", "1"))
