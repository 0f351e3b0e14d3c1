from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from eqtutte.matroid import (
    ElementClass,
    EmptyBases,
    ExchangeViolation,
    Graph,
    GroundTooLarge,
    LabelCollision,
    TooManyEdges,
    UnequalBasisSizes,
    UnknownEdge,
    UnknownLabel,
    BadRank,
    MatroidError,
    coloop_matroid,
    contract,
    count_acyclic_orientations_free_set,
    count_strongly_connected_bidirected,
    default_ground,
    delete,
    direct_sum,
    dual,
    element_class,
    empty_matroid,
    enumerate_labeled_matroids,
    graphic,
    lex_first_basis,
    loop_matroid,
    matroid_from_bases,
    nullity_of,
    rank_of,
    uniform,
)
from conftest import bases_of, corpus, circuit3_coloop, nonempty_corpus, triangle, u
from oracles import count_matroids, is_matroid, rank as oracle_rank, subsets

small = st.sampled_from(corpus(4))
small_nonempty = st.sampled_from(nonempty_corpus(4))


# construction


def test_single_coloop():
    M = matroid_from_bases(["e"], [["e"]])
    assert M.rank == 1
    assert element_class(M, "e") is ElementClass.COLOOP


def test_circuit3_coloop_construction():
    M = circuit3_coloop()
    assert M.rank == 3
    assert len(M.bases) == 3
    assert is_matroid(bases_of(M))


def test_unequal_sizes_is_an_exchange_violation():
    with pytest.raises(ExchangeViolation):
        matroid_from_bases("01", [["0"], ["0", "1"]])
    with pytest.raises(UnequalBasisSizes):
        matroid_from_bases("01", [["0"], ["0", "1"]])


def test_exchange_violation_reports_triple():
    with pytest.raises(ExchangeViolation) as info:
        matroid_from_bases("0123", [["0", "1"], ["2", "3"]])
    B1, B2, v = info.value.triple
    assert v in B1 and v not in B2


def test_empty_bases_rejected():
    with pytest.raises(EmptyBases):
        matroid_from_bases("01", [])


def test_unknown_basis_label():
    with pytest.raises(UnknownLabel):
        matroid_from_bases("01", [["2"]])


def test_duplicate_labels_rejected():
    with pytest.raises(LabelCollision):
        matroid_from_bases(["a", "a"], [["a"]])


# rank


def test_rank_examples():
    assert rank_of(u(2, 4), ["1", "2"]) == 2
    assert rank_of(loop_matroid("e"), ["e"]) == 0
    assert rank_of(circuit3_coloop(), ["0", "1", "2"]) == 2
    assert nullity_of(circuit3_coloop(), ["0", "1", "2"]) == 1


def test_rank_unknown_label():
    with pytest.raises(UnknownLabel):
        rank_of(u(1, 2), ["9"])


def test_rank_matches_oracle_on_corpus():
    for M in corpus(4):
        B = bases_of(M)
        for S in subsets(M.ground):
            assert M.rank_of(S) == oracle_rank(B, S)


@given(small)
def test_rank_is_submodular_and_monotone(M):
    full = M.full_mask
    assert M.rank_mask(0) == 0
    assert M.rank_mask(full) == M.rank
    for a in range(full + 1):
        for b in range(full + 1):
            assert M.rank_mask(a | b) + M.rank_mask(a & b) <= M.rank_mask(a) + M.rank_mask(b)
            if a & b == a:
                assert M.rank_mask(a) <= M.rank_mask(b)


# minors


def test_contract_general_in_u12_gives_loop():
    N = contract(u(1, 2), "0")
    assert N.ground == ("1",)
    assert element_class(N, "1") is ElementClass.LOOP


def test_delete_from_circuit3_coloop():
    # oracle: bases of M avoiding 2
    N = delete(circuit3_coloop(), "2")
    avoiding = [B - {"2"} for B in bases_of(circuit3_coloop()) if "2" not in B]
    assert bases_of(N) == avoiding == [{"0", "1", "3"}]


def test_contract_from_circuit3_coloop():
    # oracle: quotient rank function rank_M(S + {2}) - 1
    M = circuit3_coloop()
    N = contract(M, "2")
    assert N.rank == 2
    for S in subsets(N.ground):
        assert N.rank_of(S) == oracle_rank(bases_of(M), set(S) | {"2"}) - 1
    assert N.rank_of(["0", "1"]) == 1


def test_degenerate_minor_conventions():
    L = loop_matroid("e")
    assert contract(L, "e") == delete(L, "e") == empty_matroid()
    C = coloop_matroid("e")
    assert delete(C, "e") == contract(C, "e") == empty_matroid()


@given(small_nonempty, st.data())
def test_minor_rank_relations(M, data):
    e = data.draw(st.sampled_from(M.ground))
    D, C = M.delete(e), M.contract(e)
    assert D.size == C.size == M.size - 1
    cls = M.element_class(e)
    if cls is not ElementClass.COLOOP:
        assert D.rank == M.rank
    if cls is not ElementClass.LOOP:
        assert C.rank == M.rank - 1


def test_minor_duality_on_corpus():
    for M in nonempty_corpus(4):
        for e in M.ground:
            assert dual(M.contract(e)) == dual(M).delete(e)
            assert dual(M.delete(e)) == dual(M).contract(e)


# dual and direct sum


def test_dual_examples():
    assert dual(coloop_matroid("e")) == loop_matroid("e")
    assert dual(u(1, 2)) == u(1, 2)
    assert dual(u(1, 3)) == u(2, 3)


@given(small)
def test_dual_involution_and_rank_formula(M):
    assert dual(dual(M)) == M
    D = dual(M)
    for S in subsets(M.ground):
        rest = [e for e in M.ground if e not in S]
        assert D.rank_of(S) == len(S) + M.rank_of(rest) - M.rank


def test_direct_sum_examples():
    s = direct_sum(coloop_matroid("a"), loop_matroid("b"))
    assert s.rank == 1 and bases_of(s) == [{"a"}]
    pair = direct_sum(uniform(1, "01"), uniform(1, "23"))
    assert pair.rank == 2 and len(pair.bases) == 4
    assert direct_sum(circuit3_coloop(), empty_matroid()) == circuit3_coloop()


def test_direct_sum_label_collision():
    with pytest.raises(LabelCollision):
        direct_sum(u(1, 2), u(1, 2))


# element classes


def test_element_class_examples():
    assert element_class(u(1, 2), "0") is ElementClass.GENERAL
    assert element_class(u(1, 2), "1") is ElementClass.GENERAL
    assert element_class(coloop_matroid("e"), "e") is ElementClass.COLOOP
    M = circuit3_coloop()
    # oracle: brute force over the basis list; 3 lies in every basis
    in_all = all("3" in B for B in bases_of(M))
    assert in_all
    assert element_class(M, "3") is ElementClass.COLOOP
    for e in "012":
        assert element_class(M, e) is ElementClass.GENERAL


def test_element_class_unknown_label():
    with pytest.raises(UnknownLabel):
        element_class(u(1, 2), "x")


# greedy bases


def test_lex_first_basis_examples():
    M = circuit3_coloop()
    assert lex_first_basis(M, ("0", "1", "2", "3")) == {"0", "1", "3"}
    assert lex_first_basis(M, ("2", "1", "0", "3")) == {"1", "2", "3"}
    U = u(2, 4)
    for sigma in permutations(U.ground):
        assert lex_first_basis(U, sigma) == {sigma[0], sigma[1]}


def test_lex_first_basis_covers_every_basis():
    for M in corpus(4):
        seen = set()
        for sigma in permutations(M.ground):
            B = lex_first_basis(M, sigma)
            assert B in [frozenset(b) for b in bases_of(M)]
            seen.add(B)
        assert seen == {frozenset(b) for b in bases_of(M)}


def test_lex_first_basis_needs_permutation():
    with pytest.raises(MatroidError):
        lex_first_basis(u(1, 2), ("0",))


# uniform and graphic


def test_uniform_examples():
    assert uniform(1, "01") == u(1, 2)
    assert len(u(2, 4).bases) == 6
    with pytest.raises(BadRank):
        uniform(3, "01")


def test_graphic_triangle_is_u23():
    M = graphic(triangle())
    # oracle: forests of a 3-cycle are all subsets of size at most 2
    assert sorted(map(sorted, bases_of(M))) == [["e1", "e2"], ["e1", "e3"], ["e2", "e3"]]


def test_graphic_self_loop_is_loop():
    G = Graph.build(["v"], [("e", "v", "v")])
    assert graphic(G) == loop_matroid("e")


def test_graphic_parallel_edges():
    G = Graph.build("ab", [("p", "a", "b"), ("q", "a", "b")])
    assert graphic(G) == uniform(1, ["p", "q"])


def test_graph_validation():
    with pytest.raises(MatroidError):
        Graph.build("ab", [("e", "a", "c")])
    with pytest.raises(LabelCollision):
        Graph.build("ab", [("e", "a", "b"), ("e", "b", "a")])


# orientations


def _brute_acyclic(G):
    # oracle: count orientations without a directed cycle by DFS on each
    from itertools import product

    total = 0
    for flips in product((0, 1), repeat=len(G.edges)):
        arcs = [(e.v, e.u) if f else (e.u, e.v) for e, f in zip(G.edges, flips)]
        adj = {v: [b for a, b in arcs if a == v] for v in G.vertices}
        state = {}

        def cyclic(v):
            state[v] = 1
            for w in adj[v]:
                if state.get(w) == 1 or (w not in state and cyclic(w)):
                    return True
            state[v] = 2
            return False

        if not any(cyclic(v) for v in G.vertices if v not in state):
            total += 1
    return total


def test_triangle_orientation_counts():
    G = triangle()
    assert count_acyclic_orientations_free_set(G) == 6 == _brute_acyclic(G)
    assert count_strongly_connected_bidirected(G) == 2


def test_single_edge_acyclic_count():
    G = Graph.build("ab", [("e", "a", "b")])
    assert count_acyclic_orientations_free_set(G) == 2


def test_orientation_guards():
    G = triangle()
    with pytest.raises(UnknownEdge):
        count_acyclic_orientations_free_set(G, ["zz"])
    big = Graph.build("ab", [(f"e{i}", "a", "b") for i in range(13)])
    with pytest.raises(TooManyEdges):
        count_acyclic_orientations_free_set(big)
    disconnected = Graph.build("abc", [("e", "a", "b")])
    with pytest.raises(MatroidError):
        count_strongly_connected_bidirected(disconnected)


# enumeration


def test_enumeration_counts_match_oracle():
    for n in range(5):
        assert sum(1 for _ in enumerate_labeled_matroids(default_ground(n))) == count_matroids(n)
    assert [sum(1 for _ in enumerate_labeled_matroids(default_ground(n))) for n in range(3)] == [1, 2, 5]


def test_enumeration_unique_and_deterministic():
    first = list(enumerate_labeled_matroids(default_ground(4)))
    second = list(enumerate_labeled_matroids(default_ground(4)))
    assert first == second
    assert len(set(first)) == len(first)


def test_enumeration_guard():
    with pytest.raises(GroundTooLarge):
        list(enumerate_labeled_matroids(default_ground(6)))
