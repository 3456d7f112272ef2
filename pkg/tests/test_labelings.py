import math

import pytest
from hypothesis import given, settings, strategies as st

from primelabel import (
    InvalidParameter,
    NotApplicable,
    UnsupportedScheme,
    build_book,
    build_cycle_chain,
    build_cycle_pendant_star,
    build_fibonacci_chain,
    build_prism,
    label_book,
    label_chain4,
    label_chain6,
    label_chain8,
    label_chain_mersenne,
    label_cps,
    label_fibonacci_chain,
    label_prism,
    row_permutation,
    verify_labeling,
)
from primelabel.labelings import BOOK7_CYCLE, book_row, cps_role_labels

from conftest import scan_is_prime


def role_label(inst, lab, *role):
    return lab[inst.vertex(*role)]


class TestCyclePendantStar:
    def test_c4_s4_block1(self):
        inst = build_cycle_pendant_star(4, 4)
        lab = label_cps(4, 4, inst)
        assert role_label(inst, lab, "c", 1) == 1
        assert role_label(inst, lab, "p", 1) == 5
        assert sorted(role_label(inst, lab, "o", 1, k) for k in range(1, 5)) == [2, 3, 4, 6]

    def test_c5_s6_block3(self):
        inst = build_cycle_pendant_star(5, 6)
        lab = label_cps(5, 6, inst)
        assert role_label(inst, lab, "c", 3) == 17
        assert role_label(inst, lab, "p", 3) == 19
        # formula value; the drawing lists the leaves sorted, putting 20 second
        assert role_label(inst, lab, "o", 3, 2) == 21
        assert sorted(role_label(inst, lab, "o", 3, k) for k in range(1, 7)) == [18, 20, 21, 22, 23, 24]

    def test_c3_s8_block3(self):
        inst = build_cycle_pendant_star(3, 8)
        lab = label_cps(3, 8, inst)
        assert role_label(inst, lab, "c", 3) == 21
        assert role_label(inst, lab, "p", 3) == 23
        assert role_label(inst, lab, "o", 3, 2) == 27

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 9])
    def test_out_of_scope_m(self, m):
        with pytest.raises(UnsupportedScheme):
            label_cps(5, m)

    @pytest.mark.parametrize(
        "m, i, p",
        [(5, 30, 7 * 30 - 1), (5, 6, 7 * 6 - 5), (5, 5, 7 * 5 - 4), (6, 15, 8 * 15 - 1),
         (6, 30, 8 * 30 - 1), (7, 10, 9 * 10 - 7), (7, 70, 9 * 70 - 1), (7, 140, 9 * 140 - 1),
         (8, 21, 10 * 21 - 1), (8, 42, 10 * 42 - 1), (8, 9, 10 * 9 - 7)],
    )
    def test_most_specific_modulus_wins(self, m, i, p):
        assert cps_role_labels(i, m)[("p", (i,))] == p

    @pytest.mark.parametrize("m", range(4, 9))
    def test_blocks_are_consecutive(self, m):
        labels = cps_role_labels(420, m)
        for i in range(1, 421):
            block = [labels[("c", (i,))], labels[("p", (i,))]]
            block += [labels[("o", (i, k))] for k in range(1, m + 1)]
            assert sorted(block) == list(range((m + 2) * (i - 1) + 1, (m + 2) * i + 1))

    def test_m6_case_pairs(self):
        # spur against cycle vertex and every leaf, in each of the three cases
        labels = cps_role_labels(300, 6)
        for i in range(1, 301):
            p = labels[("p", (i,))]
            if i % 15 == 0:
                assert p == 8 * i - 1
            elif i % 3 == 0:
                assert p == 8 * i - 5
            else:
                assert p == 8 * i - 3
            assert math.gcd(p, labels[("c", (i,))]) == 1
            for k in range(1, 7):
                assert math.gcd(p, labels[("o", (i, k))]) == 1
            assert (labels[("c", (i,))] - 1) % 8 == 0

    @given(st.integers(3, 80), st.integers(4, 8))
    def test_prime_and_bijective(self, n, m):
        inst = build_cycle_pendant_star(n, m)
        lab = label_cps(n, m, inst)
        assert lab.is_bijection()
        assert scan_is_prime(inst.graph, lab)


class TestChains:
    def _cycle_labels(self, inst, lab, i):
        return {lab[v] for (name, idx), v in inst.roles.items() if idx[0] == i}

    def test_chain4_m4_final_cycle(self):
        inst = build_cycle_chain(4, 4)
        lab = label_chain4(4, inst)
        assert [role_label(inst, lab, "c", 4, k) for k in (1, 2, 3)] == [12, 13, 1]
        shared = inst.vertex("c", 3, 3)
        final = {lab[shared]} | self._cycle_labels(inst, lab, 4)
        assert final == {13, 12, 11, 1}

    def test_chain4_m5_one_opposite_shared(self):
        inst = build_cycle_chain(4, 5)
        lab = label_chain4(5, inst)
        one = inst.vertex("c", 5, 3)
        assert lab[one] == 1
        assert sorted(lab[w] for w in inst.graph.adjacency[one]) == [15, 16]
        shared = inst.vertex("c", 4, 2)
        assert lab[shared] == 13
        assert not inst.graph.has_edge(one, shared)

    def test_chain4_single_cycle(self):
        inst = build_cycle_chain(4, 1)
        lab = label_chain4(1, inst)
        assert lab.is_bijection() and verify_labeling(inst.graph, lab).is_prime

    def test_chain6_m5_cycle4(self):
        inst = build_cycle_chain(6, 5)
        lab = label_chain6(5, inst)
        assert self._cycle_labels(inst, lab, 4) | {16} == set(range(16, 22))
        assert role_label(inst, lab, "c", 4, 5) == 21

    def test_chain8_equals_mersenne_3(self):
        for m in (1, 2, 5, 9):
            assert label_chain8(m) == label_chain_mersenne(3, m)

    def test_mersenne_k4_rejected(self):
        with pytest.raises(UnsupportedScheme):
            label_chain_mersenne(4, 2)
        with pytest.raises(UnsupportedScheme):
            label_chain_mersenne(2, 2)

    def test_mersenne_k5_m3(self):
        inst = build_cycle_chain(32, 3)
        lab = label_chain_mersenne(5, 3, inst)
        assert len(lab) == 94 and len(inst.graph.edges) == 96
        assert verify_labeling(inst.graph, lab).is_prime
        assert scan_is_prime(inst.graph, lab)

    @settings(max_examples=60)
    @given(st.sampled_from([label_chain4, label_chain6, label_chain8]), st.integers(1, 150))
    def test_prime_and_bijective(self, scheme, m):
        lab = scheme(m)
        n = {label_chain4: 4, label_chain6: 6, label_chain8: 8}[scheme]
        g = build_cycle_chain(n, m).graph
        assert lab.is_bijection()
        assert scan_is_prime(g, lab)


class TestFibonacci:
    def test_m5_figure(self):
        inst = build_fibonacci_chain(5)
        lab = label_fibonacci_chain(5, inst)
        assert [role_label(inst, lab, "p", j) for j in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]
        detour = [role_label(inst, lab, "d", 5, t) for t in range(1, 5)]
        assert detour == [9, 10, 11, 12]
        chain = [inst.vertex("p", 5)] + [inst.vertex("d", 5, t) for t in range(1, 5)] + [inst.vertex("p", 6)]
        assert all(inst.graph.has_edge(a, b) for a, b in zip(chain, chain[1:]))

    def test_m1_triangle(self):
        assert sorted(label_fibonacci_chain(1)) == [1, 2, 3]

    def test_m6(self):
        inst = build_fibonacci_chain(6)
        lab = label_fibonacci_chain(6, inst)
        assert sorted(lab) == list(range(1, 35))
        a, b = inst.vertex("p", 7), inst.vertex("p", 8)
        assert (lab[a], lab[b]) == (21, 34) and inst.graph.has_edge(a, b)
        assert math.gcd(21, 34) == 1


class TestPrism:
    def test_c6(self):
        inst = build_prism(6)
        lab = label_prism(6, inst)
        assert [role_label(inst, lab, "c", 1, i) for i in range(1, 7)] == [5, 2, 3, 4, 1, 12]
        assert [role_label(inst, lab, "c", 2, i) for i in range(1, 7)] == [6, 7, 8, 9, 10, 11]

    def test_c4(self):
        inst = build_prism(4)
        lab = label_prism(4, inst)
        assert [role_label(inst, lab, "c", 1, i) for i in range(1, 5)] == [3, 2, 1, 8]
        assert [role_label(inst, lab, "c", 2, i) for i in range(1, 5)] == [4, 5, 6, 7]
        assert verify_labeling(inst.graph, lab).is_prime

    def test_errors(self):
        with pytest.raises(NotApplicable):
            label_prism(9)
        with pytest.raises(UnsupportedScheme):
            label_prism(10)
        with pytest.raises(InvalidParameter):
            label_prism(2)

    @pytest.mark.parametrize("n", [4, 6, 8, 12, 14, 18, 20, 24, 30, 32, 38, 42, 44, 48])
    def test_spokes_differ_by_n_minus_1(self, n):
        inst = build_prism(n)
        lab = label_prism(n, inst)
        off = [i for i in range(1, n + 1)
               if role_label(inst, lab, "c", 2, i) - role_label(inst, lab, "c", 1, i) != n - 1]
        assert off == [1, n - 1, n] if n > 4 else [1, 3, 4]
        # the swapped ones: (n-1, n), (1, 2n-2), (2n, 2n-1)
        assert role_label(inst, lab, "c", 2, 1) - role_label(inst, lab, "c", 1, 1) == 1
        assert verify_labeling(inst.graph, lab).is_prime


class TestBooks:
    def test_s6_p3_rows(self):
        assert book_row(3, 2) == [8, 9, 7]
        assert book_row(3, 6) == [20, 21, 19]

    def test_s7_p5_row4(self):
        assert book_row(5, 4) == [24, 23, 22, 25, 21]
        assert book_row(5, 1) == [10, 9, 8, 7, 6]

    def test_s8_p6_row3(self):
        assert book_row(6, 3) == [20, 21, 22, 23, 24, 19]
        assert book_row(6, 4) == [30, 29, 28, 27, 26, 25]

    def test_roles(self):
        inst = build_book(7, 5)
        lab = label_book(7, 5, inst)
        assert [role_label(inst, lab, "c", j) for j in range(1, 6)] == [1, 2, 3, 4, 5]
        assert [role_label(inst, lab, "v", i, 4) for i in range(1, 6)] == [24, 23, 22, 25, 21]

    def test_row_permutation(self):
        assert row_permutation("A", 1) == [9, 10, 11, 12, 13, 14, 8]
        assert row_permutation("J", 1) == [14, 13, 12, 11, 10, 9, 8]
        w = {j: 14 + j for j in range(1, 8)}
        assert row_permutation("H", 2) == [w[2], w[1], w[3], w[7], w[6], w[5], w[4]]
        assert row_permutation("H", 2) == [16, 15, 17, 21, 20, 19, 18]
        for p in "ABCDEFGHIJ":
            assert sorted(row_permutation(p, 3)) == list(range(22, 29))
        with pytest.raises(InvalidParameter):
            row_permutation("K", 1)

    def test_m7_cycle_of_rows(self):
        assert len(BOOK7_CYCLE) == 30
        for k in range(1, 61):
            assert book_row(7, k + 30) == [x + 210 for x in book_row(7, k)]

    @pytest.mark.parametrize("m", [2, 8])
    def test_out_of_scope_m(self, m):
        with pytest.raises(UnsupportedScheme):
            label_book(4, m)

    @settings(max_examples=80)
    @given(st.integers(1, 70), st.integers(3, 7))
    def test_prime_and_bijective(self, n, m):
        inst = build_book(n, m)
        lab = label_book(n, m, inst)
        assert lab.is_bijection()
        assert scan_is_prime(inst.graph, lab)


def test_scheme_rejects_mismatched_instance():
    with pytest.raises(InvalidParameter):
        label_book(6, 3, build_book(6, 4))
