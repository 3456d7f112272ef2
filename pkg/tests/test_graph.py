import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from primelabel import (
    Graph,
    InvalidParameter,
    Labeling,
    build_prism,
    cartesian_product,
    cycle,
    gcd,
    path,
    star,
    verify_labeling,
)
from primelabel.numtheory import fibonacci, is_prime, smallest_prime_factors

from conftest import scan_is_prime


def test_gcd_examples():
    assert gcd(1, 12) == 1
    assert gcd(8, 12) == 4
    i = 2
    assert gcd(8 * i - 3, 8 * i - 6) == 1


def test_gcd_rejects_nonpositive():
    with pytest.raises(InvalidParameter):
        gcd(0, 3)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_gcd_algebra(a, b):
    assert gcd(a, b) == gcd(b, a)
    assert gcd(a, 1) == 1
    assert gcd(a, a) == a
    if a > b:
        assert gcd(a, b) == gcd(b, a - b)


def test_is_prime_matches_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))

    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]
    assert is_prime(2**31 - 1) and is_prime(2**61 - 1)
    assert not is_prime(2**11 - 1)  # 23 * 89


def test_fibonacci_and_sieve():
    assert [fibonacci(i) for i in range(1, 13)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    spf = smallest_prime_factors(100)
    assert spf[97] == 97 and spf[91] == 7 and spf[64] == 2


class TestConstructors:
    def test_path(self):
        assert path(2).edges == ((0, 1),)
        g = path(5)
        assert g.vertex_count == 5 and len(g.edges) == 4
        assert g.degrees() == [1, 2, 2, 2, 1]
        with pytest.raises(InvalidParameter):
            path(1)

    def test_cycle(self):
        assert cycle(3).edges == ((0, 1), (0, 2), (1, 2))
        g = cycle(6)
        assert len(g.edges) == 6 and set(g.degrees()) == {2}
        with pytest.raises(InvalidParameter):
            cycle(2)

    def test_star(self):
        g = star(4)
        assert g.degree(0) == 4 and g.degrees()[1:] == [1, 1, 1, 1]
        assert star(1).edges == ((0, 1),)
        g = star(6)
        assert (g.vertex_count, len(g.edges)) == (7, 6)
        with pytest.raises(InvalidParameter):
            star(0)

    def test_graph_rejects_bad_input(self):
        with pytest.raises(InvalidParameter, match="self-loop"):
            Graph(2, [(0, 0), (0, 1)])
        with pytest.raises(InvalidParameter, match="connected"):
            Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(InvalidParameter):
            Graph(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        assert Graph(2, [(0, 1), (1, 0), (0, 1)]).edges == ((0, 1),)


def _product_by_definition(g, h):
    """Enumerate every pair of product vertices and apply the adjacency rule."""
    nh = h.vertex_count
    verts = list(product(range(g.vertex_count), range(nh)))
    edges = set()
    for (a, b), (a2, b2) in product(verts, verts):
        if (a == a2 and h.has_edge(b, b2)) or (b == b2 and g.has_edge(a, a2)):
            u, v = a * nh + b, a2 * nh + b2
            edges.add((min(u, v), max(u, v)))
    return edges


class TestCartesianProduct:
    def test_prism_counts(self):
        g = cartesian_product(cycle(6), path(2))
        assert (g.vertex_count, len(g.edges)) == (12, 18)

    def test_book_edge_count_matches_enumeration(self):
        g = cartesian_product(star(6), path(3))
        oracle = _product_by_definition(star(6), path(3))
        assert len(oracle) == 32
        assert set(g.edges) == oracle
        assert g.vertex_count == 21

    def test_square(self):
        g = cartesian_product(path(2), path(2))
        assert g.vertex_count == 4 and set(g.degrees()) == {2} and len(g.edges) == 4

    @given(
        st.sampled_from(["path", "cycle", "star"]),
        st.integers(2, 6),
        st.sampled_from(["path", "cycle", "star"]),
        st.integers(2, 6),
    )
    def test_counts_and_definition(self, kg, ng, kh, nh):
        make = {"path": path, "cycle": lambda n: cycle(max(n, 3)), "star": star}
        g, h = make[kg](ng), make[kh](nh)
        p = cartesian_product(g, h)
        assert p.vertex_count == g.vertex_count * h.vertex_count
        assert len(p.edges) == len(g.edges) * h.vertex_count + g.vertex_count * len(h.edges)
        assert set(p.edges) == _product_by_definition(g, h)


class TestVerify:
    def test_prism_figure_labeling(self):
        inst = build_prism(6)
        inner, outer = [5, 2, 3, 4, 1, 12], [6, 7, 8, 9, 10, 11]
        labels = {}
        for i in range(1, 7):
            labels[inst.vertex("c", 1, i)] = inner[i - 1]
            labels[inst.vertex("c", 2, i)] = outer[i - 1]
        assert verify_labeling(inst.graph, labels).is_prime

    def test_path_identity(self):
        assert verify_labeling(path(2), [1, 2]).is_prime

    def test_cycle_in_order_is_prime(self):
        # 1-2-3-4-1: every adjacent pair is consecutive or involves 1
        assert verify_labeling(cycle(4), Labeling([1, 2, 3, 4])).is_prime

    def test_cycle_adjacent_evens(self):
        rep = verify_labeling(cycle(4), [1, 2, 4, 3])
        assert rep.coprimality_violations == [((1, 2), 2, 4, 2)]
        assert not rep.is_prime

    def test_reports_every_violation(self):
        rep = verify_labeling(cycle(4), [2, 2, 6, 0])
        assert rep.range_violations == [(2, 6), (3, 0)]
        assert rep.duplicate_labels == [(2, [0, 1])]
        assert len(rep.coprimality_violations) == 4
        assert not rep.is_prime
        assert rep.to_dict()["is_prime"] is False

    def test_domain_mismatch(self):
        with pytest.raises(InvalidParameter):
            verify_labeling(cycle(4), [1, 2, 3])
        with pytest.raises(InvalidParameter):
            verify_labeling(cycle(3), {0: 1, 1: 2})

    @given(st.permutations(range(1, 9)))
    def test_agrees_with_pairwise_scan(self, perm):
        g = cartesian_product(cycle(4), path(2))
        rep = verify_labeling(g, perm)
        assert rep.is_prime == scan_is_prime(g, perm)
        assert rep.is_prime == (not rep.range_violations and not rep.duplicate_labels
                                and not rep.coprimality_violations)
