import random

import networkx as nx
import pytest

from cliffgraph import (
    CapacityError,
    ParameterError,
    canonical_form,
    census_table,
    cliff_counts,
    complete,
    det_integer,
    edgeless,
    emit_graph6,
    enumerate_classes,
    hierarchy_check,
    is_mating,
    relabel,
    sequence,
    sequence_terms,
    union,
)
from cliffgraph.census import (
    canonical_form as cf,
    class_profiles,
    code_to_graph,
    enumerate_class_codes,
    graph_code,
)
from helpers import GRAPH_COUNTS, all_graphs, gl2_order, random_graph, sp2_order


class TestCanonicalForm:
    def test_relabeling_invariance(self):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randint(1, 6)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(relabel(g, perm))

    def test_reversed_path(self):
        from cliffgraph import path
        p4 = path(4)
        assert canonical_form(p4) == canonical_form(relabel(p4, [3, 2, 1, 0]))

    def test_distinct_forms_count_n4(self):
        forms = {canonical_form(g) for g in all_graphs(4)}
        assert len(forms) == 11

    def test_capacity(self):
        with pytest.raises(CapacityError):
            canonical_form(edgeless(9))

    def test_round_trip_through_codes(self):
        rng = random.Random(2)
        for _ in range(40):
            g = random_graph(rng, 7)
            assert code_to_graph(7, graph_code(g)) == g


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_counts(self, n):
        assert len(enumerate_class_codes(n)) == GRAPH_COUNTS[n - 1]

    def test_representatives_are_canonical_and_sorted(self):
        for n in range(1, 6):
            codes = enumerate_class_codes(n)
            assert list(codes) == sorted(codes)
            for code in codes:
                assert cf(code_to_graph(n, code)).code == code

    def test_parallel_scan_agrees_with_serial(self):
        for n in (3, 4, 5):
            serial = enumerate_class_codes(n, workers=1)
            for workers in (2, 3):
                assert enumerate_class_codes(n, workers=workers) == serial

    def test_range_errors(self):
        with pytest.raises(ParameterError):
            enumerate_class_codes(0)
        with pytest.raises(ParameterError):
            enumerate_class_codes(9)

    def test_agrees_with_networkx_isomorphism(self):
        rng = random.Random(33)
        buckets = {}
        for g in all_graphs(5):
            buckets.setdefault(canonical_form(g).code, []).append(g)
        assert len(buckets) == GRAPH_COUNTS[4]

        def to_nx(g):
            out = nx.Graph()
            out.add_nodes_from(range(g.n))
            out.add_edges_from(g.edges())
            return out

        groups = list(buckets.values())
        for _ in range(40):
            group = rng.choice(groups)
            g1, g2 = rng.choice(group), rng.choice(group)
            assert nx.is_isomorphic(to_nx(g1), to_nx(g2))
        for _ in range(40):
            ga, gb = rng.sample(groups, 2)
            assert not nx.is_isomorphic(to_nx(rng.choice(ga)), to_nx(rng.choice(gb)))


class TestCliffCounts:
    def test_small_tables(self):
        assert cliff_counts(1) == {2: 1}
        assert cliff_counts(2) == {1: 1, 4: 1}
        assert cliff_counts(3) == {2: 3, 8: 1}
        assert cliff_counts(4) == {1: 4, 4: 6, 16: 1}

    def test_counts_total_and_parity_constraints(self):
        for n in range(1, 7):
            counts = cliff_counts(n)
            assert sum(counts.values()) == GRAPH_COUNTS[n - 1]
            for dim in counts:
                m = dim.bit_length() - 1
                assert dim == 1 << m
                assert (n - m) % 2 == 0
            if n % 2 == 1:
                assert 1 not in counts


class TestSequences:
    def test_values_from_the_tables(self):
        assert sequence("A141040", 3) == [1, 4, 47]
        assert sequence("A004110", 7) == [1, 1, 2, 5, 16, 78, 588]
        assert sequence("A109717", 7) == [0, 1, 1, 4, 9, 57, 354]

    def test_difference_identities(self):
        n_max = 6
        total = sequence("A000088", n_max)
        odd_by_pairs = sequence("A141040", n_max // 2)
        odd = [odd_by_pairs[n // 2 - 1] if n % 2 == 0 else 0 for n in range(1, n_max + 1)]
        mating = sequence("A004110", n_max)
        invertible = sequence("A109717", n_max)
        assert sequence("A140981", n_max) == [t - o for t, o in zip(total, odd)]
        assert sequence("A141580", n_max) == [t - m for t, m in zip(total, mating)]
        assert sequence("A133206", n_max) == [t - i for t, i in zip(total, invertible)]
        assert sequence("A133279", n_max) == [m - i for m, i in zip(mating, invertible)]
        assert sequence("A103869", n_max) == [i - o for i, o in zip(invertible, odd)]

    def test_provenance_annotations(self):
        terms = sequence_terms("A141040", 3)
        assert [t["value"] for t in terms] == [1, 4, 47]
        assert all(t["provenance"] == "matches-reference" for t in terms)
        assert [t["vertices"] for t in terms] == [2, 4, 6]

    def test_errors(self):
        with pytest.raises(ParameterError):
            sequence("A000001", 3)
        with pytest.raises(CapacityError):
            sequence("A141040", 5)
        with pytest.raises(CapacityError):
            sequence("A000088", 9)
        with pytest.raises(ParameterError):
            sequence("A000088", 0)


class TestProfiles:
    def test_profiles_are_isomorphism_invariant(self):
        from cliffgraph import BitMatrix, det_parity, rank_gf2
        rng = random.Random(44)
        for n in range(1, 6):
            for p in class_profiles(n):
                g = code_to_graph(n, p.code)
                perm = list(range(n))
                rng.shuffle(perm)
                h = relabel(g, perm)
                assert rank_gf2(BitMatrix.from_graph(h)) == p.rank
                assert det_parity(BitMatrix.from_graph(h)) == p.det_parity
                assert det_integer(h) == p.det
                assert is_mating(h) == p.mating
                assert len(h.isolated_vertices()) == p.isolated

    def test_odd_determinant_labeled_counts_match_symplectic_formula(self):
        # full-rank adjacency matrices over GF(2) are exactly the
        # nonsingular alternating forms, counted by |GL(2k,2)| / |Sp(2k,2)|;
        # summing orbit sizes over the census must reproduce that number
        from cliffgraph.census import _orbit_codes
        for n in (2, 4, 6):
            labeled = 0
            for p in class_profiles(n):
                if p.odd_determinant:
                    labeled += len(set(_orbit_codes(n, p.code).tolist()))
            assert labeled == gl2_order(n) // sp2_order(n // 2)

    def test_odd_determinant_classes_have_no_isolated_vertices(self):
        for n in range(1, 7):
            for p in class_profiles(n):
                if p.odd_determinant:
                    assert p.isolated == 0

    def test_census_table_totals(self):
        for n in range(1, 7):
            table = census_table(n)
            assert table.total == GRAPH_COUNTS[n - 1]
            assert sum(r.count for r in table.rows) == table.total


class TestHierarchy:
    def test_n6_strictness_list(self):
        report = hierarchy_check(6)
        assert report.odd_subset_of_invertible
        assert report.invertible_subset_of_mating
        assert len(report.invertible_even) == 10
        k3k3 = union(complete(3), complete(3))
        rep_code = canonical_form(k3k3).code
        rep_g6 = emit_graph6(code_to_graph(6, rep_code)).decode("ascii")
        assert rep_g6 in report.invertible_even

    @pytest.mark.parametrize("n", [2, 4])
    def test_no_invertible_even_classes(self, n):
        assert hierarchy_check(n).invertible_even == ()

    def test_n4_mating_not_odd_is_k3_plus_point(self):
        report = hierarchy_check(4)
        assert len(report.mating_not_odd) == 1
        expected = union(complete(3), edgeless(1))
        rep = code_to_graph(4, canonical_form(expected).code)
        assert report.mating_not_odd[0] == emit_graph6(rep).decode("ascii")

    def test_smallest_invertible_even_class_is_k3(self):
        report = hierarchy_check(3)
        assert report.invertible_even == (emit_graph6(complete(3)).decode("ascii"),)

    def test_inclusions_hold_up_to_n7(self):
        for n in range(1, 8):
            report = hierarchy_check(n)
            assert report.odd_subset_of_invertible
            assert report.invertible_subset_of_mating
            assert report.odd_count <= report.invertible_count <= report.mating_count
