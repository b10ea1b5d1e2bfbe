import random

import networkx as nx
import pytest

from cliffgraph import (
    CapacityError,
    FamilySpec,
    Graph,
    Graph6Error,
    ParameterError,
    build_family,
    complete,
    cycle,
    dynkin_d,
    dynkin_e,
    edgeless,
    emit_graph6,
    from_edges,
    gkm,
    is_mating,
    parse_family,
    parse_graph6,
    path,
    relabel,
    star,
    union,
)
from cliffgraph.census import canonical_form
from helpers import all_graphs, random_graph


class TestFamilies:
    def test_path6_edges(self):
        assert list(path(6).edges()) == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]

    def test_gkm_0_3_is_edgeless(self):
        g = gkm(0, 3)
        assert g == edgeless(3)
        assert g.edge_count() == 0

    def test_star8_degree_sequence(self):
        assert star(8).degree_sequence() == (7, 1, 1, 1, 1, 1, 1, 1)

    def test_star_hub_is_vertex_one(self):
        g = star(5)
        assert g.degree(0) == 4

    def test_complete_and_cycle(self):
        assert complete(4).edge_count() == 6
        assert cycle(4).degree_sequence() == (2, 2, 2, 2)
        assert cycle(3) == complete(3)

    def test_gkm_layout(self):
        g = gkm(2, 1)
        assert list(g.edges()) == [(0, 1), (2, 3)]
        assert g.isolated_vertices() == (4,)

    def test_dynkin_layouts(self):
        d4 = dynkin_d(4)
        assert d4.degree_sequence() == (3, 1, 1, 1)
        assert d4.has_edge(1, 3)
        e6 = dynkin_e(6)
        assert e6.degree_sequence() == (3, 2, 2, 1, 1, 1)
        assert e6.has_edge(2, 5)

    @pytest.mark.parametrize("bad", [
        lambda: path(0),
        lambda: cycle(2),
        lambda: gkm(0, 0),
        lambda: gkm(-1, 2),
        lambda: dynkin_d(3),
        lambda: dynkin_e(5),
    ])
    def test_invalid_parameters(self, bad):
        with pytest.raises(ParameterError):
            bad()

    def test_vertex_cap(self):
        with pytest.raises(CapacityError):
            edgeless(65)
        assert edgeless(64).n == 64

    def test_constructor_rejects_asymmetry_and_loops(self):
        with pytest.raises(ParameterError):
            Graph(2, (0b10, 0b00))
        with pytest.raises(ParameterError):
            Graph(2, (0b01, 0b10))

    def test_every_family_satisfies_invariants(self):
        specs = [path(7), star(7), complete(7), cycle(7), edgeless(7),
                 gkm(3, 1), dynkin_d(9), dynkin_e(8)]
        for g in specs:
            for i in range(g.n):
                assert not g.has_edge(i, i)
                for j in range(g.n):
                    assert g.has_edge(i, j) == g.has_edge(j, i)


class TestUnion:
    def test_block_structure(self):
        g = union(complete(3), complete(3))
        assert g.n == 6
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]

    def test_isolated_vertex_append(self):
        g = union(path(3), edgeless(1))
        assert g.isolated_vertices() == (3,)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            union(edgeless(40), edgeless(40))

    def test_associativity_exact_and_canonical(self):
        rng = random.Random(7)
        for _ in range(20):
            a = random_graph(rng, rng.randint(1, 2))
            b = random_graph(rng, rng.randint(1, 2))
            c = random_graph(rng, rng.randint(1, 4))
            left = union(union(a, b), c)
            right = union(a, union(b, c))
            assert left == right
            assert canonical_form(left) == canonical_form(right)


class TestMating:
    def test_examples(self):
        assert is_mating(complete(3))
        assert not is_mating(union(edgeless(1), edgeless(1)))
        assert is_mating(union(complete(2), edgeless(1)))

    def test_union_of_mating_graphs(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(200):
            g1 = random_graph(rng, rng.randint(1, 4))
            g2 = random_graph(rng, rng.randint(1, 4))
            u = union(g1, g2)
            if is_mating(g1) and is_mating(g2) and len(u.isolated_vertices()) <= 1:
                assert is_mating(u)
                checked += 1
        assert checked > 10


class TestGraph6:
    def test_k1_by_hand(self):
        assert emit_graph6(edgeless(1)) == b"@"

    def test_known_encodings(self):
        assert emit_graph6(complete(2)) == b"A_"
        assert emit_graph6(complete(3)) == b"Bw"

    def test_roundtrip_exhaustive_small(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert parse_graph6(emit_graph6(g)) == g

    def test_roundtrip_path6(self):
        assert parse_graph6(emit_graph6(path(6))) == path(6)

    def test_roundtrip_large_and_long_header(self):
        rng = random.Random(11)
        for n in (62, 63, 64):
            g = random_graph(rng, n)
            data = emit_graph6(g)
            if n >= 63:
                assert data[0] == 126
            assert parse_graph6(data) == g

    def test_against_networkx(self):
        rng = random.Random(5)
        for n in (1, 2, 5, 6, 7, 8, 13, 30, 62):
            g = random_graph(rng, n)
            nxg = nx.Graph()
            nxg.add_nodes_from(range(n))
            nxg.add_edges_from(g.edges())
            ours = emit_graph6(g)
            theirs = nx.to_graph6_bytes(nxg, header=False).strip()
            assert ours == theirs
            assert parse_graph6(theirs) == g

    def test_optional_prefix_accepted(self):
        assert parse_graph6(b">>graph6<<Bw\n") == complete(3)

    def test_parse_errors_carry_offsets(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6(b"E?")   # n=6 needs 3 body bytes
        assert err.value.offset == 2
        with pytest.raises(Graph6Error):
            parse_graph6(b"Bw~")  # trailing byte
        with pytest.raises(Graph6Error):
            parse_graph6(b"A" + bytes([30]))  # body byte below printable range
        with pytest.raises(Graph6Error):
            parse_graph6(b"Aw")   # nonzero padding for n=2
        with pytest.raises(Graph6Error):
            parse_graph6(b"")

    def test_parse_capacity(self):
        with pytest.raises(CapacityError):
            parse_graph6(bytes([126, 63, 64, 64]))  # n = 65


class TestFamilySpecLanguage:
    @pytest.mark.parametrize("text,expected", [
        ("path:7", path(7)),
        ("star:8", star(8)),
        ("complete:5", complete(5)),
        ("cycle:4", cycle(4)),
        ("edgeless:3", edgeless(3)),
        ("gkm:3,2", gkm(3, 2)),
        ("dynkin:A5", path(5)),
        ("dynkin:D4", dynkin_d(4)),
        ("dynkin:E8", dynkin_e(8)),
        ("union:(complete:3,complete:3)", union(complete(3), complete(3))),
        ("union:(gkm:1,0,edgeless:1,path:2)", union(union(complete(2), edgeless(1)), path(2))),
        ("union:(union:(path:2,path:2),star:3)", union(union(path(2), path(2)), star(3))),
    ])
    def test_parse_and_build(self, text, expected):
        assert build_family(parse_family(text)) == expected

    @pytest.mark.parametrize("text", [
        "frob:3", "path:", "path:3,4", "gkm:3", "dynkin:F4", "dynkin:A",
        "union:(path:2", "union:()", "union:(path:2)", "path:3junk",
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ParameterError):
            build_family(parse_family(text))

    def test_spec_kind_validation(self):
        with pytest.raises(ParameterError):
            FamilySpec("mystery", (3,))
        with pytest.raises(ParameterError):
            build_family(FamilySpec("union", (), ()))


def test_relabel_is_an_isomorphism():
    rng = random.Random(2)
    for _ in range(20):
        g = random_graph(rng, 6)
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert h.degree_sequence() == g.degree_sequence()
        assert canonical_form(h) == canonical_form(g)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ParameterError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ParameterError):
        from_edges(3, [(0, 3)])
