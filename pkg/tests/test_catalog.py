import json

import pytest

from genplanar.catalog import (
    BadParameter,
    FamilyAtom,
    FileAtom,
    ProductSpec,
    SpecSyntaxError,
    UnknownFamily,
    build_group,
    corpus_up_to_15,
    cyclic_k5_elements,
    group_from_spec,
    parse_group_spec,
    read_cayley_file,
    verify_theorem,
    THEOREM_LABELS,
)
from genplanar.graphs import generating_graph, induced_subgraph, is_complete
from genplanar.groups import NotAssociative, are_isomorphic, from_cayley_table

# the quaternion group as a literal table over 1, -1, i, -i, j, -j, k, -k
QUATERNION_TABLE = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
]


class TestParser:
    def test_single_atom(self):
        assert parse_group_spec("C:6") == FamilyAtom("C", (6,))

    def test_product(self):
        spec = parse_group_spec("C:4 x C:2")
        assert spec == ProductSpec((FamilyAtom("C", (4,)), FamilyAtom("C", (2,))))

    def test_whitespace_insensitive(self):
        assert parse_group_spec(" C:4x C:2 ") == parse_group_spec("C:4 x C:2")

    def test_metacyclic_params(self):
        assert parse_group_spec("M:3,2,2") == FamilyAtom("M", (3, 2, 2))

    def test_file_atom(self):
        assert parse_group_spec("file:tables/c6.txt") == FileAtom("tables/c6.txt")

    @pytest.mark.parametrize(
        "text",
        ["C:6", "D:4", "Dic:3", "S:5", "A:4", "M:7,3,2", "file:some/table.txt",
         "C:2 x C:2 x C:3", "C:4 x file:t.txt"],
    )
    def test_round_trip(self, text):
        spec = parse_group_spec(text)
        assert parse_group_spec(spec.pretty()) == spec

    def test_unknown_family(self):
        with pytest.raises(UnknownFamily, match="Z"):
            parse_group_spec("Z:5")

    @pytest.mark.parametrize(
        "text,pos",
        [
            ("C:", 2),
            ("C:4 y C:2", 4),
            ("x C:2", 0),
            ("M:3,2", 6),
            ("file:", 5),
            ("C:4 x", 5),
        ],
    )
    def test_syntax_error_position(self, text, pos):
        with pytest.raises(SpecSyntaxError) as exc:
            parse_group_spec(text)
        assert exc.value.position == pos

    def test_dihedral_convention_order_2n(self):
        assert build_group(parse_group_spec("D:6")).order == 12


class TestBuildGroup:
    def test_dic2_is_quaternion(self):
        dic2 = group_from_spec("Dic:2")
        assert sum(1 for k in dic2.element_orders if k == 2) == 1
        literal = from_cayley_table(QUATERNION_TABLE, name="Q8-literal")
        assert are_isomorphic(dic2, literal)

    def test_metacyclic_d3(self):
        assert are_isomorphic(group_from_spec("M:3,2,2"), group_from_spec("D:3"))

    def test_s3_is_d3(self):
        s3 = group_from_spec("S:3")
        assert s3.order == 6
        assert are_isomorphic(s3, group_from_spec("D:3"))

    def test_a4_order(self):
        assert group_from_spec("A:4").order == 12

    def test_product_order(self):
        assert group_from_spec("C:3 x C:5 x C:2").order == 30

    @pytest.mark.parametrize(
        "text", ["C:0", "D:0", "Dic:0", "S:7", "A:0", "M:5,2,2", "M:0,1,0"]
    )
    def test_bad_parameters(self, text):
        with pytest.raises(BadParameter):
            group_from_spec(text)

    def test_s5_validated_a6_unchecked_path(self):
        assert group_from_spec("S:5").order == 120  # full n^3 validation
        assert group_from_spec("A:5").order == 60


class TestCorpus:
    def test_exactly_28(self, corpus):
        assert len(corpus) == 28

    def test_order_8_sublist(self, corpus):
        assert sum(1 for g in corpus if g.order == 8) == 5

    def test_order_11_cyclic_only(self, corpus):
        order11 = [g for g in corpus if g.order == 11]
        assert len(order11) == 1 and order11[0].element_orders.count(11) == 10

    def test_counts_by_order(self, corpus):
        expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
                    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1}
        counts = {}
        for g in corpus:
            counts[g.order] = counts.get(g.order, 0) + 1
        assert counts == expected

    def test_pairwise_non_isomorphic(self, corpus):
        for i, G in enumerate(corpus):
            for H in corpus[i + 1 :]:
                assert not are_isomorphic(G, H), (G.name, H.name)


class TestCayleyFiles:
    def test_load_c6_table(self, tmp_path):
        f = tmp_path / "mod6.txt"
        rows = [[(i + j) % 6 for j in range(6)] for i in range(6)]
        f.write_text("# addition mod 6\n6\n" + "\n".join(
            " ".join(map(str, r)) for r in rows
        ) + "\n")
        G = read_cayley_file(f)
        assert G.name == "mod6"
        assert are_isomorphic(G, group_from_spec("C:6"))

    def test_zero_order_rejected(self, tmp_path):
        f = tmp_path / "empty.txt"
        f.write_text("0\n")
        with pytest.raises(BadParameter):
            read_cayley_file(f)

    def test_non_associative_table(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text(
            "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"
        )
        with pytest.raises(NotAssociative):
            read_cayley_file(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_cayley_file(tmp_path / "nope.txt")

    def test_file_spec_atom(self, tmp_path):
        f = tmp_path / "v4.txt"
        f.write_text("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n")
        G = group_from_spec(f"file:{f}")
        assert are_isomorphic(G, group_from_spec("C:2 x C:2"))


class TestVerifyTheorem:
    def test_corpus_match(self, corpus):
        report = verify_theorem(corpus)
        assert report.match and report.consistent
        assert report.found == THEOREM_LABELS
        assert len(report.records) == 28

    def test_single_c7(self):
        report = verify_theorem([group_from_spec("C:7")])
        rec = report.records[0]
        assert rec.planar is False
        assert rec.witness.kind == "K5"
        assert not report.match  # eleven targets not found

    def test_empty_vacuous(self):
        report = verify_theorem([])
        assert report.match
        assert report.records == []

    def test_non_two_generated_flagged(self, corpus):
        report = verify_theorem(corpus)
        rec = next(r for r in report.records if r.name == "C2xC2xC2")
        assert rec.planar is True
        assert "outside theorem scope" in rec.note
        assert rec.matched is None

    def test_trivial_flagged_vacuous(self, corpus):
        report = verify_theorem(corpus)
        rec = next(r for r in report.records if r.order == 1)
        assert "vacuous" in rec.note

    def test_json_deterministic(self, corpus):
        a = json.dumps(verify_theorem(corpus).as_dict("v", "default"), sort_keys=True)
        b = json.dumps(
            verify_theorem(corpus_up_to_15()).as_dict("v", "default"), sort_keys=True
        )
        assert a == b

    def test_ratio_serialization(self, corpus):
        report = verify_theorem([group_from_spec("C:6")])
        d = report.records[0].as_dict()
        assert d["p2"] == {"num": 2, "den": 3}
        assert d["alpha_profile"][0]["alpha"]["den"] >= 1


class TestCyclicK5:
    @pytest.mark.parametrize("n", [7, 8, 12, 30])
    def test_witness_elements(self, n):
        G = group_from_spec(f"C:{n}")
        elems = cyclic_k5_elements(G)
        assert len(set(elems)) == 5 and 0 not in elems
        sub = induced_subgraph(generating_graph(G), [x - 1 for x in elems])
        assert is_complete(sub)

    def test_rejects_small_or_noncyclic(self):
        with pytest.raises(BadParameter):
            cyclic_k5_elements(group_from_spec("C:6"))
        with pytest.raises(BadParameter):
            cyclic_k5_elements(group_from_spec("D:6"))
