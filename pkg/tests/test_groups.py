import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genplanar.catalog import group_from_spec
from genplanar.groups import (
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
    TableTooLarge,
    are_isomorphic,
    center,
    centralizer,
    commutator,
    from_cayley_table,
    generated_closure,
    is_cyclic,
    is_two_generated,
    iter_bits,
    mask_of,
    read_cayley_table_text,
    totient,
    write_cayley_table_text,
)

from oracles import naive_closure


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


class TestConstruction:
    def test_c3_from_table(self):
        G = from_cayley_table(cyclic_table(3), name="C3")
        assert G.order == 3
        assert G.element_orders == [1, 3, 3]
        assert G.inverses == [0, 2, 1]

    def test_c2_identity_case(self):
        G = from_cayley_table([[0, 1], [1, 0]])
        assert G.inverses == [0, 1]
        assert G.element_orders == [1, 2]

    def test_repeated_entry_rejected(self):
        with pytest.raises(NotLatinSquare):
            from_cayley_table([[0, 1, 1], [1, 2, 0], [2, 0, 1]])

    def test_bad_column_rejected(self):
        # rows are permutations but column 0 repeats
        with pytest.raises(NotLatinSquare):
            from_cayley_table([[0, 1, 2], [0, 2, 1], [1, 0, 2]])

    def test_no_identity_rejected(self):
        # subtraction mod 3: a Latin square with no two-sided identity
        table = [[(x - y) % 3 for y in range(3)] for x in range(3)]
        with pytest.raises(NoIdentity):
            from_cayley_table(table)

    def test_identity_renumbered(self):
        # C3 with the identity sitting at index 2
        sigma = [2, 1, 0]
        base = cyclic_table(3)
        table = [[0] * 3 for _ in range(3)]
        for x in range(3):
            for y in range(3):
                table[sigma[x]][sigma[y]] = sigma[base[x][y]]
        G = from_cayley_table(table, element_names=["a", "b", "ident"])
        assert G.element_orders[0] == 1
        assert G.element_names[0] == "ident"
        assert sorted(G.element_orders) == [1, 3, 3]

    def test_not_associative_reports_triple(self):
        # Latin square with identity row/column, but not associative
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAssociative) as exc:
            from_cayley_table(table)
        x, y, z = exc.value.triple
        t = table
        assert t[t[x][y]][z] != t[x][t[y][z]]

    def test_out_of_range_entry(self):
        with pytest.raises(ValueError, match="entries"):
            from_cayley_table([[0, 1], [1, 5]])

    def test_large_table_guard(self):
        with pytest.raises(TableTooLarge):
            from_cayley_table(cyclic_table(300))
        G = from_cayley_table(cyclic_table(300), unchecked=True)
        assert G.order == 300

    def test_table_is_int32_contiguous(self):
        G = from_cayley_table(cyclic_table(4))
        assert G.table.dtype == np.int32
        assert G.table.flags.c_contiguous


class TestClosure:
    def test_q8_cyclic_subgroup_of_i(self):
        q8 = group_from_spec("Dic:2")
        # element "a" has order 4; its closure is {e, a, a^2, a^3}
        i = q8.element_names.index("a")
        sub = generated_closure(q8, [i])
        assert sub.size == 4
        assert sub.mask == mask_of(
            q8.element_names.index(n) for n in ("e", "a", "a^2", "a^3")
        )

    def test_s3_two_reflections_generate(self):
        s3 = group_from_spec("D:3")
        b = s3.element_names.index("s")
        ba = s3.element_names.index("sr")
        assert generated_closure(s3, [b, ba]).size == 6

    def test_empty_seeds_trivial(self, corpus):
        for G in corpus[:8]:
            assert generated_closure(G, []).mask == 1

    def test_matches_naive_closure(self, corpus):
        for G in corpus:
            if G.order > 12:
                continue
            for x in range(G.order):
                for y in range(G.order):
                    got = generated_closure(G, [x, y])
                    expect = naive_closure(G, {x, y})
                    assert got.mask == mask_of(expect)

    @given(st.sets(st.integers(0, 23), max_size=4), st.sets(st.integers(0, 23), max_size=2))
    @settings(max_examples=60, deadline=None)
    def test_monotone_idempotent(self, seeds, extra):
        G = _S4
        small = generated_closure(G, seeds)
        large = generated_closure(G, seeds | extra)
        assert small.mask & large.mask == small.mask
        again = generated_closure(G, list(iter_bits(small.mask)))
        assert again.mask == small.mask


_S4 = group_from_spec("S:4")


class TestElementOps:
    def test_q8_center(self):
        q8 = group_from_spec("Dic:2")
        z = center(q8)
        assert z.size == 2
        assert sorted(q8.element_orders[x] for x in z.members()) == [1, 2]

    def test_s3_centerless(self):
        assert center(group_from_spec("D:3")).size == 1

    def test_centralizer_of_identity(self, corpus):
        for G in corpus[:10]:
            assert centralizer(G, 0).size == G.order

    def test_centralizer_members_commute(self):
        d4 = group_from_spec("D:4")
        for x in range(d4.order):
            cen = centralizer(d4, x)
            for z in cen.members():
                assert d4.mul(z, x) == d4.mul(x, z)

    def test_commutator_abelian_vanishes(self):
        c12 = group_from_spec("C:12")
        assert all(
            commutator(c12, g, n) == 0 for g in range(12) for n in range(12)
        )

    def test_commutator_defining_identity(self):
        s3 = group_from_spec("D:3")
        for g in range(s3.order):
            for n in range(s3.order):
                lhs = s3.mul(g, commutator(s3, g, n))
                rhs = s3.mul(s3.mul(s3.inv(n), g), n)
                assert lhs == rhs

    def test_commutator_with_identity(self, corpus):
        for G in corpus[:10]:
            assert all(commutator(G, g, 0) == 0 for g in range(G.order))


class TestTwoGenerated:
    def test_examples(self, by_name):
        assert not is_two_generated(by_name["C2xC2xC2"])
        assert is_two_generated(by_name["Q8"])
        assert is_two_generated(by_name["C15"])
        assert is_two_generated(by_name["C1"])


class TestTotient:
    @pytest.mark.parametrize("n,phi", [(6, 2), (7, 6), (1, 1), (12, 4), (30, 8)])
    def test_values(self, n, phi):
        assert totient(n) == phi

    def test_counts_cyclic_generators(self):
        for n in range(1, 101):
            G = group_from_spec(f"C:{n}")
            assert totient(n) == sum(
                1 for x in range(n) if G.element_orders[x] == n
            )

    def test_closure_single_generators_match(self):
        for n in (2, 6, 12, 30):
            G = group_from_spec(f"C:{n}")
            count = sum(
                1
                for x in range(n)
                if generated_closure(G, [x]).size == n
            )
            assert count == totient(n)


class TestIsomorphism:
    def test_d4_vs_q8(self):
        assert not are_isomorphic(group_from_spec("D:4"), group_from_spec("Dic:2"))

    def test_c6_vs_c2xc3(self):
        assert are_isomorphic(group_from_spec("C:6"), group_from_spec("C:2 x C:3"))

    def test_d3_vs_c6(self):
        assert not are_isomorphic(group_from_spec("D:3"), group_from_spec("C:6"))

    def test_reflexive_symmetric_on_corpus(self, corpus):
        for G in corpus:
            assert are_isomorphic(G, G)
        for G in corpus[:12]:
            for H in corpus[:12]:
                assert are_isomorphic(G, H) == are_isomorphic(H, G)

    def test_three_generator_group(self):
        a = group_from_spec("C:2 x C:2 x C:2")
        b = group_from_spec("C:2 x C:4")
        assert not are_isomorphic(a, b)
        assert are_isomorphic(a, group_from_spec("C:2 x C:2 x C:2"))


class TestCayleyText:
    def test_round_trip(self):
        G = group_from_spec("D:4")
        text = write_cayley_table_text(G)
        H = from_cayley_table(read_cayley_table_text(text))
        assert are_isomorphic(G, H)

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\n2\n# another\n0 1\n1 0\n"
        table = read_cayley_table_text(text)
        assert table.tolist() == [[0, 1], [1, 0]]

    def test_identity_not_first_in_file(self):
        # addition table written with rows/cols in order 1,0 (identity at 1)
        text = "2\n0 1\n1 0\n".replace("0 1\n1 0", "1 0\n0 1")
        G = from_cayley_table(read_cayley_table_text(text))
        assert G.element_orders[0] == 1

    @pytest.mark.parametrize(
        "text,match",
        [
            ("0\n", "order"),
            ("2\n0 1\n", "expected 2 table rows"),
            ("2\n0 1 1\n1 0\n", "entries"),
            ("2\n0 x\n1 0\n", "non-integer"),
            ("2\n0 3\n1 0\n", "out of range"),
            ("# only comments\n", "no group order"),
        ],
    )
    def test_parse_errors(self, text, match):
        with pytest.raises(ValueError, match=match):
            read_cayley_table_text(text)


def test_is_cyclic(by_name):
    assert is_cyclic(by_name["C12"])
    assert not is_cyclic(by_name["D6"])
