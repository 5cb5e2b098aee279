import pytest
from hypothesis import given, settings, strategies as st

from endhered import (
    BracketAlphabet,
    EndheredPattern,
    SecondaryStructure,
    StructureError,
    collapse_shape,
    count_occurrences,
    enumerate_matchings,
    from_arcs,
    parse_dotbracket,
    random_matching,
    serialize_dotbracket,
    structure_to_shape_text,
    to_matching,
    validate_waterman_ponty,
)

PAT21 = EndheredPattern.from_string("21")

SHAPE_EXAMPLE = "..(((.((..(((....))).(((.....)))))))).."


class TestAlphabet:
    def test_default_order(self):
        alpha = BracketAlphabet.default()
        assert alpha.pairs[:4] == (("(", ")"), ("[", "]"), ("{", "}"), ("<", ">"))
        assert alpha.pairs[4] == ("a", "A")

    def test_uppercase_opens_flip(self):
        alpha = BracketAlphabet.default(uppercase_opens=True)
        assert alpha.pairs[4] == ("A", "a")

    def test_rejects_duplicates_and_dot(self):
        with pytest.raises(StructureError):
            BracketAlphabet((("(", ")"), ("(", "]")))
        with pytest.raises(StructureError):
            BracketAlphabet(((".", ")"),))


class TestParse:
    def test_single_pair(self):
        s = parse_dotbracket("()")
        assert s.length == 2 and s.pairs == {(1, 2)}

    def test_crossing(self):
        assert parse_dotbracket("([)]").pairs == {(1, 3), (2, 4)}

    def test_with_dots(self):
        s = parse_dotbracket("((..))")
        assert s.length == 6 and s.pairs == {(1, 6), (2, 5)}

    def test_unmatched_closer(self):
        with pytest.raises(StructureError, match="position 3"):
            parse_dotbracket("()]")

    def test_unmatched_opener(self):
        with pytest.raises(StructureError, match=r"position\(s\) \[1\]"):
            parse_dotbracket("((.)")

    def test_unknown_character(self):
        with pytest.raises(StructureError, match="position 2"):
            parse_dotbracket("(?)")

    def test_letter_brackets(self):
        assert parse_dotbracket("a.A").pairs == {(1, 3)}

    def test_same_type_properly_nested(self):
        # single bracket type parses to a non-crossing pair set
        s = parse_dotbracket("(()(()))")
        pairs = sorted(s.pairs)
        for i, a in enumerate(pairs):
            for b in pairs[i + 1 :]:
                assert not (a[0] < b[0] < a[1] < b[1])


class TestSerialize:
    def test_single_pair(self):
        assert serialize_dotbracket(SecondaryStructure(2, [(1, 2)])) == "()"

    def test_fcfs_crossing(self):
        assert serialize_dotbracket(SecondaryStructure(4, [(1, 3), (2, 4)])) == "([)]"

    def test_unpaired_positions(self):
        assert serialize_dotbracket(SecondaryStructure(5, [(1, 5)])) == "(...)"

    def test_alphabet_exhausted(self):
        alpha = BracketAlphabet((("(", ")"),))
        with pytest.raises(StructureError, match="exhausted"):
            serialize_dotbracket(SecondaryStructure(4, [(1, 3), (2, 4)]), alpha)

    @pytest.mark.parametrize(
        "text",
        [
            "()",
            "([)]",
            "((..))",
            SHAPE_EXAMPLE,
            "((((((.(((((.((.......((((.(.(.[..)]..).)))))).))))).))))))",
            "{{...((((((((....))))))((((...[[[...))))}}.))...]]]",
        ],
    )
    def test_round_trip(self, text):
        s = parse_dotbracket(text)
        again = parse_dotbracket(serialize_dotbracket(s))
        assert again.pairs == s.pairs and again.length == s.length

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=10))
    def test_round_trip_random_matchings(self, seed, n):
        m = random_matching(n, seed)
        pairs = [(a.left, a.right) for a in m.arcs()]
        s = SecondaryStructure(2 * n, pairs)
        assert parse_dotbracket(serialize_dotbracket(s)).pairs == s.pairs


class TestValidate:
    def test_all_clear(self):
        report = validate_waterman_ponty(SecondaryStructure(5, [(1, 5)]), theta=3)
        assert report.ok

    def test_distance_violation(self):
        report = validate_waterman_ponty(SecondaryStructure(3, [(1, 3)]), theta=3)
        assert report.distance_violations == [(1, 3)]
        assert not report.ok

    def test_pseudoknot_violation(self):
        report = validate_waterman_ponty(SecondaryStructure(4, [(1, 3), (2, 4)]), theta=0)
        assert report.pseudoknot_violations == [((1, 3), (2, 4))]

    def test_monogamy_violation(self):
        s = SecondaryStructure(4, [(1, 3), (3, 4)])
        report = validate_waterman_ponty(s, theta=0)
        assert report.monogamy_violations == [((1, 3), (3, 4))]

    def test_negative_theta(self):
        with pytest.raises(StructureError):
            validate_waterman_ponty(SecondaryStructure(2, [(1, 2)]), theta=-1)


class TestToMatching:
    def test_hairpin_with_dots(self):
        m = to_matching(parse_dotbracket("..().."))
        assert m == from_arcs([(1, 2)], 1)

    def test_interleaved(self):
        m = to_matching(parse_dotbracket("(.[.).]"))
        assert m == from_arcs([(1, 3), (2, 4)], 2)

    def test_no_pairs(self):
        assert to_matching(parse_dotbracket("....")).size == 0

    def test_preserves_crossings(self):
        text = "{{...((((((((....))))))((((...[[[...))))}}.))...]]]"
        s = parse_dotbracket(text)
        m = to_matching(s)
        paired = sorted(p for pair in s.pairs for p in pair)
        rank = {p: r for r, p in enumerate(paired, start=1)}
        for a in s.pairs:
            for b in s.pairs:
                crossed = a[0] < b[0] < a[1] < b[1]
                image_crossed = rank[a[0]] < rank[b[0]] < rank[a[1]] < rank[b[1]]
                assert crossed == image_crossed


class TestCollapse:
    def test_paper_shape_example(self):
        assert structure_to_shape_text(SHAPE_EXAMPLE) == "(()())"

    def test_triple_nest(self):
        m = from_arcs([(1, 6), (2, 5), (3, 4)], 3)
        assert collapse_shape(m) == from_arcs([(1, 2)], 1)

    def test_crossing_unchanged(self):
        m = from_arcs([(1, 3), (2, 4)], 2)
        assert collapse_shape(m) == m

    def test_idempotent_exhaustive(self):
        for n in range(0, 6):
            for m in enumerate_matchings(n):
                shape = collapse_shape(m)
                assert collapse_shape(shape) == shape

    def test_zero_21_exhaustive(self):
        for n in range(0, 6):
            for m in enumerate_matchings(n):
                assert count_occurrences(collapse_shape(m), PAT21) == 0

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_zero_21_random(self, seed):
        m = random_matching(25, seed)
        assert count_occurrences(collapse_shape(m), PAT21) == 0


def test_structure_rejects_bad_pairs():
    with pytest.raises(StructureError):
        SecondaryStructure(4, [(0, 3)])
    with pytest.raises(StructureError):
        SecondaryStructure(4, [(3, 3)])
    with pytest.raises(StructureError):
        SecondaryStructure(4, [(2, 5)])
