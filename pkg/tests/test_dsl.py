import re

import pytest
from hypothesis import given, strategies as st

from activefill.dsl import (
    END,
    START,
    AbsPos,
    ConstStr,
    Program,
    SubStr,
    Token,
    TokPos,
    atom_key,
    canonical,
    describe,
    describe_pos,
    evaluate,
    program_from_dict,
    program_to_dict,
    rank_key,
    rank_score,
    resolve,
    token_matches,
)

TEXT = st.text(alphabet="ab1 -.", min_size=0, max_size=12)


def prog(*atoms):
    return Program(tuple(atoms))


class TestEvaluate:
    def test_constant(self):
        assert evaluate(prog(ConstStr("X")), "anything") == "X"

    def test_first_digit_run(self):
        p = prog(SubStr(TokPos(Token.DIGITS, 1, START), TokPos(Token.DIGITS, 1, END)))
        # oracle: regex scan for the first maximal digit run
        m = re.search(r"[0-9]+", "ab12cd")
        assert evaluate(p, "ab12cd") == "ab12cd"[m.start():m.end()] == "12"

    def test_no_digit_run_fails(self):
        p = prog(SubStr(TokPos(Token.DIGITS, 1, START), TokPos(Token.DIGITS, 1, END)))
        assert evaluate(p, "abcd") is None

    def test_failure_never_partial(self):
        p = prog(ConstStr("head"),
                 SubStr(TokPos(Token.DIGITS, 1, START), TokPos(Token.DIGITS, 1, END)))
        assert evaluate(p, "no digits here") is None

    def test_negative_abs_counts_from_end(self):
        p = prog(SubStr(AbsPos(-3), AbsPos(-1)))
        assert evaluate(p, "hello") == "lo"

    def test_out_of_range_abs_fails(self):
        p = prog(SubStr(AbsPos(0), AbsPos(9)))
        assert evaluate(p, "hi") is None

    def test_empty_extraction_fails(self):
        p = prog(SubStr(AbsPos(2), AbsPos(2)))
        assert evaluate(p, "hello") is None

    def test_inverted_range_fails(self):
        p = prog(SubStr(AbsPos(3), AbsPos(1)))
        assert evaluate(p, "hello") is None

    def test_negative_occurrence_counts_from_right(self):
        p = prog(SubStr(TokPos(Token.DIGITS, -1, START), TokPos(Token.DIGITS, -1, END)))
        assert evaluate(p, "a1b22c333") == "333"

    def test_literal_token(self):
        p = prog(SubStr(TokPos(Token.LITERAL, 1, END, "-"), AbsPos(-1)))
        assert evaluate(p, "ab-cd") == "cd"

    @given(TEXT)
    def test_pure_function(self, s):
        p = prog(SubStr(TokPos(Token.ALNUM, 1, START), TokPos(Token.ALNUM, 1, END)))
        assert evaluate(p, s) == evaluate(p, s)


class TestResolve:
    @given(TEXT)
    def test_token_boundary_matches_regex_scan(self, s):
        for token, pattern in ((Token.DIGITS, r"[0-9]+"), (Token.LOWER, r"[a-z]+")):
            spans = [m.span() for m in re.finditer(pattern, s)]
            for occ in (1, 2, -1):
                for side, pick in ((START, 0), (END, 1)):
                    got = resolve(TokPos(token, occ, side), s)
                    idx = occ - 1 if occ > 0 else occ
                    expected = None
                    if -len(spans) <= idx < len(spans):
                        expected = spans[idx][pick]
                    assert got == expected

    def test_abs_bounds(self):
        assert resolve(AbsPos(0), "abc") == 0
        assert resolve(AbsPos(-1), "abc") == 3
        assert resolve(AbsPos(5), "abc") is None

    def test_literal_matches_single_occurrences(self):
        assert token_matches("a--b", Token.LITERAL, "-") == ((1, 2), (2, 3))


class TestValidation:
    def test_const_must_be_nonempty(self):
        with pytest.raises(ValueError):
            ConstStr("")

    def test_program_needs_pieces(self):
        with pytest.raises(ValueError):
            Program(())

    def test_occurrence_zero_rejected(self):
        with pytest.raises(ValueError):
            TokPos(Token.DIGITS, 0, START)

    def test_occurrence_bound(self):
        with pytest.raises(ValueError):
            TokPos(Token.DIGITS, 6, START)

    def test_abs_bound(self):
        with pytest.raises(ValueError):
            AbsPos(21)

    def test_literal_char_restrictions(self):
        with pytest.raises(ValueError):
            TokPos(Token.LITERAL, 1, START, "a")
        with pytest.raises(ValueError):
            TokPos(Token.LITERAL, 1, START)

    def test_non_literal_rejects_char(self):
        with pytest.raises(ValueError):
            TokPos(Token.DIGITS, 1, START, "-")


class TestRankScore:
    def test_token_positions_beat_absolute(self):
        tok = prog(SubStr(TokPos(Token.DIGITS, 1, START), TokPos(Token.DIGITS, 1, END)))
        abs_ = prog(SubStr(AbsPos(2), AbsPos(4)))
        assert rank_score(tok) > rank_score(abs_)

    def test_fewer_pieces_beat_more_with_equal_terms(self):
        one = prog(SubStr(TokPos(Token.DIGITS, 1, START), TokPos(Token.DIGITS, 1, END)))
        two = prog(SubStr(TokPos(Token.DIGITS, 1, START), AbsPos(3)),
                   SubStr(AbsPos(3), TokPos(Token.DIGITS, 1, END)))
        assert rank_score(one) > rank_score(two)

    def test_shorter_constants_preferred(self):
        assert rank_score(prog(ConstStr("ab"))) > rank_score(prog(ConstStr("abcdef")))

    def test_deterministic(self):
        p = prog(ConstStr("PID "), SubStr(AbsPos(0), AbsPos(2)))
        assert rank_score(p) == rank_score(prog(ConstStr("PID "), SubStr(AbsPos(0), AbsPos(2))))

    def test_rank_key_total_order_on_ties(self):
        a = prog(SubStr(AbsPos(0), AbsPos(2)))
        b = prog(SubStr(AbsPos(1), AbsPos(3)))
        assert rank_score(a) == rank_score(b)
        assert rank_key(a) != rank_key(b)


class TestDescribe:
    def test_constant_rendering(self):
        assert describe(prog(ConstStr("PID "))) == 'constant "PID "'

    def test_position_from_end(self):
        assert describe_pos(AbsPos(-1)) == "position 1 from end"

    def test_concat_joined_with_plus(self):
        p = prog(ConstStr("X"), SubStr(AbsPos(0), AbsPos(1)))
        assert describe(p) == 'constant "X" + string from position 0 to position 1'

    def test_token_position_rendering(self):
        assert describe_pos(TokPos(Token.DIGITS, 1, START)) == "start of 1st digit run"
        assert describe_pos(TokPos(Token.UPPER, -2, END)) == "end of 2nd uppercase run from end"
        assert describe_pos(TokPos(Token.LITERAL, 1, END, "-")) == "end of 1st '-'"

    def test_injective_on_distinct_programs(self):
        programs = [
            prog(ConstStr("a")),
            prog(ConstStr('a"b')),
            prog(ConstStr("a"), ConstStr("b")),
            prog(ConstStr("a + b")),
            prog(SubStr(AbsPos(0), AbsPos(1))),
            prog(SubStr(AbsPos(0), AbsPos(-1))),
            prog(SubStr(TokPos(Token.DIGITS, 1, START), AbsPos(1))),
            prog(SubStr(TokPos(Token.DIGITS, 1, END), AbsPos(1))),
            prog(SubStr(TokPos(Token.DIGITS, -1, START), AbsPos(1))),
            prog(SubStr(TokPos(Token.LITERAL, 1, START, "-"), AbsPos(1))),
            prog(SubStr(TokPos(Token.LITERAL, 1, START, "/"), AbsPos(1))),
        ]
        rendered = [describe(p) for p in programs]
        assert len(set(rendered)) == len(programs)


class TestSerialization:
    def test_round_trip(self):
        p = prog(ConstStr("PID "),
                 SubStr(TokPos(Token.DIGITS, 2, START), TokPos(Token.LITERAL, -1, END, "-")))
        assert program_from_dict(program_to_dict(p)) == p

    def test_canonical_is_stable_and_distinct(self):
        p = prog(SubStr(AbsPos(0), AbsPos(1)))
        q = prog(SubStr(AbsPos(0), AbsPos(2)))
        assert canonical(p) == canonical(prog(SubStr(AbsPos(0), AbsPos(1))))
        assert canonical(p) != canonical(q)

    def test_atom_key_orders_deterministically(self):
        atoms = [ConstStr("z"), SubStr(AbsPos(0), AbsPos(1)),
                 SubStr(TokPos(Token.DIGITS, 1, START), AbsPos(1))]
        assert sorted(map(atom_key, atoms)) == sorted(map(atom_key, atoms))
