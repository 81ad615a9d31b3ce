import numpy as np
import pytest
from hypothesis import given

from sbe_mcdc.errors import CoupledCondition, ExprSyntaxError, MissingVariable
from sbe_mcdc.expr import (
    And,
    Not,
    Or,
    Var,
    evaluate,
    evaluate_matrix,
    is_sbe,
    make_and,
    parse,
    render,
    truth_table,
    validate_sbe,
    variables,
)

from .helpers import every_assignment, scalar_eval
from .strategies import sbe_exprs


class TestParse:
    def test_and_of_two(self):
        assert parse("a && b") == And((Var("a"), Var("b")))

    def test_not_binds_tighter_than_and(self):
        assert parse("!a && b") == And((Not(Var("a")), Var("b")))

    def test_and_binds_tighter_than_or(self):
        assert parse("a || b && c") == Or((Var("a"), And((Var("b"), Var("c")))))

    def test_negated_group(self):
        assert parse("!(a && b)") == Not(And((Var("a"), Var("b"))))

    def test_same_operator_is_flattened(self):
        assert parse("a && (b && c) && d") == And(tuple(Var(x) for x in "abcd"))

    def test_whitespace_is_free(self):
        assert parse("  a&&!(b||c )") == parse("a && !(b || c)")

    def test_dangling_operator_offset(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse("a &&")
        assert err.value.offset == 4
        assert "identifier" in err.value.expected

    def test_unbalanced_paren(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse("a && (b")
        assert err.value.offset == 7
        assert ")" in err.value.expected

    def test_stray_close_paren(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse("a && b)")
        assert err.value.offset == 6

    @pytest.mark.parametrize("text", ["", "   ", "&& a", "a b", "a & b", "a ||| b", "()"])
    def test_rejected(self, text):
        with pytest.raises(ExprSyntaxError):
            parse(text)

    @pytest.mark.parametrize("text", ["true", "a && false"])
    def test_constants_rejected(self, text):
        with pytest.raises(ExprSyntaxError):
            parse(text)

    def test_offsets_count_bytes(self):
        # 'é' is two bytes in UTF-8, so the bad token after it sits at byte 6.
        with pytest.raises(ExprSyntaxError) as err:
            parse("a && é")
        assert err.value.offset == 5

    def test_case2_structure(self):
        e = parse("a && (!b || !c) && d || e")
        assert e == Or((
            And((Var("a"), Or((Not(Var("b")), Not(Var("c")))), Var("d"))),
            Var("e"),
        ))


class TestConstructors:
    def test_group_needs_two_children(self):
        with pytest.raises(ValueError):
            And((Var("a"),))

    def test_nested_same_kind_rejected(self):
        with pytest.raises(ValueError):
            And((Var("a"), And((Var("b"), Var("c")))))

    def test_make_and_flattens(self):
        assert make_and(Var("a"), make_and(Var("b"), Var("c"))) == And(tuple(Var(x) for x in "abc"))

    def test_bad_identifier(self):
        with pytest.raises(ValueError):
            Var("1x")


class TestRender:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("a && b", "a && b"),
            ("(a || b) && c", "(a || b) && c"),
            ("a || b && c", "a || b && c"),
            ("!(a || b)", "!(a || b)"),
            ("!!a", "!!a"),
        ],
    )
    def test_examples(self, text, expected):
        assert render(parse(text)) == expected

    @given(sbe_exprs())
    def test_round_trip(self, e):
        assert parse(render(e)) == e


class TestEvaluate:
    @pytest.mark.parametrize(
        "text, a, expected",
        [
            ("a && b", {"a": True, "b": True}, True),
            ("a && b", {"a": True, "b": False}, False),
            ("!(a && b)", {"a": True, "b": False}, True),
            ("a || b && c", {"a": False, "b": True, "c": False}, False),
            ("a && (!b || !c) && d || e", {"a": True, "b": True, "c": False, "d": True, "e": False}, True),
        ],
    )
    def test_examples(self, text, a, expected):
        assert evaluate(parse(text), a) is expected

    def test_missing_variable(self):
        with pytest.raises(MissingVariable):
            evaluate(parse("a && b"), {"a": True})

    def test_extra_keys_ignored(self):
        assert evaluate(parse("a"), {"a": True, "z": False}) is True

    @given(sbe_exprs(n_max=7))
    def test_matrix_matches_scalar(self, e):
        names = list(variables(e))
        rows = list(every_assignment(names))
        values = np.array([[a[n] for n in names] for a in rows], dtype=bool)
        got = evaluate_matrix(e, values, names)
        assert got.tolist() == [scalar_eval(e, a) for a in rows]

    def test_truth_table_msb_first(self):
        values, out = truth_table(parse("a && !b"))
        assert values.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
        assert out.tolist() == [False, False, True, False]


class TestVariables:
    @pytest.mark.parametrize(
        "text, names",
        [
            ("a && b", ["a", "b"]),
            ("!(z || y) && x", ["z", "y", "x"]),
            ("a && (!b || !c) && d || e", ["a", "b", "c", "d", "e"]),
        ],
    )
    def test_first_appearance_order(self, text, names):
        assert list(variables(parse(text))) == names

    def test_coupled_names_listed_once(self):
        assert list(variables(parse("a && b || a"))) == ["a", "b"]


class TestValidateSbe:
    def test_coupled(self):
        with pytest.raises(CoupledCondition) as err:
            validate_sbe(parse("A && B || A"))
        assert (err.value.name, err.value.count) == ("A", 2)

    def test_accepts_singular(self):
        validate_sbe(parse("A && (B || !C)"))
        assert is_sbe(parse("A && (B || !C)"))
        assert not is_sbe(parse("A || !A"))

    def test_case1_has_23_conditions(self, sbe1_text):
        e = parse(sbe1_text)
        validate_sbe(e)
        assert len(variables(e)) == 23
