import pytest
from hypothesis import given, strategies as st

from fdek.syntax import (
    LANG_BOX, LANG_TRI, And, Atom, Box, Not, Or, ParseError, Sequent,
    Tri, contains_box, contains_tri, in_language, parse_formula, parse_sequent,
    render, render_sequent, size, subformulas, variables,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


def formulas(language=LANG_TRI, names=("p", "q")):
    atoms = st.sampled_from([Atom(n) for n in names])
    modal = Tri if language == LANG_TRI else Box

    def extend(children):
        return st.one_of(
            children.map(Not),
            children.map(modal),
            st.tuples(children, children).map(lambda t: And(*t)),
            st.tuples(children, children).map(lambda t: Or(*t)),
        )

    return st.recursive(atoms, extend, max_leaves=12)


class TestParse:
    def test_negated_conjunction(self):
        assert parse_formula("~(p & q)") == Not(And(p, q))

    def test_modal_atom(self):
        assert parse_formula("#p") == Tri(p)

    def test_excluded_middle_under_modality(self):
        assert parse_formula("#(q | ~q)") == Tri(Or(q, Not(q)))

    def test_box_and_sugar(self):
        assert parse_formula("[]p") == Box(p)
        assert parse_formula("<>p") == Not(Box(Not(p)))
        assert parse_formula("@p") == Not(Tri(p))

    def test_precedence(self):
        assert parse_formula("p & q | r") == Or(And(p, q), r)
        assert parse_formula("p | q & r") == Or(p, And(q, r))
        assert parse_formula("~p & q") == And(Not(p), q)
        assert parse_formula("#p & q") == And(Tri(p), q)

    def test_left_associativity(self):
        assert parse_formula("p | q | r") == Or(Or(p, q), r)
        assert parse_formula("p & q & r") == And(And(p, q), r)

    def test_nested_unary(self):
        assert parse_formula("~#~p") == Not(Tri(Not(p)))

    @pytest.mark.parametrize("text", ["", "   ", "p &", "(p", "p)", "& p",
                                      "p $ q", "[p", "# "])
    def test_bad_formula(self, text):
        with pytest.raises(ParseError):
            parse_formula(text)

    def test_error_offset(self):
        with pytest.raises(ParseError) as err:
            parse_formula("p & $q")
        assert err.value.offset == 4


class TestParseSequent:
    def test_modal_sequent(self):
        assert parse_sequent("#p |- #~p") == Sequent(Tri(p), Tri(Not(p)))

    def test_plain_sequent(self):
        assert parse_sequent("p & q |- p") == Sequent(And(p, q), p)

    def test_maximal_munch(self):
        # 'p|q|-r' splits as p, |, q, |-, r
        assert parse_sequent("p|q|-r") == Sequent(Or(p, q), r)

    def test_duplicate_turnstile(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_sequent("p |- q |- r")

    def test_missing_turnstile(self):
        with pytest.raises(ParseError, match="missing"):
            parse_sequent("p & q")


class TestRender:
    def test_modal_atom(self):
        assert render(Tri(p)) == "#p"

    def test_negated_modal(self):
        assert render(Not(Tri(p))) == "~#p"

    def test_parens_forced_by_precedence(self):
        assert render(And(p, Or(q, r))) == "p & (q | r)"
        assert render(Or(And(p, q), r)) == "p & q | r"

    def test_right_nesting_kept(self):
        assert render(Or(p, Or(q, r))) == "p | (q | r)"
        assert render(Or(Or(p, q), r)) == "p | q | r"

    def test_unary_argument_parens(self):
        assert render(Tri(Or(q, Not(q)))) == "#(q | ~q)"

    def test_pretty_glyphs(self):
        assert render(Tri(Or(q, Not(q))), pretty=True) == "▲(q ∨ ¬q)"
        assert render(Not(Tri(p)), pretty=True) == "▽p"
        assert render(Not(Box(Not(p))), pretty=True) == "◇p"

    def test_sequent_render(self):
        s = parse_sequent("#p |- #~p")
        assert render_sequent(s) == "#p |- #~p"

    @given(formulas())
    def test_round_trip_tri(self, f):
        assert parse_formula(render(f)) == f

    @given(formulas(language=LANG_BOX))
    def test_round_trip_box(self, f):
        assert parse_formula(render(f)) == f


class TestStructure:
    def test_subformulas_modal(self):
        assert subformulas(Tri(p)) == {Tri(p), p}

    def test_subformulas_excluded_middle(self):
        f = Tri(Or(q, Not(q)))
        assert subformulas(f) == {f, Or(q, Not(q)), q, Not(q)}

    def test_formula_is_its_own_subformula(self):
        assert subformulas(p) == {p}

    def test_variables(self):
        assert variables(Tri(Or(q, Not(q)))) == {"q"}
        assert variables(And(p, Not(p))) == {"p"}
        assert variables(Tri(Tri(p))) == {"p"}

    @given(formulas(names=("p", "q", "r")))
    def test_subformula_count_bounded_by_size(self, f):
        assert len(subformulas(f)) <= size(f)

    @given(formulas(names=("p", "q", "r")))
    def test_variables_stable_under_round_trip(self, f):
        assert variables(parse_formula(render(f))) == variables(f)

    @given(formulas())
    def test_language_closed_under_subformulas(self, f):
        assert in_language(f, LANG_TRI)
        assert all(in_language(sub, LANG_TRI) for sub in subformulas(f))

    def test_language_tags(self):
        assert contains_tri(Tri(p)) and not contains_box(Tri(p))
        assert contains_box(Box(p)) and not contains_tri(Box(p))
        assert in_language(p, LANG_TRI) and in_language(p, LANG_BOX)
        mixed = And(Tri(p), Box(q))
        assert not in_language(mixed, LANG_TRI)
        assert not in_language(mixed, LANG_BOX)

    def test_atom_name_validation(self):
        with pytest.raises(ValueError):
            Atom("P")
        with pytest.raises(ValueError):
            Atom("")
        with pytest.raises(ValueError):
            Atom("1p")
