import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finitop import FinSpace, props, sierpinski
from finitop.construct import product, star_extension
from finitop.dsl import evaluate, free_vars, parse, pretty
from finitop.errors import QuerySyntaxError, SizeOverflow, UnboundVariable
from finitop.maps import t0_quotient

from conftest import spaces


def test_parse_examples():
    ast = parse("normal(X) & !normal(prod(X,Y))")
    assert free_vars(ast) == {"X", "Y"}
    ast = parse("homeo(t0q(star(X)), star(t0q(X)))")
    assert pretty(ast) == "homeo(t0q(star(X)), star(t0q(X)))"


def test_syntax_error_position_and_expected():
    with pytest.raises(QuerySyntaxError) as err:
        parse("normal(X")
    assert err.value.position == 9
    assert ")" in err.value.expected
    assert isinstance(err.value, SyntaxError)


@pytest.mark.parametrize("text", ["", "normal(x)", "normal(X) &", "wibble(X)", "normal(X))", "power(X)"])
def test_rejects_malformed(text):
    with pytest.raises(QuerySyntaxError):
        parse(text)


def test_eval_examples():
    S = sierpinski()
    assert evaluate(parse("vacnormal(prod(X,X))"), {"X": S})
    assert not evaluate(parse("t1(X)"), {"X": S})
    assert evaluate(parse("normal(sum(X,X))"), {"X": S})


def test_free_vars_examples():
    assert free_vars(parse("normal(X)")) == {"X"}
    assert free_vars(parse("normal(prod(X,Y)) | t0(Y)")) == {"X", "Y"}
    assert free_vars(parse("normal(star(X))")) == {"X"}


def test_precedence():
    # ! binds tighter than &, & tighter than |, | tighter than ->
    assert pretty(parse("!t0(X) & t1(X) | normal(X) -> irreducible(X)")) == \
        pretty(parse("(((!t0(X)) & t1(X)) | normal(X)) -> irreducible(X)"))
    D = {"X": FinSpace.discrete(2)}
    assert evaluate(parse("t1(X) | t0(X) & !t0(X)"), D)


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        evaluate(parse("normal(prod(X,Y))"), {"X": sierpinski()})


def test_power_respects_size_bound():
    with pytest.raises(SizeOverflow):
        evaluate(parse("normal(power(X, 13))"), {"X": FinSpace.discrete(2)})
    assert evaluate(parse("normal(power(X, 0))"), {"X": FinSpace.discrete(2)})


_space_expr = st.recursive(
    st.sampled_from(["X", "Y"]),
    lambda inner: st.one_of(
        st.tuples(st.sampled_from(["prod", "sum"]), inner, inner).map(lambda t: f"{t[0]}({t[1]}, {t[2]})"),
        st.tuples(st.sampled_from(["star", "t0q"]), inner).map(lambda t: f"{t[0]}({t[1]})"),
    ),
    max_leaves=3,
)
_atom = st.one_of(
    st.tuples(st.sampled_from(["normal", "vacnormal", "t0", "t1", "irreducible", "trivcompact"]), _space_expr)
    .map(lambda t: f"{t[0]}({t[1]})"),
    st.tuples(_space_expr, _space_expr).map(lambda t: f"homeo({t[0]}, {t[1]})"),
)
_formula = st.recursive(
    _atom,
    lambda inner: st.one_of(
        inner.map(lambda a: f"!{a}"),
        st.tuples(inner, st.sampled_from(["&", "|", "->"]), inner).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
    ),
    max_leaves=4,
)


@given(_formula)
def test_pretty_parse_round_trip(text):
    once = pretty(parse(text))
    assert pretty(parse(once)) == once
    for X, Y in ((sierpinski(), FinSpace.discrete(2)), (FinSpace.discrete(1), sierpinski())):
        b = {"X": X, "Y": Y}
        assert evaluate(parse(once), b) == evaluate(parse(text), b)


@given(_formula, spaces(max_n=3), spaces(max_n=3))
@settings(max_examples=60, deadline=None)
def test_eval_is_pure(text, X, Y):
    ast = parse(text)
    b = {"X": X, "Y": Y}
    assert evaluate(ast, b) == evaluate(ast, b)


@given(st.sampled_from(["normal", "vacnormal", "t0", "t1", "irreducible", "trivcompact"]),
       spaces(max_n=3), spaces(max_n=3))
@settings(max_examples=60)
def test_atoms_match_props(name, X, Y):
    b = {"X": X, "Y": Y}
    assert evaluate(parse(f"{name}(prod(X, Y))"), b) == props.check(product(X, Y), name).verdict
    assert evaluate(parse(f"{name}(star(X))"), b) == props.check(star_extension(X), name).verdict
    assert evaluate(parse(f"{name}(t0q(Y))"), b) == props.check(t0_quotient(Y)[0], name).verdict
