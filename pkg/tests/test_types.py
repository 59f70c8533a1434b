import pytest

from subfractal import (
    App,
    DEFAULT_INTERVAL,
    Interval,
    NULL,
    OBJECT,
    ParseError,
    TypeTermError,
    UnknownClassError,
    expressible,
    parse_type,
    rank,
    render,
)
from subfractal.types import INTERVAL, JAVA, SHORT, STYLES

from oracles import first_appearance

C_DEFAULT = App("C", (DEFAULT_INTERVAL,))


def test_super_object_collapses_to_object(one_table):
    assert parse_type(one_table, "C<? super Object>") == parse_type(one_table, "C<Object>")
    assert parse_type(one_table, "C<? super Object>") == App("C", (Interval(OBJECT, OBJECT),))


def test_extends_null_collapses_to_null(one_table):
    assert parse_type(one_table, "C<? extends Null>") == parse_type(one_table, "C<Null>")
    assert parse_type(one_table, "C<? extends Null>") == App("C", (Interval(NULL, NULL),))


def test_default_wildcard(one_table):
    assert parse_type(one_table, "C<?>") == C_DEFAULT


def test_explicit_interval_argument(two_table):
    term = parse_type(two_table, "C<[D<?>-Object]>")
    inner = App("D", (DEFAULT_INTERVAL,))
    assert term == App("C", (Interval(inner, OBJECT),))


def test_shorthand_spellings(one_table):
    assert parse_type(one_table, "C<?xC<?>>") == parse_type(one_table, "C<? extends C<?>>")
    assert parse_type(one_table, "C<?sC<?>>") == parse_type(one_table, "C<? super C<?>>")
    assert parse_type(one_table, "C<?xNull>") == parse_type(one_table, "C<Null>")


def test_whitespace_insensitive(one_table):
    assert parse_type(one_table, "  C < ? extends C<?> >  ") == \
        parse_type(one_table, "C<?xC<?>>")


def test_render_java_default(one_table):
    assert render(one_table, C_DEFAULT, JAVA) == "C<?>"


def test_render_short_nested(one_table):
    term = App("C", (Interval(NULL, C_DEFAULT),))
    assert render(one_table, term, SHORT) == "C<?xC<?>>"
    assert render(one_table, term, JAVA) == "C<? extends C<?>>"


def test_render_ground_all_styles(one_table):
    for style in STYLES:
        assert render(one_table, OBJECT, style) == "Object"


def test_render_interval_style(one_table):
    assert render(one_table, C_DEFAULT, INTERVAL) == "C<[Null-Object]>"


def test_render_bracket_fallback(one_table):
    c_null = App("C", (Interval(NULL, NULL),))
    term = App("C", (Interval(c_null, C_DEFAULT),))
    assert render(one_table, term, JAVA) == "C<[C<Null>-C<?>]>"
    assert parse_type(one_table, render(one_table, term, JAVA)) == term


def test_roundtrip_all_nodes_all_styles(one_seq):
    table = one_seq.table
    for g in one_seq.levels[:3]:
        for term in g.nodes:
            for style in STYLES:
                assert parse_type(table, render(table, term, style)) == term


def test_roundtrip_bounded_skeleton(bounded_seq):
    table = bounded_seq.table
    for g in bounded_seq.levels:
        for term in g.nodes:
            for style in STYLES:
                assert parse_type(table, render(table, term, style)) == term


def test_bounded_default_renders_as_wildcard(bounded_table):
    e_default = bounded_table.default_application("E")
    assert render(bounded_table, e_default, JAVA) == "E<?>"
    assert parse_type(bounded_table, "E<?>") == e_default


def test_canonical_spellings_identify(one_table):
    spellings = ["C<?>", "C<? extends Object>", "C<? super Null>", "C<[Null-Object]>"]
    terms = {parse_type(one_table, s) for s in spellings}
    assert terms == {C_DEFAULT}


def test_distinct_arguments_stay_distinct(one_table):
    spellings = ["C<?>", "C<Object>", "C<Null>", "C<C<?>>", "C<?xC<?>>", "C<?sC<?>>"]
    terms = [parse_type(one_table, s) for s in spellings]
    assert len(set(terms)) == len(spellings)


def test_parse_errors(one_table):
    with pytest.raises(ParseError):
        parse_type(one_table, "C<")
    with pytest.raises(UnknownClassError):
        parse_type(one_table, "Zed")
    with pytest.raises(TypeTermError, match="argument"):
        parse_type(one_table, "C")  # arity mismatch: bare generic
    with pytest.raises(TypeTermError, match="argument"):
        parse_type(one_table, "Object<C<?>>")
    with pytest.raises(TypeTermError, match="inverted"):
        parse_type(one_table, "C<[Object-Null]>")


def test_bound_violation(bounded_table):
    with pytest.raises(TypeTermError, match="bound"):
        parse_type(bounded_table, "E<Object>")
    assert parse_type(bounded_table, "E<C<?>>") == App(
        "E", (Interval(App("C", (DEFAULT_INTERVAL,)), App("C", (DEFAULT_INTERVAL,))),))


def test_trailing_input_rejected(one_table):
    with pytest.raises(ParseError, match="trailing"):
        parse_type(one_table, "C<?> C<?>")


def test_glued_keywords_after_wildcard(one_table):
    assert parse_type(one_table, "C<?super C<?>>") == parse_type(one_table, "C<? super C<?>>")
    assert parse_type(one_table, "C<?extends Null>") == parse_type(one_table, "C<Null>")
    with pytest.raises(ParseError):
        parse_type(one_table, "C<?Foo>")


# -- rank ------------------------------------------------------------------

def test_rank_ground(one_table):
    assert rank(one_table, OBJECT) == 0
    assert rank(one_table, NULL) == 0


def test_rank_default_application(one_table):
    assert rank(one_table, C_DEFAULT) == 0


def test_rank_examples_match_first_appearance(one_table, one_seq):
    t1 = parse_type(one_table, "C<? extends C<?>>")
    assert rank(one_table, t1) == 1
    assert first_appearance(one_seq, t1) == 1
    t2 = parse_type(one_table, "C<[C<Null>-Object]>")
    assert rank(one_table, t2) == 2
    assert first_appearance(one_seq, t2) == 2


def test_rank_equals_first_appearance_everywhere(one_seq):
    table = one_seq.table
    for g in one_seq.levels[:3]:
        for term in g.nodes:
            assert rank(table, term) == first_appearance(one_seq, term)


def test_rank_on_bounded_skeleton(bounded_seq):
    table = bounded_seq.table
    for g in bounded_seq.levels:
        for term in g.nodes:
            assert rank(table, term) == first_appearance(bounded_seq, term)


def test_rank_multi_parameter(pair_table, pair_seq):
    for g in pair_seq.levels:
        for term in g.nodes:
            assert rank(pair_table, term) == first_appearance(pair_seq, term)
    deep = parse_type(pair_table, "P<?xP<?,?>,P<?,?>>")
    assert rank(pair_table, deep) == 1


# -- expressibility ---------------------------------------------------------

def test_null_types_are_inexpressible(one_table):
    assert not expressible(one_table, NULL)
    assert not expressible(one_table, parse_type(one_table, "C<Null>"))
    assert not expressible(one_table, parse_type(one_table, "C<[C<Null>-C<?>]>"))


def test_wildcard_spellings_hide_null(one_table):
    assert expressible(one_table, parse_type(one_table, "C<?>"))
    assert expressible(one_table, parse_type(one_table, "C<? extends C<?>>"))
    assert expressible(one_table, parse_type(one_table, "C<? super C<?>>"))
    assert expressible(one_table, parse_type(one_table, "C<Object>"))


def test_expressible_counts_on_level1(one_seq):
    table = one_seq.table
    g1 = one_seq.levels[1]
    flags = [expressible(table, t) for t in g1.nodes]
    assert sum(1 for f in flags if not f) == 2  # Null and C<Null>
