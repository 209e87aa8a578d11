import re

from binderkit.desc import bidi_desc, clist_desc, stlc_desc, utlc_desc
from binderkit.printing import (
    DISPLAYS, NameSupply, fresh, fresh_names, name_at, print_term, to_sexpr, utlc_display,
)
from binderkit.sorts import UNIT
from binderkit.syntaxes import BIDI_EXAMPLE, ID_STLC, ID_UTLC, ZERO_ONE_CYCLE, app, lam, var

from helpers import SYNTAX_SORTS, samples

U = utlc_desc()


def test_supply_order():
    name, rest = fresh(NameSupply())
    assert name == "a"
    assert fresh(rest)[0] == "b"
    names, _ = fresh_names(NameSupply(), 60)
    assert names[25] == "z" and names[26] == "a1" and names[52] == "a2"
    assert len(set(names)) == 60
    assert name_at(26) == "a1"


def test_golden_identity():
    out = print_term(U, utlc_display, (), ID_UTLC)
    assert out == "λa. a"
    assert out.encode("utf-8") == b"\xce\xbba. a"


def test_open_and_nested():
    assert print_term(U, utlc_display, (UNIT,), app(var(0), var(0))) == "a (a)"
    assert print_term(U, utlc_display, (), lam(lam(var(1)))) == "λa. λb. a"


def test_free_variables_take_first_names():
    ctx = (UNIT,) * 3
    t = app(app(var(0), var(1)), lam(var(3)))
    assert print_term(U, utlc_display, ctx, t) == "a (b) (λd. c)"


def test_other_displays():
    assert print_term(stlc_desc(), DISPLAYS["stlc"], (), ID_STLC) == "λa:α. a"
    assert print_term(bidi_desc(), DISPLAYS["bidi"], (), BIDI_EXAMPLE) == "(λa. a : (α→α)→α→α) (λb. b)"
    assert print_term(clist_desc(), DISPLAYS["clist"], (), ZERO_ONE_CYCLE) == "a: 0 ∷ b: 1 ∷ a"
    assert to_sexpr("clist", clist_desc(), (), ZERO_ONE_CYCLE) == "(cons 0 a (cons 1 b (ptr a)))"


def test_print_deterministic_and_binders_distinct():
    for syntax in ("utlc", "utlc+let"):
        d, _ = SYNTAX_SORTS[syntax]
        for rng, ctx, sort, t in samples(syntax, 300, seed=4, closed=True):
            a = print_term(d, DISPLAYS[syntax], ctx, t)
            assert a == print_term(d, DISPLAYS[syntax], ctx, t)
            bound = re.findall(r"λ(\w+)\.|let (\w+) =", a)
            names = [x or y for x, y in bound]
            assert len(names) == len(set(names))
