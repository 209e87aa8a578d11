import pytest

from binderkit.desc import bidi_desc, clist_desc, stlc_desc, utlc_desc
from binderkit.errors import LayerShapeMismatch, OutOfRangeVar, SortMismatch
from binderkit.gen import generator, random_ctx, sample_rng, sample_sort
from binderkit.scope import Var
from binderkit.sorts import ALPHA, INFER, UNIT, Arrow, enumerate_types
from binderkit.syntaxes import ID_STLC, ID_UTLC, REDEX_CHAIN, app, lam, var
from binderkit.term import (
    ConT, Pay, Sub, VarT, count_nodes, depth, fmap_layer, is_valid, map_layer, size, term_sort,
    traverse_layer, validate,
)

U = utlc_desc()


def test_validate_examples():
    validate(U, (), UNIT, ID_UTLC)
    with pytest.raises(OutOfRangeVar):
        validate(U, (), UNIT, var(0))
    validate(stlc_desc(), (), Arrow(ALPHA, ALPHA), ID_STLC)


def test_validate_reports_paths():
    bad = lam(app(var(0), var(3)))
    with pytest.raises(OutOfRangeVar) as err:
        validate(U, (), UNIT, bad)
    assert err.value.path == (1, 2)
    wrong_slot = ConT((Pay(False), Sub((), UNIT, var(0))))
    with pytest.raises(LayerShapeMismatch) as err:
        validate(U, (UNIT,), UNIT, wrong_slot)
    assert err.value.path == (1,)


def test_validate_sort_errors():
    with pytest.raises(SortMismatch):
        validate(stlc_desc(), (), ALPHA, ID_STLC)
    with pytest.raises(SortMismatch):
        validate(bidi_desc(), (INFER,), INFER, VarT(Var(0, UNIT)))


def test_validate_shape_errors():
    with pytest.raises(LayerShapeMismatch):
        validate(U, (), UNIT, ConT((Pay(True), Sub((), UNIT, ID_UTLC))))
    with pytest.raises(LayerShapeMismatch):
        validate(U, (), UNIT, ConT((Pay(False), Sub((UNIT,), UNIT, var(0)), Pay(1))))
    with pytest.raises(LayerShapeMismatch):
        validate(U, (), UNIT, ConT((Pay("no"),)))
    assert not is_valid(U, (), UNIT, "not a term")


def test_fmap_identity_and_telescopes():
    layer = app(var(0), var(1)).layer
    assert fmap_layer(U, lambda tel, s, x: x, layer) == layer
    seen = []
    fmap_layer(U, lambda tel, s, x: seen.append(tel), layer)
    assert seen == [(), ()]
    seen.clear()
    fmap_layer(U, lambda tel, s, x: seen.append(tel), ID_UTLC.layer)
    assert seen == [(UNIT,)]


def test_fmap_composition():
    layer = app(var(0), var(1)).layer
    f = lambda tel, s, x: ("f", x)
    g = lambda tel, s, x: ("g", x)
    twice = fmap_layer(U, g, fmap_layer(U, f, layer))
    once = fmap_layer(U, lambda tel, s, x: g(tel, s, f(tel, s, x)), layer)
    assert twice == once


def test_map_layer_returns_sort():
    _, sort = map_layer(stlc_desc(), lambda *a: a[-1], ID_STLC.layer)
    assert sort == Arrow(ALPHA, ALPHA)


def test_traverse_short_circuits():
    log = []

    def f(tel, s, x):
        log.append(x)
        if x == var(0):
            raise RuntimeError("stop")
        return x

    layer = app(var(0), var(1)).layer
    with pytest.raises(RuntimeError):
        traverse_layer(U, f, layer)
    assert log == [var(0)]
    log.clear()
    assert traverse_layer(U, lambda tel, s, x: x, app(var(1), var(2)).layer) == app(var(1), var(2)).layer


def test_traverse_done_only_layer():
    nil = (Pay(True),)
    assert traverse_layer(clist_desc(), lambda *a: 1 / 0, nil) == nil


def test_traverse_checks_shape_before_effects():
    log = []
    bad = (Pay(True), Sub((), UNIT, var(0)))
    with pytest.raises(LayerShapeMismatch):
        traverse_layer(U, lambda tel, s, x: log.append(x), bad)
    assert log == []


def test_size():
    assert size(var(0)) == 1
    assert size(ID_UTLC) == 2
    assert size(app(ID_UTLC, ID_UTLC)) == 5
    assert size(REDEX_CHAIN) == 8
    assert depth(REDEX_CHAIN) == 4
    assert count_nodes(REDEX_CHAIN, lambda l: l[0].value is True) == 2
    assert term_sort(stlc_desc(), ID_STLC) == Arrow(ALPHA, ALPHA)


def test_validate_stable_under_validity_preserving_fmap():
    g = generator(stlc_desc())
    types = enumerate_types(1)
    checked = 0
    for i in range(200):
        rng = sample_rng(5, i)
        ctx = random_ctx(rng, types)
        s = sample_sort(rng, g, types, ctx, 5)
        t = g.term(rng, s, ctx, 5)
        if isinstance(t, VarT):
            continue
        # swap every child for another term of the same sort in the same scope
        swapped = ConT(fmap_layer(stlc_desc(), lambda tel, j, c: g.term(rng, j, tel + ctx, 3), t.layer))
        validate(stlc_desc(), ctx, s, swapped)
        checked += 1
    assert checked > 50
