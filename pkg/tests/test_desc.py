import itertools

import pytest

from binderkit.desc import (
    BoolD, Done, NatD, PairD, Rec, Sigma, SortD, TagD, TextD, case_layer, clet_desc, clist_desc,
    explore, let_desc, payload_eq, stlc_desc, sum_desc, utlc_desc, bidi_desc,
)
from binderkit.errors import DescError, LayerShapeMismatch, PayloadDomainError
from binderkit.sorts import (
    ALPHA, CHECK, INFER, MODE_SORTS, TYPE_SORTS, UNIT, UNIT_SORTS, Arrow, decode_type, encode_type,
    enumerate_types,
)
from binderkit.term import Pay, Sub, VarT, walk
from binderkit.scope import Var

BUILTINS = [utlc_desc(), bidi_desc(), stlc_desc(), let_desc(), clet_desc(), clist_desc(),
            sum_desc(utlc_desc(), let_desc(UNIT_SORTS))]


@pytest.mark.parametrize("d", BUILTINS)
def test_every_path_reaches_done(d):
    shapes = list(explore(d, 4))
    assert shapes
    assert all(s.sort is not None for s in shapes)


def test_utlc_shape():
    d = utlc_desc()
    app = d.step(True)
    assert app == Rec((), UNIT, Rec((), UNIT, Done(UNIT)))
    assert d.step(False) == Rec((UNIT,), UNIT, Done(UNIT))


def test_let_path():
    sigma, tau = ALPHA, Arrow(ALPHA, ALPHA)
    node = let_desc().step((sigma, tau))
    assert node == Rec((), sigma, Rec((sigma,), tau, Done(tau)))


def test_clet_stores_counter_then_let():
    d = clet_desc()
    assert isinstance(d.domain, TagD) and d.domain.labels == ("zero", "one", "many")
    inner = d.step("many")
    assert isinstance(inner, Sigma) and isinstance(inner.domain, PairD)


def test_clist_shape():
    d = clist_desc()
    assert d.step(True) == Done(UNIT)
    cons = d.step(False)
    assert isinstance(cons.domain, NatD)
    assert cons.step(3) == Rec((UNIT,), UNIT, Done(UNIT))


def test_bidi_and_stlc_sorts():
    sorts = {s.sort for s in explore(bidi_desc(), 1)}
    assert sorts == {INFER, CHECK}
    lam = [s for s in explore(stlc_desc(), 0) if s.steps[0] == ("pay", "lam")]
    assert lam[0].sort == Arrow(ALPHA, ALPHA)


def test_sum_true_selects_left():
    d, e = utlc_desc(), let_desc(UNIT_SORTS)
    s = sum_desc(d, e)
    assert s.step(True) is d
    assert s.step(False) is e


def test_case_layer_dispatch():
    seen = []
    f = case_layer(lambda s, l: seen.append(("left", l)), lambda s, l: seen.append(("right", l)))
    f(UNIT, (Pay(False), Pay(1)))
    f(UNIT, (Pay(True),))
    assert seen == [("right", (Pay(1),)), ("left", ())]


def _layers(d, bound):
    """Every layer of ``d`` with variable children, one per shape."""
    out = []
    for shape in explore(d, bound):
        layer = []
        for step in shape.steps:
            layer.append(Pay(step[1]) if step[0] == "pay" else Sub(step[1], step[2], "x"))
        out.append(tuple(layer))
    return out


def test_sum_with_itself_accepts_the_same_stripped_layers():
    d = utlc_desc()
    plain = set(map(repr, _layers(d, 2)))
    for b in (True, False):
        summed = [l[1:] for l in _layers(sum_desc(d, d), 2) if l[0].value is b]
        assert set(map(repr, summed)) == plain


def test_sum_is_associative_up_to_retagging():
    a, b, c = utlc_desc(), clist_desc(), let_desc(UNIT_SORTS)
    left = _layers(sum_desc(sum_desc(a, b), c), 2)
    right = _layers(sum_desc(a, sum_desc(b, c)), 2)

    def reassoc(l):  # ((a+b)+c) tags -> (a+(b+c)) tags
        if l[0].value is False:  # c
            return (Pay(False), Pay(False)) + l[1:]
        if l[1].value is True:  # a
            return (Pay(True),) + l[2:]
        return (Pay(False), Pay(True)) + l[2:]

    assert sorted(map(repr, map(reassoc, left))) == sorted(map(repr, right))
    assert len(left) == len(right)


def test_payload_eq_examples():
    assert payload_eq(NatD(), 3, 3)
    assert not payload_eq(TagD(("zero", "one", "many")), "one", "many")
    types = PairD(SortD(TYPE_SORTS), SortD(TYPE_SORTS))
    assert payload_eq(types, (ALPHA, Arrow(ALPHA, ALPHA)), (ALPHA, Arrow(ALPHA, ALPHA)))
    assert not payload_eq(types, (ALPHA, ALPHA), (ALPHA, Arrow(ALPHA, ALPHA)))


def test_payload_eq_domain_mismatch():
    with pytest.raises(PayloadDomainError):
        payload_eq(NatD(), 1, "1")
    with pytest.raises(PayloadDomainError):
        payload_eq(BoolD(), 1, True)
    with pytest.raises(PayloadDomainError):
        payload_eq(TagD(("a",)), "a", "b")


DOMAINS = [BoolD(), NatD(), TextD(), SortD(TYPE_SORTS), SortD(MODE_SORTS), TagD(("x", "y")),
           PairD(NatD(), SortD(TYPE_SORTS))]


@pytest.mark.parametrize("dom", DOMAINS)
def test_payload_eq_is_an_equivalence(dom):
    vals = dom.enumerate(2)
    for a, b, c in itertools.product(vals, repeat=3):
        assert payload_eq(dom, a, a)
        assert payload_eq(dom, a, b) == payload_eq(dom, b, a)
        if payload_eq(dom, a, b) and payload_eq(dom, b, c):
            assert payload_eq(dom, a, c)


def test_tag_labels_distinct():
    with pytest.raises(DescError):
        TagD(("a", "a"))


@pytest.mark.parametrize("sorts", [UNIT_SORTS, MODE_SORTS, TYPE_SORTS])
def test_sort_domain_laws(sorts):
    samples = sorts.enumerate(3)
    for s in samples:
        assert sorts.decode(sorts.encode(s)) == s
        assert sorts.contains(s)
        assert sorts.eq(s, s)
    for a, b in itertools.product(samples, repeat=2):
        assert sorts.eq(a, b) == sorts.eq(b, a) == (a == b)


def test_type_enumeration_and_encoding():
    assert enumerate_types(0) == [ALPHA]
    assert len(enumerate_types(2)) == 1 + 1 + 2
    assert encode_type(Arrow(Arrow(ALPHA, ALPHA), ALPHA)) == "(-> (-> alpha alpha) alpha)"
    with pytest.raises(ValueError):
        decode_type("(-> alpha)")


def test_bad_continuation_is_reported():
    d = Sigma(NatD(), lambda n: "oops")
    with pytest.raises(DescError):
        list(explore(d, 1))


def test_walk_rejects_payload_outside_domain():
    with pytest.raises(LayerShapeMismatch):
        list(walk(clist_desc(), (Pay(False), Pay(-1), Sub((UNIT,), UNIT, VarT(Var(0, UNIT))))))
