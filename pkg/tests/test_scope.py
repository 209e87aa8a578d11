import itertools

import pytest

from binderkit.errors import OutOfRangeVar, SortMismatch
from binderkit.scope import (
    Box, Kripke, Var, append, base, duplicate, empty_env, env_of, extract, fresh_l, fresh_r, identity_thinning, map_env, same_env, select, shift, snoc, th_box, th_kripke, thinning_of, vl_var, weaken,
)
from binderkit.sorts import ALPHA, UNIT, Arrow
from binderkit.syntactic import vl_tm
from binderkit.desc import utlc_desc
from binderkit.term import VarT

from oracles import append_oracle

S, T = ALPHA, Arrow(ALPHA, ALPHA)
CTXS = [ctx for n in range(4) for ctx in itertools.product((S, T), repeat=n)]


def all_thinnings(source, target):
    """Every sort-preserving map from ``source`` into ``target``."""
    options = [[j for j, t in enumerate(target) if t == s] for s in source]
    for picks in itertools.product(*options):
        yield thinning_of(source, target, picks)


def test_snoc_head_and_tail():
    rho = snoc(snoc(empty_env(), "u", S), "v", T)
    assert rho(Var(0, T)) == "v"
    assert rho(Var(1, S)) == "u"
    assert rho.source == (T, S)


def test_lookup_errors():
    rho = snoc(empty_env(), "v", S)
    with pytest.raises(OutOfRangeVar):
        rho(Var(1, S))
    with pytest.raises(SortMismatch):
        rho(Var(0, T))
    with pytest.raises(OutOfRangeVar):
        empty_env()(Var(0, S))


def test_map_env_pointwise():
    rho = map_env(lambda x: x * 2, snoc(empty_env(), 21, S))
    assert rho(Var(0, S)) == 42


@pytest.mark.parametrize("gamma", CTXS[:7])
@pytest.mark.parametrize("delta", CTXS[:7])
def test_append_index_arithmetic(gamma, delta):
    outer = env_of(gamma, (), [("outer", i) for i in range(len(gamma))])
    inner = env_of(delta, (), [("inner", i) for i in range(len(delta))])
    both = append(outer, inner)
    assert both.source == delta + gamma
    for i, s in enumerate(delta + gamma):
        assert both(Var(i, s)) == append_oracle(gamma, delta, i)


def test_append_singleton_is_snoc():
    for gamma in CTXS:
        rho = env_of(gamma, (), list(range(len(gamma))))
        a = append(rho, snoc(empty_env(), "v", S))
        b = snoc(rho, "v", S)
        assert same_env(a, b)


def test_identity_and_weaken():
    assert identity_thinning((S, T))(Var(1, T)) == Var(1, T)
    assert weaken(S, (T,))(Var(0, T)) == Var(1, T)
    assert weaken(S, (T,)).target == (S, T)


@pytest.mark.parametrize("gamma", CTXS)
def test_select_weaken_identity(gamma):
    w = weaken(S, gamma)
    assert same_env(select(w, identity_thinning(w.target)), w)
    assert same_env(select(identity_thinning(gamma), w), w)


def test_select_associative():
    ctxs = [(), (S,), (S, T), (T, S), (S, S)]
    count = 0
    for a, b, c, d in itertools.product(ctxs, repeat=4):
        for r1 in itertools.islice(all_thinnings(a, b), 3):
            for r2 in itertools.islice(all_thinnings(b, c), 3):
                for r3 in itertools.islice(all_thinnings(c, d), 2):
                    assert same_env(select(select(r1, r2), r3), select(r1, select(r2, r3)))
                    count += 1
    assert count > 100


def test_box_laws():
    b = Box((S,), lambda th: th(Var(0, S)))
    assert extract(th_box(b, identity_thinning((S,)))) == extract(b)
    for rho in all_thinnings((S,), (T, S, S)):
        assert extract(duplicate(b)(rho)) == b(rho)
        for sigma in all_thinnings((T, S, S), (S, T, S, S)):
            assert extract(th_box(th_box(b, rho), sigma)) == extract(th_box(b, select(rho, sigma)))


def test_kripke_checks_its_inputs():
    k = Kripke((S,), (T,), lambda th, vs: (th, vs))
    th = weaken(S, (T,))
    vs = env_of((S,), (S, T), ["x"])
    assert k(th, vs) == (th, vs)
    with pytest.raises(ValueError):
        k(identity_thinning((T,)), vs)
    k2 = th_kripke(k, identity_thinning((T,)))
    assert k2(th, vs)[1] is vs


def test_base_var_is_identity():
    for gamma in CTXS:
        assert same_env(base(vl_var(), gamma), identity_thinning(gamma))


def test_fresh_injections():
    r = fresh_r(vl_var(), (S,), (T,))
    assert r(Var(0, S)) == Var(1, S) and r.target == (T, S)
    l = fresh_l(vl_var(), (S,), (T,))
    assert l(Var(0, S)) == Var(0, S) and l.target == (S, T)
    assert same_env(fresh_r(vl_var(), (S, T), (T, T)), shift(2, (S, T), (T, T)))


def test_base_tm_gives_variables():
    gamma = (UNIT, UNIT, UNIT)
    rho = base(vl_tm(utlc_desc()), gamma)
    assert [rho(v) for v in rho.vars()] == [VarT(Var(i, UNIT)) for i in range(3)]


def test_vl_var_new():
    assert vl_var().new(S, (S, T)) == Var(0, S)
    with pytest.raises(SortMismatch):
        vl_var().new(S, (T,))


def test_thinning_of_is_checked():
    with pytest.raises(SortMismatch):
        thinning_of((S,), (T,), [0])
