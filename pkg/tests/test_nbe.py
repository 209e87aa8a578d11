import pytest

from binderkit.desc import utlc_desc
from binderkit.nbe import DBOT, DCon, OutOfFuel, norm, norm_utlc, reify_dm, thin_dm
from binderkit.scope import weaken
from binderkit.sorts import UNIT
from binderkit.syntaxes import ID_UTLC, REDEX_CHAIN, app, lam, var

from helpers import samples
from oracles import OutOfSteps, is_beta_normal, normalise, strongly_normalises, utlc_to_tuple

U = utlc_desc()


def church(n):
    body = var(0)
    for _ in range(n):
        body = app(var(1), body)
    return lam(lam(body))


MULT = lam(lam(lam(app(var(2), app(var(1), var(0))))))
OMEGA = app(lam(app(var(0), var(0))), lam(app(var(0), var(0))))


def test_redex_chain():
    assert norm_utlc(REDEX_CHAIN) == ID_UTLC


def test_church_arithmetic():
    assert norm_utlc(app(app(MULT, church(2)), church(2))) == church(4)
    assert norm_utlc(app(app(MULT, church(3)), church(2))) == church(6)


def test_open_terms():
    assert norm_utlc(app(lam(var(1)), var(0)), (UNIT, UNIT)) == var(0)
    assert norm_utlc(app(var(0), app(ID_UTLC, var(0))), (UNIT,)) == app(var(0), var(0))


def test_bottom_reifies_to_none():
    assert reify_dm(U, DBOT) is None
    assert thin_dm(DBOT, weaken(UNIT, ())) is DBOT
    assert norm(U, lambda sort, layer, ctx: DBOT if layer[0].value else DCon(layer), ID_UTLC) == ID_UTLC
    assert norm(U, lambda sort, layer, ctx: DBOT if layer[0].value else DCon(layer), app(ID_UTLC, ID_UTLC)) is None


def test_fuel():
    with pytest.raises(OutOfFuel):
        norm_utlc(OMEGA, fuel=1000)
    with pytest.raises(OutOfFuel):
        norm_utlc(REDEX_CHAIN, fuel=2)
    assert norm_utlc(REDEX_CHAIN, fuel=50) == ID_UTLC


def normalising_corpus(n, seed, depth=6):
    out = []
    for rng, ctx, sort, t in samples("utlc", n, seed=seed, depth=depth, closed=True):
        try:
            nf = normalise(utlc_to_tuple(t))
            if not strongly_normalises(utlc_to_tuple(t)):
                continue
        except (OutOfSteps, RecursionError):
            continue
        out.append((t, nf))
    return out


def test_agrees_with_reference_reducer():
    corpus = normalising_corpus(400, seed=5)
    assert len(corpus) >= 200
    for t, nf in corpus:
        out = norm_utlc(t, fuel=100_000)
        assert out is not None
        assert utlc_to_tuple(out) == nf
        assert is_beta_normal(utlc_to_tuple(out))
        assert norm_utlc(out, fuel=100_000) == out
