import pytest

from binderkit.desc import Done, Rec, stlc_desc, utlc_desc
from binderkit.gen import (
    GenConfig, Generator, UnsatisfiableSort, gen_term, generator, random_ctx, random_extension,
    random_sub_env, random_thinning, sample_rng,
)
from binderkit.scope import Var
from binderkit.sorts import ALPHA, UNIT, Arrow, enumerate_types
from binderkit.term import VarT, depth, is_valid, validate

from helpers import SYNTAX_SORTS, samples

U = utlc_desc()


def test_depth_one_is_a_variable():
    for seed in range(20):
        t = gen_term(U, GenConfig(seed=seed, max_depth=1, context=(UNIT,), sort=UNIT))
        assert t == VarT(Var(0, UNIT))


def test_deterministic():
    cfg = GenConfig(seed=42, max_depth=8, context=(UNIT,), sort=UNIT)
    assert gen_term(U, cfg) == gen_term(U, cfg)
    s = stlc_desc()
    cfg = GenConfig(seed=42, max_depth=6, sort=Arrow(ALPHA, ALPHA))
    assert gen_term(s, cfg) == gen_term(s, cfg)


def test_unsatisfiable():
    with pytest.raises(UnsatisfiableSort):
        gen_term(U, GenConfig(seed=1, max_depth=1, sort=UNIT))
    rec_only = Rec((), UNIT, Done(UNIT))
    with pytest.raises(UnsatisfiableSort):
        Generator(rec_only).term(sample_rng(0), UNIT, (), 5)
    assert not generator(stlc_desc()).inhabited(ALPHA, (), 8)


@pytest.mark.parametrize("syntax", sorted(SYNTAX_SORTS))
def test_generated_terms_validate(syntax):
    d, _ = SYNTAX_SORTS[syntax]
    for rng, ctx, sort, t in samples(syntax, 1000, seed=42, depth=8):
        validate(d, ctx, sort, t)
        assert depth(t) <= 8


def test_stlc_terms_use_several_types():
    seen = {sort for *_, sort, _ in samples("stlc", 300, seed=3)}
    assert len(seen) == len(enumerate_types(1))


def test_environment_samplers():
    g = generator(U)
    for i in range(200):
        rng = sample_rng(11, i)
        ctx = random_ctx(rng, (UNIT,))
        big = random_extension(rng, ctx, (UNIT,))
        assert big[len(big) - len(ctx):] == ctx
        th = random_thinning(rng, ctx, big)
        for v in th.vars():
            assert th(v).valid_in(big)
        if big:
            rho = random_sub_env(rng, g, ctx, big)
            for v in rho.vars():
                assert is_valid(U, big, UNIT, rho(v))
