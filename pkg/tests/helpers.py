"""Sampling helpers shared by the tests."""

from binderkit.desc import bidi_desc, clist_desc, stlc_desc, utlc_desc, utlc_let_desc
from binderkit.gen import generator, random_ctx, random_extension, sample_rng, sample_sort
from binderkit.sorts import CHECK, INFER, UNIT, enumerate_types

SYNTAX_SORTS = {
    "utlc": (utlc_desc(), (UNIT,)),
    "bidi": (bidi_desc(), (INFER, CHECK)),
    "stlc": (stlc_desc(), tuple(enumerate_types(1))),
    "utlc+let": (utlc_let_desc(), (UNIT,)),
    "clist": (clist_desc(), (UNIT,)),
}


def samples(syntax, n, seed=7, depth=6, ctx_sorts=None, closed=False):
    """Yield ``(rng, ctx, sort, term)`` for ``n`` generated terms."""
    d, sorts = SYNTAX_SORTS[syntax]
    ctx_sorts = sorts if ctx_sorts is None else ctx_sorts
    g = generator(d)
    for i in range(n):
        rng = sample_rng(seed, i)
        ctx = () if closed else random_ctx(rng, ctx_sorts)
        sort = sample_sort(rng, g, sorts, ctx, depth)
        yield rng, ctx, sort, g.term(rng, sort, ctx, depth)


def extend(rng, ctx, syntax):
    return random_extension(rng, ctx, SYNTAX_SORTS[syntax][1])
