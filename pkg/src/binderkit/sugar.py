"""Let-bindings as a syntax extension: desugaring, usage counting, inlining.

Any description ``d`` can be extended with lets via ``sum(d, let_desc)``; the
left branch keeps ``d``'s constructors. Counters record whether a let-bound
variable is used zero times, once, or many times.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .desc import COUNTERS, Desc, case_layer, clet_desc, let_desc, sum_desc
from .errors import BinderkitError
from .scope import base, env_of, fresh_l, identity_thinning, shift, vl_var
from .semantics import SemanticsDef, reify, semantics, syntactic_alg
from .sorts import UNIT_SORTS, SortDomain
from .syntactic import id_tm, ren, vl_tm
from .term import ConT, Pay, Sub, Term, VarT

ZERO, ONE, MANY = COUNTERS

Count = tuple  # one counter per context entry, index 0 first


@lru_cache(maxsize=None)
def with_let(d: Desc, sorts: SortDomain = UNIT_SORTS) -> Desc:
    return sum_desc(d, let_desc(sorts))


@lru_cache(maxsize=None)
def with_clet(d: Desc, sorts: SortDomain = UNIT_SORTS) -> Desc:
    return sum_desc(d, clet_desc(sorts))


def counter_add(a: str, b: str) -> str:
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    return MANY


def zeros(ctx: Sequence) -> Count:
    return (ZERO,) * len(ctx)


def from_var(index: int, ctx: Sequence) -> Count:
    return tuple(ONE if i == index else ZERO for i in range(len(ctx)))


def merge(a: Count, b: Count) -> Count:
    if len(a) != len(b):
        raise BinderkitError(f"cannot merge counts of lengths {len(a)} and {len(b)}")
    return tuple(counter_add(x, y) for x, y in zip(a, b))


def control(c: str, k: Count) -> Count:
    return zeros(k) if c == ZERO else k


# ---------------------------------------------------------------------------
# Desugaring


def unlet(d: Desc, t: Term, ctx: Sequence = (), sorts: SortDomain = UNIT_SORTS) -> Term:
    """Inline every let of ``t`` (a term of ``with_let(d, sorts)`` in ``ctx``)."""

    def let_alg(sort, layer, ctx):
        _types, e, k = layer
        return k.child(identity_thinning(ctx), env_of(k.telescope, ctx, [e.child]))

    keep = syntactic_alg(vl_tm(d))
    S = SemanticsDef(with_let(d, sorts), lambda v, th: ren(d, th, v), lambda v, ctx: v,
                     case_layer(keep, let_alg))
    return semantics(S, id_tm(d, ctx), t)


# ---------------------------------------------------------------------------
# Counting


def _drop(count: Count, n: int) -> Count:
    return count[n:]


def annotate(d: Desc, t: Term, ctx: Sequence = (), sorts: SortDomain = UNIT_SORTS) -> tuple[Term, Count]:
    """Tag every let of ``t`` with the usage of its variable.

    Returns the counted term (over ``with_clet(d, sorts)``) and the usage
    tally of ``ctx``'s variables.
    """
    vv = vl_var()

    def run(tel, k, ctx):
        if not tel:
            return k
        return k(shift(len(tel), ctx, tel), fresh_l(vv, tel, ctx))

    def var(v, ctx):
        return VarT(v), from_var(v.index, ctx)

    def keep(sort, layer, ctx):
        out, count = [Pay(True)], zeros(ctx)
        for ev in layer:
            if isinstance(ev, Sub):
                tm, c = run(ev.telescope, ev.child, ctx)
                out.append(Sub(ev.telescope, ev.sort, tm))
                count = merge(count, _drop(c, len(ev.telescope)))
            else:
                out.append(ev)
        return ConT(tuple(out)), count

    def let_alg(sort, layer, ctx):
        types, e, k = layer
        te, ce = e.child
        tb, cb = run(k.telescope, k.child, ctx)
        cx, ct = cb[0], _drop(cb, 1)
        node = ConT((Pay(False), Pay(cx), types, Sub(e.telescope, e.sort, te),
                     Sub(k.telescope, k.sort, tb)))
        return node, merge(control(cx, ce), ct)

    def alg(sort, layer, ctx):
        head, *rest = layer
        return (keep if head.value else let_alg)(sort, tuple(rest), ctx)

    S = SemanticsDef(with_let(d, sorts), lambda v, th: th(v), var, alg)
    ctx = tuple(ctx)
    return semantics(S, base(vv, ctx), t)


def inline(d: Desc, t: Term, ctx: Sequence = (), sorts: SortDomain = UNIT_SORTS) -> Term:
    """Inline lets used at most once; keep the others as plain lets.

    ``t`` is a counted term (over ``with_clet(d, sorts)``); the result is over
    ``with_let(d, sorts)``.
    """
    target = with_let(d, sorts)
    vt = vl_tm(target)

    def keep(sort, layer, ctx):
        return ConT((Pay(True),) + tuple(
            Sub(ev.telescope, ev.sort, reify(vt, ev.telescope, ev.sort, ev.child))
            if isinstance(ev, Sub) else ev for ev in layer))

    def let_alg(sort, layer, ctx):
        counter, types, e, k = layer
        if counter.value == MANY:
            body = reify(vt, k.telescope, k.sort, k.child)
            return ConT((Pay(False), types, e, Sub(k.telescope, k.sort, body)))
        return k.child(identity_thinning(ctx), env_of(k.telescope, ctx, [e.child]))

    S = SemanticsDef(with_clet(d, sorts), lambda v, th: ren(target, th, v), lambda v, ctx: v,
                     case_layer(keep, let_alg))
    return semantics(S, id_tm(target, ctx), t)


def optimise(d: Desc, t: Term, ctx: Sequence = (), sorts: SortDomain = UNIT_SORTS) -> Term:
    """One counting pass followed by one inlining pass."""
    return inline(d, annotate(d, t, ctx, sorts)[0], ctx, sorts)


def count_lets(t: Term) -> int:
    """Number of let layers (right branch of the sum) in ``t``."""
    if isinstance(t, VarT):
        return 0
    here = int(t.layer[0].value is False)
    return here + sum(count_lets(ev.child) for ev in t.layer if isinstance(ev, Sub))
