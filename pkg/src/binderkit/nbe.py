"""Normalisation by evaluation into a reflexive domain.

Values and computations are both :class:`Dm`: a neutral variable, a
constructor whose binding positions hold Kripke functions (so they can be
applied), or the error token :data:`DBOT`. Evaluation is not guaranteed to
terminate; :func:`norm` accepts an optional step budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence, Union

from .desc import Desc, utlc_desc
from .errors import BinderkitError
from .scope import Kripke, Thinning, Var, VarLike, base, env_of, fresh_l, identity_thinning, shift, th_kripke
from .semantics import SemanticsDef, semantics
from .term import ConT, Layer, Sub, Term, VarT


@dataclass(frozen=True)
class DVar:
    var: Var


@dataclass(frozen=True)
class DCon:
    layer: Layer  # Sub children are Kripke functions when they bind, Dm otherwise


class _Bot:
    def __repr__(self) -> str:
        return "⊥"


DBOT = _Bot()
Dm = Union[DVar, DCon, _Bot]


class OutOfFuel(BinderkitError):
    """Normalisation used up its step budget."""


def thin_dm(v: Dm, th: Thinning) -> Dm:
    if isinstance(v, DVar):
        return DVar(th(v.var))
    if isinstance(v, DCon):
        return DCon(tuple(
            Sub(ev.telescope, ev.sort,
                th_kripke(ev.child, th) if ev.telescope else thin_dm(ev.child, th))
            if isinstance(ev, Sub) else ev for ev in v.layer))
    return v


VL_DM = VarLike(thin_dm, lambda sort, ctx: DVar(Var(0, sort)))


def nbe_semantics(d: Desc, alg: Callable[[Any, Layer, tuple], Dm]) -> SemanticsDef:
    return SemanticsDef(d, thin_dm, lambda v, ctx: v, alg)


def nbe(d: Desc, alg: Callable, rho, t: Term) -> Dm:
    return semantics(nbe_semantics(d, alg), rho, t)


def app_dm(k: Kripke, t: Dm) -> Dm:
    """Apply a one-binder Kripke function to an argument, staying in its context."""
    return k(identity_thinning(k.ctx), env_of(k.telescope, k.ctx, [t]))


def utlc_alg(sort, layer, ctx) -> Dm:
    """Applications of a lambda reduce; everything else is rebuilt."""
    if layer[0].value:
        f, a = layer[1].child, layer[2].child
        if isinstance(f, DCon) and f.layer[0].value is False:
            return app_dm(f.layer[1].child, a)
    return DCon(tuple(layer))


def reify_dm(d: Desc, v: Dm, ctx: Sequence = ()) -> Optional[Term]:
    """Read a domain value back as a term in ``ctx``; None if it contains ⊥."""
    ctx = tuple(ctx)
    if isinstance(v, DVar):
        return VarT(v.var)
    if not isinstance(v, DCon):
        return None
    out = []
    for ev in v.layer:
        if not isinstance(ev, Sub):
            out.append(ev)
            continue
        tel, body = ev.telescope, ev.child
        if tel:
            body = body(shift(len(tel), ctx, tel), fresh_l(VL_DM, tel, ctx))
        child = reify_dm(d, body, tel + ctx)
        if child is None:
            return None
        out.append(Sub(tel, ev.sort, child))
    return ConT(tuple(out))


def with_fuel(alg: Callable, fuel: int) -> Callable:
    """Wrap ``alg`` so that it raises :class:`OutOfFuel` after ``fuel`` calls."""
    left = [fuel]

    def counted(sort, layer, ctx):
        if left[0] <= 0:
            raise OutOfFuel(f"normalisation exceeded {fuel} steps")
        left[0] -= 1
        return alg(sort, layer, ctx)

    return counted


def norm(d: Desc, alg: Callable, t: Term, ctx: Sequence = (), fuel: Optional[int] = None) -> Optional[Term]:
    """Evaluate ``t`` and read the value back; None if evaluation produced ⊥.

    Without ``fuel`` this may not terminate. With it, running out of steps
    (or of Python stack) raises :class:`OutOfFuel`.
    """
    ctx = tuple(ctx)
    if fuel is None:
        return reify_dm(d, nbe(d, alg, base(VL_DM, ctx), t), ctx)
    try:
        return reify_dm(d, nbe(d, with_fuel(alg, fuel), base(VL_DM, ctx), t), ctx)
    except RecursionError:
        raise OutOfFuel("normalisation nested too deeply before the step budget ran out") from None


def norm_utlc(t: Term, ctx: Sequence = (), fuel: Optional[int] = None) -> Optional[Term]:
    return norm(utlc_desc(), utlc_alg, t, ctx, fuel)
