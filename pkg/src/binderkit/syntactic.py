"""Renaming and substitution, both obtained from the generic traversal."""

from __future__ import annotations

from typing import Any, Sequence

from .desc import Desc
from .scope import Env, Thinning, Var, VarLike, base, vl_var
from .semantics import SemanticsDef, semantics, syntactic_alg
from .term import Term, VarT


def _ren_var(v: Var, ctx) -> Term:
    return VarT(v)


def renaming(d: Desc) -> SemanticsDef[Var, Term]:
    return SemanticsDef(d, lambda v, th: th(v), _ren_var, syntactic_alg(vl_var()))


def ren(d: Desc, rho: Thinning, t: Term) -> Term:
    """Rename ``t`` (over ``rho.source``) along ``rho``."""
    return semantics(renaming(d), rho, t)


def vl_tm(d: Desc) -> VarLike[Term]:
    """Terms as values: thinned by renaming, placeholders are variables."""
    vv = vl_var()
    return VarLike(lambda t, th: ren(d, th, t), lambda sort, ctx: VarT(vv.new(sort, ctx)))


def substitution(d: Desc) -> SemanticsDef[Term, Term]:
    return SemanticsDef(d, lambda t, th: ren(d, th, t), lambda t, ctx: t, syntactic_alg(vl_tm(d)))


def sub(d: Desc, rho: Env[Term], t: Term) -> Term:
    """Substitute ``rho`` into ``t``; the result lives in ``rho.target``."""
    return semantics(substitution(d), rho, t)


def id_tm(d: Desc, ctx: Sequence[Any]) -> Env[Term]:
    """The identity substitution on ``ctx``."""
    return base(vl_tm(d), tuple(ctx))
