"""The generic traversal: one ``SemanticsDef`` per program, one engine for all.

A semantics interprets variables through an environment of *values* and
produces *computations*. Values must absorb thinnings (``th_v``) so they can
be pushed under binders, embed into computations (``var``), and an algebra
(``alg``) combines one layer whose subterms have already been interpreted.
Scopes binding new variables reach the algebra as :class:`Kripke` functions.

Because sorts and contexts are runtime data here, ``var`` and ``alg`` also
receive the context the computation lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Sequence, TypeVar

from .desc import Desc
from .scope import Env, Kripke, Thinning, VarLike, append, empty_env, fresh_l, fresh_r, map_env, vl_var
from .term import ConT, Term, VarT, map_layer, map_subs

V = TypeVar("V")
C = TypeVar("C")


@dataclass(frozen=True)
class SemanticsDef(Generic[V, C]):
    """``th_v(value, thinning)``, ``var(value, ctx)``, ``alg(sort, layer, ctx)``."""

    desc: Desc
    th_v: Callable[[V, Thinning], V]
    var: Callable[[V, tuple], C]
    alg: Callable[[Any, tuple, tuple], C]


def semantics(S: SemanticsDef[V, C], rho: Env[V], t: Term) -> C:
    """Evaluate ``t`` (over ``rho.source``) into a computation over ``rho.target``."""
    if isinstance(t, VarT):
        return S.var(rho(t.var), rho.target)
    layer, sort = map_layer(S.desc, lambda tel, j, sc: body(S, rho, tel, j, sc), t.layer)
    return S.alg(sort, layer, rho.target)


def body(S: SemanticsDef[V, C], rho: Env[V], telescope: tuple, sort: Any, sc: Term):
    """Interpret a scope: a plain computation, or a Kripke function if it binds."""
    if not telescope:
        return semantics(S, rho, sc)

    def run(th: Thinning, vs: Env[V]) -> C:
        thinned = map_env(lambda v: S.th_v(v, th), rho, th.target)
        return semantics(S, append(thinned, vs), sc)

    return Kripke(telescope, rho.target, run)


_VL_VAR = vl_var()


def closed(S: SemanticsDef[V, C], t: Term) -> C:
    return semantics(S, empty_env(), t)


def reify(vl: VarLike[V], telescope: Sequence, sort: Any, k) -> Any:
    """Run a Kripke function on placeholder values for its fresh variables.

    The result lives in ``telescope + k.ctx``. Scopes binding nothing are
    returned unchanged.
    """
    telescope = tuple(telescope)
    if not telescope:
        return k
    return k(fresh_r(_VL_VAR, k.ctx, telescope), fresh_l(vl, telescope, k.ctx))


def syntactic_alg(vl: VarLike) -> Callable:
    """The algebra shared by renaming and substitution: rebuild the node."""

    def alg(sort, layer, ctx):
        return ConT(map_subs(lambda tel, j, k: reify(vl, tel, j, k), layer))

    return alg
