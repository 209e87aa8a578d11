"""Bidirectional type checking and elaboration for the bidirectional syntax.

Inferring terms compute an optional type. Checking terms compute a
predicate on candidate types. Elaboration runs the same rules but also
builds a term of the simply typed syntax, so annotations disappear from the
output.
"""

from __future__ import annotations

from typing import Any, Optional, Sequence

from .desc import APP, EMB, LAM, bidi_desc
from .errors import BinderkitError
from .scope import Env, base, env_of, vl_var, weaken
from .semantics import SemanticsDef, semantics
from .sorts import INFER, Arrow, SimpleType
from .syntaxes import s_app, s_lam
from .term import Sub, Term, VarT, term_sort
from .scope import Var


class CheckModeVariable(BinderkitError):
    """A context entry has mode Check; such variables cannot be typed."""


def type_eq(a: SimpleType, b: SimpleType) -> bool:
    return a == b


def is_arrow(t: SimpleType) -> Optional[tuple[SimpleType, SimpleType]]:
    if isinstance(t, Arrow):
        return t.dom, t.cod
    return None


def _subs(layer) -> list:
    return [ev.child for ev in layer if isinstance(ev, Sub)]


def _bind_one(k, ctx, value):
    """Instantiate a one-binder Kripke body in ``(Infer,) + ctx``."""
    return k(weaken(INFER, ctx), env_of((INFER,), (INFER,) + tuple(ctx), [value]))


def _check_modes(ms: Sequence) -> None:
    for i, m in enumerate(ms):
        if m != INFER:
            raise CheckModeVariable(f"context entry {i} has mode {m!r}; only Infer variables can be typed")


def typing_env(ms: Sequence, types: Sequence[SimpleType]) -> Env[SimpleType]:
    """Environment giving each (Infer) variable of ``ms`` its type."""
    ms = tuple(ms)
    _check_modes(ms)
    return env_of(ms, ms, types)


# ---------------------------------------------------------------------------
# Type checking


def _tc_alg(sort, layer, ctx):
    tag = layer[0].value
    subs = _subs(layer)
    if tag == APP:
        f, a = subs
        arr = is_arrow(f) if f is not None else None
        if arr is None:
            return None
        dom, cod = arr
        return cod if a(dom) else None
    if tag == LAM:
        (k,) = subs

        def check_lam(cand):
            arr = is_arrow(cand)
            return arr is not None and _bind_one(k, ctx, arr[0])(arr[1])
        return check_lam
    if tag == EMB:
        (t,) = subs
        return lambda cand: t is not None and type_eq(t, cand)
    ty = layer[1].value
    (t,) = subs
    return ty if t(ty) else None


TYPECHECK = SemanticsDef(bidi_desc(), lambda ty, th: ty, lambda ty, ctx: ty, _tc_alg)


def typecheck(t: Term, ms: Sequence = (), types: Sequence[SimpleType] = ()):
    """Infer mode: the type or ``None``. Check mode: a predicate on candidates."""
    return semantics(TYPECHECK, typing_env(ms, types), t)


def infer(t: Term, ms: Sequence = (), types: Sequence[SimpleType] = ()) -> Optional[SimpleType]:
    return typecheck(t, ms, types)


def check(t: Term, candidate: SimpleType, ms: Sequence = (), types: Sequence[SimpleType] = ()) -> bool:
    return bool(typecheck(t, ms, types)(candidate))


# ---------------------------------------------------------------------------
# Elaboration
#
# Values are variables of the mode context. Computations take the list of
# types for the current context: Infer ones return ``(type, term)`` or None,
# Check ones return a function from a candidate to a term or None.


def _el_var(v: Var, ctx):
    def run(types):
        ty = types[v.index]
        return ty, VarT(Var(v.index, ty))
    return run


def _el_alg(sort, layer, ctx):
    tag = layer[0].value
    subs = _subs(layer)
    if tag == APP:
        f, a = subs

        def run_app(types):
            got = f(types)
            arr = is_arrow(got[0]) if got is not None else None
            if arr is None:
                return None
            dom, cod = arr
            arg = a(types)(dom)
            return None if arg is None else (cod, s_app(dom, cod, got[1], arg))
        return run_app
    if tag == LAM:
        (k,) = subs
        inner = _bind_one(k, ctx, Var(0, INFER))

        def run_lam(types):
            def at(cand):
                arr = is_arrow(cand)
                if arr is None:
                    return None
                dom, cod = arr
                b = inner((dom,) + tuple(types))(cod)
                return None if b is None else s_lam(dom, cod, b)
            return at
        return run_lam
    if tag == EMB:
        (t,) = subs

        def run_emb(types):
            def at(cand):
                got = t(types)
                return got[1] if got is not None and type_eq(got[0], cand) else None
            return at
        return run_emb
    ty = layer[1].value
    (t,) = subs

    def run_cut(types):
        body = t(types)(ty)
        return None if body is None else (ty, body)
    return run_cut


ELABORATE = SemanticsDef(bidi_desc(), lambda v, th: th(v), _el_var, _el_alg)


def elaborate(t: Term, ms: Sequence = (), types: Sequence[SimpleType] = ()):
    """Infer mode: ``(type, stlc term)`` or None. Check mode: candidate -> term or None.

    The produced term lives in the context ``types``.
    """
    ms = tuple(ms)
    _check_modes(ms)
    if len(types) != len(ms):
        raise ValueError(f"{len(types)} types for a context of length {len(ms)}")
    return semantics(ELABORATE, base(vl_var(), ms), t)(tuple(types))


def mode_of(t: Term) -> Any:
    return term_sort(bidi_desc(), t)
