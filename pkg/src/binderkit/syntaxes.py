"""Smart constructors and named example terms for the built-in syntaxes.

Layers of a summed description start with the boolean picking the branch;
:func:`inl` and :func:`inr` add it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .desc import (
    APP, CUT, EMB, LAM,
    Desc,
    bidi_desc,
    clist_desc,
    utlc_clet_desc,
    utlc_desc,
    utlc_let_desc,
    stlc_desc,
)
from .scope import Var
from .sorts import ALPHA, CHECK, INFER, UNIT, UNIT_SORTS, MODE_SORTS, TYPE_SORTS, Arrow, SortDomain
from .term import ConT, Pay, Sub, Term, VarT


def var(i: int, sort: Any = UNIT) -> VarT:
    return VarT(Var(i, sort))


def inl(t: ConT) -> ConT:
    return ConT((Pay(True),) + tuple(t.layer))


def inr(t: ConT) -> ConT:
    return ConT((Pay(False),) + tuple(t.layer))


# untyped lambda calculus

def lam(body: Term) -> ConT:
    return ConT((Pay(False), Sub((UNIT,), UNIT, body)))


def app(f: Term, a: Term) -> ConT:
    return ConT((Pay(True), Sub((), UNIT, f), Sub((), UNIT, a)))


def is_utlc_app(layer) -> bool:
    return bool(layer) and layer[0].value is True


# lets, over any sort domain

def let_layer(sigma: Any, tau: Any, e: Term, body: Term) -> tuple:
    return (Pay((sigma, tau)), Sub((), sigma, e), Sub((sigma,), tau, body))


def let_(e: Term, body: Term, sigma: Any = UNIT, tau: Any = UNIT) -> ConT:
    """A let node of ``sum(d, let_desc)``."""
    return ConT((Pay(False),) + let_layer(sigma, tau, e, body))


def clet_(counter: str, e: Term, body: Term, sigma: Any = UNIT, tau: Any = UNIT) -> ConT:
    """A counted let node of ``sum(d, clet_desc)``."""
    return ConT((Pay(False), Pay(counter)) + let_layer(sigma, tau, e, body))


# utlc embedded in utlc+let

def llam(body: Term) -> ConT:
    return inl(lam(body))


def lapp(f: Term, a: Term) -> ConT:
    return inl(app(f, a))


# bidirectional

def bvar(i: int) -> VarT:
    return VarT(Var(i, INFER))


def b_app(f: Term, a: Term) -> ConT:
    return ConT((Pay(APP), Sub((), INFER, f), Sub((), CHECK, a)))


def b_lam(body: Term) -> ConT:
    return ConT((Pay(LAM), Sub((INFER,), CHECK, body)))


def b_emb(t: Term) -> ConT:
    return ConT((Pay(EMB), Sub((), INFER, t)))


def b_cut(ty: Any, t: Term) -> ConT:
    return ConT((Pay(CUT), Pay(ty), Sub((), CHECK, t)))


# simply typed

def s_app(dom: Any, cod: Any, f: Term, a: Term) -> ConT:
    return ConT((Pay(APP), Pay((dom, cod)), Sub((), Arrow(dom, cod), f), Sub((), dom, a)))


def s_lam(dom: Any, cod: Any, body: Term) -> ConT:
    return ConT((Pay(LAM), Pay((dom, cod)), Sub((dom,), cod, body)))


# cyclic lists

def nil() -> ConT:
    return ConT((Pay(True),))


def cons(head: int, tail: Term) -> ConT:
    return ConT((Pay(False), Pay(head), Sub((UNIT,), UNIT, tail)))


def ptr(i: int) -> VarT:
    return VarT(Var(i, UNIT))


def clist_of(values) -> ConT:
    out = nil()
    for v in reversed(list(values)):
        out = cons(v, out)
    return out


# named examples

BETA = Arrow(ALPHA, ALPHA)

ID_UTLC = lam(var(0))
ID_BIDI = b_lam(b_emb(bvar(0)))
ID_STLC = s_lam(ALPHA, ALPHA, VarT(Var(0, ALPHA)))

# (λx. x : β → β) (λx. x)
BIDI_EXAMPLE = b_app(b_cut(Arrow(BETA, BETA), ID_BIDI), ID_BIDI)

# (λx. x) ((λx. x) (λx. x))
REDEX_CHAIN = app(ID_UTLC, app(ID_UTLC, ID_UTLC))

ZERO_ONE_CYCLE = cons(0, cons(1, ptr(1)))
ZERO_ONE = clist_of([0, 1])


@dataclass(frozen=True)
class Syntax:
    """A built-in syntax as exposed on the command line."""

    name: str
    desc: Desc
    sorts: SortDomain
    top: Any  # default sort of a whole program; None means "inferred"


SYNTAXES = {
    "utlc": Syntax("utlc", utlc_desc(), UNIT_SORTS, UNIT),
    "bidi": Syntax("bidi", bidi_desc(), MODE_SORTS, INFER),
    "stlc": Syntax("stlc", stlc_desc(), TYPE_SORTS, None),
    "utlc+let": Syntax("utlc+let", utlc_let_desc(), UNIT_SORTS, UNIT),
    "clist": Syntax("clist", clist_desc(), UNIT_SORTS, UNIT),
}

UTLC_CLET = Syntax("utlc+clet", utlc_clet_desc(), UNIT_SORTS, UNIT)
