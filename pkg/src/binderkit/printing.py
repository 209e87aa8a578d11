"""Printing terms with generated names.

The printing semantics uses names as values and state-passing printers as
computations: a printer takes the current :class:`NameSupply` and returns the
text together with the remaining supply. Binders draw fresh names from the
supply before their body is printed.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .desc import Desc, case_layer
from .scope import env_of, shift
from .semantics import SemanticsDef, semantics
from .sorts import encode_type
from .term import Pay, Sub, Term

LETTERS = string.ascii_lowercase


@dataclass(frozen=True)
class NameSupply:
    """Position in the stream a, b, ..., z, a1, b1, ..., z1, a2, ..."""

    next: int = 0


def name_at(n: int) -> str:
    letter, round_ = LETTERS[n % 26], n // 26
    return letter if round_ == 0 else f"{letter}{round_}"


def fresh(supply: NameSupply) -> tuple[str, NameSupply]:
    return name_at(supply.next), NameSupply(supply.next + 1)


def fresh_names(supply: NameSupply, n: int) -> tuple[list[str], NameSupply]:
    out = []
    for _ in range(n):
        name, supply = fresh(supply)
        out.append(name)
    return out, supply


@dataclass(frozen=True)
class Pieces:
    """A printed subterm: names chosen for its binders, and its text."""

    names: tuple[str, ...]
    text: str


Printer = Callable[[NameSupply], "tuple[str, NameSupply]"]
Display = Callable[[Any, tuple], str]


def _scope_printer(tel: tuple, ctx: tuple, body) -> Printer:
    def run(supply):
        if not tel:
            text, supply = body(supply)
            return Pieces((), text), supply
        names, supply = fresh_names(supply, len(tel))
        inner = body(shift(len(tel), ctx, tel), env_of(tel, tel + ctx, names))
        text, supply = inner(supply)
        return Pieces(tuple(names), text), supply
    return run


def printing(d: Desc, disp: Display, var_display: Callable[[str], str] = lambda n: n) -> SemanticsDef:
    def var(name, ctx):
        shown = var_display(name)
        return lambda supply: (shown, supply)

    def alg(sort, layer, ctx):
        def run(supply):
            out = []
            for ev in layer:
                if isinstance(ev, Sub):
                    pieces, supply = _scope_printer(ev.telescope, ctx, ev.child)(supply)
                    out.append(Sub(ev.telescope, ev.sort, pieces))
                else:
                    out.append(ev)
            return disp(sort, tuple(out)), supply
        return run

    return SemanticsDef(d, lambda name, th: name, var, alg)


def print_term(d: Desc, disp: Display, ctx: Sequence, t: Term,
               var_display: Callable[[str], str] = lambda n: n) -> str:
    """Render ``t`` (valid in ``ctx``); free variables are named first, index 0 first."""
    ctx = tuple(ctx)
    names, supply = fresh_names(NameSupply(), len(ctx))
    printer = semantics(printing(d, disp, var_display), env_of(ctx, ctx, names), t)
    return printer(supply)[0]


# ---------------------------------------------------------------------------
# Displays


def _subs(layer) -> list[Pieces]:
    return [ev.child for ev in layer if isinstance(ev, Sub)]


def _pays(layer) -> list:
    return [ev.value for ev in layer if isinstance(ev, Pay)]


def utlc_display(sort, layer) -> str:
    if layer[0].value:
        f, a = _subs(layer)
        return f"{f.text} ({a.text})"
    (b,) = _subs(layer)
    return f"λ{b.names[0]}. {b.text}"


def let_display(sort, layer) -> str:
    e, b = _subs(layer)
    return f"let {b.names[0]} = {e.text} in {b.text}"


def clet_display(sort, layer) -> str:
    counter = layer[0].value
    e, b = _subs(layer[1:])
    return f"let[{counter}] {b.names[0]} = {e.text} in {b.text}"


def bidi_display(sort, layer) -> str:
    tag = layer[0].value
    subs = _subs(layer)
    if tag == "app":
        return f"{subs[0].text} ({subs[1].text})"
    if tag == "lam":
        return f"λ{subs[0].names[0]}. {subs[0].text}"
    if tag == "emb":
        return subs[0].text
    return f"({subs[0].text} : {layer[1].value!r})"


def stlc_display(sort, layer) -> str:
    tag, (dom, _cod) = _pays(layer)
    subs = _subs(layer)
    if tag == "app":
        return f"{subs[0].text} ({subs[1].text})"
    return f"λ{subs[0].names[0]}:{dom!r}. {subs[0].text}"


def clist_display(sort, layer) -> str:
    if layer[0].value:
        return "[]"
    (tail,) = _subs(layer)
    return f"{tail.names[0]}: {layer[1].value} ∷ {tail.text}"


utlc_let_display = case_layer(utlc_display, let_display)
utlc_clet_display = case_layer(utlc_display, clet_display)


# s-expression forms, readable back by the command-line parser

def utlc_sexpr(sort, layer) -> str:
    if layer[0].value:
        f, a = _subs(layer)
        return f"(app {f.text} {a.text})"
    (b,) = _subs(layer)
    return f"(lam {b.names[0]} {b.text})"


def let_sexpr(sort, layer) -> str:
    e, b = _subs(layer)
    return f"(let ({b.names[0]} {e.text}) {b.text})"


def bidi_sexpr(sort, layer) -> str:
    tag = layer[0].value
    subs = _subs(layer)
    if tag == "app":
        return f"(app {subs[0].text} {subs[1].text})"
    if tag == "lam":
        return f"(lam {subs[0].names[0]} {subs[0].text})"
    if tag == "emb":
        return f"(emb {subs[0].text})"
    return f"(ann {subs[0].text} {encode_type(layer[1].value)})"


def stlc_sexpr(sort, layer) -> str:
    tag, (dom, _cod) = _pays(layer)
    subs = _subs(layer)
    if tag == "app":
        return f"(app {subs[0].text} {subs[1].text})"
    return f"(lam {subs[0].names[0]} {encode_type(dom)} {subs[0].text})"


def clist_sexpr(sort, layer) -> str:
    if layer[0].value:
        return "nil"
    (tail,) = _subs(layer)
    return f"(cons {layer[1].value} {tail.names[0]} {tail.text})"


utlc_let_sexpr = case_layer(utlc_sexpr, let_sexpr)

DISPLAYS = {
    "utlc": utlc_display,
    "bidi": bidi_display,
    "stlc": stlc_display,
    "utlc+let": utlc_let_display,
    "clist": clist_display,
}

SEXPR_DISPLAYS = {
    "utlc": utlc_sexpr,
    "bidi": bidi_sexpr,
    "stlc": stlc_sexpr,
    "utlc+let": utlc_let_sexpr,
    "clist": clist_sexpr,
}


def ptr_display(name: str) -> str:
    return f"(ptr {name})"


SEXPR_VAR_DISPLAYS = {"clist": ptr_display}


def to_sexpr(syntax: str, d: Desc, ctx: Sequence, t: Term) -> str:
    """Named s-expression text for a term of a built-in syntax."""
    return print_term(d, SEXPR_DISPLAYS[syntax], ctx, t, SEXPR_VAR_DISPLAYS.get(syntax, lambda n: n))
