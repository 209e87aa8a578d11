"""S-expression input for the built-in syntaxes.

Grammar::

    term ::= IDENT | (lam IDENT term) | (app term term) | (let (IDENT term) term)
           | (ann term type) | (emb term) | (cons NAT IDENT term) | (ptr IDENT) | nil
    type ::= alpha | (-> type type)

Simply typed lambdas also carry their domain: ``(lam IDENT type term)``.
Each syntax accepts only its own heads. Every raw node records its
``(line, column)`` position, 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .desc import APP, CUT, EMB, LAM
from .errors import BinderkitError
from .scopecheck import OutOfScope, RCon, RSub, RVar, Raw
from .sorts import ALPHA, UNIT, Arrow, SimpleType, encode_type
from .term import Pay, Sub, Term, VarT

KEYWORDS = frozenset({"lam", "app", "let", "ann", "emb", "cons", "ptr", "nil", "alpha", "->"})
HEADS = {
    "utlc": {"lam", "app"},
    "utlc+let": {"lam", "app", "let"},
    "bidi": {"lam", "app", "ann", "emb"},
    "stlc": {"lam", "app"},
    "clist": {"cons", "ptr", "nil"},
}
IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
TOKEN = re.compile(r"\s+|;[^\n]*|(?P<tok>\(|\)|[^\s()]+)")

Pos = tuple


class ParseError(BinderkitError):
    def __init__(self, message: str, pos: Optional[Pos] = None):
        super().__init__(message)
        self.message = message
        self.pos = pos

    def __str__(self) -> str:
        if self.pos:
            return f"{self.pos[0]}:{self.pos[1]}: {self.message}"
        return self.message


class StlcTypeError(BinderkitError):
    """An unannotated simply typed program does not type check."""

    def __init__(self, message: str, pos: Optional[Pos] = None):
        super().__init__(message)
        self.message = message
        self.meta = pos


@dataclass(frozen=True)
class Atom:
    text: str
    pos: Pos


@dataclass(frozen=True)
class SList:
    items: tuple
    pos: Pos


SExp = Union[Atom, SList]


def tokenize(text: str) -> list[Atom]:
    out, line, col, i = [], 1, 1, 0
    while i < len(text):
        m = TOKEN.match(text, i)
        chunk = m.group(0)
        if m.group("tok"):
            out.append(Atom(chunk, (line, col)))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = m.end()
    return out


def read(text: str) -> SExp:
    """Read exactly one s-expression."""
    toks = tokenize(text)
    if not toks:
        raise ParseError("empty input", (1, 1))
    pos = 0

    def go() -> SExp:
        nonlocal pos
        tok = toks[pos]
        pos += 1
        if tok.text == ")":
            raise ParseError("unexpected ')'", tok.pos)
        if tok.text != "(":
            return tok
        items = []
        while True:
            if pos >= len(toks):
                raise ParseError("unclosed '('", tok.pos)
            if toks[pos].text == ")":
                pos += 1
                return SList(tuple(items), tok.pos)
            items.append(go())

    result = go()
    if pos != len(toks):
        raise ParseError(f"unexpected {toks[pos].text!r} after the term", toks[pos].pos)
    return result


def parse_type(e: SExp) -> SimpleType:
    if isinstance(e, Atom):
        if e.text == "alpha":
            return ALPHA
        raise ParseError(f"expected a type, found {e.text!r}", e.pos)
    if len(e.items) == 3 and isinstance(e.items[0], Atom) and e.items[0].text == "->":
        return Arrow(parse_type(e.items[1]), parse_type(e.items[2]))
    raise ParseError("expected alpha or (-> type type)", e.pos)


def _ident(e: SExp) -> str:
    if isinstance(e, Atom) and IDENT.match(e.text) and e.text not in KEYWORDS:
        return e.text
    where = e.pos
    shown = e.text if isinstance(e, Atom) else "a list"
    raise ParseError(f"expected an identifier, found {shown!r}", where)


def _nat(e: SExp) -> int:
    if isinstance(e, Atom) and e.text.isdigit():
        return int(e.text)
    raise ParseError("expected a natural number", e.pos)


def _arity(e: SList, head: str, n: int) -> None:
    if len(e.items) != n + 1:
        raise ParseError(f"'{head}' takes {n} argument(s), {len(e.items) - 1} given", e.pos)


class _Reader:
    """Turns s-expressions into raw terms for one syntax."""

    def __init__(self, syntax: str):
        if syntax not in HEADS or syntax == "stlc":
            raise ParseError(f"unknown syntax {syntax!r}")
        self.syntax = syntax
        self.heads = HEADS[syntax]

    def term(self, e: SExp) -> Raw:
        if isinstance(e, Atom):
            if e.text == "nil" and "nil" in self.heads:
                return RCon((Pay(True),), e.pos)
            return RVar(_ident(e), e.pos)
        if not e.items:
            raise ParseError("empty list", e.pos)
        head = e.items[0]
        if not isinstance(head, Atom) or head.text not in KEYWORDS:
            raise ParseError("expected a constructor name after '('", e.pos)
        if head.text not in self.heads:
            raise ParseError(f"'{head.text}' is not a constructor of {self.syntax}", head.pos)
        return getattr(self, "_" + head.text)(e)

    def _wrap(self, events: tuple, pos: Pos) -> RCon:
        if self.syntax == "utlc+let":
            events = (Pay(True),) + events
        return RCon(events, pos)

    def _lam(self, e: SList) -> Raw:
        _arity(e, "lam", 2)
        x, body = _ident(e.items[1]), self.term(e.items[2])
        if self.syntax == "bidi":
            return RCon((Pay(LAM), RSub((x,), body)), e.pos)
        return self._wrap((Pay(False), RSub((x,), body)), e.pos)

    def _app(self, e: SList) -> Raw:
        _arity(e, "app", 2)
        f, a = self.term(e.items[1]), self.term(e.items[2])
        if self.syntax == "bidi":
            return RCon((Pay(APP), RSub((), f), RSub((), a)), e.pos)
        return self._wrap((Pay(True), RSub((), f), RSub((), a)), e.pos)

    def _let(self, e: SList) -> Raw:
        _arity(e, "let", 2)
        binding = e.items[1]
        if not isinstance(binding, SList) or len(binding.items) != 2:
            raise ParseError("expected (IDENT term) after 'let'", binding.pos)
        x, bound = _ident(binding.items[0]), self.term(binding.items[1])
        body = self.term(e.items[2])
        return RCon((Pay(False), Pay((UNIT, UNIT)), RSub((), bound), RSub((x,), body)), e.pos)

    def _ann(self, e: SList) -> Raw:
        _arity(e, "ann", 2)
        t, ty = self.term(e.items[1]), parse_type(e.items[2])
        return RCon((Pay(CUT), Pay(ty), RSub((), t)), e.pos)

    def _emb(self, e: SList) -> Raw:
        _arity(e, "emb", 1)
        return RCon((Pay(EMB), RSub((), self.term(e.items[1]))), e.pos)

    def _cons(self, e: SList) -> Raw:
        _arity(e, "cons", 3)
        n, x, tail = _nat(e.items[1]), _ident(e.items[2]), self.term(e.items[3])
        return RCon((Pay(False), Pay(n), RSub((x,), tail)), e.pos)

    def _ptr(self, e: SList) -> Raw:
        _arity(e, "ptr", 1)
        return RVar(_ident(e.items[1]), e.items[1].pos)

    def _nil(self, e: SList) -> Raw:
        _arity(e, "nil", 0)
        return RCon((Pay(True),), e.pos)


def parse(syntax: str, text: str) -> Raw:
    """Parse ``text`` as a raw term of ``syntax`` (not ``stlc``; see :func:`parse_stlc`)."""
    if syntax == "stlc":
        return parse_stlc(text)[1]
    return _Reader(syntax).term(read(text))


def parse_stlc(text: str) -> tuple[SimpleType, Raw]:
    """Parse a simply typed term, filling in the types stored at each node.

    Lambdas are written ``(lam x type body)``. Returns the term's type and a
    raw term ready for scope checking. Unknown names raise
    :class:`~binderkit.scopecheck.OutOfScope`; ill-typed applications raise
    :class:`StlcTypeError`.
    """
    return _stlc(read(text), ())


def _stlc(e: SExp, env: tuple) -> tuple[SimpleType, Raw]:
    if isinstance(e, Atom):
        x = _ident(e)
        for name, ty in env:
            if name == x:
                return ty, RVar(x, e.pos)
        raise OutOfScope(x, e.pos)
    if not e.items or not isinstance(e.items[0], Atom) or e.items[0].text not in KEYWORDS:
        raise ParseError("expected a constructor name after '('", e.pos)
    head = e.items[0]
    if head.text == "lam":
        _arity(e, "lam", 3)
        x, dom = _ident(e.items[1]), parse_type(e.items[2])
        cod, body = _stlc(e.items[3], ((x, dom),) + env)
        return Arrow(dom, cod), RCon((Pay(LAM), Pay((dom, cod)), RSub((x,), body)), e.pos)
    if head.text == "app":
        _arity(e, "app", 2)
        fty, f = _stlc(e.items[1], env)
        aty, a = _stlc(e.items[2], env)
        if not isinstance(fty, Arrow):
            raise StlcTypeError(f"applying a term of type {encode_type(fty)}", e.pos)
        if fty.dom != aty:
            raise StlcTypeError(
                f"argument has type {encode_type(aty)}, function expects {encode_type(fty.dom)}", e.pos)
        return fty.cod, RCon((Pay(APP), Pay((fty.dom, fty.cod)), RSub((), f), RSub((), a)), e.pos)
    raise ParseError(f"'{head.text}' is not a constructor of stlc", head.pos)


def stlc_debruijn(t: Term) -> str:
    """Nameless s-expression of a simply typed term: ``(lam T b)``, ``(app f a)``, ``#N``."""
    if isinstance(t, VarT):
        return f"#{t.var.index}"
    tag, (dom, _) = t.layer[0].value, t.layer[1].value
    subs = [ev.child for ev in t.layer if isinstance(ev, Sub)]
    if tag == APP:
        return f"(app {stlc_debruijn(subs[0])} {stlc_debruijn(subs[1])})"
    return f"(lam {encode_type(dom)} {stlc_debruijn(subs[0])})"
