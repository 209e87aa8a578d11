"""Descriptions of syntaxes with binding.

A description is read node by node: ``Sigma`` stores a payload and lets the
rest of the node depend on it, ``Rec`` is a subterm position whose scope is
extended by a telescope of freshly bound sorts, and ``Done`` closes the node
and fixes its sort. Variables are never described: every syntax gets them
for free.

Payloads live in a closed universe (:class:`PayloadDomain`) so that equality
of payloads, and hence of terms, is always decidable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Union

from .errors import DescError, PayloadDomainError
from .sorts import (
    CHECK,
    INFER,
    MODE_SORTS,
    TYPE_SORTS,
    UNIT,
    UNIT_SORTS,
    Arrow,
    SortDomain,
)

# ---------------------------------------------------------------------------
# Payload universe


class PayloadDomain:
    """Base class of the closed universe of payload sets."""

    def contains(self, value: Any) -> bool:
        raise NotImplementedError

    def eq(self, a: Any, b: Any) -> bool:
        raise NotImplementedError

    def enumerate(self, bound: int) -> list:
        raise NotImplementedError


@dataclass(frozen=True)
class BoolD(PayloadDomain):
    def contains(self, value):
        return isinstance(value, bool)

    def eq(self, a, b):
        return a is b

    def enumerate(self, bound):
        return [True, False]


@dataclass(frozen=True)
class NatD(PayloadDomain):
    def contains(self, value):
        return isinstance(value, int) and not isinstance(value, bool) and value >= 0

    def eq(self, a, b):
        return a == b

    def enumerate(self, bound):
        return list(range(bound + 1))


@dataclass(frozen=True)
class TextD(PayloadDomain):
    def contains(self, value):
        return isinstance(value, str)

    def eq(self, a, b):
        return a == b

    def enumerate(self, bound):
        return ["", *("abcdefghijklmnopqrstuvwxyz"[:bound])]


@dataclass(frozen=True)
class SortD(PayloadDomain):
    """Payloads that are themselves sorts (e.g. type annotations)."""

    sorts: SortDomain

    def contains(self, value):
        return self.sorts.contains(value)

    def eq(self, a, b):
        return self.sorts.eq(a, b)

    def enumerate(self, bound):
        return self.sorts.enumerate(bound)


@dataclass(frozen=True)
class TagD(PayloadDomain):
    """A finite set of constructor labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise DescError(f"duplicate tag labels: {self.labels}")

    def contains(self, value):
        return isinstance(value, str) and value in self.labels

    def eq(self, a, b):
        return a == b

    def enumerate(self, bound):
        return list(self.labels)


@dataclass(frozen=True)
class PairD(PayloadDomain):
    left: PayloadDomain
    right: PayloadDomain

    def contains(self, value):
        return (isinstance(value, tuple) and len(value) == 2
                and self.left.contains(value[0]) and self.right.contains(value[1]))

    def eq(self, a, b):
        return self.left.eq(a[0], b[0]) and self.right.eq(a[1], b[1])

    def enumerate(self, bound):
        return list(itertools.product(self.left.enumerate(bound), self.right.enumerate(bound)))


def payload_eq(domain: PayloadDomain, a: Any, b: Any) -> bool:
    """Decide equality of two payloads of ``domain``.

    Raises :class:`PayloadDomainError` if either value lies outside ``domain``.
    """
    for v in (a, b):
        if not domain.contains(v):
            raise PayloadDomainError(f"{v!r} does not inhabit {domain}")
    return domain.eq(a, b)


# ---------------------------------------------------------------------------
# Descriptions


@dataclass(frozen=True, eq=False)
class Sigma:
    domain: PayloadDomain
    rest: Callable[[Any], "Desc"]

    def step(self, value: Any) -> "Desc":
        if not self.domain.contains(value):
            raise PayloadDomainError(f"{value!r} does not inhabit {self.domain}")
        nxt = self.rest(value)
        if not isinstance(nxt, (Sigma, Rec, Done)):
            raise DescError(f"continuation returned {nxt!r}, not a description")
        return nxt


@dataclass(frozen=True)
class Rec:
    telescope: tuple
    sort: Any
    rest: "Desc"


@dataclass(frozen=True)
class Done:
    sort: Any


Desc = Union[Sigma, Rec, Done]


@dataclass(frozen=True)
class Shape:
    """One complete path through a description.

    ``steps`` holds ``("pay", value)`` and ``("rec", telescope, sort)`` items
    in order; ``sort`` is the sort reached at ``Done``.
    """

    steps: tuple
    sort: Any

    @property
    def recs(self) -> list[tuple]:
        return [(s[1], s[2]) for s in self.steps if s[0] == "rec"]


def explore(d: Desc, bound: int, max_steps: int = 64) -> Iterator[Shape]:
    """Enumerate every path through ``d`` choosing payloads up to ``bound``.

    A path longer than ``max_steps`` is reported as a :class:`DescError`.
    """

    def go(d, prefix):
        if len(prefix) > max_steps:
            raise DescError(f"description path exceeds {max_steps} steps")
        if isinstance(d, Done):
            yield Shape(tuple(prefix), d.sort)
        elif isinstance(d, Rec):
            yield from go(d.rest, prefix + [("rec", tuple(d.telescope), d.sort)])
        elif isinstance(d, Sigma):
            for v in d.domain.enumerate(bound):
                yield from go(d.step(v), prefix + [("pay", v)])
        else:
            raise DescError(f"not a description: {d!r}")

    return go(d, [])


def sum_desc(d: Desc, e: Desc) -> Desc:
    """Disjoint sum: a boolean payload picks ``d`` (True) or ``e`` (False)."""
    return Sigma(BoolD(), lambda b: d if b else e)


def case_layer(left: Callable, right: Callable) -> Callable:
    """Eliminator for :func:`sum_desc` layers.

    Returns a function ``(sort, layer, *extra)`` that strips the leading boolean
    payload and hands the remaining layer to ``left`` or ``right``.
    """

    def dispatch(sort, layer, *extra):
        head, *rest = layer
        return (left if head.value else right)(sort, tuple(rest), *extra)

    return dispatch


# ---------------------------------------------------------------------------
# Built-in syntaxes

APP, LAM, EMB, CUT = "app", "lam", "emb", "cut"
COUNTERS = ("zero", "one", "many")

_UTLC = Sigma(BoolD(), lambda is_app: (
    Rec((), UNIT, Rec((), UNIT, Done(UNIT))) if is_app
    else Rec((UNIT,), UNIT, Done(UNIT))))


def utlc_desc() -> Desc:
    """Untyped lambda calculus: ``True`` is application, ``False`` abstraction."""
    return _UTLC


def _bidi_node(tag: str) -> Desc:
    if tag == APP:
        return Rec((), INFER, Rec((), CHECK, Done(INFER)))
    if tag == LAM:
        return Rec((INFER,), CHECK, Done(CHECK))
    if tag == EMB:
        return Rec((), INFER, Done(CHECK))
    return Sigma(SortD(TYPE_SORTS), lambda ty: Rec((), CHECK, Done(INFER)))


_BIDI = Sigma(TagD((APP, LAM, EMB, CUT)), _bidi_node)


def bidi_desc() -> Desc:
    """Bidirectional STLC over modes; ``cut`` carries its type annotation."""
    return _BIDI


def _stlc_node(tag: str) -> Desc:
    def typed(types):
        dom, cod = types
        if tag == APP:
            return Rec((), Arrow(dom, cod), Rec((), dom, Done(cod)))
        return Rec((dom,), cod, Done(Arrow(dom, cod)))
    return Sigma(PairD(SortD(TYPE_SORTS), SortD(TYPE_SORTS)), typed)


_STLC = Sigma(TagD((APP, LAM)), _stlc_node)


def stlc_desc() -> Desc:
    """Intrinsically typed STLC: nodes store their (domain, codomain) pair."""
    return _STLC


def _let_node(types) -> Desc:
    sigma, tau = types
    return Rec((), sigma, Rec((sigma,), tau, Done(tau)))


def let_desc(sorts: SortDomain = TYPE_SORTS) -> Desc:
    """Let-binding over sorts drawn from ``sorts``.

    Payload ``(σ, τ)``: the bound expression has sort σ, the body has sort τ
    with one extra σ variable in scope.
    """
    return Sigma(PairD(SortD(sorts), SortD(sorts)), _let_node)


def clet_desc(sorts: SortDomain = TYPE_SORTS) -> Desc:
    """Let-binding annotated with a usage counter for its bound variable."""
    inner = let_desc(sorts)
    return Sigma(TagD(COUNTERS), lambda counter: inner)


_CLIST = Sigma(BoolD(), lambda is_nil: (
    Done(UNIT) if is_nil
    else Sigma(NatD(), lambda head: Rec((UNIT,), UNIT, Done(UNIT)))))


def clist_desc() -> Desc:
    """Potentially cyclic lists of naturals; each cons binds a back-pointer."""
    return _CLIST


_UTLC_LET = sum_desc(_UTLC, let_desc(UNIT_SORTS))
_UTLC_CLET = sum_desc(_UTLC, clet_desc(UNIT_SORTS))


def utlc_let_desc() -> Desc:
    return _UTLC_LET


def utlc_clet_desc() -> Desc:
    return _UTLC_CLET


SORT_DOMAINS = {"utlc": UNIT_SORTS, "bidi": MODE_SORTS, "stlc": TYPE_SORTS,
                "utlc+let": UNIT_SORTS, "clist": UNIT_SORTS}
