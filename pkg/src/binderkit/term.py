"""Terms over a description.

A term is either a variable or one *layer*: the trace of walking a
description, recorded as ``Pay`` events (payload values) and ``Sub`` events
(subterm positions, each with the telescope it binds and its sort). A child
stored under ``Sub(telescope, sort, child)`` lives in ``telescope + ctx``.

Layers are generic over what sits in ``Sub`` slots: terms, Kripke functions,
printed pieces, counts and so on. Every generic operation replays the
description against the events with :func:`walk`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence, Union

from .desc import Desc, Done, Rec, Sigma
from .errors import LayerShapeMismatch, OutOfRangeVar, PayloadDomainError, SortMismatch, ValidationError
from .scope import Var


@dataclass(frozen=True)
class Pay:
    value: Any

    def __repr__(self) -> str:
        return f"Pay({self.value!r})"


@dataclass(frozen=True)
class Sub:
    telescope: tuple
    sort: Any
    child: Any

    def __repr__(self) -> str:
        if self.telescope:
            return f"Sub({list(self.telescope)}, {self.sort!r}, {self.child!r})"
        return f"Sub({self.sort!r}, {self.child!r})"


Event = Union[Pay, Sub]
Layer = tuple


@dataclass(frozen=True)
class VarT:
    var: Var

    def __repr__(self) -> str:
        return f"VarT({self.var!r})"


@dataclass(frozen=True)
class ConT:
    layer: Layer

    def __repr__(self) -> str:
        return f"ConT{tuple(self.layer)!r}"


Term = Union[VarT, ConT]


def walk(d: Desc, layer: Sequence) -> Iterator[tuple[int, Any, Any]]:
    """Replay ``layer`` against ``d``.

    Yields ``(index, event, step)`` for each event, where ``step`` is the
    ``Sigma`` or ``Rec`` node it was matched with, and finally
    ``(len(layer), None, Done)``. Shape errors raise
    :class:`LayerShapeMismatch` carrying the event index.
    """
    for i, ev in enumerate(layer):
        if isinstance(d, Sigma):
            if not isinstance(ev, Pay):
                raise LayerShapeMismatch(f"expected a payload, found {type(ev).__name__}", (i,))
            yield i, ev, d
            try:
                d = d.step(ev.value)
            except PayloadDomainError as exc:
                raise LayerShapeMismatch(str(exc), (i,)) from None
        elif isinstance(d, Rec):
            if not isinstance(ev, Sub):
                raise LayerShapeMismatch(f"expected a subterm, found {type(ev).__name__}", (i,))
            if tuple(ev.telescope) != d.telescope or ev.sort != d.sort:
                raise LayerShapeMismatch(
                    f"subterm slot declares {list(ev.telescope)} ⊢ {ev.sort!r}, "
                    f"description expects {list(d.telescope)} ⊢ {d.sort!r}", (i,))
            yield i, ev, d
            d = d.rest
        else:
            raise LayerShapeMismatch("layer has events past the end of the description", (i,))
    if not isinstance(d, Done):
        raise LayerShapeMismatch("layer ends before the description does", (len(layer),))
    yield len(layer), None, d


def layer_sort(d: Desc, layer: Sequence) -> Any:
    """The sort a layer's node has, as fixed by the description."""
    for _, _, step in walk(d, layer):
        pass
    return step.sort


def map_layer(d: Desc, f: Callable[[tuple, Any, Any], Any], layer: Sequence) -> tuple[Layer, Any]:
    """:func:`fmap_layer` that also returns the node's sort."""
    out = []
    for _, ev, step in walk(d, layer):
        if ev is None:
            return tuple(out), step.sort
        if isinstance(ev, Sub):
            out.append(Sub(ev.telescope, ev.sort, f(ev.telescope, ev.sort, ev.child)))
        else:
            out.append(ev)
    raise AssertionError("unreachable")  # pragma: no cover


def fmap_layer(d: Desc, f: Callable[[tuple, Any, Any], Any], layer: Sequence) -> Layer:
    """Apply ``f(telescope, sort, child)`` to every subterm slot."""
    return map_layer(d, f, layer)[0]


def traverse_layer(d: Desc, f: Callable[[tuple, Any, Any], Any], layer: Sequence) -> Layer:
    """Effectful :func:`fmap_layer`: ``f`` runs left to right in event order.

    Effects are ordinary Python effects; an exception raised by ``f`` aborts
    the traversal before any later slot is visited.
    """
    shape = list(walk(d, layer))  # validate the whole shape before running effects
    out = []
    for _, ev, _step in shape:
        if isinstance(ev, Sub):
            out.append(Sub(ev.telescope, ev.sort, f(ev.telescope, ev.sort, ev.child)))
        elif ev is not None:
            out.append(ev)
    return tuple(out)


def map_subs(f: Callable[[tuple, Any, Any], Any], layer: Sequence) -> Layer:
    """:func:`fmap_layer` without the description replay.

    Only for layers whose shape has already been checked, such as the ones
    handed to an algebra by the traversal engine.
    """
    return tuple(Sub(ev.telescope, ev.sort, f(ev.telescope, ev.sort, ev.child))
                 if isinstance(ev, Sub) else ev for ev in layer)


def subterms(layer: Sequence) -> list[Sub]:
    return [ev for ev in layer if isinstance(ev, Sub)]


def payloads(layer: Sequence) -> list:
    return [ev.value for ev in layer if isinstance(ev, Pay)]


def validate(d: Desc, ctx: Sequence, sort: Any, t: Term) -> None:
    """Check that ``t`` is well scoped and well sorted at ``sort`` in ``ctx``.

    Raises :class:`OutOfRangeVar`, :class:`SortMismatch` or
    :class:`LayerShapeMismatch`; ``err.path`` is the list of event indices
    leading from the root to the culprit.
    """
    ctx = tuple(ctx)
    if isinstance(t, VarT):
        v = t.var
        if not isinstance(v, Var) or not 0 <= v.index < len(ctx):
            raise OutOfRangeVar(f"variable {v!r} out of range in context of length {len(ctx)}")
        if ctx[v.index] != v.sort:
            raise SortMismatch(f"variable {v!r} annotated {v.sort!r} but bound at {ctx[v.index]!r}")
        if v.sort != sort:
            raise SortMismatch(f"variable {v!r} has sort {v.sort!r}, expected {sort!r}")
        return
    if not isinstance(t, ConT):
        raise LayerShapeMismatch(f"not a term: {t!r}")
    for i, ev, step in walk(d, t.layer):
        if ev is None:
            if step.sort != sort:
                raise SortMismatch(f"node has sort {step.sort!r}, expected {sort!r}")
        elif isinstance(ev, Sub):
            try:
                validate(d, ev.telescope + ctx, ev.sort, ev.child)
            except ValidationError as exc:
                raise exc.at(i)


def is_valid(d: Desc, ctx: Sequence, sort: Any, t: Term) -> bool:
    try:
        validate(d, ctx, sort, t)
    except ValidationError:
        return False
    return True


def term_sort(d: Desc, t: Term) -> Any:
    if isinstance(t, VarT):
        return t.var.sort
    return layer_sort(d, t.layer)


def size(t: Term) -> int:
    """Node count: one per variable or constructor."""
    if isinstance(t, VarT):
        return 1
    return 1 + sum(size(ev.child) for ev in t.layer if isinstance(ev, Sub))


def depth(t: Term) -> int:
    if isinstance(t, VarT):
        return 1
    return 1 + max((depth(ev.child) for ev in t.layer if isinstance(ev, Sub)), default=0)


def count_nodes(t: Term, pred: Callable[[Layer], bool]) -> int:
    """Number of constructor nodes whose layer satisfies ``pred``."""
    if isinstance(t, VarT):
        return 0
    return int(pred(t.layer)) + sum(count_nodes(ev.child, pred) for ev in t.layer if isinstance(ev, Sub))
