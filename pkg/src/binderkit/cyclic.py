"""Potentially cyclic structures and their lazy unfoldings.

A cyclic value is a closed term whose binders introduce back-pointers.
Unrolling a node replaces each pointer to it by the node itself; unfolding
does so lazily at every level, yielding a possibly infinite :class:`CoTree`
observed only to a bounded depth.
"""

from __future__ import annotations

from typing import Any, Callable, Optional, Sequence

from .desc import Desc
from .equality import Decision, YES
from .errors import BinderkitError
from .scope import Env
from .syntactic import sub
from .term import Layer, Pay, Sub, Term, VarT


def plug(d: Desc, c: Term, t: Term, ctx: Sequence = ()) -> Term:
    """Close ``t`` (valid in ``ctx``) by putting the closed term ``c`` at every free variable."""
    return sub(d, Env(tuple(ctx), (), lambda v: c), t)


def unroll(d: Desc, c: Term) -> Layer:
    """The top layer of ``c``, each bound pointer replaced by ``c`` itself.

    The children are closed, so ``ConT(unroll(d, c))`` is again a valid term.
    """
    if isinstance(c, VarT):
        raise BinderkitError("a closed term cannot be a variable")
    return tuple(Sub(ev.telescope, ev.sort, plug(d, c, ev.child, ev.telescope))
                 if isinstance(ev, Sub) else ev for ev in c.layer)


class CoTree:
    """A lazily unfolded tree; ``layer`` holds payloads and subtrees."""

    __slots__ = ("_thunk", "_layer")

    def __init__(self, thunk: Callable[[], tuple]):
        self._thunk = thunk
        self._layer: Optional[tuple] = None

    @property
    def layer(self) -> tuple:
        if self._layer is None:
            self._layer = tuple(self._thunk())
            self._thunk = None
        return self._layer

    def children(self) -> list["CoTree"]:
        return [ev for ev in self.layer if isinstance(ev, CoTree)]

    def payloads(self) -> list:
        return [ev.value for ev in self.layer if isinstance(ev, Pay)]


def unfold(d: Desc, c: Term) -> CoTree:
    def force():
        return [unfold(d, ev.child) if isinstance(ev, Sub) else ev for ev in unroll(d, c)]
    return CoTree(force)


CUT = "…"


def take_depth(x: CoTree, k: int) -> Any:
    """Force ``k`` layers into nested tuples (payload values and subtrees).

    Subtrees beyond the horizon are shown as ``"…"``.
    """
    if k <= 0:
        return CUT
    # iterative post-order, so deep observations do not exhaust the stack
    root: list = []
    stack = [(x, k, root)]
    finish: list = []
    while stack:
        node, depth, out = stack.pop()
        items: list = []
        finish.append((out, items))
        for ev in node.layer:
            if isinstance(ev, CoTree):
                slot: list = []
                items.append(slot)
                if depth > 1:
                    stack.append((ev, depth - 1, slot))
                else:
                    slot.append(CUT)
            else:
                items.append(ev.value)
    for out, items in reversed(finish):
        out.append(tuple(i[0] if isinstance(i, list) else i for i in items))
    return root[0]


def bisim_depth(a: CoTree, b: CoTree, k: int) -> Decision:
    """Compare the first ``k`` layers of two trees; depth 0 always agrees."""
    todo = [(a, b, k, ())]
    while todo:
        x, y, depth, path = todo.pop()
        if depth <= 0 or x is y:
            continue
        lx, ly = x.layer, y.layer
        if len(lx) != len(ly):
            return Decision(False, path, "layers have different lengths")
        for i, (ex, ey) in enumerate(zip(lx, ly)):
            if isinstance(ex, CoTree) and isinstance(ey, CoTree):
                todo.append((ex, ey, depth - 1, path + (i,)))
            elif isinstance(ex, Pay) and isinstance(ey, Pay):
                if ex.value != ey.value:
                    return Decision(False, path + (i,), f"payloads {ex.value!r} and {ey.value!r} differ")
            else:
                return Decision(False, path + (i,), "payload against subtree")
    return YES


def alternating(first: int = 0, second: int = 1) -> CoTree:
    """The infinite list first, second, first, ... built directly."""
    return CoTree(lambda: (Pay(False), Pay(first), alternating(second, first)))


def spine(x: CoTree, limit: int) -> list:
    """Heads of a (co)list, at most ``limit`` of them, then ``"nil"`` if it ends."""
    out = []
    while len(out) < limit:
        layer = x.layer
        if layer[0].value:
            out.append("nil")
            break
        out.append(layer[1].value)
        x = layer[2]
    return out

