"""Scope checking: raw terms with names into validated de Bruijn terms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Union

from .desc import Desc, Done, Rec, Sigma
from .errors import BinderkitError, DescError, PayloadDomainError
from .printing import NameSupply, fresh_names
from .scope import Var
from .term import ConT, Pay, Sub, Term, VarT


@dataclass(frozen=True)
class RVar:
    name: str
    meta: Any = None


@dataclass(frozen=True)
class RSub:
    names: tuple[str, ...]
    child: "Raw"


@dataclass(frozen=True)
class RCon:
    events: tuple  # Pay and RSub events, in description order
    meta: Any = None


Raw = Union[RVar, RCon]


class ScopeError(BinderkitError):
    """Base of scope-checking failures; ``meta`` is the offending node's metadata."""

    def __init__(self, message: str, meta: Any = None):
        super().__init__(message)
        self.message = message
        self.meta = meta


class OutOfScope(ScopeError):
    def __init__(self, name: str, meta: Any = None):
        super().__init__(f"variable {name!r} is not in scope", meta)
        self.name = name


class WrongSort(ScopeError):
    def __init__(self, name: str, expected: Any, found: Any, meta: Any = None):
        super().__init__(f"variable {name!r} has sort {found!r} but {expected!r} is expected here", meta)
        self.name, self.expected, self.found = name, expected, found


class RawShapeError(ScopeError):
    """The raw node's events do not follow the description."""


class NodeSortError(ScopeError):
    """A well-formed node appears where a different sort is expected."""

    def __init__(self, found: Any, expected: Any, meta: Any = None):
        super().__init__(f"node of sort {found!r} where {expected!r} is expected", meta)
        self.expected, self.found = expected, found


def to_var(name: str, sort: Any, names: Sequence[str], ctx: Sequence, meta: Any = None) -> Var:
    """Resolve ``name`` to the innermost variable carrying it."""
    for i, n in enumerate(names):
        if n == name:
            if ctx[i] != sort:
                raise WrongSort(name, sort, ctx[i], meta)
            return Var(i, sort)
    raise OutOfScope(name, meta)


def _shape(d: Desc, raw: RCon) -> list:
    """Replay ``raw``'s events against ``d`` without looking at children."""
    steps = []
    for ev in raw.events:
        if isinstance(d, Sigma):
            if not isinstance(ev, Pay):
                raise RawShapeError("expected a payload", raw.meta)
            try:
                d = d.step(ev.value)
            except (PayloadDomainError, DescError) as exc:
                raise RawShapeError(str(exc), raw.meta) from None
        elif isinstance(d, Rec):
            if not isinstance(ev, RSub):
                raise RawShapeError("expected a subterm", raw.meta)
            if len(ev.names) != len(d.telescope):
                raise RawShapeError(
                    f"{len(ev.names)} binder name(s) given, {len(d.telescope)} expected", raw.meta)
            steps.append(d)
            d = d.rest
        else:
            raise RawShapeError("too many events for this constructor", raw.meta)
    if not isinstance(d, Done):
        raise RawShapeError("constructor is missing arguments", raw.meta)
    return steps + [d]


def to_tm(d: Desc, names: Sequence[str], ctx: Sequence, sort: Any, raw: Raw) -> Term:
    """Scope check ``raw`` at ``sort``; ``names[i]`` is the name of ``ctx[i]``.

    The first error in left-to-right order is raised.
    """
    names, ctx = tuple(names), tuple(ctx)
    if isinstance(raw, RVar):
        return VarT(to_var(raw.name, sort, names, ctx, raw.meta))
    *recs, done = _shape(d, raw)
    if done.sort != sort:
        raise NodeSortError(done.sort, sort, raw.meta)
    out, recs = [], iter(recs)
    for ev in raw.events:
        if isinstance(ev, Pay):
            out.append(ev)
            continue
        r = next(recs)
        child = to_tm(d, tuple(ev.names) + names, r.telescope + ctx, r.sort, ev.child)
        out.append(Sub(r.telescope, r.sort, child))
    return ConT(tuple(out))


def name_term(t: Term, names: Sequence[str], supply: NameSupply | None = None) -> Raw:
    """Render ``t`` to a raw term, inventing distinct names for every binder.

    ``names`` are the free variables' names; fresh names continue after them.
    """
    if supply is None:
        supply = NameSupply(len(names))

    def go(t, names, supply):
        if isinstance(t, VarT):
            return RVar(names[t.var.index]), supply
        out = []
        for ev in t.layer:
            if isinstance(ev, Sub):
                bound, supply = fresh_names(supply, len(ev.telescope))
                child, supply = go(ev.child, tuple(bound) + names, supply)
                out.append(RSub(tuple(bound), child))
            else:
                out.append(ev)
        return RCon(tuple(out)), supply

    return go(t, tuple(names), supply)[0]
