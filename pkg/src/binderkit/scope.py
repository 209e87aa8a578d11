"""Variables, environments and thinnings.

Contexts are tuples of sorts, innermost binder first, so ``Var(0, s)`` is the
nearest binder. An environment ``Env(source, target, lookup)`` assigns to
every variable of ``source`` a value living in ``target``; a thinning is an
environment of variables.

Environments are functional: building one never copies, and looking up an
invalid variable raises :class:`~binderkit.errors.OutOfRangeVar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Sequence, TypeVar

from .errors import OutOfRangeVar, SortMismatch

V = TypeVar("V")
W = TypeVar("W")

Ctx = tuple


@dataclass(frozen=True)
class Var:
    index: int
    sort: Any

    def valid_in(self, ctx: Sequence) -> bool:
        return 0 <= self.index < len(ctx) and ctx[self.index] == self.sort

    def __repr__(self) -> str:
        return f"#{self.index}"


def check_var(v: Var, ctx: Sequence) -> None:
    if not isinstance(v, Var) or not 0 <= v.index < len(ctx):
        raise OutOfRangeVar(f"variable {v!r} out of range for context of length {len(ctx)}")
    if ctx[v.index] != v.sort:
        raise SortMismatch(f"variable {v!r} has sort {v.sort!r}, context says {ctx[v.index]!r}")


class Env(Generic[V]):
    """A total assignment of values in ``target`` to the variables of ``source``."""

    __slots__ = ("source", "target", "_lookup")

    def __init__(self, source: Ctx, target: Ctx, lookup: Callable[[Var], V]):
        self.source = tuple(source)
        self.target = tuple(target)
        self._lookup = lookup

    def __call__(self, v: Var) -> V:
        check_var(v, self.source)
        return self._lookup(v)

    lookup = __call__

    def vars(self) -> list[Var]:
        return [Var(i, s) for i, s in enumerate(self.source)]

    def values(self) -> list[V]:
        """Materialise every entry, index 0 first."""
        return [self._lookup(v) for v in self.vars()]

    def __repr__(self) -> str:
        return f"Env({list(self.source)} -> {list(self.target)})"


def empty_env(target: Ctx = ()) -> Env:
    return Env((), target, _unreachable)


def _unreachable(v):  # pragma: no cover - guarded by check_var
    raise OutOfRangeVar(f"lookup of {v!r} in the empty environment")


def snoc(rho: Env[V], v: V, sort: Any) -> Env[V]:
    """Extend ``rho`` with ``v`` for a new innermost variable of ``sort``."""
    prev = rho._lookup

    def lookup(x: Var):
        if x.index == 0:
            return v
        return prev(Var(x.index - 1, x.sort))

    return Env((sort,) + rho.source, rho.target, lookup)


def env_of(source: Ctx, target: Ctx, values: Sequence[V]) -> Env[V]:
    """Array-backed environment: ``values[i]`` is the entry for index ``i``."""
    values = tuple(values)
    if len(values) != len(source):
        raise ValueError(f"{len(values)} values for a context of length {len(source)}")
    return Env(source, target, lambda x: values[x.index])


def map_env(f: Callable[[V], W], rho: Env[V], target: Ctx | None = None) -> Env[W]:
    prev = rho._lookup
    return Env(rho.source, rho.target if target is None else target, lambda x: f(prev(x)))


def append(rho: Env[V], rho2: Env[V]) -> Env[V]:
    """Combine ``rho`` (over Γ) with ``rho2`` (over Δ) into one over ``Δ + Γ``.

    The first ``len(Δ)`` indices are answered by ``rho2``, the rest by ``rho``.
    """
    if rho.target != rho2.target:
        raise ValueError(f"append: targets differ ({rho.target} vs {rho2.target})")
    n = len(rho2.source)
    inner, outer = rho2._lookup, rho._lookup

    def lookup(x: Var):
        if x.index < n:
            return inner(x)
        return outer(Var(x.index - n, x.sort))

    return Env(rho2.source + rho.source, rho.target, lookup)


# ---------------------------------------------------------------------------
# Thinnings

Thinning = Env  # an Env[Var]


def identity_thinning(ctx: Ctx) -> Thinning:
    return Env(ctx, ctx, lambda x: x)


def weaken(sort: Any, ctx: Ctx) -> Thinning:
    """The thinning from ``ctx`` into ``(sort,) + ctx``."""
    ctx = tuple(ctx)
    return Env(ctx, (sort,) + ctx, lambda x: Var(x.index + 1, x.sort))


def shift(n: int, ctx: Ctx, extra: Ctx) -> Thinning:
    """The thinning from ``ctx`` into ``extra + ctx``."""
    ctx = tuple(ctx)
    return Env(ctx, tuple(extra) + ctx, lambda x: Var(x.index + n, x.sort))


def select(rho: Thinning, sigma: Env[V]) -> Env[V]:
    """Compose: look ``x`` up in ``rho``, then the resulting variable in ``sigma``."""
    first = rho._lookup
    return Env(rho.source, sigma.target, lambda x: sigma(first(x)))


def thinning_of(source: Ctx, target: Ctx, indices: Sequence[int]) -> Thinning:
    """Thinning sending ``Var(i)`` to ``Var(indices[i])``; checked eagerly."""
    source, target = tuple(source), tuple(target)
    if len(indices) != len(source):
        raise ValueError("one target index per source variable is required")
    for i, j in enumerate(indices):
        check_var(Var(j, source[i]), target)
    table = tuple(indices)
    return Env(source, target, lambda x: Var(table[x.index], x.sort))


def same_env(a: Env, b: Env, eq: Callable[[Any, Any], bool] = lambda x, y: x == y) -> bool:
    """Extensional equality: same contexts and ``eq`` on every entry."""
    return (a.source == b.source and a.target == b.target
            and all(eq(a(v), b(v)) for v in a.vars()))


# ---------------------------------------------------------------------------
# Boxes: values that can absorb any thinning out of their context


@dataclass(frozen=True)
class Box:
    ctx: Ctx
    run: Callable[[Thinning], Any]

    def __call__(self, rho: Thinning) -> Any:
        if rho.source != self.ctx:
            raise ValueError(f"box over {self.ctx} applied to a thinning from {rho.source}")
        return self.run(rho)


def extract(b: Box) -> Any:
    return b(identity_thinning(b.ctx))


def th_box(b: Box, rho: Thinning) -> Box:
    return Box(rho.target, lambda sigma: b(select(rho, sigma)))


def duplicate(b: Box) -> Box:
    return Box(b.ctx, lambda rho: th_box(b, rho))


# ---------------------------------------------------------------------------
# Kripke function spaces


class Kripke:
    """Interpretation of a scope binding ``telescope`` inside context ``ctx``.

    Call it with a thinning out of ``ctx`` and an environment of values for
    the telescope (both landing in the same target context). Scopes binding
    nothing are never wrapped: the computation is used directly.
    """

    __slots__ = ("telescope", "ctx", "fn")

    def __init__(self, telescope: Ctx, ctx: Ctx, fn: Callable[[Thinning, Env], Any]):
        self.telescope = tuple(telescope)
        self.ctx = tuple(ctx)
        self.fn = fn

    def __call__(self, rho: Thinning, vs: Env) -> Any:
        if rho.source != self.ctx or vs.source != self.telescope or rho.target != vs.target:
            raise ValueError("Kripke function applied to mismatched thinning/environment")
        return self.fn(rho, vs)

    def __repr__(self) -> str:
        return f"<Kripke {list(self.telescope)} in {list(self.ctx)}>"


def th_kripke(k: Kripke, rho: Thinning) -> Kripke:
    """Precompose a Kripke function with a thinning out of its context."""
    return Kripke(k.telescope, rho.target, lambda sigma, vs: k(select(rho, sigma), vs))


# ---------------------------------------------------------------------------
# VarLike


@dataclass(frozen=True)
class VarLike(Generic[V]):
    """Values that absorb thinnings and have a placeholder for a fresh variable.

    ``new(sort, ctx)`` is the value standing for ``Var(0, sort)`` in ``ctx``
    (whose head must be ``sort``).
    """

    thin: Callable[[V, Thinning], V]
    new: Callable[[Any, Ctx], V]


def vl_var() -> VarLike[Var]:
    def new(sort, ctx):
        if not ctx or ctx[0] != sort:
            raise SortMismatch(f"placeholder of sort {sort!r} requested in {ctx}")
        return Var(0, sort)

    return VarLike(lambda v, rho: rho(v), new)


def base(vl: VarLike[V], ctx: Ctx) -> Env[V]:
    """Environment sending each variable of ``ctx`` to its own placeholder."""
    ctx = tuple(ctx)

    def lookup(x: Var):
        suffix = ctx[x.index:]
        return vl.thin(vl.new(x.sort, suffix), shift(x.index, suffix, ctx[:x.index]))

    return Env(ctx, ctx, lookup)


def fresh_r(vl: VarLike[V], ctx: Ctx, extra: Ctx) -> Env[V]:
    """Environment from ``ctx`` into ``extra + ctx`` (weakening past ``extra``)."""
    ctx, extra = tuple(ctx), tuple(extra)
    b = base(vl, ctx)
    th = shift(len(extra), ctx, extra)
    return Env(ctx, extra + ctx, lambda x: vl.thin(b(x), th))


def fresh_l(vl: VarLike[V], ctx: Ctx, extra: Ctx) -> Env[V]:
    """Environment from ``ctx`` into ``ctx + extra`` (indices unchanged)."""
    ctx, extra = tuple(ctx), tuple(extra)
    b = base(vl, ctx)
    th = Env(ctx, ctx + extra, lambda x: x)
    return Env(ctx, ctx + extra, lambda x: vl.thin(b(x), th))
