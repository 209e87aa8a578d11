"""Deterministic random generation of well-scoped terms and environments.

Randomness comes from numpy's ``default_rng`` (PCG64). Sample ``i`` of a run
with seed ``s`` uses its own generator seeded with ``[s, i]``, so samples are
independent of each other and of how a run is split up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from .desc import Desc, Shape, explore
from .errors import BinderkitError
from .scope import Env, Var, env_of
from .term import ConT, Pay, Sub, Term, VarT


class UnsatisfiableSort(BinderkitError):
    """No variable or constructor path can produce the sort within the depth."""


@dataclass(frozen=True)
class GenConfig:
    seed: int = 42
    max_depth: int = 8
    context: tuple = ()
    sort: Any = None

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


def sample_rng(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, index])


class Generator:
    """Random terms of one description.

    ``payload_bound`` limits payload enumeration (e.g. types with at most that
    many arrows). ``var_bias`` is the chance of picking a variable when both a
    variable and a constructor would fit.
    """

    def __init__(self, d: Desc, payload_bound: int = 1, var_bias: float = 0.5):
        self.d = d
        self.var_bias = var_bias
        self.by_sort: dict = {}
        for shape in explore(d, payload_bound):
            self.by_sort.setdefault(shape.sort, []).append(shape)
        self._can = lru_cache(maxsize=None)(self._can_uncached)

    def _can_uncached(self, sort: Any, in_scope: frozenset, depth: int) -> bool:
        if sort in in_scope:
            return True
        return any(self._shape_ok(sh, in_scope, depth) for sh in self.by_sort.get(sort, ()))

    def _shape_ok(self, shape: Shape, in_scope: frozenset, depth: int) -> bool:
        recs = shape.recs
        if depth <= 1:
            return not recs
        return all(self._can(s, in_scope | frozenset(tel), depth - 1) for tel, s in recs)

    def inhabited(self, sort: Any, ctx: Sequence, depth: int) -> bool:
        return self._can(sort, frozenset(ctx), depth)

    def term(self, rng: np.random.Generator, sort: Any, ctx: Sequence = (), depth: int = 8) -> Term:
        ctx = tuple(ctx)
        vars_ = [i for i, s in enumerate(ctx) if s == sort]
        scope = frozenset(ctx)
        shapes = [sh for sh in self.by_sort.get(sort, ()) if self._shape_ok(sh, scope, depth)]
        if not vars_ and not shapes:
            raise UnsatisfiableSort(f"no term of sort {sort!r} in {list(ctx)} within depth {depth}")
        if vars_ and (not shapes or rng.random() < self.var_bias):
            return VarT(Var(vars_[int(rng.integers(len(vars_)))], sort))
        shape = shapes[int(rng.integers(len(shapes)))]
        layer = []
        for step in shape.steps:
            if step[0] == "pay":
                layer.append(Pay(step[1]))
            else:
                _, tel, s = step
                layer.append(Sub(tel, s, self.term(rng, s, tel + ctx, depth - 1)))
        return ConT(tuple(layer))


@lru_cache(maxsize=None)
def generator(d: Desc, payload_bound: int = 1) -> Generator:
    return Generator(d, payload_bound)


def gen_term(d: Desc, cfg: GenConfig, payload_bound: int = 1) -> Term:
    """One term at ``cfg.sort`` in ``cfg.context``, of depth at most ``cfg.max_depth``."""
    return generator(d, payload_bound).term(sample_rng(cfg.seed), cfg.sort, cfg.context, cfg.max_depth)


# ---------------------------------------------------------------------------
# Contexts, thinnings and substitutions


def random_ctx(rng: np.random.Generator, sorts: Sequence, max_len: int = 3) -> tuple:
    n = int(rng.integers(max_len + 1))
    return tuple(sorts[int(rng.integers(len(sorts)))] for _ in range(n))


def random_extension(rng: np.random.Generator, ctx: Sequence, sorts: Sequence, max_extra: int = 2) -> tuple:
    """``ctx`` with up to ``max_extra`` random sorts inserted at random places."""
    out = list(ctx)
    for _ in range(int(rng.integers(max_extra + 1))):
        out.insert(int(rng.integers(len(out) + 1)), sorts[int(rng.integers(len(sorts)))])
    return tuple(out)


def random_thinning(rng: np.random.Generator, source: Sequence, target: Sequence) -> Env[Var]:
    """A sort-preserving map sending each source variable to a random target slot."""
    source, target = tuple(source), tuple(target)
    picks = []
    for s in source:
        options = [j for j, t in enumerate(target) if t == s]
        if not options:
            raise UnsatisfiableSort(f"no variable of sort {s!r} in {list(target)}")
        picks.append(Var(options[int(rng.integers(len(options)))], s))
    return env_of(source, target, picks)


def random_sub_env(rng: np.random.Generator, g: Generator, source: Sequence, target: Sequence,
                   depth: int = 3) -> Env[Term]:
    """A substitution from ``source`` to ``target`` made of small random terms."""
    source, target = tuple(source), tuple(target)
    return env_of(source, target, [g.term(rng, s, target, depth) for s in source])


def sample_sort(rng: np.random.Generator, g: Generator, sorts: Sequence, ctx: Sequence, depth: int) -> Any:
    """A random sort of ``sorts`` that has a term in ``ctx`` within ``depth``."""
    ok = [s for s in sorts if g.inhabited(s, ctx, depth)]
    if not ok:
        raise UnsatisfiableSort(f"none of {list(sorts)} is inhabited in {list(ctx)}")
    return ok[int(rng.integers(len(ok)))]
