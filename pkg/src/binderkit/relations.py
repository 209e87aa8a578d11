"""Relators and sampled checkers for the simulation and fusion laws.

The laws quantify over all terms, environments and context extensions. Here
they are tested on generated samples: each sample is drawn with its own
seeded generator, so a counterexample can be replayed from its index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .desc import Desc, Sigma, payload_eq, stlc_desc, utlc_desc
from .equality import eq_term
from .errors import BinderkitError
from .gen import Generator, random_ctx, random_extension, random_sub_env, random_thinning, sample_rng, sample_sort
from .printing import print_term, stlc_display, utlc_display
from .scope import Env, Kripke, Var, map_env, select, snoc, empty_env, fresh_l, vl_var
from .semantics import SemanticsDef, semantics
from .sorts import UNIT, enumerate_types
from .syntactic import ren, renaming, sub, substitution
from .term import ConT, Pay, Sub, Term, VarT, walk

Rel = Callable[[Any, tuple, Any, Any], bool]

SAMPLING_NOTE = ("sampled check: terms, environments and thinnings are drawn at random; "
                 "passing is evidence, not proof")


def eq_rel(d: Desc) -> Rel:
    return lambda sort, ctx, a, b: bool(eq_term(d, a, b))


def all_env(R: Rel, rho_a: Env, rho_b: Env) -> bool:
    """Pointwise lifting of ``R`` to environments over the same context."""
    if rho_a.source != rho_b.source:
        return False
    return all(R(v.sort, rho_a.target, rho_a(v), rho_b(v)) for v in rho_a.vars())


def zip_layer(d: Desc, R: Callable[[tuple, Any, Any, Any], bool], la: Sequence, lb: Sequence) -> bool:
    """Same payloads in the same places, and ``R(telescope, sort, a, b)`` on every slot pair."""
    lb = tuple(lb)
    try:
        for i, ev, step in walk(d, la):
            if ev is None:
                return len(lb) == i
            if i >= len(lb):
                return False
            other = lb[i]
            if isinstance(step, Sigma):
                if not isinstance(other, Pay) or not payload_eq(step.domain, ev.value, other.value):
                    return False
            elif not (isinstance(other, Sub) and tuple(other.telescope) == tuple(ev.telescope)
                      and other.sort == ev.sort and R(ev.telescope, ev.sort, ev.child, other.child)):
                return False
    except BinderkitError:
        return False
    return False  # pragma: no cover


def kripke_rel_sampled(Rv: Rel, Rc: Callable[[Any, Any], bool], ka: Any, kb: Any,
                       samples: Sequence[tuple]) -> bool:
    """Sampled Kripke relator.

    ``samples`` holds ``(thinning, vs_a, vs_b)`` triples; pairs of value
    environments not related by ``Rv`` are skipped. Scopes that bind nothing
    are compared directly.
    """
    if not isinstance(ka, Kripke):
        return Rc(ka, kb)
    for th, vs_a, vs_b in samples:
        if not all_env(Rv, vs_a, vs_b):
            continue
        if not Rc(ka(th, vs_a), kb(th, vs_b)):
            return False
    return True


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Counterexample:
    index: int
    description: str

    def __str__(self) -> str:
        return f"sample {self.index}: {self.description}"


@dataclass
class Report:
    name: str
    samples: int
    counterexamples: list = field(default_factory=list)
    note: str = SAMPLING_NOTE

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "ok" if self.passed else "FAILED"
        return f"{self.name}: {status}, {self.samples} samples, {len(self.counterexamples)} counterexamples"


# ---------------------------------------------------------------------------
# Simulation


@dataclass
class SimCase:
    term: Term
    ctx: tuple
    rho_a: Env
    rho_b: Env


@dataclass
class SimulationSpec:
    name: str
    desc: Desc
    sem_a: SemanticsDef
    sem_b: SemanticsDef
    sample: Callable[[np.random.Generator], SimCase]
    rel_v: Optional[Rel]
    rel_c: Callable[[Any, Any], bool]
    render: Callable[[Term, tuple], str]


def _run_samples(name: str, n: int, seed: int, body: Callable[[int, np.random.Generator], Optional[str]]) -> Report:
    report = Report(name, n)
    for i in range(n):
        try:
            problem = body(i, sample_rng(seed, i))
        except (BinderkitError, RecursionError) as exc:
            problem = f"raised {type(exc).__name__}: {exc}"
        if problem is not None:
            report.counterexamples.append(Counterexample(i, problem))
    report.counterexamples.sort(key=lambda c: c.index)
    return report


def check_simulation(spec: SimulationSpec, n_terms: int = 1000, seed: int = 42) -> Report:
    """Run both semantics on related environments and compare the outputs."""

    def body(i, rng):
        case = spec.sample(rng)
        if spec.rel_v is not None and not all_env(spec.rel_v, case.rho_a, case.rho_b):
            return None
        a = semantics(spec.sem_a, case.rho_a, case.term)
        b = semantics(spec.sem_b, case.rho_b, case.term)
        if spec.rel_c(a, b):
            return None
        return f"input {spec.render(case.term, case.ctx)} gives unrelated results"

    return _run_samples(spec.name, n_terms, seed, body)


# ---------------------------------------------------------------------------
# Fusion


@dataclass
class FusionCase:
    term: Term
    ctx: tuple
    rho_a: Env
    rho_b: Env
    rho_ab: Env


@dataclass
class FusionSpec:
    name: str
    desc: Desc
    sem_a: SemanticsDef
    sem_b: SemanticsDef
    sem_ab: SemanticsDef
    reify_a: Callable[[Any], Term]
    sample: Callable[[np.random.Generator], FusionCase]
    rel_c: Callable[[Any, Any], bool]
    render: Callable[[Term, tuple], str]


def check_fusion(spec: FusionSpec, n_terms: int = 1000, seed: int = 42) -> Report:
    """Compare running A then B against running the fused AB."""

    def body(i, rng):
        case = spec.sample(rng)
        mid = spec.reify_a(semantics(spec.sem_a, case.rho_a, case.term))
        lhs = semantics(spec.sem_b, case.rho_b, mid)
        rhs = semantics(spec.sem_ab, case.rho_ab, case.term)
        if spec.rel_c(lhs, rhs):
            return None
        return (f"input {spec.render(case.term, case.ctx)}: two passes give "
                f"{spec.render(lhs, case.rho_b.target)}, fused gives {spec.render(rhs, case.rho_ab.target)}")

    return _run_samples(spec.name, n_terms, seed, body)


# ---------------------------------------------------------------------------
# Built-in instances for renaming and substitution


@dataclass(frozen=True)
class SyntaxSampling:
    """What the samplers need to know about a syntax."""

    name: str
    desc: Desc
    sorts: tuple  # sorts used for contexts and top-level terms
    display: Callable
    payload_bound: int = 1
    depth: int = 8
    env_depth: int = 3

    def generator(self) -> Generator:
        return _generator(self.desc, self.payload_bound)

    def render(self, t: Term, ctx: Sequence) -> str:
        try:
            return print_term(self.desc, self.display, ctx, t)
        except Exception:  # printing is diagnostics only
            return repr(t)


_GENERATORS: dict = {}


def _generator(d: Desc, bound: int) -> Generator:
    key = (id(d), bound)
    if key not in _GENERATORS:
        _GENERATORS[key] = Generator(d, bound, var_bias=0.35)
    return _GENERATORS[key]


UTLC_SAMPLING = SyntaxSampling("utlc", utlc_desc(), (UNIT,), utlc_display)
STLC_SAMPLING = SyntaxSampling("stlc", stlc_desc(), tuple(enumerate_types(1)), stlc_display)
SAMPLINGS = {"utlc": UTLC_SAMPLING, "stlc": STLC_SAMPLING}


def _term_in(rng, s: SyntaxSampling, depth: int):
    g = s.generator()
    ctx = random_ctx(rng, s.sorts)
    sort = sample_sort(rng, g, s.sorts, ctx, depth)
    return g.term(rng, sort, ctx, depth), ctx


def _env(rng, s: SyntaxSampling, kind: str, source, target):
    if kind == "ren":
        return random_thinning(rng, source, target)
    return random_sub_env(rng, s.generator(), source, target, s.env_depth)


def _compose(d: Desc, kind_a: str, kind_b: str, rho_a: Env, rho_b: Env) -> Env:
    if kind_a == "ren":
        return select(rho_a, rho_b)
    if kind_b == "ren":
        return map_env(lambda t: ren(d, rho_b, t), rho_a, rho_b.target)
    return map_env(lambda t: sub(d, rho_b, t), rho_a, rho_b.target)


def _sem(d: Desc, kind: str) -> SemanticsDef:
    return renaming(d) if kind == "ren" else substitution(d)


def fusion_spec(s: SyntaxSampling, kind_a: str, kind_b: str, depth: Optional[int] = None,
                sem_a: Optional[SemanticsDef] = None) -> FusionSpec:
    """Fusion of ``kind_a`` followed by ``kind_b`` (each "ren" or "sub")."""
    d = s.desc
    depth = s.depth if depth is None else depth
    kind_ab = "ren" if kind_a == kind_b == "ren" else "sub"

    def sample(rng):
        t, ctx = _term_in(rng, s, depth)
        mid = random_extension(rng, ctx, s.sorts)
        out = random_extension(rng, mid, s.sorts)
        rho_a = _env(rng, s, kind_a, ctx, mid)
        rho_b = _env(rng, s, kind_b, mid, out)
        return FusionCase(t, ctx, rho_a, rho_b, _compose(d, kind_a, kind_b, rho_a, rho_b))

    return FusionSpec(f"{s.name} {kind_a}-{kind_b} fusion", d,
                      sem_a or _sem(d, kind_a), _sem(d, kind_b), _sem(d, kind_ab),
                      lambda t: t, sample, lambda a, b: bool(eq_term(d, a, b)), s.render)


FUSION_KINDS = (("ren", "ren"), ("ren", "sub"), ("sub", "ren"), ("sub", "sub"))


def rensub_spec(s: SyntaxSampling, depth: Optional[int] = None) -> SimulationSpec:
    """Renaming agrees with substituting the variables it maps to."""
    d = s.desc
    depth = s.depth if depth is None else depth

    def sample(rng):
        t, ctx = _term_in(rng, s, depth)
        th = random_thinning(rng, ctx, random_extension(rng, ctx, s.sorts))
        return SimCase(t, ctx, th, map_env(VarT, th))

    rel_v = lambda sort, ctx, v, t: isinstance(t, VarT) and t.var == v
    return SimulationSpec(f"{s.name} rensub simulation", d, renaming(d), substitution(d), sample,
                          rel_v, lambda a, b: bool(eq_term(d, a, b)), s.render)


def _copy(t: Term) -> Term:
    if isinstance(t, VarT):
        return VarT(Var(t.var.index, t.var.sort))
    return ConT(tuple(Sub(tuple(ev.telescope), ev.sort, _copy(ev.child)) if isinstance(ev, Sub)
                      else Pay(ev.value) for ev in t.layer))


def sub_ext_spec(s: SyntaxSampling, depth: Optional[int] = None) -> SimulationSpec:
    """Substitution sends pointwise-equal environments to equal results."""
    d = s.desc
    depth = s.depth if depth is None else depth

    def sample(rng):
        t, ctx = _term_in(rng, s, depth)
        target = random_extension(rng, ctx, s.sorts)
        rho = random_sub_env(rng, s.generator(), ctx, target, s.env_depth)
        # rebuild the same environment by a different route: copies, via snoc
        other = empty_env(target)
        for v in reversed(rho.vars()):
            other = snoc(other, _copy(rho(v)), v.sort)
        return SimCase(t, ctx, rho, other)

    return SimulationSpec(f"{s.name} substitution extensionality", d, substitution(d), substitution(d),
                          sample, eq_rel(d), lambda a, b: bool(eq_term(d, a, b)), s.render)


# ---------------------------------------------------------------------------
# Mutation control


def broken_weaken(n: int, ctx: Sequence, extra: Sequence) -> Env:
    """Like :func:`binderkit.scope.shift` but forgets to shift the indices."""
    ctx = tuple(ctx)
    return Env(ctx, tuple(extra) + ctx, lambda x: x)


def mutant_renaming(d: Desc) -> SemanticsDef:
    """Renaming whose binders push the environment under them without shifting."""
    vv = vl_var()

    def alg(sort, layer, ctx):
        out = []
        for ev in layer:
            if isinstance(ev, Sub) and ev.telescope:
                tel, k = ev.telescope, ev.child
                out.append(Sub(tel, ev.sort, k(broken_weaken(len(tel), k.ctx, tel), fresh_l(vv, tel, k.ctx))))
            else:
                out.append(ev)
        return ConT(tuple(out))

    return SemanticsDef(d, lambda v, th: th(v), lambda v, ctx: VarT(v), alg)


def fusion_suite(syntaxes: Sequence[str] = ("utlc", "stlc"), n: int = 1000, depth: int = 8,
                 seed: int = 42) -> list[Report]:
    return [check_fusion(fusion_spec(SAMPLINGS[name], a, b, depth), n, seed)
            for name in syntaxes for a, b in FUSION_KINDS]


def simulation_suite(syntaxes: Sequence[str] = ("utlc", "stlc"), n: int = 1000, depth: int = 8,
                     seed: int = 42) -> list[Report]:
    out = []
    for name in syntaxes:
        s = SAMPLINGS[name]
        out.append(check_simulation(rensub_spec(s, depth), n, seed))
        out.append(check_simulation(sub_ext_spec(s, depth), n, seed))
    return out


def mutation_report(syntax: str = "utlc", n: int = 1000, depth: int = 8, seed: int = 42) -> Report:
    """ren-ren fusion with the mutant renaming as first pass; should fail."""
    s = SAMPLINGS[syntax]
    spec = fusion_spec(s, "ren", "ren", depth, sem_a=mutant_renaming(s.desc))
    spec.name = f"{syntax} ren-ren fusion (mutant weaken)"
    return check_fusion(spec, n, seed)
