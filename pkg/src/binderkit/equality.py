"""Decidable equality of variables and terms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .desc import Desc, Sigma, payload_eq
from .errors import PayloadDomainError, ValidationError
from .scope import Var
from .term import Pay, Sub, Term, VarT, walk


@dataclass(frozen=True)
class Decision:
    """Outcome of an equality test; falsy ones say where the terms first differ."""

    equal: bool
    path: Optional[tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal


YES = Decision(True)


def eq_var(a: Var, b: Var) -> bool:
    return a.index == b.index and a.sort == b.sort


def eq_term(d: Desc, a: Term, b: Term) -> Decision:
    """Structural equality; payloads are compared with their domain's equality."""
    return _eq(d, a, b, ())


def _eq(d: Desc, a: Term, b: Term, path: tuple) -> Decision:
    if isinstance(a, VarT) and isinstance(b, VarT):
        if eq_var(a.var, b.var):
            return YES
        return Decision(False, path, f"variables {a.var!r} and {b.var!r} differ")
    if isinstance(a, VarT) or isinstance(b, VarT):
        return Decision(False, path, "variable against constructor")
    lb = b.layer
    try:
        for i, ev, step in walk(d, a.layer):
            if ev is None:
                if len(lb) != i:
                    return Decision(False, path + (i,), "layers have different lengths")
                return YES
            if i >= len(lb):
                return Decision(False, path + (i,), "layers have different lengths")
            other = lb[i]
            if isinstance(step, Sigma):
                if not isinstance(other, Pay):
                    return Decision(False, path + (i,), "payload against subterm")
                try:
                    same = payload_eq(step.domain, ev.value, other.value)
                except PayloadDomainError as exc:
                    return Decision(False, path + (i,), str(exc))
                if not same:
                    return Decision(False, path + (i,), f"payloads {ev.value!r} and {other.value!r} differ")
            else:
                if not isinstance(other, Sub):
                    return Decision(False, path + (i,), "subterm against payload")
                if tuple(other.telescope) != tuple(ev.telescope) or other.sort != ev.sort:
                    return Decision(False, path + (i,), "subterm slots differ")
                sub = _eq(d, ev.child, other.child, path + (i,))
                if not sub:
                    return sub
    except ValidationError as exc:
        return Decision(False, path + exc.path, str(exc))
    raise AssertionError("unreachable")  # pragma: no cover
