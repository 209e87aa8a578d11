"""Sort values used by the built-in syntaxes, and the SortDomain interface.

Sorts are ordinary hashable Python values compared with ``==``. A
:class:`SortDomain` bundles that equality with a canonical text encoding and a
bounded enumerator (used by generators and exhaustive checks).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Any, Callable


class Unit(enum.Enum):
    """The single sort of untyped syntaxes."""

    UNIT = "unit"

    def __repr__(self) -> str:
        return "•"


UNIT = Unit.UNIT


class Mode(enum.Enum):
    """Bidirectional fraction a term belongs to."""

    INFER = "infer"
    CHECK = "check"

    def __repr__(self) -> str:
        return self.name.capitalize()


INFER = Mode.INFER
CHECK = Mode.CHECK


class SimpleType:
    """Simple types: the base type ``alpha`` and arrows."""

    __slots__ = ()


@dataclass(frozen=True, repr=False)
class Alpha(SimpleType):
    def __repr__(self) -> str:
        return "α"


@dataclass(frozen=True, repr=False)
class Arrow(SimpleType):
    dom: SimpleType
    cod: SimpleType

    def __repr__(self) -> str:
        dom = f"({self.dom!r})" if isinstance(self.dom, Arrow) else repr(self.dom)
        return f"{dom}→{self.cod!r}"


ALPHA = Alpha()


def arrow(*types: SimpleType) -> SimpleType:
    """Right-nested arrow: ``arrow(a, b, c) == a → (b → c)``."""
    *doms, result = types
    for dom in reversed(doms):
        result = Arrow(dom, result)
    return result


def type_size(t: SimpleType) -> int:
    """Number of arrows in ``t``."""
    if isinstance(t, Arrow):
        return 1 + type_size(t.dom) + type_size(t.cod)
    return 0


def encode_type(t: SimpleType) -> str:
    if isinstance(t, Arrow):
        return f"(-> {encode_type(t.dom)} {encode_type(t.cod)})"
    return "alpha"


def decode_type(text: str) -> SimpleType:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def go() -> SimpleType:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"truncated type: {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "alpha":
            return ALPHA
        if tok == "(" and pos < len(tokens) and tokens[pos] == "->":
            pos += 1
            dom = go()
            cod = go()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError(f"expected ')' in type: {text!r}")
            pos += 1
            return Arrow(dom, cod)
        raise ValueError(f"unexpected token {tok!r} in type: {text!r}")

    result = go()
    if pos != len(tokens):
        raise ValueError(f"trailing input in type: {text!r}")
    return result


def enumerate_types(max_arrows: int) -> list[SimpleType]:
    """All simple types with at most ``max_arrows`` arrows, smallest first."""
    by_size: list[list[SimpleType]] = [[ALPHA]]
    for n in range(1, max_arrows + 1):
        level = []
        for k in range(n):
            for dom in by_size[k]:
                for cod in by_size[n - 1 - k]:
                    level.append(Arrow(dom, cod))
        by_size.append(level)
    return list(itertools.chain.from_iterable(by_size))


@dataclass(frozen=True)
class SortDomain:
    """Decidable equality, text encoding and bounded enumeration for sorts."""

    name: str
    encode: Callable[[Any], str]
    decode: Callable[[str], Any]
    _enumerate: Callable[[int], list]
    contains: Callable[[Any], bool]

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def enumerate(self, bound: int) -> list:
        return self._enumerate(bound)


def _decode_enum(cls):
    def decode(text: str):
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"not a {cls.__name__}: {text!r}") from None
    return decode


def is_type(t: Any) -> bool:
    if isinstance(t, Arrow):
        return is_type(t.dom) and is_type(t.cod)
    return isinstance(t, Alpha)


UNIT_SORTS = SortDomain("unit", lambda s: s.value, _decode_enum(Unit), lambda bound: [UNIT],
                        lambda s: isinstance(s, Unit))
MODE_SORTS = SortDomain("mode", lambda s: s.value, _decode_enum(Mode), lambda bound: [INFER, CHECK],
                        lambda s: isinstance(s, Mode))
TYPE_SORTS = SortDomain("type", encode_type, decode_type, enumerate_types, is_type)
