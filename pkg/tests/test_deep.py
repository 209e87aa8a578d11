import pytest

from binderkit.deep import deep_call
from binderkit.nbe import norm_utlc
from binderkit.syntaxes import app, lam, var


def nested_identity(n):
    t = lam(var(0))
    for _ in range(n):
        t = app(lam(var(0)), t)
    return t


def test_returns_and_raises():
    assert deep_call(lambda a, b=0: a + b, 2, b=3) == 5
    with pytest.raises(ZeroDivisionError):
        deep_call(lambda: 1 // 0)


def test_deep_term_normalises():
    assert deep_call(norm_utlc, nested_identity(5000)) == lam(var(0))
