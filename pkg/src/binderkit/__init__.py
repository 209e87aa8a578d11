"""Scope-safe syntaxes with binding, described once and traversed generically."""

__version__ = "0.1.0"
