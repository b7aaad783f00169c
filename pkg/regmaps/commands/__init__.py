"""Command-line surface: one module per command group."""

from . import census, groups, verify

__all__ = ["census", "groups", "verify"]
