"""Exact verification engine for centrally extended reflection equation algebras."""

__version__ = "0.1.0"
