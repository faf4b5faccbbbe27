"""Command-line interface and JSON documents."""

from .main import main

__all__ = ["main"]
