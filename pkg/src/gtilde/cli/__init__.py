"""Command line front end."""

from ._commands import COMMANDS, Options
from ._main import build_parser, main

__all__ = ["COMMANDS", "Options", "build_parser", "main"]
