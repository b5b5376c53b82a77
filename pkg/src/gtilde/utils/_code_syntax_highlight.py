from __future__ import annotations

import os
from typing import TYPE_CHECKING

from pygments import highlight
from pygments.formatters import Terminal256Formatter, TerminalFormatter
from pygments.lexers import find_lexer_class, get_lexer_by_name
from pygments.util import ClassNotFound

if TYPE_CHECKING:
    from typing import Literal, TextIO

    from pygments.lexer import Lexer

    ColorMode = Literal["auto", "always", "never"]


def get_lexer(lang: str) -> Lexer:
    """Return a pygments lexer for `lang`, e.g. 'json' or 'csv'."""
    try:
        return get_lexer_by_name(lang)
    except ClassNotFound as e:
        if cls := find_lexer_class(lang):
            return cls()
        raise ValueError(f"Could not find lexer for language {lang!r}.") from e


def use_color(stream: TextIO, mode: ColorMode = "auto") -> bool:
    """Whether output written to `stream` should be colorized.

    ``"auto"`` colorizes only interactive terminals, and honours the
    ``NO_COLOR`` convention.
    """
    if mode == "always":
        return True
    if mode == "never" or os.getenv("NO_COLOR"):
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def highlight_text(text: str, lang: str = "json", style: str = "default") -> str:
    """Return `text` with ANSI color escapes for a terminal.

    Parameters
    ----------
    text : str
        The source to colorize.
    lang : str
        Any language pygments recognizes, by default "json".
    style : str
        Name of the pygments style, by default "default".  Use
        `pygments.styles.get_all_styles()` for the available names.
    """
    lexer = get_lexer(lang)
    if "256" in os.getenv("TERM", ""):
        formatter = Terminal256Formatter(style=style)
    else:
        formatter = TerminalFormatter()
    return highlight(text, lexer, formatter)
