from __future__ import annotations

import logging
from typing import NamedTuple


class Record(NamedTuple):
    level: int
    message: str
    ctx: dict


class DiagnosticsHandler(logging.Handler):
    """A context manager to capture log messages emitted by gtilde.

    Parameters
    ----------
    logger : logging.Logger, optional
        If provided, captured messages are re-logged with `logger` at their
        original level, by default None
    level : int, optional
        Minimum level captured, by default ``logging.DEBUG``.
    source : str, optional
        Name of the logger to listen on, by default ``"gtilde"``.

    Attributes
    ----------
    records: list of tuple
        Captured messages. This is a 3-tuple of:
        `(log_level: int, message: str, context: dict)`

    Examples
    --------
    >>> handler = DiagnosticsHandler()
    >>> handler.install()  # now all gtilde log output is kept in handler.records

    >>> with DiagnosticsHandler() as handler:  # temporarily install
    ...     ...

    >>> logger = logging.getLogger(__name__)
    >>> with DiagnosticsHandler(logger):  # re-route messages to another logger
    ...     ...
    """

    def __init__(
        self,
        logger: logging.Logger | None = None,
        level: int = logging.DEBUG,
        source: str = "gtilde",
    ):
        super().__init__(level)
        self.records: list[Record] = []
        self._logger = logger
        self._source = logging.getLogger(source)
        self._previous_level: int | None = None

    def install(self) -> None:
        """Attach this handler to the source logger."""
        if self in self._source.handlers:
            return
        self._previous_level = self._source.level
        if self._source.getEffectiveLevel() > self.level:
            self._source.setLevel(self.level)
        self._source.addHandler(self)

    def uninstall(self) -> None:
        """Detach this handler, restoring the source logger's level."""
        if self not in self._source.handlers:
            return
        self._source.removeHandler(self)
        if self._previous_level is not None:
            self._source.setLevel(self._previous_level)
            self._previous_level = None

    def __repr__(self) -> str:
        n = type(self).__name__
        return f"<{n} object at {hex(id(self))} with {len(self.records)} records>"

    def __enter__(self) -> DiagnosticsHandler:
        """Enter a context with this handler installed."""
        self.install()
        return self

    def __exit__(self, *args: object) -> None:
        self.uninstall()

    def emit(self, record: logging.LogRecord) -> None:
        ctx = {
            "logger": record.name,
            "function": record.funcName,
            "line": record.lineno,
        }
        ctx.update(getattr(record, "gtilde", {}))
        message = record.getMessage()
        self.records.append(Record(record.levelno, message, ctx))
        if self._logger is not None:
            self._logger.log(record.levelno, message, extra={"gtilde": ctx})

    def as_list(self, min_level: int = logging.WARNING) -> list[dict]:
        """Return captured records at or above `min_level` as plain dicts."""
        return [
            {
                "level": logging.getLevelName(r.level),
                "message": r.message,
                "context": r.ctx,
            }
            for r in self.records
            if r.level >= min_level
        ]
