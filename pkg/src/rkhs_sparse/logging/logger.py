from abc import ABC, abstractmethod
from typing import Any

from rkhs_sparse.logging.log_level import LogLevel


class Logger(ABC):
    """Abstract base for all loggers.

    Keyword arguments passed to the level methods are structured fields
    (e.g. ``lam=0.01, iterations=412``); implementations decide how to render them.
    """

    def __init__(self, level: LogLevel = LogLevel.INFO):
        self._level = level

    @property
    def level(self) -> LogLevel:
        return self._level

    @level.setter
    def level(self, value: LogLevel):
        self._level = value

    def should_log(self, level: LogLevel) -> bool:
        return level <= self._level

    @abstractmethod
    def _write(self, level: LogLevel, message: str, **fields: Any) -> None:
        """Write a log message. Implementations must override this."""
        pass

    def log(self, level: LogLevel, message: str, **fields: Any) -> None:
        if self.should_log(level):
            self._write(level, message, **fields)

    def error(self, message: str, **fields: Any) -> None:
        self.log(LogLevel.ERROR, message, **fields)

    def warning(self, message: str, **fields: Any) -> None:
        self.log(LogLevel.WARNING, message, **fields)

    def info(self, message: str, **fields: Any) -> None:
        self.log(LogLevel.INFO, message, **fields)

    def trace(self, message: str, **fields: Any) -> None:
        self.log(LogLevel.TRACE, message, **fields)

    def debug(self, message: str, **fields: Any) -> None:
        self.log(LogLevel.DEBUG, message, **fields)
