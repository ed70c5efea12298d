from typing import Optional

from rkhs_sparse.logging.log_level import LogLevel
from rkhs_sparse.logging.logger import Logger
from rkhs_sparse.logging.console_logger import ConsoleLogger


class LoggerRegistry:
    """Global registry for the active logger instance.

    Library modules never build loggers themselves; they call get_logger() so the
    CLI (or a test) decides where messages go.
    """

    _instance: Optional[Logger] = None

    @classmethod
    def get(cls) -> Logger:
        """Get the current logger, creating a quiet stderr ConsoleLogger if none set."""
        if cls._instance is None:
            cls._instance = ConsoleLogger(level=LogLevel.WARNING)
        return cls._instance

    @classmethod
    def set(cls, logger: Logger) -> None:
        cls._instance = logger

    @classmethod
    def reset(cls) -> None:
        """Reset to no logger (next get() will create default)."""
        cls._instance = None

    @classmethod
    def configure_console(cls, level: LogLevel, show_timestamp: bool = False) -> Logger:
        """Install a stderr ConsoleLogger at the given level and return it."""
        logger = ConsoleLogger(level=level, show_timestamp=show_timestamp)
        cls.set(logger)
        return logger


def get_logger() -> Logger:
    """Convenience function to get the current logger."""
    return LoggerRegistry.get()
