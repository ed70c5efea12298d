import sys
import threading
from datetime import datetime
from typing import Any, TextIO

from rkhs_sparse.logging.log_level import LogLevel
from rkhs_sparse.logging.logger import Logger


def format_fields(fields: dict[str, Any]) -> str:
    """Render structured fields as sorted key=value pairs."""
    parts = []
    for key in sorted(fields):
        value = fields[key]
        if isinstance(value, float):
            value = f"{value:.6g}"
        parts.append(f"{key}={value}")
    return " ".join(parts)


class ConsoleLogger(Logger):
    """Logger that writes to stderr with optional timestamps, level prefixes and fields.

    stdout is left to command results (JSON reports, kappa values).
    """

    LEVEL_COLORS = {
        LogLevel.ERROR: "\033[91m",    # Red
        LogLevel.WARNING: "\033[93m",  # Yellow
        LogLevel.INFO: "\033[0m",      # Default
        LogLevel.TRACE: "\033[96m",    # Cyan
        LogLevel.DEBUG: "\033[90m",    # Gray
    }
    RESET = "\033[0m"

    def __init__(
        self,
        level: LogLevel = LogLevel.INFO,
        show_timestamp: bool = False,
        show_level: bool = True,
        use_colors: bool = False,
        stream: TextIO | None = None,
    ):
        super().__init__(level)
        self.show_timestamp = show_timestamp
        self.show_level = show_level
        self.use_colors = use_colors
        self._stream = stream
        # replication jobs log from joblib worker threads
        self._lock = threading.Lock()

    @property
    def stream(self) -> TextIO:
        return self._stream if self._stream is not None else sys.stderr

    def _write(self, level: LogLevel, message: str, **fields: Any) -> None:
        parts = []

        if self.show_timestamp:
            parts.append(datetime.now().strftime("[%H:%M:%S]"))

        if self.show_level:
            parts.append(f"[{level.name}]")

        parts.append(message)
        if fields:
            parts.append(format_fields(fields))
        output = " ".join(parts)

        if self.use_colors:
            color = self.LEVEL_COLORS.get(level, self.RESET)
            output = f"{color}{output}{self.RESET}"

        with self._lock:
            print(output, file=self.stream)
