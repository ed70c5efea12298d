from enum import IntEnum


class LogLevel(IntEnum):
    """Log levels ordered by severity (lower = more severe)."""
    ERROR = 0
    WARNING = 1
    INFO = 2
    TRACE = 3
    DEBUG = 4

    @classmethod
    def parse(cls, name: str) -> "LogLevel":
        """Look a level up by name, case-insensitively ("info" -> INFO)."""
        try:
            return cls[name.strip().upper()]
        except KeyError:
            choices = ", ".join(level.name for level in cls)
            raise ValueError(f"Unknown log level '{name}' (choose from {choices})") from None
