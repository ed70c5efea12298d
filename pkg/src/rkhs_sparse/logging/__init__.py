from rkhs_sparse.logging.log_level import LogLevel
from rkhs_sparse.logging.logger import Logger
from rkhs_sparse.logging.console_logger import ConsoleLogger
from rkhs_sparse.logging.logger_registry import LoggerRegistry, get_logger

__all__ = [
    "LogLevel",
    "Logger",
    "ConsoleLogger",
    "LoggerRegistry",
    "get_logger",
]
