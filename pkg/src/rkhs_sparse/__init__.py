# RKHS sparse learning - Main Package

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("rkhs_sparse")
except PackageNotFoundError:
    __version__ = "dev"
