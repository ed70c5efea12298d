from rkhs_sparse.core.kernels.bandwidth import BandwidthConfig, median_bandwidth
from rkhs_sparse.core.kernels.gaussian import (
    DerivKernelMatrix,
    GramMatrix,
    cross_kernel,
    deriv_kernel_matrix,
    gaussian_kernel,
    gram,
    kernel_vector,
)

__all__ = [
    "BandwidthConfig",
    "median_bandwidth",
    "DerivKernelMatrix",
    "GramMatrix",
    "cross_kernel",
    "deriv_kernel_matrix",
    "gaussian_kernel",
    "gram",
    "kernel_vector",
]
