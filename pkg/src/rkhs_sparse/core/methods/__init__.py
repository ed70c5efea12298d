from rkhs_sparse.core.methods.method_spec import MethodSpec
from rkhs_sparse.core.methods.registry import MethodRegistry
from rkhs_sparse.core.methods.method_loader import load_methods_from_yaml

__all__ = ["MethodSpec", "MethodRegistry", "load_methods_from_yaml"]
