from rkhs_sparse.core.methods.method_spec import MethodSpec
from rkhs_sparse.util.errors import UsageError


class MethodRegistry:
    _methods: dict[str, MethodSpec] = {}

    @classmethod
    def register(cls, method: MethodSpec):
        cls._methods[method.id] = method

    @classmethod
    def get(cls, method_id: str) -> MethodSpec:
        try:
            return cls._methods[method_id]
        except KeyError:
            known = ", ".join(sorted(cls._methods)) or "none loaded"
            raise UsageError(f"Unknown method '{method_id}' ({known})") from None

    @classmethod
    def list(cls, example=None) -> list[MethodSpec]:
        return [
            m for m in cls._methods.values()
            if example is None or m.example == example
        ]
