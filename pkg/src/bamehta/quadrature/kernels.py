"""Select the compiled kernels when available, else the numpy fallback."""

import os

from . import _kernels_py

BACKEND = "python"
if os.environ.get("BAMEHTA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

eval_monomials = _impl.eval_monomials
linear_power_product = _impl.linear_power_product

__all__ = ["BACKEND", "eval_monomials", "linear_power_product"]
