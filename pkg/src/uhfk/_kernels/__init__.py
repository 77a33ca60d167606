"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``UHFK_DISABLE_NUMBA`` is unset or ``0``. Both paths compute the
same results; ``benchmarks/bench_kernels.py`` compares their speed.

Kernels:
    count_fixed_maps(perm, k)     # maps f: n -> k with f o perm == f, by enumeration
    orbit_labels(perms, npoints)  # orbit id (min point) under the group generated by perms
    class_structure(cls, prods, r)
    rref_mod(a, p)                # (reduced row echelon form, pivot columns)
    matmul_mod(a, b, p)
    poly_roots_mod(coeffs, p)     # roots in F_p, coefficients constant-first
"""
import os

from . import _numpy

_disabled = os.environ.get("UHFK_DISABLE_NUMBA", "").strip() not in ("", "0")

try:
    if _disabled:
        raise ImportError("numba disabled by UHFK_DISABLE_NUMBA")
    from . import _numba as _impl

    BACKEND = "numba"
except ImportError:
    _impl = _numpy
    BACKEND = "numpy"

count_fixed_maps = _impl.count_fixed_maps
orbit_labels = _impl.orbit_labels
class_structure = _impl.class_structure
rref_mod = _impl.rref_mod
matmul_mod = _impl.matmul_mod
poly_roots_mod = _impl.poly_roots_mod


def backends():
    """Return the importable kernel modules by name."""
    found = {"numpy": _numpy}
    try:
        from . import _numba

        found["numba"] = _numba
    except ImportError:
        pass
    return found
