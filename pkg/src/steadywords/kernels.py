"""Backend selection for the hot loop kernels.

The default backend compiles every function of ``_kernelsrc`` with numba's
@njit (disk-cached). Setting ``STEADYWORDS_DISABLE_NUMBA=1`` before import,
or running without numba installed, selects the fallback: per-word
primitives run as plain Python loops and the heavy batch sweeps are routed
to the vectorized numpy implementations in ``arrayops``.

Module attributes:

* the dispatched kernel callables (``square_end_half`` etc.);
* ``py`` - the plain-Python family, always available;
* ``jit`` - the compiled family, or None when disabled;
* ``USING_NUMBA`` / ``BACKEND`` - what got selected at import time.
"""

from __future__ import annotations

import importlib.util
import os
import types

from . import _kernelsrc as py


def _numba_requested() -> bool:
    flag = os.environ.get("STEADYWORDS_DISABLE_NUMBA", "").strip().lower()
    if flag in {"1", "true", "yes", "on"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _load_jit_family() -> types.ModuleType:
    """Second instance of _kernelsrc with every function njit-compiled.

    A fresh module instance keeps the plain-Python family untouched; numba
    resolves cross-function calls lazily, so rebinding all names before the
    first call is sufficient.
    """
    from numba import njit

    spec = importlib.util.spec_from_file_location(
        "steadywords._kernelsrc_jit", py.__file__
    )
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    for name, fn in list(vars(mod).items()):
        if isinstance(fn, types.FunctionType) and fn.__module__ == mod.__name__:
            setattr(mod, name, njit(cache=True)(fn))
    return mod


USING_NUMBA = _numba_requested()
jit = _load_jit_family() if USING_NUMBA else None
BACKEND = "numba" if USING_NUMBA else "numpy"

_active = jit if USING_NUMBA else py

square_end_half = _active.square_end_half
has_square_incremental = _active.has_square_incremental
first_square_scan = _active.first_square_scan
first_square_naive = _active.first_square_naive
unsteady_deletion_fast = _active.unsteady_deletion_fast
unsteady_deletion_naive = _active.unsteady_deletion_naive
steady_append_violation = _active.steady_append_violation
failure_suffix_class = _active.failure_suffix_class
max_exponent_fast = _active.max_exponent_fast
max_exponent_naive = _active.max_exponent_naive
exceeds_exponent_fast = _active.exceeds_exponent_fast
exceeds_exponent_naive = _active.exceeds_exponent_naive
separation_violation = _active.separation_violation
threshold_append_ok = _active.threshold_append_ok
extension_has_square = _active.extension_has_square
cross_check_one = _active.cross_check_one

if USING_NUMBA:
    sweep_cross_checks = jit.sweep_cross_checks
    sweep_random_cross_checks = jit.sweep_random_cross_checks
    sweep_implication_chain = jit.sweep_implication_chain
    count_transversals_dfs = jit.count_transversals_dfs
else:
    from . import arrayops as _aops

    sweep_cross_checks = _aops.sweep_cross_checks
    sweep_random_cross_checks = _aops.sweep_random_cross_checks
    sweep_implication_chain = _aops.sweep_implication_chain
    count_transversals_dfs = None  # transversal module uses the batch counter
