"""Kernel selection: compiled extension when present, numpy fallback otherwise.

Set RMFMOMENTS_FORCE_FALLBACK=1 to skip the compiled core (used by the
benchmark and the cross-check tests).
"""

from __future__ import annotations

import os

from . import kernels_py

try:
    if os.environ.get("RMFMOMENTS_FORCE_FALLBACK"):
        raise ImportError
    from . import _core

    HAVE_COMPILED = True
    _impl = _core
except ImportError:
    HAVE_COMPILED = False
    _impl = kernels_py

spf_sieve = _impl.spf_sieve
rademacher_f_values = _impl.rademacher_f_values
steinhaus_f_values = _impl.steinhaus_f_values
fourth_moment_sum = _impl.fourth_moment_sum
birkhoff_accept_count = _impl.birkhoff_accept_count
