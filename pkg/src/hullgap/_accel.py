"""Backend switch for the loop kernels.

Kernels are written once as plain Python loops over arrays. When numba is
importable and ``HULLGAP_NUMBA`` is not set to ``0``, they are compiled with
``@njit`` on first use. Compiled code only ever sees int64 inputs whose
products are known not to overflow; everything else (and everything when the
flag is off) goes through the interpreted or numpy-vectorized path on exact
Python integers.
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

ENV_FLAG = "HULLGAP_NUMBA"


def numba_enabled() -> bool:
    if numba is None:
        return False
    return os.environ.get(ENV_FLAG, "1").strip().lower() not in ("0", "false", "no", "off")


class Kernel:
    """A loop kernel with a lazily compiled twin.

    ``kernel.py`` is the interpreted function; ``kernel.jit`` compiles on
    first access. ``kernel.pick(fits)`` returns whichever applies.
    """

    def __init__(self, func):
        self.py = func
        self._jit = None
        self.__name__ = func.__name__
        self.__doc__ = func.__doc__

    @property
    def jit(self):
        if self._jit is None:
            self._jit = numba.njit(cache=True)(self.py)
        return self._jit

    def pick(self, fits: bool):
        if fits and numba_enabled():
            return self.jit
        return self.py

    def __call__(self, *args):
        return self.py(*args)


def kernel(func) -> Kernel:
    return Kernel(func)
