"""Optional compiled backend for the large registered curves.

The per-curve kernel modules (_kernels_*) are generated, committed numba
source; if numba is unavailable or the curve/encoder combination is not
one that was baked in, ``backend_for`` returns None and callers fall
back to the pure-Python path.  Both paths produce identical digests.
"""

from __future__ import annotations

import numpy as np

from .curve import BinaryCurve, LambdaProjectivePoint, ORDINARY
from .encoding import EncoderParams

_MASK64 = (1 << 64) - 1
_KERNEL_MODULES = {"sect163k1": "_kernels_sect163k1", "sect233k1": "_kernels_sect233k1"}
_cache: dict = {}


def backend_for(curve: BinaryCurve, enc: EncoderParams):
    """The compiled backend for (curve, encoder), or None."""
    if curve.name not in _KERNEL_MODULES or enc.t != 2:
        return None
    if curve.name in _cache:
        backend = _cache[curve.name]
        return backend if backend is None or backend.curve is curve else None
    try:
        km = __import__("ecmh." + _KERNEL_MODULES[curve.name], fromlist=["HAVE_NUMBA"])
        backend = _Backend(curve, km) if km.HAVE_NUMBA else None
    except ImportError:  # pragma: no cover
        backend = None
    _cache[curve.name] = backend
    return backend


class _Backend:
    """Owns the kernel lookup tables and scratch for one curve."""

    def __init__(self, curve: BinaryCurve, km):
        self.curve = curve
        self.km = km
        self.W = km.W
        self._tab, self._spread, self._ht = km.build_tables()

    def _to_words(self, values):
        W = self.W
        arr = np.zeros((len(values), W), np.uint64)
        for i, v in enumerate(values):
            for j in range(W):
                arr[i, j] = (v >> (64 * j)) & _MASK64
        return arr

    def _row_int(self, row) -> int:
        return sum(int(v) << (64 * i) for i, v in enumerate(row))

    def encode_batch(self, ws: list[int]):
        """Kernel SW encoding; returns (xs, ls, kinds) word arrays."""
        n = len(ws)
        W = self.W
        xs = np.zeros((n, W), np.uint64)
        ls = np.zeros((n, W), np.uint64)
        kinds = np.zeros(n, np.uint8)
        cs = np.zeros((n, W), np.uint64)
        pref = np.zeros((n, W), np.uint64)
        self.km.encode_batch(self._to_words(ws), xs, ls, kinds, cs, pref,
                             self._tab, self._spread, self._ht)
        if (kinds > 1).any():  # pragma: no cover
            raise AssertionError("kernel encoding found no admissible branch")
        return xs, ls, kinds

    def _point_at(self, xs, ls, kinds, i):
        curve = self.curve
        if kinds[i] == 1:
            return curve.x_zero_point()
        return curve.affine(curve.field.element(self._row_int(xs[i])),
                            curve.field.element(self._row_int(ls[i])))

    def accumulate(self, acc: LambdaProjectivePoint, ws: list[int],
                   negate: bool = False) -> LambdaProjectivePoint:
        """Encode ws and mixed-add (or subtract) them all into acc.

        The kernel handles the common case (ordinary accumulator and
        points, generic chord); anything else is delegated per element
        to the Python group law, which is exact on all special cases.
        """
        curve = self.curve
        xs, ls, kinds = self.encode_batch(ws)
        n = len(ws)
        W = self.W
        state = np.zeros(3 * W, np.uint64)
        i = 0
        while i < n:
            if acc.kind != ORDINARY:
                p = self._point_at(xs, ls, kinds, i)
                acc = curve.add_mixed(acc, curve.negate(p) if negate else p)
                i += 1
                continue
            for j in range(W):
                state[j] = (acc.Xv >> (64 * j)) & _MASK64
                state[W + j] = (acc.Lv >> (64 * j)) & _MASK64
                state[2 * W + j] = (acc.Zv >> (64 * j)) & _MASK64
            stop = int(self.km.accumulate(state, xs, ls, kinds, i, negate,
                                          self._tab, self._spread))
            acc = LambdaProjectivePoint(
                curve, ORDINARY, self._row_int(state[0:W]),
                self._row_int(state[W:2 * W]), self._row_int(state[2 * W:3 * W]))
            if stop < n:  # element the kernel would not handle
                p = self._point_at(xs, ls, kinds, stop)
                acc = curve.add_mixed(acc, curve.negate(p) if negate else p)
            i = stop + 1
        return acc
