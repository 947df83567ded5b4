"""Kernel backend selection and per-ring lookup tables.

The compiled extension ``bcinv._kernels`` is used when it imports; otherwise
the numpy versions in ``bcinv._kernels_py`` are used.  Setting the
environment variable ``BCINV_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels_py
from .ring import RingHandle

if os.environ.get("BCINV_PURE_PYTHON"):
    backend = _kernels_py
else:
    try:
        from . import _kernels as backend  # type: ignore[no-redef]
    except ImportError:
        backend = _kernels_py

BACKEND = "cython" if backend is not _kernels_py else "python"

# rings up to this size keep a full multiplication table
TABLE_LIMIT = 2048
# rows per block when streaming products of an untabled ring
_CHUNK = 256


class Tables:
    """Vectorized views of one ring: columns and rows of the product map.

    Small rings are backed by the full multiplication table; larger ones
    compute the requested products on the fly in blocks.
    """

    def __init__(self, ring: RingHandle):
        self.ring = ring
        self.n = ring.cardinality
        self.codes = ring.codes()

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        if self.n > TABLE_LIMIT:
            return None
        c = self.codes
        return np.ascontiguousarray(self.ring.mul_codes(c[:, None], c[None, :]), dtype=np.int32)

    @cached_property
    def star(self) -> np.ndarray:
        return np.asarray(self.ring.star_codes(self.codes), dtype=np.int64)

    def mul(self, x, y) -> np.ndarray:
        """Elementwise product of code arrays (broadcasting)."""
        if self.mul_table is not None:
            return self.mul_table[x, y]
        return np.asarray(self.ring.mul_codes(x, y))

    def col(self, g: int) -> np.ndarray:
        """``y -> y*g`` over all ``y``."""
        if self.mul_table is not None:
            return self.mul_table[:, g]
        return np.asarray(self.ring.mul_codes(self.codes, g))

    def row(self, g: int) -> np.ndarray:
        """``y -> g*y`` over all ``y``."""
        if self.mul_table is not None:
            return self.mul_table[g, :]
        return np.asarray(self.ring.mul_codes(g, self.codes))

    def block(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        if self.mul_table is not None:
            return self.mul_table[np.ix_(xs, ys)]
        return np.asarray(self.ring.mul_codes(xs[:, None], ys[None, :]))

    # -- ideals as masks over the whole ring ---------------------------------

    def in_left_ideal(self, g: int) -> np.ndarray:
        """Mask of ``R g``."""
        mask = np.zeros(self.n, dtype=bool)
        mask[self.col(g)] = True
        return mask

    def in_right_ideal(self, g: int) -> np.ndarray:
        """Mask of ``g R``."""
        mask = np.zeros(self.n, dtype=bool)
        mask[self.row(g)] = True
        return mask

    def right_ann(self, g: int) -> np.ndarray:
        """Codes of ``g°``."""
        return np.flatnonzero(self.row(g) == 0)

    def left_ann(self, g: int) -> np.ndarray:
        """Codes of ``°g``."""
        return np.flatnonzero(self.col(g) == 0)

    def left_ideal_contains(self, x: int) -> np.ndarray:
        """Mask of ``y`` with ``x`` in ``R y``."""
        return self._all_cols(self.codes, lambda B: (B == x).any(axis=1))

    def right_ideal_contains(self, x: int) -> np.ndarray:
        """Mask of ``y`` with ``x`` in ``y R``."""
        return self._all_rows(self.codes, lambda B: (B == x).any(axis=1))

    def _all_rows(self, cols: np.ndarray, pred) -> np.ndarray:
        """``pred(block)`` reduced over columns, for every ``y`` as a row."""
        out = np.empty(self.n, dtype=bool)
        for start in range(0, self.n, _CHUNK):
            ys = self.codes[start:start + _CHUNK]
            out[start:start + _CHUNK] = pred(self.block(ys, cols))
        return out

    def _all_cols(self, rows: np.ndarray, pred) -> np.ndarray:
        out = np.empty(self.n, dtype=bool)
        for start in range(0, self.n, _CHUNK):
            ys = self.codes[start:start + _CHUNK]
            out[start:start + _CHUNK] = pred(self.block(rows, ys).T)
        return out

    def right_ann_contains(self, g: int) -> np.ndarray:
        """Mask of ``y`` with ``g° ⊆ y°``."""
        ann = self.right_ann(g)
        return self._all_rows(ann, lambda B: (B == 0).all(axis=1))

    def right_ann_within(self, g: int) -> np.ndarray:
        """Mask of ``y`` with ``y° ⊆ g°``."""
        outside = np.flatnonzero(self.row(g) != 0)
        return self._all_rows(outside, lambda B: (B != 0).all(axis=1))

    def left_ann_contains(self, g: int) -> np.ndarray:
        """Mask of ``y`` with ``°g ⊆ °y``."""
        ann = self.left_ann(g)
        return self._all_cols(ann, lambda B: (B == 0).all(axis=1))

    def left_ann_within(self, g: int) -> np.ndarray:
        """Mask of ``y`` with ``°y ⊆ °g``."""
        outside = np.flatnonzero(self.col(g) != 0)
        return self._all_cols(outside, lambda B: (B != 0).all(axis=1))


@lru_cache(maxsize=32)
def tables_for(ring: RingHandle) -> Tables:
    return Tables(ring)


class BulkTables:
    """Whole-ring relation matrices and definitional witness sweeps.

    These are the exhaustive oracles used by the theorem harness.  They need
    the full multiplication table, so the ring must be at most
    ``TABLE_LIMIT`` elements (and in practice a few hundred).
    """

    def __init__(self, ring: RingHandle, impl=None):
        self.ring = ring
        self.impl = impl or backend
        self.tables = tables_for(ring)
        if self.tables.mul_table is None:
            raise ValueError(f"{ring.spec} is too large for bulk tables")
        self.mul = self.tables.mul_table
        self.n = ring.cardinality

    @cached_property
    def in_left(self) -> np.ndarray:
        """``[x, g]``: x in Rg."""
        return self.impl.left_ideal_matrix(self.mul).astype(bool)

    @cached_property
    def in_right(self) -> np.ndarray:
        """``[x, g]``: x in gR."""
        return self.impl.right_ideal_matrix(self.mul).astype(bool)

    @cached_property
    def rsub(self) -> np.ndarray:
        """``[g1, g2]``: g1° ⊆ g2°."""
        return self.impl.right_ann_subset(self.mul).astype(bool)

    @cached_property
    def lsub(self) -> np.ndarray:
        """``[g1, g2]``: °g1 ⊆ °g2."""
        return self.impl.left_ann_subset(self.mul).astype(bool)

    @cached_property
    def left_bc(self):
        """(least, count) of left (b,c)-witnesses, indexed [a, b, c]."""
        return self.impl.least_yab_eq_b(self.mul, np.ascontiguousarray(self.in_left.T))

    @cached_property
    def right_bc(self):
        return self.impl.least_cay_eq_c(self.mul, np.ascontiguousarray(self.in_right.T))

    @cached_property
    def right_ann_bc(self):
        return self.impl.least_yab_eq_b(self.mul, self.rsub)

    @cached_property
    def left_ann_bc(self):
        return self.impl.least_cay_eq_c(self.mul, self.lsub)

    @cached_property
    def regular(self) -> np.ndarray:
        """Mask of regular elements (``x y x == x`` solvable)."""
        m = self.mul
        xyx = m[m, np.arange(self.n)[:, None]]  # [x, y] -> (x*y)*x
        return (xyx == np.arange(self.n)[:, None]).any(axis=1)

    @cached_property
    def left_unit(self) -> np.ndarray:
        return (self.mul == self.ring.one_code).any(axis=0)

    @cached_property
    def right_unit(self) -> np.ndarray:
        return (self.mul == self.ring.one_code).any(axis=1)


@lru_cache(maxsize=16)
def bulk_for(ring: RingHandle) -> BulkTables:
    return BulkTables(ring)
