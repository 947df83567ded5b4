"""Per-ring evaluation context for claim predicates.

Witness sets here are computed straight from the definitions using the bulk
kernel tables, independently of the division-based criteria in
:mod:`bcinv.inverses`.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from ..kernels import BulkTables, bulk_for
from ..ring import Element, RingHandle, build_ring


class Context:
    def __init__(self, ring: RingHandle, bulk: BulkTables | None = None):
        self.ring = ring
        self.bulk = bulk or bulk_for(ring)
        self.mul = self.bulk.mul
        self.n = ring.cardinality
        self.codes = np.arange(self.n)
        self.one = ring.one_code
        self.els = [ring.element(i) for i in range(self.n)]
        self.star = np.asarray(ring.star_codes(self.codes), dtype=np.int64)
        self.neg = np.asarray(ring.neg_codes(self.codes), dtype=np.int64)

    def e(self, code: int) -> Element:
        return self.els[code]

    def m(self, *codes: int) -> int:
        out = codes[0]
        for c in codes[1:]:
            out = int(self.mul[out, c])
        return out

    def add(self, x, y):
        return np.asarray(self.ring.add_codes(x, y))

    def power(self, a: int, k: int) -> int:
        return self.ring.pow_code(a, k)

    # -- definitional witness masks over y ---------------------------------

    def yab(self, a: int, b: int) -> np.ndarray:
        return self.mul[self.mul[:, a], b] == b

    def cay(self, a: int, c: int) -> np.ndarray:
        return self.mul[self.mul[c, a], :] == c

    def yay(self, a: int) -> np.ndarray:
        return self.mul[self.mul[:, a], self.codes] == self.codes

    def left_set(self, a, b, c) -> np.ndarray:
        return self.bulk.in_left[:, c] & self.yab(a, b)

    def right_set(self, a, b, c) -> np.ndarray:
        return self.bulk.in_right[:, b] & self.cay(a, c)

    def rann_set(self, a, b, c) -> np.ndarray:
        return self.bulk.rsub[c, :] & self.yab(a, b)

    def lann_set(self, a, b, c) -> np.ndarray:
        return self.bulk.lsub[b, :] & self.cay(a, c)

    def hybrid_set(self, a, b, c) -> np.ndarray:
        B = self.bulk
        return (self.yay(a) & B.in_right[:, b] & B.in_right[b, :]
                & B.rsub[:, c] & B.rsub[c, :])

    def ann_set(self, a, b, c) -> np.ndarray:
        B = self.bulk
        return self.yay(a) & B.lsub[b, :] & B.lsub[:, b] & B.rsub[:, c] & B.rsub[c, :]

    def drazin_def_set(self, a, b, c) -> np.ndarray:
        """``y ∈ bRy ∩ yRc``, ``y a b == b``, ``c a y == c``."""
        mul, codes = self.mul, self.codes
        mask = self.yab(a, b) & self.cay(a, c)
        if not mask.any():
            return mask
        in_bry = (mul[mul[b, :][:, None], codes[None, :]] == codes[None, :]).any(axis=0)
        in_yrc = (mul[mul, c] == codes[:, None]).any(axis=1)
        return mask & in_bry & in_yrc

    def right_ann_mask(self, g: int) -> np.ndarray:
        """``g°`` as a mask."""
        return self.mul[g, :] == 0

    def left_ann_mask(self, g: int) -> np.ndarray:
        """``°g`` as a mask."""
        return self.mul[:, g] == 0

    def delta_set(self, a: int, delta) -> np.ndarray:
        mul, codes, star = self.mul, self.codes, self.star
        ay, ya = mul[a, :], mul[:, a]
        mask = np.ones(self.n, dtype=bool)
        if 1 in delta:
            mask &= mul[ay, a] == a
        if 2 in delta:
            mask &= self.yay(a)
        if 3 in delta:
            mask &= star[ay] == ay
        if 4 in delta:
            mask &= star[ya] == ya
        return mask

    # -- ideal sums and intersections ------------------------------------------

    def only_zero(self, mask: np.ndarray) -> bool:
        return not mask[1:].any()

    def one_in_left_sum(self, g: int, h: int) -> bool:
        """``1 ∈ R g + °h``, i.e. ``R == R g + °h``."""
        xs = np.unique(self.mul[:, g])
        rest = self.add(self.one, self.neg[xs])
        return bool(self.left_ann_mask(h)[rest].any())

    def one_in_right_sum(self, g: int, h: int) -> bool:
        """``1 ∈ g R + h°``, i.e. ``R == g R + h°``."""
        xs = np.unique(self.mul[g, :])
        rest = self.add(self.one, self.neg[xs])
        return bool(self.right_ann_mask(h)[rest].any())

    # -- cached whole-ring facts ---------------------------------------------------

    @cached_property
    def two_sided_table(self) -> np.ndarray:
        """``[a, b, c]`` -> the (b,c)-inverse code, or -1."""
        n = self.n
        out = np.full((n, n, n), -1, dtype=np.int64)
        lmask = self.bulk.left_bc[0] >= 0
        rmask = self.bulk.right_bc[0] >= 0
        for a, b, c in zip(*np.nonzero(lmask & rmask)):
            both = np.flatnonzero(self.left_set(a, b, c) & self.right_set(a, b, c))
            if both.size:
                out[a, b, c] = both[0]
        return out

    def exists(self, kind: str, a: int, b: int, c: int) -> bool:
        return bool(getattr(self.bulk, kind)[0][a, b, c] >= 0)


@lru_cache(maxsize=16)
def context_for(spec: str) -> Context:
    return Context(build_ring(spec))
