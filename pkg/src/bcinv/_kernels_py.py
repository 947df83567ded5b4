"""Pure numpy implementations of the bulk table kernels.

Every function takes the full multiplication table ``mul`` (int32, shape
``(n, n)``, ``mul[x, y] == code of x*y``) and returns fresh arrays.  The
compiled module ``_kernels`` exports the same names with the same results.
"""

import numpy as np


def left_ideal_matrix(mul):
    """``M[x, g] == 1`` iff ``x`` lies in ``R g``."""
    n = mul.shape[0]
    M = np.zeros((n, n), dtype=np.uint8)
    M[mul, np.arange(n)[None, :]] = 1
    return M


def right_ideal_matrix(mul):
    """``M[x, g] == 1`` iff ``x`` lies in ``g R``."""
    n = mul.shape[0]
    M = np.zeros((n, n), dtype=np.uint8)
    M[mul, np.arange(n)[:, None]] = 1
    return M


def right_ann_subset(mul):
    """``S[g1, g2] == 1`` iff ``g1° ⊆ g2°``."""
    zero = (mul == 0).astype(np.int32)
    nonzero = 1 - zero
    # count x with g1 x == 0 but g2 x != 0
    return (zero @ nonzero.T == 0).astype(np.uint8)


def left_ann_subset(mul):
    """``S[g1, g2] == 1`` iff ``°g1 ⊆ °g2``."""
    zero = (mul == 0).astype(np.int32)
    nonzero = 1 - zero
    return (zero.T @ nonzero == 0).astype(np.uint8)


def _least_and_count(M):
    has = M.any(axis=1)
    least = np.where(has, M.argmax(axis=1), -1).astype(np.int32)
    return least, M.sum(axis=1, dtype=np.int32)


def least_yab_eq_b(mul, mask):
    """Least ``y`` with ``mask[c, y]`` and ``y*a*b == b``, for all ``(a, b, c)``.

    Returns ``(least, count)``, both int32 of shape ``(n, n, n)`` indexed
    ``[a, b, c]``; ``least`` is ``-1`` where no ``y`` qualifies.
    """
    n = mul.shape[0]
    mask = mask.astype(bool)
    least = np.empty((n, n, n), dtype=np.int32)
    count = np.empty((n, n, n), dtype=np.int32)
    for a in range(n):
        ya = mul[:, a]
        for b in range(n):
            ok = mul[ya, b] == b
            least[a, b], count[a, b] = _least_and_count(mask & ok[None, :])
    return least, count


def least_cay_eq_c(mul, mask):
    """Least ``y`` with ``mask[b, y]`` and ``c*a*y == c``, for all ``(a, b, c)``.

    Same shape and indexing as :func:`least_yab_eq_b`.
    """
    n = mul.shape[0]
    mask = mask.astype(bool)
    least = np.empty((n, n, n), dtype=np.int32)
    count = np.empty((n, n, n), dtype=np.int32)
    for c in range(n):
        for a in range(n):
            ok = mul[mul[c, a], :] == c
            least[a, :, c], count[a, :, c] = _least_and_count(mask & ok[None, :])
    return least, count
