"""Smith normal form over the integers and linear congruence systems mod n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np


def _identity(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def smith_normal_form(A: Sequence[Sequence[int]]):
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries and each diagonal entry divides the next.  Plain Python integers
    throughout, so there is no overflow.
    """
    D = [[int(v) for v in row] for row in A]
    m = len(D)
    k = len(D[0]) if m else 0
    if any(len(row) != k for row in D):
        raise ValueError("ragged matrix")
    U, V = _identity(m), _identity(k)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row[dst] += f * row[src]
        for M in (D, U):
            M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, f):
        for M in (D, V):
            for row in M:
                row[dst] += f * row[src]

    for t in range(min(m, k)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, k) if D[i][j]]
            if not nonzero:
                return U, D, V
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, k):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            # pivot must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, k) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            for row in D[t:t + 1] + U[t:t + 1]:
                row[:] = [-v for v in row]
    return U, D, V


@dataclass(frozen=True)
class SolutionCoset:
    """All solutions of ``A x == v (mod n)``: ``particular + span(generators)``.

    ``sizes[i]`` is the order of ``generators[i]`` as a free step, so the coset
    holds exactly ``prod(sizes)`` vectors (not necessarily distinct when
    generators interact, which never happens for Smith-derived bases).
    """

    particular: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    modulus: int

    def count(self) -> int:
        out = 1
        for s in self.sizes:
            out *= s
        return out

    def all(self) -> np.ndarray:
        """Every solution as rows of an int64 array."""
        n = self.modulus
        sols = np.array([self.particular], dtype=np.int64)
        for gen, size in zip(self.generators, self.sizes):
            steps = np.arange(size, dtype=np.int64)[:, None] * np.array(gen, dtype=np.int64)
            sols = ((sols[:, None, :] + steps[None, :, :]) % n).reshape(-1, len(self.particular))
        return sols


class LinearSystemMod:
    """``A x == v (mod n)`` with the Smith decomposition of ``A`` cached."""

    def __init__(self, A: Sequence[Sequence[int]], n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.A = [[int(v) % n for v in row] for row in A]
        self.n = n
        self.rows = len(self.A)
        self.cols = len(self.A[0]) if self.rows else 0
        self.U, D, self.V = smith_normal_form(self.A)
        self.diag = [D[i][i] if i < self.cols else 0 for i in range(self.rows)]

    def coset(self, v: Sequence[int]) -> SolutionCoset | None:
        n = self.n
        if len(v) != self.rows:
            raise ValueError(f"right-hand side has length {len(v)}, expected {self.rows}")
        w = [sum(u * x for u, x in zip(row, v)) % n for row in self.U]
        y0 = [0] * self.cols
        free: list[tuple[int, int]] = []  # (column index of y, step count)
        for i in range(self.rows):
            d = self.diag[i] % n
            if i >= self.cols:
                if w[i]:
                    return None
                continue
            g = gcd(d, n)
            if w[i] % g:
                return None
            if d == 0:
                y0[i] = 0
            else:
                m = n // g
                y0[i] = (w[i] // g) * pow(d // g, -1, m) % m if m > 1 else 0
            if g > 1:
                free.append((i, g))
        for j in range(self.rows, self.cols):
            free.append((j, n))
        V = self.V
        particular = tuple(sum(V[r][c] * y0[c] for c in range(self.cols)) % n for r in range(self.cols))
        generators, sizes = [], []
        for j, g in free:
            step = n // g
            generators.append(tuple(V[r][j] * step % n for r in range(self.cols)))
            sizes.append(g)
        return SolutionCoset(particular, tuple(generators), tuple(sizes), n)

    def solve(self, v: Sequence[int]) -> list[int] | None:
        coset = self.coset(v)
        return None if coset is None else list(coset.particular)


def solve_linear_mod(A: Sequence[Sequence[int]], v: Sequence[int], n: int) -> list[int] | None:
    """Some ``x`` with ``A x == v (mod n)``, or ``None``."""
    if len(A) != len(v):
        raise ValueError(f"A has {len(A)} rows but v has length {len(v)}")
    if len(A) and any(len(row) != len(A[0]) for row in A):
        raise ValueError("ragged matrix")
    x = LinearSystemMod(A, n).solve(v)
    if x is not None:
        for row, target in zip(A, v):
            assert sum(a * b for a, b in zip(row, x)) % n == target % n
    return x
