"""Independent brute-force arithmetic for small rings.

Nothing here imports the package: elements are plain ints (zmod) or tuples of
entries (mat, row-major), and every question is answered by exhaustive loops.
Codes follow the documented encoding: residue for zmod; base-n digits of the
row-major entries, first entry most significant, for mat.
"""

from itertools import product


class Brute:
    def __init__(self, n, k=None):
        self.n, self.k = n, k
        if k is None:
            self.elems = list(range(n))
        else:
            self.elems = list(product(range(n), repeat=k * k))
        self.size = len(self.elems)
        self.index = {e: i for i, e in enumerate(self.elems)}
        self.zero = self.index[self.elems[0]]
        if k is None:
            one = 1 % n
        else:
            one = tuple(1 if i == j else 0 for i in range(k) for j in range(k))
        self.one = self.index[one]
        self.mul = [[self._mul(x, y) for y in range(self.size)] for x in range(self.size)]
        self.add = [[self._add(x, y) for y in range(self.size)] for x in range(self.size)]
        self.star = [self._star(x) for x in range(self.size)]

    def _mul(self, i, j):
        x, y, n, k = self.elems[i], self.elems[j], self.n, self.k
        if k is None:
            return x * y % n
        out = tuple(sum(x[r * k + m] * y[m * k + c] for m in range(k)) % n
                    for r in range(k) for c in range(k))
        return self.index[out]

    def _add(self, i, j):
        x, y, n = self.elems[i], self.elems[j], self.n
        if self.k is None:
            return (x + y) % n
        return self.index[tuple((p + q) % n for p, q in zip(x, y))]

    def _star(self, i):
        if self.k is None:
            return i
        x, k = self.elems[i], self.k
        return self.index[tuple(x[c * k + r] for r in range(k) for c in range(k))]

    def m(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul[out][x]
        return out

    def R(self):
        return range(self.size)

    def left_ideal(self, g):
        return {self.mul[r][g] for r in self.R()}

    def right_ideal(self, g):
        return {self.mul[g][r] for r in self.R()}

    def rann(self, g):
        return {y for y in self.R() if self.mul[g][y] == self.zero}

    def lann(self, g):
        return {y for y in self.R() if self.mul[y][g] == self.zero}

    def regular(self, x):
        return any(self.m(x, y, x) == x for y in self.R())

    # witness sets straight from the definitions
    def left_set(self, a, b, c):
        Rc = self.left_ideal(c)
        return [y for y in self.R() if y in Rc and self.m(y, a, b) == b]

    def right_set(self, a, b, c):
        bR = self.right_ideal(b)
        return [y for y in self.R() if y in bR and self.m(c, a, y) == c]

    def rann_set(self, a, b, c):
        cc = self.rann(c)
        return [y for y in self.R() if cc <= self.rann(y) and self.m(y, a, b) == b]

    def lann_set(self, a, b, c):
        bb = self.lann(b)
        return [y for y in self.R() if bb <= self.lann(y) and self.m(c, a, y) == c]

    def drazin_set(self, a, b, c):
        out = []
        for y in self.R():
            if self.m(y, a, b) != b or self.m(c, a, y) != c:
                continue
            if any(self.m(b, r, y) == y for r in self.R()) and any(self.m(y, r, c) == y for r in self.R()):
                out.append(y)
        return out

    def hybrid_set(self, a, b, c):
        bR, cc = self.right_ideal(b), self.rann(c)
        return [y for y in self.R()
                if self.m(y, a, y) == y and self.right_ideal(y) == bR and self.rann(y) == cc]

    def ann_set(self, a, b, c):
        bb, cc = self.lann(b), self.rann(c)
        return [y for y in self.R()
                if self.m(y, a, y) == y and self.lann(y) == bb and self.rann(y) == cc]

    def penrose(self, a, delta):
        out = []
        for y in self.R():
            ay, ya = self.mul[a][y], self.mul[y][a]
            ok = ((1 not in delta or self.mul[ay][a] == a)
                  and (2 not in delta or self.m(y, a, y) == y)
                  and (3 not in delta or self.star[ay] == ay)
                  and (4 not in delta or self.star[ya] == ya))
            if ok:
                out.append(y)
        return out

    def left_units(self):
        return {x for x in self.R() if any(self.mul[t][x] == self.one for t in self.R())}

    def right_units(self):
        return {x for x in self.R() if any(self.mul[x][t] == self.one for t in self.R())}

    def power(self, a, k):
        out = self.one
        for _ in range(k):
            out = self.mul[out][a]
        return out
