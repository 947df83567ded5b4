"""Finite ring carriers: Z_n, k x k matrices over Z_n, and binary direct products.

Elements are addressed by a canonical integer code in ``[0, |R|)``:

* ``zmod(n)``: the residue itself; one has code 1.
* ``mat(k, zmod(n))``: the row-major entry list read as base-n digits, first
  entry most significant, so code order is lexicographic order on entries.
* ``prod(L, R)``: ``code = left_code * |R| + right_code``.

All arithmetic is vectorized over numpy integer arrays of codes, so the same
routine serves scalar operations and whole-ring scans.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

import numpy as np

DEFAULT_CAP = 10_000
# rings up to this size keep nested-list tables for scalar add/mul
SCALAR_TABLE_LIMIT = 512


class RingError(ValueError):
    """Malformed ring spec, cap violation, or bad element literal."""


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


@dataclass(frozen=True)
class ZMod:
    n: int

    def __str__(self) -> str:
        return f"zmod:{self.n}"


@dataclass(frozen=True)
class Mat:
    k: int
    base: ZMod

    def __str__(self) -> str:
        return f"mat:{self.k}:{self.base}"


@dataclass(frozen=True)
class Prod:
    left: "RingSpec"
    right: "RingSpec"

    def __str__(self) -> str:
        return f"prod:({self.left};{self.right})"


RingSpec = Union[ZMod, Mat, Prod]


def cardinality_of(spec: RingSpec) -> int:
    if isinstance(spec, ZMod):
        return spec.n
    if isinstance(spec, Mat):
        return spec.base.n ** (spec.k * spec.k)
    if isinstance(spec, Prod):
        return cardinality_of(spec.left) * cardinality_of(spec.right)
    raise RingError(f"not a ring spec: {spec!r}")


def _check_spec(spec: RingSpec) -> None:
    if isinstance(spec, ZMod):
        if not isinstance(spec.n, int) or spec.n < 2:
            raise RingError(f"zmod modulus must be an integer >= 2, got {spec.n!r}")
    elif isinstance(spec, Mat):
        if not isinstance(spec.k, int) or spec.k < 1:
            raise RingError(f"matrix size must be an integer >= 1, got {spec.k!r}")
        if not isinstance(spec.base, ZMod):
            raise RingError("matrix rings are only supported over zmod")
        _check_spec(spec.base)
    elif isinstance(spec, Prod):
        _check_spec(spec.left)
        _check_spec(spec.right)
    else:
        raise RingError(f"not a ring spec: {spec!r}")


# -- text grammar ------------------------------------------------------------

_ZMOD_RE = re.compile(r"zmod:(\d+)")
_MAT_RE = re.compile(r"mat:(\d+):zmod:(\d+)")


def _split_top(text: str, sep: str = ";") -> list[str]:
    depth = 0
    parts, start = [], 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise RingError(f"unbalanced brackets in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise RingError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return parts


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``zmod:<n>``, ``mat:<k>:zmod:<n>`` or ``prod:(<spec>;<spec>)``."""
    text = text.strip()
    if m := _ZMOD_RE.fullmatch(text):
        spec: RingSpec = ZMod(int(m.group(1)))
    elif m := _MAT_RE.fullmatch(text):
        spec = Mat(int(m.group(1)), ZMod(int(m.group(2))))
    elif text.startswith("prod:(") and text.endswith(")"):
        parts = _split_top(text[len("prod:("):-1])
        if len(parts) != 2:
            raise RingError(f"prod needs exactly two factors: {text!r}")
        spec = Prod(parse_ring_spec(parts[0]), parse_ring_spec(parts[1]))
    else:
        raise RingError(f"unrecognised ring spec {text!r}")
    _check_spec(spec)
    return spec


def format_ring_spec(spec: RingSpec) -> str:
    return str(spec)


# -- ring handle ---------------------------------------------------------------


class RingHandle:
    """An immutable finite ring with identity and a fixed involution.

    The involution is the identity on ``zmod``, transpose on ``mat`` and
    componentwise on ``prod``.
    """

    def __init__(self, spec: RingSpec, cap: int = DEFAULT_CAP):
        _check_spec(spec)
        size = cardinality_of(spec)
        if size > cap:
            raise RingError(f"{spec} has {size} elements, above the cap of {cap}")
        self.spec = spec
        self.cardinality = size
        if isinstance(spec, Prod):
            self._left = RingHandle(spec.left, cap)
            self._right = RingHandle(spec.right, cap)
        if isinstance(spec, Mat):
            n, k = spec.base.n, spec.k
            self._n, self._k = n, k
            self._weights = n ** np.arange(k * k - 1, -1, -1, dtype=np.int64)

    # identity and equality are by spec, so handles built twice compare equal
    def __eq__(self, other: object) -> bool:
        return other is self or (isinstance(other, RingHandle) and other.spec == self.spec)

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"RingHandle({self.spec})"

    def __len__(self) -> int:
        return self.cardinality

    @property
    def name(self) -> str:
        return str(self.spec)

    # -- code level, vectorized ------------------------------------------------

    @cached_property
    def zero_code(self) -> int:
        return 0

    @cached_property
    def one_code(self) -> int:
        spec = self.spec
        if isinstance(spec, ZMod):
            return 1
        if isinstance(spec, Mat):
            return int(self._encode_mat(np.eye(spec.k, dtype=np.int64)))
        return self._left.one_code * self._right.cardinality + self._right.one_code

    def codes(self) -> np.ndarray:
        return np.arange(self.cardinality, dtype=np.int64)

    def _decode_mat(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        digits = (x[..., None] // self._weights) % self._n
        return digits.reshape(x.shape + (self._k, self._k))

    def _encode_mat(self, m: np.ndarray):
        flat = np.asarray(m, dtype=np.int64) % self._n
        flat = flat.reshape(flat.shape[:-2] + (self._k * self._k,))
        return flat @ self._weights

    def _split(self, x):
        r = self._right.cardinality
        return x // r, x % r

    def _join(self, lo, ro):
        return lo * self._right.cardinality + ro

    def add_codes(self, x, y):
        spec = self.spec
        if isinstance(spec, ZMod):
            return (np.asarray(x) + np.asarray(y)) % spec.n
        if isinstance(spec, Mat):
            return self._encode_mat(self._decode_mat(x) + self._decode_mat(y))
        (xl, xr), (yl, yr) = self._split(np.asarray(x)), self._split(np.asarray(y))
        return self._join(self._left.add_codes(xl, yl), self._right.add_codes(xr, yr))

    def neg_codes(self, x):
        spec = self.spec
        if isinstance(spec, ZMod):
            return (-np.asarray(x)) % spec.n
        if isinstance(spec, Mat):
            return self._encode_mat(-self._decode_mat(x))
        xl, xr = self._split(np.asarray(x))
        return self._join(self._left.neg_codes(xl), self._right.neg_codes(xr))

    def mul_codes(self, x, y):
        spec = self.spec
        if isinstance(spec, ZMod):
            return (np.asarray(x, dtype=np.int64) * np.asarray(y, dtype=np.int64)) % spec.n
        if isinstance(spec, Mat):
            return self._encode_mat(self._decode_mat(x) @ self._decode_mat(y))
        (xl, xr), (yl, yr) = self._split(np.asarray(x)), self._split(np.asarray(y))
        return self._join(self._left.mul_codes(xl, yl), self._right.mul_codes(xr, yr))

    def star_codes(self, x):
        spec = self.spec
        if isinstance(spec, ZMod):
            return np.asarray(x) % spec.n
        if isinstance(spec, Mat):
            return self._encode_mat(np.swapaxes(self._decode_mat(x), -1, -2))
        xl, xr = self._split(np.asarray(x))
        return self._join(self._left.star_codes(xl), self._right.star_codes(xr))

    @cached_property
    def _scalar(self):
        """Nested-list add/mul tables for fast scalar arithmetic on small rings."""
        if self.cardinality > SCALAR_TABLE_LIMIT:
            return None
        c = self.codes()
        add = np.asarray(self.add_codes(c[:, None], c[None, :])).tolist()
        mul = np.asarray(self.mul_codes(c[:, None], c[None, :])).tolist()
        return add, mul

    def add_code(self, x: int, y: int) -> int:
        t = self._scalar
        return t[0][x][y] if t is not None else int(self.add_codes(x, y))

    def mul_code(self, x: int, y: int) -> int:
        t = self._scalar
        return t[1][x][y] if t is not None else int(self.mul_codes(x, y))

    def pow_code(self, x: int, m: int) -> int:
        if m < 0:
            raise ValueError("negative exponent")
        result, base = self.one_code, int(x)
        while m:
            if m & 1:
                result = self.mul_code(result, base)
            base = self.mul_code(base, base)
            m >>= 1
        return result

    # -- structured views --------------------------------------------------------

    def decode(self, code: int):
        """Structured view: residue, row-major nested list, or pair."""
        code = self._check_code(code)
        spec = self.spec
        if isinstance(spec, ZMod):
            return code
        if isinstance(spec, Mat):
            return self._decode_mat(code).tolist()
        lo, ro = self._split(code)
        return (self._left.decode(int(lo)), self._right.decode(int(ro)))

    def encode(self, value) -> int:
        spec = self.spec
        if isinstance(spec, ZMod):
            return int(value) % spec.n
        if isinstance(spec, Mat):
            m = np.asarray(value, dtype=np.int64)
            if m.shape != (spec.k, spec.k):
                raise RingError(f"expected a {spec.k}x{spec.k} matrix, got shape {m.shape}")
            return int(self._encode_mat(m))
        lv, rv = value
        return int(self._join(self._left.encode(lv), self._right.encode(rv)))

    def _check_code(self, code) -> int:
        code = int(code)
        if not 0 <= code < self.cardinality:
            raise RingError(f"code {code} out of range for {self.spec}")
        return code

    def format_code(self, code: int) -> str:
        code = self._check_code(code)
        spec = self.spec
        if isinstance(spec, ZMod):
            return str(code)
        if isinstance(spec, Mat):
            rows = self._decode_mat(code).tolist()
            return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in rows) + "]"
        lo, ro = self._split(code)
        return f"({self._left.format_code(int(lo))};{self._right.format_code(int(ro))})"

    def parse_code(self, text: str) -> int:
        text = text.strip()
        spec = self.spec
        try:
            if isinstance(spec, ZMod):
                return int(text) % spec.n
            if isinstance(spec, Mat):
                return self.encode(json.loads(text))
        except (ValueError, TypeError) as exc:
            raise RingError(f"bad element literal {text!r} for {spec}: {exc}") from None
        if not (text.startswith("(") and text.endswith(")")):
            raise RingError(f"product element literal must look like (x;y), got {text!r}")
        parts = _split_top(text[1:-1])
        if len(parts) != 2:
            raise RingError(f"product element literal needs two components: {text!r}")
        return int(self._join(self._left.parse_code(parts[0]), self._right.parse_code(parts[1])))

    # -- element level -----------------------------------------------------------

    def __call__(self, value) -> "Element":
        """Element from a structured value (int, nested list, or pair)."""
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatchError(f"{value!r} is not in {self.spec}")
            return value
        return Element(self, self.encode(value))

    def element(self, code: int) -> "Element":
        return Element(self, self._check_code(code))

    def parse(self, text: str) -> "Element":
        return Element(self, self.parse_code(text))

    @property
    def zero(self) -> "Element":
        return Element(self, self.zero_code)

    @property
    def one(self) -> "Element":
        return Element(self, self.one_code)

    def enumerate(self) -> Iterator["Element"]:
        for code in range(self.cardinality):
            yield Element(self, code)

    def add(self, x: "Element", y: "Element") -> "Element":
        return x + y

    def mul(self, x: "Element", y: "Element") -> "Element":
        return x * y

    def neg(self, x: "Element") -> "Element":
        return -x

    def star(self, x: "Element") -> "Element":
        return x.star()

    def pow(self, x: "Element", m: int) -> "Element":
        return x**m


def build_ring(spec: RingSpec | str, cap: int = DEFAULT_CAP) -> RingHandle:
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return RingHandle(spec, cap)


@dataclass(frozen=True)
class Element:
    ring: RingHandle
    code: int

    def _other(self, other: "Element") -> int:
        if not isinstance(other, Element):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine elements of {self.ring.spec} and {other.ring.spec}")
        return other.code

    def __add__(self, other: "Element") -> "Element":
        oc = self._other(other)
        if oc is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.add_code(self.code, oc))

    def __sub__(self, other: "Element") -> "Element":
        oc = self._other(other)
        if oc is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.add_code(self.code, int(self.ring.neg_codes(oc))))

    def __mul__(self, other: "Element") -> "Element":
        oc = self._other(other)
        if oc is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.mul_code(self.code, oc))

    def __neg__(self) -> "Element":
        return Element(self.ring, int(self.ring.neg_codes(self.code)))

    def __pow__(self, m: int) -> "Element":
        return Element(self.ring, self.ring.pow_code(self.code, m))

    def star(self) -> "Element":
        return Element(self.ring, int(self.ring.star_codes(self.code)))

    @property
    def value(self):
        return self.ring.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == self.ring.zero_code

    def __str__(self) -> str:
        return self.ring.format_code(self.code)

    def __repr__(self) -> str:
        return f"<{self.ring.spec} {self}>"


def same_ring(*elements: Element) -> RingHandle:
    """Common ring of the operands; raises on a mix."""
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring != ring:
            raise RingMismatchError(f"mixed rings: {ring.spec} and {e.ring.spec}")
    return ring


# -- classical one-sided units ---------------------------------------------------


def left_invertible(x: Element) -> Element | None:
    """Least-code ``t`` with ``t*x == 1``."""
    ring = x.ring
    hits = np.flatnonzero(ring.mul_codes(ring.codes(), x.code) == ring.one_code)
    return ring.element(hits[0]) if hits.size else None


def right_invertible(x: Element) -> Element | None:
    """Least-code ``t`` with ``x*t == 1``."""
    ring = x.ring
    hits = np.flatnonzero(ring.mul_codes(x.code, ring.codes()) == ring.one_code)
    return ring.element(hits[0]) if hits.size else None


def invertible(x: Element) -> Element | None:
    t = left_invertible(x)
    if t is None or (x * t).code != x.ring.one_code:
        return None
    return t
