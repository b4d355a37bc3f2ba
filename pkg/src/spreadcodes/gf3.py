"""Exact arithmetic over GF(3): trit vectors and the extension fields GF(3^t).

Conventions used throughout the package:

  * a "trit" is a plain int in {0, 1, 2}, all scalar arithmetic is mod 3
  * TritVec is an immutable fixed-length vector of trits backed by a
    read-only uint8 numpy array
  * length-n vectors enumerate as little-endian base-3 integers,
    vec_index(v) = sum(v[k] * 3**k), so coordinate 0 is the fastest digit
  * GF(3^t) elements are residues modulo irreducible_poly(t), the
    lexicographically first monic irreducible of degree t (coefficients
    compared constant term first), which pins every construction down
    to a single reproducible choice
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

__all__ = [
    "TritVec",
    "dot",
    "vec_index",
    "index_vec",
    "all_vectors",
    "pow3",
    "dot_table",
    "irreducible_poly",
    "ExtFieldElem",
]


@lru_cache(maxsize=None)
def pow3(n: int) -> np.ndarray:
    """Read-only int64 array [1, 3, 9, ..., 3**(n-1)]."""
    p = 3 ** np.arange(n, dtype=np.int64)
    p.flags.writeable = False
    return p


class TritVec:
    """Immutable vector over GF(3).

    Supports +, -, unary minus and multiplication by an int scalar, all
    coordinatewise mod 3. Hashable, so vectors can key dicts and sets.
    """

    __slots__ = ("_digits",)

    def __init__(self, digits) -> None:
        arr = np.array(list(digits), dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("need a non-empty 1-d digit sequence")
        if arr.min() < 0 or arr.max() > 2:
            raise ValueError("digits must lie in {0, 1, 2}")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        self._digits = arr

    @classmethod
    def _from_raw(cls, arr: np.ndarray) -> "TritVec":
        # internal: arr is already uint8 with entries in {0,1,2}
        v = object.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        arr.flags.writeable = False
        v._digits = arr
        return v

    @classmethod
    def zeros(cls, n: int) -> "TritVec":
        return cls._from_raw(np.zeros(n, dtype=np.uint8))

    @property
    def array(self) -> np.ndarray:
        """The underlying read-only uint8 array."""
        return self._digits

    @property
    def weight(self) -> int:
        """Number of nonzero coordinates."""
        return int(np.count_nonzero(self._digits))

    @property
    def support(self) -> tuple[int, ...]:
        """Sorted coordinates where the vector is nonzero."""
        return tuple(int(i) for i in np.flatnonzero(self._digits))

    def __len__(self) -> int:
        return self._digits.size

    def __iter__(self):
        return (int(d) for d in self._digits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TritVec):
            return NotImplemented
        return self._digits.size == other._digits.size and bool(
            np.array_equal(self._digits, other._digits)
        )

    def __hash__(self) -> int:
        return hash((self._digits.size, self._digits.tobytes()))

    def __add__(self, other: "TritVec") -> "TritVec":
        self._check_len(other)
        return TritVec._from_raw((self._digits + other._digits) % 3)

    def __sub__(self, other: "TritVec") -> "TritVec":
        self._check_len(other)
        return TritVec._from_raw((self._digits + 3 - other._digits) % 3)

    def __neg__(self) -> "TritVec":
        return TritVec._from_raw((3 - self._digits) % 3)

    def __mul__(self, c: int) -> "TritVec":
        if not isinstance(c, int):
            return NotImplemented
        return TritVec._from_raw((self._digits * (c % 3)) % 3)

    __rmul__ = __mul__

    def _check_len(self, other: "TritVec") -> None:
        if not isinstance(other, TritVec) or len(other) != len(self):
            raise ValueError("length mismatch")

    def __repr__(self) -> str:
        return f"TritVec({tuple(int(d) for d in self._digits)})"


def dot(u: TritVec, v: TritVec) -> int:
    """Standard inner product u.v mod 3."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return int(u.array.astype(np.int64) @ v.array) % 3


def vec_index(v: TritVec) -> int:
    """Little-endian base-3 integer of v, in [0, 3**len(v))."""
    return int(v.array @ pow3(len(v)))


def index_vec(i: int, n: int) -> TritVec:
    """Inverse of vec_index for length n."""
    if not 0 <= i < 3**n:
        raise ValueError(f"index {i} out of range for length {n}")
    return TritVec._from_raw(((i // pow3(n)) % 3).astype(np.uint8))


@lru_cache(maxsize=None)
def all_vectors(n: int) -> np.ndarray:
    """Read-only (3**n, n) uint8 array of every vector, row k = index_vec(k, n)."""
    m = ((np.arange(3**n, dtype=np.int64)[:, None] // pow3(n)[None, :]) % 3).astype(
        np.uint8
    )
    m.flags.writeable = False
    return m


@lru_cache(maxsize=2)
def dot_table(n: int) -> np.ndarray:
    """Read-only (3**n, 3**n) uint8 Gram table: entry [i, j] = <vec i, vec j> mod 3."""
    v = all_vectors(n).astype(np.int16)
    d = ((v @ v.T) % 3).astype(np.uint8)
    d.flags.writeable = False
    return d


# ---------------------------------------------------------------------------
# GF(3^t)


def _poly_mod(num, den) -> list[int]:
    # remainder of num by monic den, coefficients low degree first
    num = [c % 3 for c in num]
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            for j in range(dd + 1):
                num[k - dd + j] = (num[k - dd + j] - c * den[j]) % 3
    return num[:dd]


def _is_irreducible(poly) -> bool:
    t = len(poly) - 1
    if t == 1:
        return True
    for d in range(1, t // 2 + 1):
        for tail in itertools.product(range(3), repeat=d):
            if not any(_poly_mod(poly, tail + (1,))):
                return False
    return True


@lru_cache(maxsize=None)
def irreducible_poly(t: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree t over GF(3).

    Returned low degree first with leading coefficient 1 (length t + 1).
    Candidates are compared by their coefficient tuple, constant term
    first, e.g. t=2 gives x^2 + 1. Supported for 1 <= t <= 8.
    """
    if not 1 <= t <= 8:
        raise ValueError(f"degree {t} outside supported range 1..8")
    for tail in itertools.product(range(3), repeat=t):
        poly = tail + (1,)
        if _is_irreducible(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


class ExtFieldElem:
    """Element of GF(3^t), a residue modulo irreducible_poly(t).

    Coefficients are stored low degree first. The index of an element is
    the base-3 integer of its coefficient vector, matching vec_index, so
    field elements and trit vectors of length t enumerate identically.
    """

    __slots__ = ("t", "coeffs")

    def __init__(self, t: int, coeffs) -> None:
        cs = tuple(int(c) % 3 for c in coeffs)
        if len(cs) != t:
            raise ValueError(f"expected {t} coefficients, got {len(cs)}")
        self.t = t
        self.coeffs = cs

    @classmethod
    def zero(cls, t: int) -> "ExtFieldElem":
        return cls(t, (0,) * t)

    @classmethod
    def one(cls, t: int) -> "ExtFieldElem":
        return cls(t, (1,) + (0,) * (t - 1))

    @classmethod
    def from_index(cls, t: int, i: int) -> "ExtFieldElem":
        if not 0 <= i < 3**t:
            raise ValueError(f"index {i} out of range for GF(3^{t})")
        return cls(t, ((i // 3**k) % 3 for k in range(t)))

    @property
    def index(self) -> int:
        return sum(c * 3**k for k, c in enumerate(self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtFieldElem):
            return NotImplemented
        return self.t == other.t and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.t, self.coeffs))

    def _coerce(self, other) -> "ExtFieldElem":
        if not isinstance(other, ExtFieldElem) or other.t != self.t:
            raise ValueError("mixed field degrees")
        return other

    def __add__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        other = self._coerce(other)
        return ExtFieldElem(self.t, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        other = self._coerce(other)
        return ExtFieldElem(self.t, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ExtFieldElem":
        return ExtFieldElem(self.t, (-c for c in self.coeffs))

    def __mul__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        other = self._coerce(other)
        t = self.t
        prod = [0] * (2 * t - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % 3
        mod = irreducible_poly(t)
        for k in range(2 * t - 2, t - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(t):
                    prod[k - t + j] = (prod[k - t + j] - c * mod[j]) % 3
        return ExtFieldElem(t, prod[:t])

    def __pow__(self, e: int) -> "ExtFieldElem":
        if e < 0:
            raise ValueError("negative exponents not supported")
        out = ExtFieldElem.one(self.t)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self) -> str:
        return f"ExtFieldElem(t={self.t}, coeffs={self.coeffs})"
