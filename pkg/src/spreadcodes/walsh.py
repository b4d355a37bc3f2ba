"""Walsh transforms of GF(3)-valued functions, exact over the Eisenstein integers.

The transform of f at w is sum over all x of zeta^(f(x) - w.x) with
zeta = exp(2*pi*i/3). Every value lies in Z[zeta], so it is stored as an
integer pair a + b*zeta and never touches floating point. Real parts are
always compared through twice_re = 2a - b, which is an integer even when
the real part itself is a half-integer.

For the two spread families the transform depends on w only through a
three-way classification (w zero, w in the dual of a chosen member, w in
no chosen dual), and closed forms for each case are provided next to the
brute-force sum so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .gf3 import TritVec, all_vectors, dot_table, vec_index
from .spread_functions import SpreadFunction

__all__ = [
    "Eisenstein",
    "check_family_params",
    "SpectrumCase",
    "walsh_transform",
    "WalshSpectrum",
    "walsh_spectrum",
    "classify",
    "closed_twice_re",
    "closed_walsh_value",
    "closed_spectrum",
]


class Eisenstein:
    """Exact integer combination a + b*zeta, zeta a primitive cube root of 1.

    zeta^2 = -1 - zeta keeps products in the same form. norm() is the
    squared complex modulus a^2 - a*b + b^2; twice_re is 2a - b.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int) -> None:
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def zeta_pow(cls, e: int) -> "Eisenstein":
        """zeta**e for any int e."""
        return cls(*((1, 0), (0, 1), (-1, -1))[e % 3])

    def __add__(self, other: "Eisenstein") -> "Eisenstein":
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Eisenstein") -> "Eisenstein":
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other: "Eisenstein") -> "Eisenstein":
        if not isinstance(other, Eisenstein):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    def conj(self) -> "Eisenstein":
        """Complex conjugate: zeta -> zeta^2."""
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        """Squared modulus, a nonnegative integer."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def twice_re(self) -> int:
        """Twice the real part, always an integer."""
        return 2 * self.a - self.b

    def __eq__(self, other) -> bool:
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Eisenstein({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}z"


@dataclass(frozen=True)
class SpectrumCase:
    """Which closed-form case a vector w falls into for a family function.

    kind is "zero", "outside" (no chosen dual contains w) or "in_dual"
    with the owning member index. side says whether that member carries
    the value 1 ("first") or 2 ("second"); it is set only for the
    ternary family, whose two halves have conjugate spectra.
    """

    kind: str
    member: int | None = None
    side: str | None = None

    @property
    def label(self) -> str:
        if self.kind != "in_dual":
            return self.kind
        return f"dual:{self.member}" + (f":{self.side}" if self.side else "")


def walsh_transform(f: SpreadFunction, w: TritVec) -> Eisenstein:
    """Exact transform value at w by direct summation over all 3^n inputs."""
    if len(w) != f.n:
        raise ValueError("length mismatch")
    dots = (all_vectors(f.n).astype(np.int64) @ w.array.astype(np.int64)) % 3
    e = (f.table.astype(np.int64) - dots) % 3
    c = np.bincount(e, minlength=3)
    return Eisenstein(int(c[0] - c[2]), int(c[1] - c[2]))


class WalshSpectrum:
    """Transform values at every w, in vec_index order.

    Stored as an (3^n, 2) int64 array of (a, b) pairs; item access
    returns Eisenstein values.
    """

    __slots__ = ("n", "ab")

    def __init__(self, n: int, ab: np.ndarray) -> None:
        ab = np.asarray(ab, dtype=np.int64)
        if ab.shape != (3**n, 2):
            raise ValueError("expected one (a, b) pair per vector")
        ab.flags.writeable = False
        self.n = n
        self.ab = ab

    def __len__(self) -> int:
        return self.ab.shape[0]

    def __getitem__(self, i: int) -> Eisenstein:
        return Eisenstein(int(self.ab[i, 0]), int(self.ab[i, 1]))

    def twice_re(self) -> np.ndarray:
        """int64 array of 2a - b per vector."""
        return 2 * self.ab[:, 0] - self.ab[:, 1]

    def norms(self) -> np.ndarray:
        a, b = self.ab[:, 0], self.ab[:, 1]
        return a * a - a * b + b * b

    def total(self) -> Eisenstein:
        s = self.ab.sum(axis=0)
        return Eisenstein(int(s[0]), int(s[1]))


def walsh_spectrum(f: SpreadFunction, block: int = 4096) -> WalshSpectrum:
    """Brute-force spectrum: every value by direct summation.

    Works blockwise over w against the cached all-pairs dot table; the
    result does not depend on the block size.
    """
    n = f.n
    size = 3**n
    d = dot_table(n)
    ft = f.table.astype(np.int16)
    ab = np.empty((size, 2), dtype=np.int64)
    for start in range(0, size, block):
        stop = min(start + block, size)
        e = (ft[None, :] - d[start:stop].astype(np.int16)) % 3
        c1 = np.count_nonzero(e == 1, axis=1)
        c2 = np.count_nonzero(e == 2, axis=1)
        c0 = size - c1 - c2
        ab[start:stop, 0] = c0 - c2
        ab[start:stop, 1] = c1 - c2
    return WalshSpectrum(n, ab)


def _family_params(f: SpreadFunction) -> tuple[int, int, int]:
    if f.family not in ("char", "ternary"):
        raise ValueError("classification needs a char or ternary family function")
    if f.spread is None or not f.spread.is_full:
        raise ValueError("classification needs a complete spread")
    return f.n, f.spread.t, f.s


def classify(f: SpreadFunction, w: TritVec | int) -> SpectrumCase:
    """Closed-form case of w for a family function over a complete spread.

    Duals of the members of a complete spread partition the nonzero
    vectors, so every nonzero w has exactly one owning member.
    """
    _family_params(f)
    i = w if isinstance(w, int) else vec_index(w)
    if i == 0:
        return SpectrumCase("zero")
    owner = int(f.spread.dual_owner()[i])
    if owner < 0:
        raise AssertionError("complete spread must classify every vector")
    if owner not in f.indices:
        return SpectrumCase("outside")
    if f.family == "char":
        return SpectrumCase("in_dual", owner)
    side = "first" if f.indices.index(owner) < f.s else "second"
    return SpectrumCase("in_dual", owner, side)


def closed_twice_re(family: str, n: int, s: int, case: SpectrumCase) -> int:
    """Twice the real part of the transform, per family and case."""
    check_family_params(family, n, s)
    t = n // 2
    if family == "char":
        if case.kind == "zero":
            return 2 * 3**n - 3 * s * (3**t - 1)
        if case.kind == "outside":
            return 3 * s
        return -(3 ** (t + 1)) + 3 * s
    if case.kind == "zero":
        return 2 * 3**n - 6 * s * (3**t - 1)
    if case.kind == "outside":
        return 6 * s
    return -(3 ** (t + 1)) + 6 * s


def closed_walsh_value(family: str, n: int, s: int, case: SpectrumCase) -> Eisenstein:
    """Full Eisenstein transform value, per family and case."""
    check_family_params(family, n, s)
    t = n // 2
    q = 3**t
    if family == "char":
        if case.kind == "zero":
            return Eisenstein(3**n - q * s + s, s * (q - 1))
        if case.kind == "outside":
            return Eisenstein(s, -s)
        return Eisenstein(s - q, q - s)
    if case.kind == "zero":
        return Eisenstein(3**n - 3 * s * (q - 1), 0)
    if case.kind == "outside":
        return Eisenstein(3 * s, 0)
    if case.side not in ("first", "second"):
        raise ValueError("ternary in-dual case needs a side")
    # duals of value-1 members land on 3^t(z-1)+3s, value-2 on 3^t(z^2-1)+3s
    if case.side == "first":
        return Eisenstein(3 * s - q, q)
    return Eisenstein(3 * s - 2 * q, -q)


def check_family_params(family: str, n: int, s: int) -> None:
    if n % 2 or n < 2:
        raise ValueError("n must be even and at least 2")
    t = n // 2
    if family == "char":
        if not 1 <= s <= 3**t + 1:
            raise ValueError(f"s={s} outside 1..{3**t + 1}")
    elif family == "ternary":
        if not 1 <= s <= (3**t + 1) // 2:
            raise ValueError(f"s={s} outside 1..{(3**t + 1) // 2}")
    else:
        raise ValueError(f"unknown family {family!r}")


def closed_spectrum(f: SpreadFunction) -> WalshSpectrum:
    """Spectrum assembled from the per-case closed forms, no summation."""
    n, _, s = _family_params(f)
    ab = np.empty((3**n, 2), dtype=np.int64)
    for i in range(3**n):
        z = closed_walsh_value(f.family, n, s, classify(f, i))
        ab[i, 0] = z.a
        ab[i, 1] = z.b
    return WalshSpectrum(n, ab)
