"""Ternary linear codes of length 3^n - 1 built from a function on GF(3)^n.

A function f with f(0) = 0 yields the code whose codewords are

    c(alpha, w) = ( alpha*f(x) + w.x )  over all nonzero x,

with alpha a trit and w in GF(3)^n. Coordinates follow vec_index order,
so coordinate j belongs to x = index_vec(j + 1, n). When f is not a
linear form the code has dimension n + 1.

Weight distributions come two ways, by exhaustive enumeration and from
the closed-form spectrum of the two spread families; the pair of routes
is kept separate deliberately so each can audit the other.
"""

from __future__ import annotations

import numpy as np

from .gf3 import TritVec, all_vectors, dot_table
from .spread_functions import SpreadFunction, linear_form
from .subspaces import rref3
from .walsh import check_family_params

__all__ = [
    "LinearFunctionError",
    "TernaryLinearCode",
    "codeword",
    "codeword_index",
    "build_code",
    "weight_from_walsh",
    "all_codeword_weights",
    "WeightDistribution",
    "weight_distribution",
    "closed_form_distribution",
    "distribution_from_spectrum",
]


class LinearFunctionError(ValueError):
    """Raised when a construction requires a non-linear f but got a linear form."""


class TernaryLinearCode:
    """Length 3^n - 1 code spanned by the f row and the n coordinate rows."""

    __slots__ = ("n", "f", "generator", "rank")

    def __init__(self, n: int, f: SpreadFunction, generator: np.ndarray, rank: int):
        generator = np.asarray(generator, dtype=np.uint8)
        generator.flags.writeable = False
        self.n = n
        self.f = f
        self.generator = generator
        self.rank = rank

    @property
    def length(self) -> int:
        return 3**self.n - 1

    @property
    def dimension(self) -> int:
        return self.n + 1

    def __repr__(self) -> str:
        return f"TernaryLinearCode([{self.length},{self.dimension}], n={self.n})"


def build_code(f: SpreadFunction) -> TernaryLinearCode:
    """Assemble the code of f; its generator has the f row first.

    Raises LinearFunctionError when f is a linear form (the f row would
    be a combination of the coordinate rows and the dimension drops).
    """
    w = linear_form(f)
    if w is not None:
        raise LinearFunctionError(f"f equals the linear form with w={tuple(w)}")
    n = f.n
    coords = all_vectors(n)[1:, :].T
    generator = np.vstack([f.table[None, 1:], coords]).astype(np.uint8)
    _, rank = rref3(generator)
    if rank != n + 1:
        raise AssertionError("non-linear f must give full rank n + 1")
    return TernaryLinearCode(n, f, generator, rank)


def codeword(f: SpreadFunction, alpha: int, w: TritVec) -> TritVec:
    """The codeword of the message (alpha, w), length 3^n - 1."""
    if len(w) != f.n:
        raise ValueError("length mismatch")
    if alpha not in (0, 1, 2):
        raise ValueError("alpha must be a trit")
    dots = (all_vectors(f.n).astype(np.int64) @ w.array.astype(np.int64)) % 3
    row = (alpha * f.table.astype(np.int64) + dots) % 3
    return TritVec._from_raw(row[1:].astype(np.uint8))


def codeword_index(alpha: int, w_index: int, n: int) -> int:
    """Position of the message (alpha, w) in the canonical enumeration."""
    return alpha * 3**n + w_index


def all_codeword_weights(code: TernaryLinearCode) -> np.ndarray:
    """Weights of all 3^(n+1) codewords in codeword_index order."""
    n = code.n
    d = dot_table(n)[:, 1:]
    ft = code.f.table[1:].astype(np.int16)
    out = np.empty(3 ** (n + 1), dtype=np.int64)
    for alpha in (0, 1, 2):
        rows = (alpha * ft[None, :] + d) % 3
        out[alpha * 3**n : (alpha + 1) * 3**n] = np.count_nonzero(rows, axis=1)
    return out


class WeightDistribution:
    """Multiset of codeword weights, weight -> multiplicity."""

    __slots__ = ("counts",)

    def __init__(self, counts: dict[int, int]) -> None:
        cleaned = {}
        for w, m in sorted(counts.items()):
            w, m = int(w), int(m)
            if m < 0 or w < 0:
                raise ValueError("weights and multiplicities must be nonnegative")
            if m:
                cleaned[w] = m
        self.counts = cleaned

    @classmethod
    def from_weights(cls, weights: np.ndarray) -> "WeightDistribution":
        vals, cnt = np.unique(np.asarray(weights), return_counts=True)
        return cls(dict(zip(vals.tolist(), cnt.tolist())))

    def total(self) -> int:
        """Number of codewords counted."""
        return sum(self.counts.values())

    def total_weight(self) -> int:
        """Sum of weight times multiplicity."""
        return sum(w * m for w, m in self.counts.items())

    @property
    def wt_min(self) -> int:
        """Smallest nonzero weight."""
        nz = [w for w in self.counts if w > 0]
        if not nz:
            raise ValueError("no nonzero weights present")
        return min(nz)

    @property
    def wt_max(self) -> int:
        nz = [w for w in self.counts if w > 0]
        if not nz:
            raise ValueError("no nonzero weights present")
        return max(nz)

    def items(self):
        return self.counts.items()

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightDistribution):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == {w: m for w, m in other.items() if m}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))

    def __repr__(self) -> str:
        return f"WeightDistribution({self.counts})"


def weight_distribution(code: TernaryLinearCode) -> WeightDistribution:
    """Exhaustive weight distribution over all 3^(n+1) codewords."""
    return WeightDistribution.from_weights(all_codeword_weights(code))


def weight_from_walsh(alpha: int, twice_re: int, n: int) -> int:
    """Weight of the codeword (alpha, w) from twice_re of the matching transform.

    For alpha = 2 the matching value is at w, for alpha = 1 at -w; both
    give weight (2*3^n - twice_re) / 3, which must divide exactly.
    """
    if alpha not in (1, 2):
        raise ValueError("alpha must be 1 or 2 here; alpha = 0 rows have w.x weights")
    num = 2 * 3**n - twice_re
    if num % 3:
        raise ValueError(f"2*3^n - twice_re = {num} is not divisible by 3")
    wt = num // 3
    if not 0 <= wt <= 3**n - 1:
        raise ValueError(f"weight {wt} out of range")
    return wt


def distribution_from_spectrum(spectrum, n: int) -> WeightDistribution:
    """Weight distribution implied by a spectrum, no codeword enumeration.

    alpha = 1 and alpha = 2 each contribute one codeword per w whose
    weight comes from weight_from_walsh (the two runs over w and -w see
    the same multiset). alpha = 0 contributes the zero word and 3^n - 1
    words of weight 2*3^(n-1).
    """
    r = spectrum.twice_re()
    num = 2 * 3**n - r
    if (num % 3).any():
        raise ValueError("spectrum contains non-divisible twice_re values")
    wts = num // 3
    counts: dict[int, int] = {0: 1, 2 * 3 ** (n - 1): 3**n - 1}
    vals, cnt = np.unique(wts, return_counts=True)
    for w, m in zip(vals.tolist(), cnt.tolist()):
        counts[w] = counts.get(w, 0) + 2 * m
    return WeightDistribution(counts)


def closed_form_distribution(family: str, n: int, s: int) -> WeightDistribution:
    """Predicted weight distribution of a spread-family code.

    Rows with coinciding weights merge additively; zero multiplicities
    drop out (e.g. no vectors lie outside the chosen duals once every
    member is chosen).
    """
    check_family_params(family, n, s)
    t = n // 2
    q = 3**t
    uniform = 3**n - 3 ** (n - 1)
    counts: dict[int, int] = {0: 1}

    def add(w: int, m: int) -> None:
        if m:
            counts[w] = counts.get(w, 0) + m

    if family == "char":
        add(s * (q - 1), 2)
        add(uniform, 3**n - 1)
        add(uniform - s, 2 * (q + 1 - s) * (q - 1))
        add(uniform + q - s, 2 * s * (q - 1))
    else:
        add(2 * s * (q - 1), 2)
        add(uniform, 3**n - 1)
        add(uniform - 2 * s, 2 * (q + 1 - 2 * s) * (q - 1))
        add(uniform + q - 2 * s, 4 * s * (q - 1))
    return WeightDistribution(counts)
