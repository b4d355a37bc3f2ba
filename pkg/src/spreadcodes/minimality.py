"""Minimality of the spread-family codes, decided by independent routes.

A codeword covers another when its support contains the other's support.
A code is minimal when no nonzero codeword covers a nonzero codeword
other than its own scalar multiples. Three deciders live here:

  * brute force: scan ordered codeword pairs with bit-packed supports
  * the same scan with the cover test replaced by the mod-3 weight
    identity wt(c2+c1) + wt(c2+2c1) = 2 wt(c2) - wt(c1)
  * the spectral criterion: the code is minimal iff for all pairwise
    distinct w1, w2, w3 summing to zero, with R = twice_re of the
    transform, R1 + R2 + R3 != 2*3^n and R1 + R2 - 2*R3 != 2*3^n

Every report also carries wt_min/wt_max and the classical sufficient
ratio condition wt_min/wt_max > 2/3, which these codes violate while
still being minimal; that gap is the whole point of the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .codes import (
    TernaryLinearCode,
    distribution_from_spectrum,
    WeightDistribution,
)
from .gf3 import TritVec, all_vectors, dot_table, pow3
from .spread_functions import SpreadFunction, linear_form
from .walsh import WalshSpectrum, closed_spectrum, walsh_spectrum

__all__ = [
    "covers",
    "covers_by_weight_identity",
    "CoverWitness",
    "TripleWitness",
    "MinimalityReport",
    "brute_force_minimality",
    "walsh_criterion_minimality",
    "ashikhmin_barg_check",
]


def covers(c1: TritVec, c2: TritVec) -> bool:
    """True when supp(c1) is contained in supp(c2)."""
    if len(c1) != len(c2):
        raise ValueError("length mismatch")
    return not bool(np.any((c1.array != 0) & (c2.array == 0)))


def covers_by_weight_identity(c1: TritVec, c2: TritVec) -> bool:
    """Cover test through weights only.

    Over GF(3), supp(c1) lies inside supp(c2) exactly when
    wt(c2 + c1) + wt(c2 + 2 c1) equals 2 wt(c2) - wt(c1).
    """
    if len(c1) != len(c2):
        raise ValueError("length mismatch")
    a, b = c1.array.astype(np.int16), c2.array.astype(np.int16)
    lhs = np.count_nonzero((b + a) % 3) + np.count_nonzero((b + 2 * a) % 3)
    return lhs == 2 * c2.weight - c1.weight


@dataclass(frozen=True)
class CoverWitness:
    """A covering pair, each side named by its message (alpha, w_index)."""

    c1: tuple[int, int]
    c2: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "kind": "cover",
            "c1": {"alpha": self.c1[0], "w_index": self.c1[1]},
            "c2": {"alpha": self.c2[0], "w_index": self.c2[1]},
        }


@dataclass(frozen=True)
class TripleWitness:
    """A violating triple for the spectral criterion, by vec_index."""

    w1: int
    w2: int
    w3: int
    condition: str  # "sum" or "sum_minus_double"

    def to_json(self) -> dict:
        return {
            "kind": "walsh_triple",
            "w1": self.w1,
            "w2": self.w2,
            "w3": self.w3,
            "condition": self.condition,
        }


@dataclass(frozen=True)
class MinimalityReport:
    verdict: str  # "minimal" | "not_minimal"
    method: str  # "brute_force" | "weight_identity" | "walsh_criterion"
    witness: CoverWitness | TripleWitness | None
    wt_min: int
    wt_max: int
    ratio: Fraction
    ab_satisfied: bool

    @property
    def is_minimal(self) -> bool:
        return self.verdict == "minimal"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.to_json(),
            "wt_min": self.wt_min,
            "wt_max": self.wt_max,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "ab_satisfied": self.ab_satisfied,
        }


def ashikhmin_barg_check(dist: WeightDistribution) -> tuple[Fraction, bool]:
    """Exact wt_min/wt_max ratio and whether it exceeds 2/3.

    Exceeding 2/3 is the classical sufficient condition for minimality
    over GF(3); failing it decides nothing by itself.
    """
    ratio = Fraction(dist.wt_min, dist.wt_max)
    return ratio, ratio > Fraction(2, 3)


def _report(verdict, method, witness, dist) -> MinimalityReport:
    ratio, ok = ashikhmin_barg_check(dist)
    return MinimalityReport(
        verdict, method, witness, dist.wt_min, dist.wt_max, ratio, ok
    )


def _packed_supports(code: TernaryLinearCode) -> tuple[np.ndarray, np.ndarray]:
    # supports of all codewords as packed bit rows, plus weights
    n = code.n
    d = dot_table(n)[:, 1:]
    ft = code.f.table[1:].astype(np.int16)
    blocks = []
    weights = np.empty(3 ** (n + 1), dtype=np.int64)
    for alpha in (0, 1, 2):
        rows = (alpha * ft[None, :] + d) % 3
        weights[alpha * 3**n : (alpha + 1) * 3**n] = np.count_nonzero(rows, axis=1)
        blocks.append(np.packbits(rows != 0, axis=1))
    return np.vstack(blocks), weights


def _scalar_partner(n: int) -> np.ndarray:
    # codeword index of 2*c for each codeword index, message-wise
    v = all_vectors(n).astype(np.int64)
    dbl = ((2 * v) % 3) @ pow3(n)
    out = np.empty(3 ** (n + 1), dtype=np.int64)
    for alpha in (0, 1, 2):
        out[alpha * 3**n : (alpha + 1) * 3**n] = ((2 * alpha) % 3) * 3**n + dbl
    return out


def brute_force_minimality(
    code: TernaryLinearCode, use_weight_identity: bool = False
) -> MinimalityReport:
    """Scan all ordered pairs of nonzero codewords for a covering pair.

    The witness is the first pair in lexicographic codeword_index order
    (c1 outer, c2 inner). With use_weight_identity the cover test runs
    through the weight identity instead of support inclusion; that path
    materializes full codeword blocks, so keep it to n <= 4.
    """
    n = code.n
    total = 3 ** (n + 1)
    partner = _scalar_partner(n)
    if use_weight_identity:
        if n > 4:
            raise ValueError("weight-identity scan is limited to n <= 4")
        return _weight_identity_scan(code, partner)
    supports, weights = _packed_supports(code)
    dist = WeightDistribution.from_weights(weights)
    flipped = ~supports
    for i in range(1, total):
        misses = np.bitwise_and(supports[i], flipped).any(axis=1)
        misses[i] = True
        misses[partner[i]] = True
        misses[0] = True
        if not misses.all():
            j = int(np.flatnonzero(~misses)[0])
            witness = CoverWitness(divmod(i, 3**n), divmod(j, 3**n))
            return _report("not_minimal", "brute_force", witness, dist)
    return _report("minimal", "brute_force", None, dist)


def _weight_identity_scan(code, partner) -> MinimalityReport:
    n = code.n
    total = 3 ** (n + 1)
    d = dot_table(n)[:, 1:].astype(np.int16)
    ft = code.f.table[1:].astype(np.int16)
    words = np.vstack([(alpha * ft[None, :] + d) % 3 for alpha in (0, 1, 2)])
    weights = np.count_nonzero(words, axis=1).astype(np.int64)
    dist = WeightDistribution.from_weights(weights)
    for i in range(1, total):
        c1 = words[i]
        lhs = np.count_nonzero((words + c1) % 3, axis=1) + np.count_nonzero(
            (words + 2 * c1) % 3, axis=1
        )
        hit = lhs == 2 * weights - weights[i]
        hit[i] = False
        hit[partner[i]] = False
        hit[0] = False
        if hit.any():
            j = int(np.flatnonzero(hit)[0])
            witness = CoverWitness(divmod(i, 3**n), divmod(j, 3**n))
            return _report("not_minimal", "weight_identity", witness, dist)
    return _report("minimal", "weight_identity", None, dist)


@lru_cache(maxsize=2)
def _neg_sum_table(n: int) -> np.ndarray:
    # entry [i, j] = vec_index of -(w_i + w_j); only built for n <= 6
    v = all_vectors(n).astype(np.int64)
    s = (v[:, None, :] + v[None, :, :]) % 3
    tab = (((2 * s) % 3) @ pow3(n)).astype(np.int32)
    tab.flags.writeable = False
    return tab


def walsh_criterion_minimality(
    f: SpreadFunction,
    spectrum: WalshSpectrum | None = None,
    use_closed_forms: bool = False,
) -> MinimalityReport:
    """Decide minimality from the spectrum alone.

    Sweeps ordered pairs (w1, w2); w3 = -(w1 + w2) is then distinct from
    both exactly when w1 != w2, which is the whole distinctness
    condition mod 3. The witness is the first violating pair in
    lexicographic (w1, w2) vec_index order. Spectra may come from the
    brute-force transform (default) or from the closed forms.
    """
    if linear_form(f) is not None:
        raise ValueError("minimality criterion needs a non-linear f")
    if spectrum is None:
        spectrum = closed_spectrum(f) if use_closed_forms else walsh_spectrum(f)
    n = f.n
    r = spectrum.twice_re()
    target = 2 * 3**n
    dist = distribution_from_spectrum(spectrum, n)

    if n <= 6:
        k = _neg_sum_table(n)
        pair = r[:, None] + r[None, :]
        r3 = r[k]
        viol = (pair + r3 == target) | (pair - 2 * r3 == target)
        np.fill_diagonal(viol, False)
        if viol.any():
            flat = int(np.argmax(viol))
            i, j = divmod(flat, 3**n)
            return _triple_report(r, i, j, int(k[i, j]), target, dist)
    else:
        v = all_vectors(n).astype(np.int64)
        p3 = pow3(n)
        for i in range(3**n):
            k_row = ((2 * ((v[i] + v) % 3)) % 3) @ p3
            r3 = r[k_row]
            viol = (r[i] + r + r3 == target) | (r[i] + r - 2 * r3 == target)
            viol[i] = False
            if viol.any():
                j = int(np.flatnonzero(viol)[0])
                return _triple_report(r, i, j, int(k_row[j]), target, dist)
    return _report("minimal", "walsh_criterion", None, dist)


def _triple_report(r, i, j, k, target, dist) -> MinimalityReport:
    cond = "sum" if r[i] + r[j] + r[k] == target else "sum_minus_double"
    witness = TripleWitness(i, j, k, cond)
    return _report("not_minimal", "walsh_criterion", witness, dist)
