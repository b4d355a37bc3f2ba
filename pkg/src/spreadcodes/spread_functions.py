"""Functions GF(3)^n -> GF(3) supported on partial spread members.

Two families are built here. The characteristic family takes the value 1
on every nonzero vector of s chosen members. The ternary family takes 1
on the first s chosen members and 2 on the other s. Both vanish at 0 and
off the chosen members, and neither is ever a linear form.
"""

from __future__ import annotations

import numpy as np

from .gf3 import TritVec, all_vectors, vec_index
from .subspaces import PartialSpread

__all__ = [
    "SpreadFunction",
    "member_indicator",
    "pair_indicator",
    "characteristic_function",
    "ternary_function",
    "tabulate_linear",
    "linear_form",
]


class SpreadFunction:
    """A function GF(3)^n -> GF(3) tabulated over all 3^n inputs.

    table[i] is the value at index_vec(i, n). family is "char",
    "ternary" or "custom"; for the two spread families the member
    indices and the parameter s are kept so spectra can be classified.
    """

    __slots__ = ("n", "table", "family", "indices", "s", "spread")

    def __init__(
        self,
        n: int,
        table,
        family: str = "custom",
        indices: tuple[int, ...] | None = None,
        s: int | None = None,
        spread: PartialSpread | None = None,
    ) -> None:
        table = np.array(table, dtype=np.uint8)
        if table.shape != (3**n,):
            raise ValueError(f"table must have length 3**{n}")
        if table.max(initial=0) > 2:
            raise ValueError("table values must lie in {0, 1, 2}")
        if family not in ("char", "ternary", "custom"):
            raise ValueError(f"unknown family {family!r}")
        table.flags.writeable = False
        self.n = n
        self.table = table
        self.family = family
        self.indices = None if indices is None else tuple(indices)
        self.s = s
        self.spread = spread

    def __call__(self, x: TritVec | int) -> int:
        i = x if isinstance(x, int) else vec_index(x)
        return int(self.table[i])

    def value_counts(self) -> dict[int, int]:
        c = np.bincount(self.table, minlength=3)
        return {0: int(c[0]), 1: int(c[1]), 2: int(c[2])}

    def __repr__(self) -> str:
        extra = "" if self.s is None else f", s={self.s}"
        return f"SpreadFunction(n={self.n}, family={self.family!r}{extra})"


def _nonzero_indices(spread: PartialSpread, i: int) -> np.ndarray:
    idx = spread[i].element_indices()
    return idx[idx != 0]


def member_indicator(spread: PartialSpread, i: int) -> SpreadFunction:
    """Indicator of the nonzero vectors of member i."""
    return characteristic_function(spread, (i,))


def pair_indicator(spread: PartialSpread, i: int, j: int) -> SpreadFunction:
    """1 on member i, 2 on member j, 0 elsewhere (zero vector included)."""
    return ternary_function(spread, (i, j))


def characteristic_function(
    spread: PartialSpread, indices: tuple[int, ...]
) -> SpreadFunction:
    """Sum of member indicators over the given s distinct members."""
    indices = tuple(int(i) for i in indices)
    _check_indices(spread, indices)
    if not 1 <= len(indices) <= len(spread):
        raise ValueError("need between 1 and len(spread) members")
    table = np.zeros(3**spread.n, dtype=np.uint8)
    for i in indices:
        table[_nonzero_indices(spread, i)] = 1
    return SpreadFunction(
        spread.n, table, "char", indices, s=len(indices), spread=spread
    )


def ternary_function(
    spread: PartialSpread, indices: tuple[int, ...]
) -> SpreadFunction:
    """1 on the first half of the given members, 2 on the second half.

    indices lists 2s distinct members; the first s carry the value 1.
    Doubling this function swaps the halves, so scalar multiples stay
    inside the family.
    """
    indices = tuple(int(i) for i in indices)
    _check_indices(spread, indices)
    if len(indices) % 2 or not indices:
        raise ValueError("need an even, positive number of members")
    s = len(indices) // 2
    if 2 * s > len(spread):
        raise ValueError("more members requested than the spread holds")
    table = np.zeros(3**spread.n, dtype=np.uint8)
    for k, i in enumerate(indices):
        table[_nonzero_indices(spread, i)] = 1 if k < s else 2
    return SpreadFunction(spread.n, table, "ternary", indices, s=s, spread=spread)


def _check_indices(spread: PartialSpread, indices: tuple[int, ...]) -> None:
    if len(set(indices)) != len(indices):
        raise ValueError("member indices must be distinct")
    for i in indices:
        if not 0 <= i < len(spread):
            raise ValueError(f"member index {i} out of range")


def tabulate_linear(w: TritVec) -> SpreadFunction:
    """The linear form x -> w.x as a custom SpreadFunction."""
    n = len(w)
    table = (all_vectors(n).astype(np.int64) @ w.array.astype(np.int64)) % 3
    return SpreadFunction(n, table.astype(np.uint8))


def linear_form(f: SpreadFunction) -> TritVec | None:
    """Return w with f(x) = w.x for all x, or None when f is not linear.

    The only possible w reads off the unit vectors, w[k] = f(e_k), so a
    single table comparison settles it.
    """
    n = f.n
    w = np.array([f.table[3**k] for k in range(n)], dtype=np.uint8)
    predicted = (all_vectors(n).astype(np.int64) @ w.astype(np.int64)) % 3
    if np.array_equal(predicted.astype(np.uint8), f.table):
        return TritVec._from_raw(w)
    return None
