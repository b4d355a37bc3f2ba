"""Subspaces of GF(3)^n with canonical bases, duals, and partial spreads.

A subspace is held as its reduced row echelon basis, which is unique, so
structural equality of Subspace objects is equality of subspaces. A
partial spread is an ordered tuple of pairwise disjoint t-dimensional
subspaces of GF(3)^(2t); the complete spread of all 3^t + 1 members comes
from the two-coordinate field model over GF(3^t).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf3 import ExtFieldElem, TritVec, all_vectors, pow3

__all__ = [
    "rref3",
    "kernel3",
    "Subspace",
    "section_counts",
    "PartialSpread",
    "full_spread",
]


def rref3(mat: np.ndarray) -> tuple[np.ndarray, int]:
    """Reduced row echelon form over GF(3). Returns (basis, rank).

    The returned matrix has one row per pivot; zero rows are dropped.
    """
    m = (np.array(mat, dtype=np.uint8, ndmin=2, copy=True)) % 3
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        if m[r, c] == 2:
            m[r] = (m[r] * 2) % 3  # 2 is its own inverse mod 3
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m + np.outer((3 - factors) % 3, m[r])) % 3
        r += 1
        if r == rows:
            break
    return m[:r].astype(np.uint8), r


def kernel3(mat: np.ndarray) -> np.ndarray:
    """Canonical (RREF) basis of the right null space of mat over GF(3)."""
    mat = np.array(mat, dtype=np.uint8, ndmin=2)
    n = mat.shape[1]
    red, r = rref3(mat)
    pivots = [int(np.flatnonzero(red[i])[0]) for i in range(r)]
    free = [c for c in range(n) if c not in pivots]
    rows = np.zeros((len(free), n), dtype=np.uint8)
    for k, fcol in enumerate(free):
        rows[k, fcol] = 1
        for i, p in enumerate(pivots):
            rows[k, p] = (3 - red[i, fcol]) % 3
    basis, _ = rref3(rows) if len(free) else (rows, 0)
    return basis


class Subspace:
    """Subspace of GF(3)^n with a canonical RREF basis.

    Equal objects are equal subspaces; hashable.
    """

    __slots__ = ("n", "dim", "basis")

    def __init__(self, n: int, rows) -> None:
        rows = [r.array if isinstance(r, TritVec) else np.asarray(r) for r in rows]
        if rows:
            mat = np.array(rows, dtype=np.uint8, ndmin=2)
            if mat.shape[1] != n:
                raise ValueError("row length does not match ambient dimension")
        else:
            mat = np.zeros((0, n), dtype=np.uint8)
        basis, rank = rref3(mat)
        basis.flags.writeable = False
        self.n = n
        self.dim = rank
        self.basis = basis

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, np.eye(n, dtype=np.uint8))

    def contains(self, v: TritVec) -> bool:
        """Membership test by reduction against the basis."""
        if len(v) != self.n:
            raise ValueError("length mismatch")
        w = v.array.astype(np.int64).copy()
        for row in self.basis:
            p = int(np.flatnonzero(row)[0])
            if w[p]:
                w = (w - w[p] * row) % 3
        return not w.any()

    def elements(self) -> np.ndarray:
        """(3^dim, n) uint8 array of all member vectors, including zero."""
        coeffs = all_vectors(self.dim).astype(np.int16)
        return ((coeffs @ self.basis.astype(np.int16)) % 3).astype(np.uint8)

    def element_indices(self) -> np.ndarray:
        """vec_index of every member vector, as int64."""
        return self.elements() @ pow3(self.n)

    def dual(self) -> "Subspace":
        """The orthogonal complement under the standard inner product."""
        d = Subspace.__new__(Subspace)
        basis = kernel3(self.basis) if self.dim else np.eye(self.n, dtype=np.uint8)
        basis.flags.writeable = False
        d.n = self.n
        d.dim = basis.shape[0]
        d.basis = basis
        return d

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.basis, other.basis)

    def __hash__(self) -> int:
        return hash((self.n, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, dim={self.dim})"


def disjoint(a: Subspace, b: Subspace) -> bool:
    """True when the subspaces intersect trivially."""
    if a.n != b.n:
        raise ValueError("mixed ambient dimensions")
    _, rank = rref3(np.vstack([a.basis, b.basis]))
    return rank == a.dim + b.dim


def section_counts(w: Subspace, y: TritVec) -> dict[int, int]:
    """How often y.x takes each value as x runs over the subspace w.

    For y outside the dual the three counts are all 3^(dim-1); for y in
    the dual the whole space lands on 0.
    """
    dots = (w.elements().astype(np.int64) @ y.array.astype(np.int64)) % 3
    c = np.bincount(dots, minlength=3)
    return {0: int(c[0]), 1: int(c[1]), 2: int(c[2])}


class PartialSpread:
    """Ordered pairwise-disjoint t-dimensional subspaces of GF(3)^(2t).

    Holds at most 3^t + 1 members (a complete spread). Member order is
    significant: spread functions refer to members by position.
    """

    __slots__ = ("n", "t", "members", "_member_owner", "_dual_owner")

    def __init__(self, members) -> None:
        members = tuple(members)
        if not members:
            raise ValueError("a spread needs at least one member")
        n = members[0].n
        if n % 2:
            raise ValueError("ambient dimension must be even")
        t = n // 2
        for w in members:
            if w.n != n:
                raise ValueError("mixed ambient dimensions")
            if w.dim != t:
                raise ValueError(f"member of dimension {w.dim}, expected {t}")
        if len(members) > 3**t + 1:
            raise ValueError(f"more than {3**t + 1} members cannot stay disjoint")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if not disjoint(members[i], members[j]):
                    raise ValueError(f"members {i} and {j} intersect nontrivially")
        self.n = n
        self.t = t
        self.members = members
        self._member_owner = None
        self._dual_owner = None

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> Subspace:
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    @property
    def is_full(self) -> bool:
        return len(self.members) == 3**self.t + 1

    def _owner_array(self, spaces) -> np.ndarray:
        owner = np.full(3**self.n, -1, dtype=np.int16)
        for i, w in enumerate(spaces):
            idx = w.element_indices()
            idx = idx[idx != 0]
            if (owner[idx] != -1).any():
                raise AssertionError("members are not disjoint")
            owner[idx] = i
        owner.flags.writeable = False
        return owner

    def member_owner(self) -> np.ndarray:
        """For each vec_index, the member containing it (-1 for none or zero)."""
        if self._member_owner is None:
            self._member_owner = self._owner_array(self.members)
        return self._member_owner

    def dual_owner(self) -> np.ndarray:
        """For each vec_index, the member whose dual contains it (-1 for none or zero)."""
        if self._dual_owner is None:
            self._dual_owner = self._owner_array([w.dual() for w in self.members])
        return self._dual_owner

    def __repr__(self) -> str:
        return f"PartialSpread(n={self.n}, t={self.t}, members={len(self.members)})"


@lru_cache(maxsize=None)
def full_spread(t: int) -> PartialSpread:
    """The complete spread of 3^t + 1 members of GF(3)^(2t).

    Realized over GF(3^t) x GF(3^t): one member {(x, a*x)} per field
    element a, ordered by the index of a, followed by {(0, y)} last.
    Coordinates 0..t-1 carry x and t..2t-1 carry y.
    """
    if not 1 <= t <= 4:
        raise ValueError("t outside supported range 1..4")
    monomials = [ExtFieldElem.from_index(t, 3**k) for k in range(t)]
    zeros = (0,) * t
    members = []
    for ai in range(3**t):
        a = ExtFieldElem.from_index(t, ai)
        rows = [e.coeffs + (a * e).coeffs for e in monomials]
        members.append(Subspace(2 * t, rows))
    members.append(Subspace(2 * t, [zeros + e.coeffs for e in monomials]))
    return PartialSpread(members)
