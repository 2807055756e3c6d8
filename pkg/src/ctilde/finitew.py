"""Finite Weyl groups and the delta-versus-invariants rank computation.

C[W] is the space of functions on a finite Weyl group W.  For each simple
reflection s the left {1, s}-invariant functions form the coset-indicator
subspace C[W_s \\ W]; every such indicator pairs to zero with the sign
character w |-> (-1)^{l(w)} under the counting-measure dot product, while the
delta function at the identity pairs to 1.  Hence delta is never in the span
of the invariants, which delta_membership certifies both ways: by the sign
pairing and by an exact rank computation.

Ranks are exact: elimination modulo a large prime gives a lower bound, the
sign-orthogonality gives an upper bound, and when the two meet the rank is
certified; otherwise the computation falls back to exact rational
elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .weyl import SignedPermutation

_FAMILIES = ("A", "B", "D")
_RANK_PRIMES = (999999937, 998244353, 754974721)


class FiniteWeylGroup:
    """A finite Weyl group of type A_m, B_m or D_m as signed permutations.

    A_m acts by plain permutations of m+1 letters; B_m by signed permutations
    of m letters; D_m by evenly-signed permutations of m letters.  Elements
    are listed in breadth-first order from the identity, so lengths are
    weakly increasing and the identity has index 0.
    """

    def __init__(self, family: str, rank: int):
        if family not in _FAMILIES:
            raise ValueError(f"family must be one of {_FAMILIES}")
        if rank < 1 or (family == "D" and rank < 2):
            raise ValueError(f"invalid rank {rank} for family {family}")
        self.family = family
        self.rank = rank
        self.gens = tuple(self._generators(family, rank))
        elements, lengths = self._enumerate()
        self.elements: tuple[SignedPermutation, ...] = elements
        self.lengths: tuple[int, ...] = lengths
        self._index = {g: k for k, g in enumerate(elements)}
        assert len(elements) == self.expected_order()

    @staticmethod
    def _generators(family: str, rank: int) -> list[SignedPermutation]:
        size = rank + 1 if family == "A" else rank
        gens = []
        for i in range(1, size):
            images = list(range(1, size + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            gens.append(SignedPermutation(tuple(images)))
        if family == "B":
            images = list(range(1, size + 1))
            images[size - 1] = -size
            gens.append(SignedPermutation(tuple(images)))
        elif family == "D":
            images = list(range(1, size + 1))
            images[size - 2] = -size
            images[size - 1] = -(size - 1)
            gens.append(SignedPermutation(tuple(images)))
        return gens

    def _enumerate(self):
        size = self.gens[0].size
        start = SignedPermutation.identity(size)
        elements = [start]
        lengths = [0]
        seen = {start}
        frontier = [start]
        depth = 0
        while frontier:
            depth += 1
            nxt = set()
            for g in frontier:
                for s in self.gens:
                    h = s * g
                    if h not in seen:
                        nxt.add(h)
            frontier = sorted(nxt, key=lambda g: g.images)
            seen.update(frontier)
            elements.extend(frontier)
            lengths.extend([depth] * len(frontier))
        return tuple(elements), tuple(lengths)

    def expected_order(self) -> int:
        f = 1
        for k in range(2, self.rank + 1):
            f *= k
        if self.family == "A":
            return f * (self.rank + 1)
        if self.family == "B":
            return (2 ** self.rank) * f
        return (2 ** (self.rank - 1)) * f

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g: SignedPermutation) -> int:
        return self._index[g]

    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def sign_character(self) -> list[int]:
        return [(-1) ** l for l in self.lengths]


def parabolic_invariants(W: FiniteWeylGroup, alpha: int) -> list[list[int]]:
    """Indicator basis of the left {1, s_alpha}-cosets, |W|/2 functions.

    alpha is a 1-based simple-root index.
    """
    if not 1 <= alpha <= len(W.gens):
        raise ValueError(f"simple root index {alpha} out of range")
    s = W.gens[alpha - 1]
    out: list[list[int]] = []
    visited = [False] * W.order
    for k, g in enumerate(W.elements):
        if visited[k]:
            continue
        partner = W.index(s * g)
        vec = [0] * W.order
        vec[k] = 1
        vec[partner] = 1
        visited[k] = visited[partner] = True
        out.append(vec)
    return out


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    A = np.array(rows, dtype=np.int64) % p
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if A[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        mask = A[r + 1:, c] != 0
        if mask.any():
            A[r + 1:] = (A[r + 1:] - np.outer(A[r + 1:, c], A[r])) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_exact_fallback(rows: Sequence[Sequence[int]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(r + 1, nrows):
            if work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r


def exact_rank(rows: Sequence[Sequence[int]], upper_bound: int | None = None) -> int:
    """Exact rank of an integer matrix over Q.

    Modular elimination gives lower bounds; a caller-supplied upper bound
    (from exact structure, e.g. a common orthogonal vector) certifies the
    fast path.  Without certification the exact rational fallback decides.
    """
    if not rows:
        return 0
    best = 0
    for p in _RANK_PRIMES:
        best = max(best, _rank_mod_p(rows, p))
        if upper_bound is not None and best == upper_bound:
            return best
    if best == min(len(rows), len(rows[0])):
        return best  # lower bound meets the trivial upper bound
    return _rank_exact_fallback(rows)


def delta_membership(W: FiniteWeylGroup) -> dict:
    """Decide whether delta at the identity lies in the span of all parabolic
    invariants, with both a rank computation and a sign-character certificate."""
    rows: list[list[int]] = []
    for alpha in range(1, len(W.gens) + 1):
        rows.extend(parabolic_invariants(W, alpha))
    sgn = W.sign_character()
    delta = [0] * W.order
    delta[0] = 1

    invariants_orthogonal = all(
        sum(a * b for a, b in zip(row, sgn)) == 0 for row in rows
    )
    delta_pairing = sum(a * b for a, b in zip(delta, sgn))
    sign_certificate = invariants_orthogonal and delta_pairing == 1

    upper = W.order - 1 if invariants_orthogonal else None
    span_rank = exact_rank(rows, upper_bound=upper)
    rank_with = exact_rank(rows + [delta], upper_bound=span_rank + 1)

    return {
        "group": W.label(),
        "dim": W.order,
        "span_rank": span_rank,
        "rank_with_delta": rank_with,
        "not_in_span": rank_with > span_rank,
        "sign_certificate": sign_certificate,
    }
