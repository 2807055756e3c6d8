"""Exact arithmetic in Z[q, q^-1] and exact linear algebra over its fraction field.

A Laurent polynomial is stored as a map from integer exponents to nonzero
integer coefficients; the zero polynomial has empty support.  All operations
are exact, there is no floating point anywhere.  Matrix rank is computed over
the fraction field Q(q) by fraction-free (Bareiss) elimination, and certified
by re-computing the rank after evaluating q at integer points that avoid the
roots of every pivot encountered during elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[q, q^-1] with arbitrary-precision integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(e, int) or not isinstance(v, int):
                    raise TypeError("exponents and coefficients must be integers")
                if v:
                    c[e] = v
        self._c = c
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def q_power(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q^k."""
        return cls({k: coeff})

    # -- structure ----------------------------------------------------------

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def as_signed_q_power(self) -> tuple[int, int] | None:
        """Return (sign, k) if this equals +-q^k, else None."""
        if len(self._c) != 1:
            return None
        (e, v), = self._c.items()
        if v in (1, -1):
            return (v, e)
        return None

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({0: x})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        if len(a) == 1:
            (ea, va), = a.items()
            for eb, vb in b.items():
                c[ea + eb] = va * vb
        else:
            for ea, va in a.items():
                for eb, vb in b.items():
                    e = ea + eb
                    s = c.get(e, 0) + va * vb
                    if s:
                        c[e] = s
                    elif e in c:
                        del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for general elements")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        out._hash = None
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- evaluation and display ---------------------------------------------

    def eval_int(self, v: int) -> Fraction:
        """Evaluate exactly at q = v.  Negative exponents require v != 0."""
        if v == 0 and any(e < 0 for e in self._c):
            raise ZeroDivisionError("evaluation at q=0 with negative exponents")
        total = Fraction(0)
        for e, c in self._c.items():
            total += Fraction(c) * (Fraction(v) ** e)
        return total

    def pretty(self) -> str:
        """Render like ``q^2 - 1 + 3*q^-1`` (descending exponents).

        >>> (LaurentPoly({2: 1, 0: -1, -1: 3})).pretty()
        'q^2 - 1 + 3*q^-1'
        """
        if not self._c:
            return "0"
        parts: list[str] = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            if e == 0:
                body = str(abs(v))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(v) == 1 else f"{abs(v)}*{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()})"

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(v) for e, v in data.items()})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q_power(1)


def _divides_exactly(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[q, q^-1]; the quotient must exist in the ring."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    mono = den.as_signed_q_power()
    if mono is not None:
        s, k = mono
        return num.shift(-k) if s == 1 else (-num).shift(-k)
    # long division from the top degree; Bareiss guarantees exactness
    rem = dict(num._c)
    dlead = den.max_exp()
    dcoeff = den._c[dlead]
    quot: dict[int, int] = {}
    while rem:
        rlead = max(rem)
        qc, r = divmod(rem[rlead], dcoeff)
        if r:
            raise ArithmeticError("inexact polynomial division")
        qe = rlead - dlead
        quot[qe] = qc
        for e, v in den._c.items():
            key = e + qe
            s = rem.get(key, 0) - qc * v
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return LaurentPoly(quot)


class LaurentMatrix:
    """A rectangular matrix over Z[q, q^-1]."""

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = [[LaurentPoly._coerce(x) for x in row] for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("matrix rows must have equal length")
        self.entries: list[list[LaurentPoly]] = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def _normalized(self) -> list[list[LaurentPoly]]:
        """Rows scaled by powers of q so every entry lies in Z[q] (rank-invariant)."""
        out = []
        for row in self.entries:
            exps = [x.min_exp() for x in row if not x.is_zero()]
            shift = -min(exps) if exps else 0
            out.append([x.shift(shift) for x in row])
        return out

    def rank(self) -> int:
        """Rank over Q(q) by fraction-free elimination, certified by evaluation.

        The certification evaluates q at three integers that are not roots of
        any pivot polynomial and checks that the rational ranks agree; the
        symbolic elimination remains the authoritative result.
        """
        if self.rows == 0 or self.cols == 0:
            return 0
        m = self._normalized()
        work = [row[:] for row in m]
        nrows, ncols = self.rows, self.cols
        pivots: list[LaurentPoly] = []
        prev = ONE
        r = 0
        for _ in range(min(nrows, ncols)):
            # choose the "smallest" available pivot to keep entries compact
            best = None
            for i in range(r, nrows):
                for j in range(r, ncols):
                    x = work[i][j]
                    if x.is_zero():
                        continue
                    key = (len(x._c), x.max_exp() - x.min_exp(), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != r:
                work[pi], work[r] = work[r], work[pi]
            if pj != r:
                for row in work:
                    row[pj], row[r] = row[r], row[pj]
            piv = work[r][r]
            pivots.append(piv)
            for i in range(r + 1, nrows):
                head = work[i][r]
                work[i][r] = ZERO
                for j in range(r + 1, ncols):
                    val = work[r][r] * work[i][j] - head * work[r][j]
                    work[i][j] = _divides_exactly(val, prev)
            prev = piv
            r += 1
        self._certify_rank(m, pivots, r)
        return r

    @staticmethod
    def _certify_rank(m: list[list[LaurentPoly]], pivots: list[LaurentPoly], r: int) -> None:
        points: list[int] = []
        v = 2
        while len(points) < 3:
            if all(p.eval_int(v) != 0 for p in pivots):
                points.append(v)
            v += 1
        for v in points:
            numeric = [[x.eval_int(v) for x in row] for row in m]
            if _rational_rank(numeric) != r:
                raise AssertionError(
                    f"rank certification failed at q={v}: symbolic rank {r}"
                )

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }


def _rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a matrix over Q by plain Gaussian elimination."""
    work = [row[:] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(nrows):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def lp(x: Scalar) -> LaurentPoly:
    """Coerce an int to a constant Laurent polynomial."""
    return LaurentPoly._coerce(x)
