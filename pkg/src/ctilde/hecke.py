"""The Iwahori-Hecke algebra of W_e with unequal parameters.

Generators t_0, ..., t_n satisfy the braid relations of the C-tilde diagram
and the quadratic relations

    t_0^2 = 1,            (t_i - q)(t_i + 1) = 0   for i != 0,

i.e. the parameters are q_0 = 1 and q_i = q otherwise.  Elements are finitely
supported sums  sum_w c_w T_w  with Laurent-polynomial coefficients, stored in
the basis indexed by group elements.  Products are expanded one generator at a
time along reduced words using

    T_{s_i} T_w = T_{s_i w}                     if length goes up,
    T_{s_i} T_w = q_i T_{s_i w} + (q_i - 1) T_w otherwise,

together with the mirrored rule for multiplication on the right.

The commutative Bernstein elements theta_lam = T_{t_mu} (T_{t_nu})^{-1} are
built from the pointwise-minimal decomposition lam = mu - nu into dominant
(weakly decreasing, nonnegative) integer vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .laurent import ONE, Q, LaurentPoly, lp
from .weyl import (
    ExtAffineWeylElement,
    Word,
    generator,
    identity,
    descents,
    element_to_json,
    length,
    parabolic_subgroup,
    reduced_word,
    right_descents,
    translation,
)

MINUS_ONE = LaurentPoly.from_int(-1)
Q_MINUS_ONE = Q + MINUS_ONE
Q_INV = LaurentPoly.q_power(-1)
Q_INV_MINUS_ONE = Q_INV + MINUS_ONE


@lru_cache(maxsize=None)
def _left_step(i: int, w: ExtAffineWeylElement) -> tuple[ExtAffineWeylElement, bool]:
    """(s_i * w, whether i is a left descent of w)."""
    return generator(w.rank, i) * w, i in descents(w)


@lru_cache(maxsize=None)
def _right_step(w: ExtAffineWeylElement, i: int) -> tuple[ExtAffineWeylElement, bool]:
    """(w * s_i, whether i is a right descent of w)."""
    return w * generator(w.rank, i), i in right_descents(w)


def _lmul_gen(i: int, support: Mapping, out: dict) -> None:
    """Accumulate T_{s_i} * (sum c_w T_w) into out."""
    for w, c in support.items():
        w2, desc = _left_step(i, w)
        if not desc or i == 0:
            s = out.get(w2)
            out[w2] = c if s is None else s + c
        else:
            s = out.get(w2)
            qc = Q * c
            out[w2] = qc if s is None else s + qc
            s = out.get(w)
            dc = Q_MINUS_ONE * c
            out[w] = dc if s is None else s + dc


def _rmul_gen(support: Mapping, i: int, out: dict) -> None:
    """Accumulate (sum c_w T_w) * T_{s_i} into out."""
    for w, c in support.items():
        w2, desc = _right_step(w, i)
        if not desc or i == 0:
            s = out.get(w2)
            out[w2] = c if s is None else s + c
        else:
            s = out.get(w2)
            qc = Q * c
            out[w2] = qc if s is None else s + qc
            s = out.get(w)
            dc = Q_MINUS_ONE * c
            out[w] = dc if s is None else s + dc


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class HeckeElement:
    """A finitely supported sum of basis elements T_w."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: Mapping[ExtAffineWeylElement, LaurentPoly] | None = None):
        self.n = n
        self._c: dict[ExtAffineWeylElement, LaurentPoly] = {}
        if coeffs:
            for w, c in coeffs.items():
                c = lp(c)
                if c:
                    if w.rank != n:
                        raise ValueError("support element rank mismatch")
                    self._c[w] = c

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls(n, {identity(n): ONE})

    def items(self):
        return self._c.items()

    def support(self):
        return self._c.keys()

    def coeff(self, w: ExtAffineWeylElement) -> LaurentPoly:
        return self._c.get(w, LaurentPoly.zero())

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        c = dict(self._c)
        for w, v in other._c.items():
            s = c.get(w)
            s = v if s is None else s + v
            if s:
                c[w] = s
            elif w in c:
                del c[w]
        out = HeckeElement(self.n)
        out._c = c
        return out

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(MINUS_ONE)

    def scale(self, c: Union[int, LaurentPoly]) -> "HeckeElement":
        c = lp(c)
        out = HeckeElement(self.n)
        if c:
            out._c = {w: c * v for w, v in self._c.items()}
        return out

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return multiply(self, other)

    def times_gen(self, i: int) -> "HeckeElement":
        """Right multiplication by T_{s_i}."""
        acc: dict = {}
        _rmul_gen(self._c, i, acc)
        out = HeckeElement(self.n)
        out._c = _prune(acc)
        return out

    def times_gen_inverse(self, i: int) -> "HeckeElement":
        """Right multiplication by T_{s_i}^{-1} = q_i^{-1} T_{s_i} + (q_i^{-1}-1) T_e."""
        if i == 0:
            return self.times_gen(0)
        acc: dict = {}
        _rmul_gen(self._c, i, acc)
        out: dict = {}
        for w, c in acc.items():
            out[w] = Q_INV * c
        for w, c in self._c.items():
            s = out.get(w)
            dc = Q_INV_MINUS_ONE * c
            out[w] = dc if s is None else s + dc
        res = HeckeElement(self.n)
        res._c = _prune(out)
        return res

    def times_basis(self, w: ExtAffineWeylElement) -> "HeckeElement":
        """Right multiplication by T_w, one generator at a time."""
        out = self
        for i in reduced_word(w):
            out = out.times_gen(i)
        return out

    def times_basis_inverse(self, w: ExtAffineWeylElement) -> "HeckeElement":
        """Right multiplication by (T_w)^{-1}, reversed generator inverses."""
        out = self
        for i in reversed(reduced_word(w)):
            out = out.times_gen_inverse(i)
        return out

    def __repr__(self) -> str:
        terms = sorted(self._c, key=lambda w: (length(w), reduced_word(w)))
        body = ", ".join(
            f"T[{','.join(map(str, reduced_word(w)))}]: {self._c[w].pretty()}" for w in terms
        )
        return f"HeckeElement({body or '0'})"

    def to_json(self) -> list[dict]:
        terms = sorted(self._c, key=lambda w: (length(w), reduced_word(w)))
        return [
            {"element": element_to_json(w), "coefficient": self._c[w].to_json()}
            for w in terms
        ]


def basis(w: ExtAffineWeylElement) -> HeckeElement:
    """The basis element T_w."""
    return HeckeElement(w.rank, {w: ONE})


def unit(n: int) -> HeckeElement:
    return HeckeElement.unit(n)


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The exact bilinear product in the T-basis.

    Expansion proceeds generator by generator along reduced words of the side
    whose support carries fewer letters in total.
    """
    if a.n != b.n:
        raise ValueError("rank mismatch")
    letters_a = sum(length(w) for w in a.support())
    letters_b = sum(length(w) for w in b.support())
    acc: dict = {}
    if letters_a <= letters_b:
        for u, cu in a.items():
            cur = dict(b._c)
            for i in reversed(reduced_word(u)):
                nxt: dict = {}
                _lmul_gen(i, cur, nxt)
                cur = nxt
            for w, c in cur.items():
                s = acc.get(w)
                t = cu * c
                acc[w] = t if s is None else s + t
    else:
        for v, dv in b.items():
            cur = dict(a._c)
            for i in reduced_word(v):
                nxt: dict = {}
                _rmul_gen(cur, i, nxt)
                cur = nxt
            for w, c in cur.items():
                s = acc.get(w)
                t = c * dv
                acc[w] = t if s is None else s + t
    out = HeckeElement(a.n)
    out._c = _prune(acc)
    return out


def basis_inverse(w: ExtAffineWeylElement) -> HeckeElement:
    """(T_w)^{-1}, the reversed product of generator inverses along a reduced word."""
    return HeckeElement.unit(w.rank).times_basis_inverse(w)


# -- Bernstein elements ------------------------------------------------------


def dominant_pair(lam: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Decompose lam = mu - nu with both parts dominant.

    Built right to left: mu_n = max(lam_n, 0) and
    mu_i = max(lam_i + nu_{i+1}, mu_{i+1}); this is the pointwise-minimal
    dominant pair.  Dominance of both parts is asserted.
    """
    n = len(lam)
    mu = [0] * n
    nu = [0] * n
    for i in range(n - 1, -1, -1):
        if i == n - 1:
            mu[i] = max(lam[i], 0)
        else:
            mu[i] = max(lam[i] + nu[i + 1], mu[i + 1])
        nu[i] = mu[i] - lam[i]
    assert _is_dominant(mu) and _is_dominant(nu), (lam, mu, nu)
    return tuple(mu), tuple(nu)


def _is_dominant(v: Sequence[int]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1)) and (not v or v[-1] >= 0)


def theta(n: int, lam: Sequence[int]) -> HeckeElement:
    """The Bernstein element theta_lam = T_{t_mu} (T_{t_nu})^{-1}."""
    lam = tuple(int(v) for v in lam)
    if len(lam) != n:
        raise ValueError("lattice vector dimension mismatch")
    mu, nu = dominant_pair(lam)
    return theta_from_pair(n, mu, nu)


def theta_from_pair(n: int, mu: Sequence[int], nu: Sequence[int]) -> HeckeElement:
    """T_{t_mu} (T_{t_nu})^{-1} for an explicit dominant decomposition."""
    if not (_is_dominant(mu) and _is_dominant(nu)):
        raise ValueError("both parts must be dominant")
    inv = basis_inverse(translation(nu))
    cur = inv._c
    for i in reversed(reduced_word(translation(mu))):
        nxt: dict = {}
        _lmul_gen(i, cur, nxt)
        cur = nxt
    out = HeckeElement(n)
    out._c = _prune(cur)
    return out


# -- characters ---------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicLabel:
    """A subset of generator indices spanning a finite parabolic subalgebra."""

    name: str
    indices: frozenset[int]


def h0_label(n: int) -> ParabolicLabel:
    """H_0, the subalgebra on t_0, ..., t_{n-1}."""
    return ParabolicLabel("H0", frozenset(range(n)))


def hn_label(n: int) -> ParabolicLabel:
    """H_n, the subalgebra on t_1, ..., t_n."""
    return ParabolicLabel("Hn", frozenset(range(1, n + 1)))


def _bond(n: int, i: int, j: int) -> int:
    """Coxeter bond order between distinct nodes of the C-tilde diagram."""
    i, j = min(i, j), max(i, j)
    if j - i > 1:
        return 2
    if n == 1:
        return 0  # infinite bond
    if (i, j) == (0, 1) or (i, j) == (n - 1, n):
        return 4
    return 3


@dataclass(frozen=True)
class CharacterSpec:
    """A one-dimensional character of a parabolic subalgebra or of all of H.

    Values must satisfy the quadratic relations (v_0 in {1, -1}, v_i in
    {-1, q} otherwise) and agree across order-3 bonds, which makes the
    multiplicative extension along reduced words well defined.
    """

    name: str
    rank: int
    domain: ParabolicLabel | None  # None means all of H
    values: tuple[tuple[int, LaurentPoly], ...]

    @classmethod
    def make(cls, name: str, rank: int, domain: ParabolicLabel | None,
             values: Mapping[int, LaurentPoly]) -> "CharacterSpec":
        idx = frozenset(values)
        expected = domain.indices if domain is not None else frozenset(range(rank + 1))
        if idx != expected:
            raise ValueError(f"character values must cover exactly {sorted(expected)}")
        for i, v in values.items():
            allowed = (ONE, MINUS_ONE) if i == 0 else (MINUS_ONE, Q)
            if v not in allowed:
                raise ValueError(f"value at t_{i} violates its quadratic relation")
        for i in idx:
            if i + 1 in idx and _bond(rank, i, i + 1) == 3 and values[i] != values[i + 1]:
                raise ValueError("values must agree across order-3 bonds")
        return cls(name, rank, domain, tuple(sorted(values.items())))

    @property
    def value_map(self) -> dict[int, LaurentPoly]:
        return dict(self.values)

    def indices(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.values)


def sgn(n: int) -> CharacterSpec:
    """t_i |-> -1 on all of H_n."""
    return CharacterSpec.make("sgn", n, hn_label(n), {i: MINUS_ONE for i in range(1, n + 1)})


def sgn_prime(n: int) -> CharacterSpec:
    """t_n |-> q and t_i |-> -1 on H_n."""
    vals = {i: MINUS_ONE for i in range(1, n)}
    vals[n] = Q
    return CharacterSpec.make("sgn'", n, hn_label(n), vals)


def eps(n: int, sign: int) -> CharacterSpec:
    """t_0 |-> sign and t_i |-> -1 on H_0."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    vals = {i: MINUS_ONE for i in range(1, n)}
    vals[0] = ONE if sign == 1 else MINUS_ONE
    return CharacterSpec.make("eps+" if sign == 1 else "eps-", n, h0_label(n), vals)


def steinberg(n: int, sign: int) -> CharacterSpec:
    """The Steinberg character of H: t_0 |-> sign, t_i |-> -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    vals = {i: MINUS_ONE for i in range(1, n + 1)}
    vals[0] = ONE if sign == 1 else MINUS_ONE
    return CharacterSpec.make("St+" if sign == 1 else "St-", n, None, vals)


def triv_index(n: int) -> CharacterSpec:
    """t_0 |-> 1, t_i |-> q; its value on T_w is the double-coset index q^{l_0(w)}."""
    vals = {i: Q for i in range(1, n + 1)}
    vals[0] = ONE
    return CharacterSpec.make("triv-index", n, None, vals)


def steinberg_values_type_d(n: int) -> dict[int, LaurentPoly]:
    """Character values on the generators of the extended type-D algebra on
    n+1 coordinates: the Steinberg line has t_0 acting by 1 and every other
    generator by -1."""
    vals: dict[int, LaurentPoly] = {0: ONE}
    for i in range(1, n + 2):
        vals[i] = MINUS_ONE
    return vals


def character_word_value(chi: CharacterSpec, word: Word) -> LaurentPoly:
    """Product of character values along a word; raises outside the domain."""
    idx = chi.indices()
    vals = chi.value_map
    out = ONE
    for i in word:
        if i not in idx:
            raise ValueError(f"generator t_{i} outside the domain of {chi.name}")
        out = out * vals[i]
    return out


def apply_character(chi: CharacterSpec, a: HeckeElement) -> LaurentPoly:
    """Extend chi linearly and multiplicatively to a Hecke element."""
    if a.n != chi.rank:
        raise ValueError("rank mismatch")
    total = LaurentPoly.zero()
    for w, c in a.items():
        total = total + c * character_word_value(chi, reduced_word(w))
    return total


# -- presentation checks -------------------------------------------------------


def _word_product(n: int, word: Iterable[int]) -> HeckeElement:
    out = HeckeElement.unit(n)
    for i in word:
        out = out.times_gen(i)
    return out


def _alternating(i: int, j: int, m: int) -> Word:
    return tuple(i if k % 2 == 0 else j for k in range(m))


def verify_presentation(n: int) -> dict:
    """Check the quadratic and braid relations as exact identities in H.

    For n = 1 there is no finite bond between t_0 and t_1; instead the check
    confirms that no alternating relation holds up to word length 12.
    """
    checks: list[dict] = []

    def record(name: str, ok: bool):
        checks.append({"relation": name, "ok": bool(ok)})

    e = unit(n)
    t0 = _word_product(n, [0])
    record("t_0^2 = 1", multiply(t0, t0) == e)
    for i in range(1, n + 1):
        ti = _word_product(n, [i])
        lhs = multiply(ti, ti)
        rhs = ti.scale(Q_MINUS_ONE) + e.scale(Q)
        record(f"(t_{i} - q)(t_{i} + 1) = 0", lhs == rhs)

    if n == 1:
        for k in range(1, 7):
            a = _word_product(n, _alternating(0, 1, 2 * k))
            ok = not (len(a) == 1 and next(iter(a.support())).is_identity())
            record(f"(t_0 t_1)^{k} is not a multiple of 1", ok)
    else:
        bonds = [(0, 1, 4), (n - 1, n, 4)]
        bonds += [(i, i + 1, 3) for i in range(1, n - 1)]
        bonds += [(i, j, 2) for i in range(n + 1) for j in range(i + 2, n + 1)]
        for i, j, m in sorted(bonds):
            lhs = _word_product(n, _alternating(i, j, m))
            rhs = _word_product(n, _alternating(j, i, m))
            name = {2: "commute", 3: "braid order 3", 4: "braid order 4"}[m]
            record(f"{name}: t_{i}, t_{j}", lhs == rhs)

    return {"rank": n, "checks": checks, "pass": all(c["ok"] for c in checks)}
