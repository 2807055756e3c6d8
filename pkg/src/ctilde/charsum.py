"""Exact additive character sums over prime fields in Z[zeta_p].

A cyclotomic integer is stored by its coordinates in the basis
1, zeta, ..., zeta^{p-2}, reduced by 1 + zeta + ... + zeta^{p-1} = 0.
The two verified identities, for any nontrivial additive character
psi(t) = zeta^{at} of F_p, are

    sum over all of F_p:        sum_t psi(t)     = 0,
    sum over the units of F_p:  sum_t psi(1/t)   = -1.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CyclotomicInteger:
    """An element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if len(self.coeffs) != self.p - 1:
            raise ValueError("coefficient vector must have length p-1")

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInteger":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInteger":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def one(cls, p: int) -> "CyclotomicInteger":
        return cls.from_int(p, 1)

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CyclotomicInteger":
        """zeta^k, reduced to the basis."""
        return cls._reduce(p, {k % p: 1})

    @staticmethod
    def _reduce(p: int, exps: dict[int, int]) -> "CyclotomicInteger":
        """Fold a combination of zeta^0..zeta^{p-1} into the basis."""
        top = exps.get(p - 1, 0)
        coeffs = [exps.get(k, 0) - top for k in range(p - 1)]
        return CyclotomicInteger(p, tuple(coeffs))

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        if self.p != other.p:
            raise ValueError("mixed cyclotomic orders")
        return CyclotomicInteger(
            self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return self + (-other)

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        if self.p != other.p:
            raise ValueError("mixed cyclotomic orders")
        p = self.p
        exps: dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = (i + j) % p
                exps[k] = exps.get(k, 0) + a * b
        return self._reduce(p, exps)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CyclotomicInteger(p={self.p}, {' + '.join(terms) or '0'})"


def _validate(p: int, a: int) -> int:
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a = a % p
    if a == 0:
        raise ValueError("the residue a must be nonzero: the character degenerates")
    return a


def full_sum(p: int, a: int) -> CyclotomicInteger:
    """sum over t in F_p of zeta^{a t}; zero for every nonzero a."""
    a = _validate(p, a)
    exps: dict[int, int] = {}
    for t in range(p):
        k = (a * t) % p
        exps[k] = exps.get(k, 0) + 1
    return CyclotomicInteger._reduce(p, exps)


def unit_sum(p: int, a: int) -> CyclotomicInteger:
    """sum over units t of zeta^{a t}, the alternate route to -1."""
    a = _validate(p, a)
    exps: dict[int, int] = {}
    for t in range(1, p):
        k = (a * t) % p
        exps[k] = exps.get(k, 0) + 1
    return CyclotomicInteger._reduce(p, exps)


def inverse_sum(p: int, a: int) -> CyclotomicInteger:
    """sum over units t of zeta^{a / t}; equals -1 for every nonzero a."""
    a = _validate(p, a)
    exps: dict[int, int] = {}
    for t in range(1, p):
        k = (a * pow(t, p - 2, p)) % p
        exps[k] = exps.get(k, 0) + 1
    return CyclotomicInteger._reduce(p, exps)


def verify_pair(p: int, a: int) -> dict:
    """Machine-readable check of both identities at (p, a)."""
    full = full_sum(p, a)
    inv = inverse_sum(p, a)
    minus_one = -CyclotomicInteger.one(p)
    return {
        "p": p,
        "a": a % p,
        "full_sum_zero": full.is_zero(),
        "inverse_sum_minus_one": inv == minus_one,
    }
