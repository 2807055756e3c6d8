"""Exact arithmetic for the extended affine Weyl group of type C-tilde.

The group W_e acts on E = R^n.  An element is a pair (w, lam) of a signed
permutation w and an integer translation lam, acting by x |-> w(x) + lam.
The translations with even coordinate sum form the affine Weyl group W_a of
the B_n root system; W_e extends it by index two and is itself a Coxeter
group of type C-tilde with generators

    s_0 = reflection about the hyperplane x_1 = 1/2,
    s_i = coordinate swap (i, i+1)      for 1 <= i <= n-1,
    s_n = sign change in coordinate n.

The walls of the base alcove  1/2 > x_1 > ... > x_n > 0  are the zero sets of
the simple affine functionals a_0 = 1/2 - x_1, a_i = x_i - x_{i+1}, a_n = x_n.
The full reflection arrangement consists of the hyperplanes x_i - x_j = m,
x_i + x_j = m and x_i = m/2 for integers m; Coxeter length is the number of
those hyperplanes separating the base alcove from its image.

Descent tests use the interior alcove point x*_j = (n+1-j)/(2(n+1)), scaled
by 2(n+1) so that every comparison is between integers.

The module also houses the extended affine Weyl group of the type-D root
system on n+1 coordinates, its diagram involution sigma (conjugation by
e_{n+1} |-> -e_{n+1}), and the folding isomorphism from the sigma-fixed
subgroup onto W_e obtained by restricting the affine action to E.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation: images[i-1] = +-j means e_i |-> +-e_j."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition self o other (apply other first)."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        out = []
        for v in other.images:
            w = self.images[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return SignedPermutation(tuple(out))

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(out))

    def apply(self, point: Sequence) -> tuple:
        """Apply the linear map to a coordinate vector."""
        out = [None] * self.size
        for i, v in enumerate(self.images):
            out[abs(v) - 1] = point[i] if v > 0 else -point[i]
        return tuple(out)

    def sign_changes(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))


@dataclass(frozen=True)
class ExtAffineWeylElement:
    """The affine map x |-> perm(x) + trans."""

    perm: SignedPermutation
    trans: tuple[int, ...]

    def __post_init__(self):
        if self.perm.size != len(self.trans):
            raise ValueError("permutation and translation ranks differ")

    @property
    def rank(self) -> int:
        return len(self.trans)

    def __mul__(self, other: "ExtAffineWeylElement") -> "ExtAffineWeylElement":
        """Composition: (self * other)(x) = self(other(x))."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        perm = self.perm * other.perm
        moved = self.perm.apply(other.trans)
        trans = tuple(a + b for a, b in zip(moved, self.trans))
        return ExtAffineWeylElement(perm, trans)

    def inverse(self) -> "ExtAffineWeylElement":
        pinv = self.perm.inverse()
        return ExtAffineWeylElement(pinv, tuple(-v for v in pinv.apply(self.trans)))

    def act(self, point: Sequence) -> tuple:
        """Exact affine action on a rational point."""
        if len(point) != self.rank:
            raise ValueError("point dimension mismatch")
        moved = self.perm.apply([Fraction(x) for x in point])
        return tuple(x + t for x, t in zip(moved, self.trans))

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.trans)


@dataclass(frozen=True)
class AffineFunctional:
    """The affine functional x |-> <gradient, x> + constant."""

    gradient: tuple[int, ...]
    constant: Fraction

    def __call__(self, point: Sequence) -> Fraction:
        return sum((Fraction(g) * Fraction(x) for g, x in zip(self.gradient, point)),
                   Fraction(self.constant))


def simple_functionals(n: int) -> tuple[AffineFunctional, ...]:
    """The n+1 wall functionals of the base alcove, positive on its interior."""
    funcs = []
    a0 = [0] * n
    a0[0] = -1
    funcs.append(AffineFunctional(tuple(a0), Fraction(1, 2)))
    for i in range(1, n):
        g = [0] * n
        g[i - 1] = 1
        g[i] = -1
        funcs.append(AffineFunctional(tuple(g), Fraction(0)))
    an = [0] * n
    an[n - 1] = 1
    funcs.append(AffineFunctional(tuple(an), Fraction(0)))
    return tuple(funcs)


def identity(n: int) -> ExtAffineWeylElement:
    return ExtAffineWeylElement(SignedPermutation.identity(n), (0,) * n)


def generator(n: int, i: int) -> ExtAffineWeylElement:
    """The Coxeter generator s_i of W_e, 0 <= i <= n."""
    if not 0 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    images = list(range(1, n + 1))
    trans = [0] * n
    if i == 0:
        images[0] = -1
        trans[0] = 1
    elif i < n:
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        images[n - 1] = -n
    return ExtAffineWeylElement(SignedPermutation(tuple(images)), tuple(trans))


def translation(lam: Sequence[int]) -> ExtAffineWeylElement:
    """The pure translation x |-> x + lam."""
    lam = tuple(int(v) for v in lam)
    return ExtAffineWeylElement(SignedPermutation.identity(len(lam)), lam)


def affine_reflection(n: int, gradient: Sequence[int], level: int) -> ExtAffineWeylElement:
    """Reflection about the hyperplane <gradient, x> = level.

    The gradient must be a root of the underlying B_n system, +-e_i +- e_j or
    +-e_i, and the level an integer.
    """
    g = tuple(int(v) for v in gradient)
    nonzero = [(i, v) for i, v in enumerate(g) if v]
    if not all(abs(v) == 1 for _, v in nonzero) or len(nonzero) not in (1, 2):
        raise ValueError(f"not a root gradient: {g}")
    norm = sum(v * v for v in g)
    # s(x) = x - (<g,x> - level) * (2/norm) * g
    images = list(range(1, n + 1))
    trans = [0] * n
    if len(nonzero) == 1:
        (i, v), = nonzero
        images[i] = -(i + 1)
        trans[i] = 2 * level * v
    else:
        (i, vi), (j, vj) = nonzero
        if vi * vj > 0:
            images[i] = -(j + 1)
            images[j] = -(i + 1)
        else:
            images[i] = j + 1
            images[j] = i + 1
        trans[i] = level * vi
        trans[j] = level * vj
    assert norm in (1, 2)
    return ExtAffineWeylElement(SignedPermutation(tuple(images)), tuple(trans))


def base_point(n: int) -> tuple[Fraction, ...]:
    """The fixed interior point x*_j = (n+1-j)/(2(n+1)) of the base alcove."""
    return tuple(Fraction(n + 1 - j, 2 * (n + 1)) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _scaled_image(g: ExtAffineWeylElement) -> tuple[int, ...]:
    """2(n+1) * g(x*), an integer vector on no wall of the arrangement."""
    n = g.rank
    scale = 2 * (n + 1)
    base = tuple(n + 1 - j for j in range(1, n + 1))
    moved = g.perm.apply(base)
    return tuple(m + scale * t for m, t in zip(moved, g.trans))


@lru_cache(maxsize=None)
def descents(g: ExtAffineWeylElement) -> frozenset[int]:
    """Left descents: indices i with length(s_i * g) < length(g).

    Equivalently the wall of a_i separates the base alcove from g(alcove),
    i.e. a_i is negative at g(x*).
    """
    n = g.rank
    scale = 2 * (n + 1)
    y = _scaled_image(g)
    out = []
    if 2 * y[0] > scale:
        out.append(0)
    for i in range(1, n):
        if y[i - 1] < y[i]:
            out.append(i)
    if y[n - 1] < 0:
        out.append(n)
    return frozenset(out)


@lru_cache(maxsize=None)
def length(g: ExtAffineWeylElement) -> int:
    """Coxeter length: hyperplanes separating the base alcove from its image."""
    n = g.rank
    scale = 2 * (n + 1)
    y0 = tuple(n + 1 - j for j in range(1, n + 1))
    y = _scaled_image(g)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += abs((y[i] - y[j]) // scale - (y0[i] - y0[j]) // scale)
            total += abs((y[i] + y[j]) // scale - (y0[i] + y0[j]) // scale)
        total += abs((2 * y[i]) // scale - (2 * y0[i]) // scale)
    return total


@lru_cache(maxsize=None)
def reduced_word(g: ExtAffineWeylElement) -> Word:
    """The canonical reduced word, stripping the smallest-index descent.

    Evaluating the result left to right reproduces g; its length is the
    Coxeter length of g.
    """
    letters = []
    n = g.rank
    while True:
        d = descents(g)
        if not d:
            break
        i = min(d)
        letters.append(i)
        g = generator(n, i) * g
    return tuple(letters)


def evaluate_word(n: int, word: Iterable[int]) -> ExtAffineWeylElement:
    g = identity(n)
    for i in word:
        g = g * generator(n, i)
    return g


def weighted_length(g: ExtAffineWeylElement) -> int:
    """Count of non-special letters in a reduced word (the s_0 letters weigh 0)."""
    return sum(1 for i in reduced_word(g) if i != 0)


def in_affine_subgroup(g: ExtAffineWeylElement) -> bool:
    """Membership in W_a: the translation coordinates sum to an even number."""
    return sum(g.trans) % 2 == 0


@lru_cache(maxsize=None)
def right_descents(g: ExtAffineWeylElement) -> frozenset[int]:
    return descents(g.inverse())


@lru_cache(maxsize=None)
def parabolic_subgroup(n: int, J: frozenset[int]) -> tuple[ExtAffineWeylElement, ...]:
    """All elements of W_J, by bounded closure; raises if W_J is infinite."""
    bound = (2 ** n) * _factorial(n)
    gens = [generator(n, i) for i in sorted(J)]
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    if len(seen) > bound:
                        raise ValueError(
                            f"generators {sorted(J)} generate an infinite subgroup"
                        )
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen, key=lambda g: (length(g), reduced_word(g))))


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def parabolic_factorize(
    g: ExtAffineWeylElement, J: Iterable[int]
) -> tuple[ExtAffineWeylElement, ExtAffineWeylElement]:
    """Write g = rep * tail with tail in W_J and rep minimal in g W_J.

    Lengths add: length(g) = length(rep) + length(tail).  Obtained by
    stripping right descents lying in J.
    """
    n = g.rank
    Jset = frozenset(J)
    parabolic_subgroup(n, Jset)  # validates finiteness
    tail = identity(n)
    while True:
        ds = right_descents(g) & Jset
        if not ds:
            return g, tail
        i = min(ds)
        s = generator(n, i)
        g = g * s
        tail = s * tail


def is_minimal_coset_rep(g: ExtAffineWeylElement, J: Iterable[int]) -> bool:
    """No right descent of g lies in J."""
    return not (right_descents(g) & frozenset(J))


def ball(n: int, L: int) -> list[ExtAffineWeylElement]:
    """All elements of Coxeter length <= L, ordered by length then canonical word."""
    layers = [[identity(n)]]
    seen = {identity(n)}
    for _ in range(L):
        nxt = set()
        for g in layers[-1]:
            for i in range(n + 1):
                h = generator(n, i) * g
                if h not in seen:
                    nxt.add(h)
        layer = sorted(nxt, key=reduced_word)
        seen.update(layer)
        layers.append(layer)
    return [g for layer in layers for g in layer]


# -- serialization ----------------------------------------------------------

_TEXT_RE = re.compile(r"^perm=\[([-+0-9,\s]*)\];trans=\[([-+0-9,\s]*)\]$")


def element_to_text(g: ExtAffineWeylElement) -> str:
    perm = ",".join(str(v) for v in g.perm.images)
    trans = ",".join(str(v) for v in g.trans)
    return f"perm=[{perm}];trans=[{trans}]"


def element_from_text(text: str) -> ExtAffineWeylElement:
    m = _TEXT_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse element text: {text!r}")
    perm = tuple(int(v) for v in m.group(1).split(",") if v.strip())
    trans = tuple(int(v) for v in m.group(2).split(",") if v.strip())
    return ExtAffineWeylElement(SignedPermutation(perm), trans)


def element_to_json(g: ExtAffineWeylElement) -> dict:
    return {"perm": list(g.perm.images), "trans": list(g.trans)}


def element_from_json(data: dict) -> ExtAffineWeylElement:
    return ExtAffineWeylElement(
        SignedPermutation(tuple(int(v) for v in data["perm"])),
        tuple(int(v) for v in data["trans"]),
    )


# -- the type-D extended group and folding ----------------------------------


@dataclass(frozen=True)
class DExtElement:
    """An element of the extended affine group of the D_{n+1} root system.

    Acts on n+1 coordinates by x |-> perm(x) + trans.  The ambient storage
    allows any hyperoctahedral Weyl part; elements of the extended group
    W'_e = W' x Z^{n+1} have an even number of sign changes.
    """

    perm: SignedPermutation
    trans: tuple[int, ...]

    def __post_init__(self):
        if self.perm.size != len(self.trans):
            raise ValueError("permutation and translation ranks differ")

    @property
    def dim(self) -> int:
        return len(self.trans)

    def __mul__(self, other: "DExtElement") -> "DExtElement":
        if self.dim != other.dim:
            raise ValueError("rank mismatch")
        perm = self.perm * other.perm
        moved = self.perm.apply(other.trans)
        return DExtElement(perm, tuple(a + b for a, b in zip(moved, self.trans)))

    def inverse(self) -> "DExtElement":
        pinv = self.perm.inverse()
        return DExtElement(pinv, tuple(-v for v in pinv.apply(self.trans)))

    def act(self, point: Sequence) -> tuple:
        moved = self.perm.apply([Fraction(x) for x in point])
        return tuple(x + t for x, t in zip(moved, self.trans))

    def in_d_weyl_extension(self) -> bool:
        """Whether the Weyl part has an even number of sign changes."""
        return self.perm.sign_changes() % 2 == 0


def d_identity(n: int) -> DExtElement:
    return DExtElement(SignedPermutation.identity(n + 1), (0,) * (n + 1))


def d_generator(n: int, i: int) -> DExtElement:
    """Generators of W'_e on n+1 coordinates, 0 <= i <= n+1.

    s_i swaps coordinates i, i+1 for 1 <= i <= n; s_{n+1} is the reflection
    in e_n + e_{n+1}; s_0 is the central symmetry about the point (1/2, 0) of
    the (e_1, e_{n+1})-plane, the unique nontrivial stabilizer of the base
    chamber.
    """
    m = n + 1
    if not 0 <= i <= m:
        raise ValueError(f"generator index {i} out of range")
    images = list(range(1, m + 1))
    trans = [0] * m
    if i == 0:
        images[0] = -1
        images[m - 1] = -m
        trans[0] = 1
    elif i <= n:
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        images[m - 2] = -m
        images[m - 1] = -(m - 1)
    return DExtElement(SignedPermutation(tuple(images)), tuple(trans))


def sigma(g: DExtElement) -> DExtElement:
    """Conjugation by the linear map e_{n+1} |-> -e_{n+1} (identity on E)."""
    m = g.dim
    flip = SignedPermutation(tuple(list(range(1, m)) + [-m]))
    return DExtElement(flip * g.perm * flip, flip.apply(g.trans))


def is_sigma_fixed(g: DExtElement) -> bool:
    return sigma(g) == g


def fold(g: DExtElement) -> ExtAffineWeylElement:
    """Restrict a sigma-fixed element to E = span(e_1..e_n) as an element of W_e.

    Sigma-fixed elements preserve the last coordinate axis and have zero last
    translation coordinate, so the restriction is well defined; it is an
    injective group homomorphism on the sigma-fixed subgroup.
    """
    if not is_sigma_fixed(g):
        raise ValueError("element is not sigma-fixed")
    m = g.dim
    n = m - 1
    assert abs(g.perm.images[m - 1]) == m and g.trans[m - 1] == 0
    return ExtAffineWeylElement(
        SignedPermutation(g.perm.images[:n]), g.trans[:n]
    )


def sigma_fixed_generators(n: int) -> list[DExtElement]:
    """Generators of the sigma-fixed subgroup folding onto s_0, ..., s_n of W_e."""
    gens = [d_generator(n, i) for i in range(n)]
    gens.append(d_generator(n, n) * d_generator(n, n + 1))
    return gens


def d_ball_sigma_fixed(n: int, L: int) -> list[DExtElement]:
    """Products of at most L sigma-fixed generators, deterministically ordered."""
    gens = sigma_fixed_generators(n)
    key = lambda g: (g.perm.images, g.trans)
    layers = [[d_identity(n)]]
    seen = {d_identity(n)}
    for _ in range(L):
        nxt = set()
        for g in layers[-1]:
            for s in gens:
                h = s * g
                if h not in seen:
                    nxt.add(h)
        layer = sorted(nxt, key=key)
        seen.update(layer)
        layers.append(layer)
    return [g for layer in layers for g in layer]
