"""Modules induced from one-dimensional characters of parabolic subalgebras.

H (x)_{H_J} chi has basis {T_w (x) 1} indexed by the minimal-length
representatives of the left cosets w W_J: reduction strips right descents in
J, multiplying by the character value of the stripped tail (valid because
lengths add in the parabolic factorization).

The distinguished modules are (H_n, sgn), (H_n, sgn'), (H_0, eps+) and
(H_0, eps-); these are the Iwahori components of Whittaker/Bessel model
spaces and of the restricted Steinberg representation.  The freeness witness
certifies, window by window, that the Bernstein elements theta_lam move the
cyclic vector to vectors with full rank and an injective triangular leading
structure, the finite shadow of freeness of rank one over the commutative
subalgebra A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .laurent import ONE, LaurentMatrix, LaurentPoly, lp
from .weyl import (
    ExtAffineWeylElement,
    ball,
    element_to_text,
    generator,
    identity,
    is_minimal_coset_rep,
    length,
    parabolic_factorize,
    reduced_word,
    translation,
)
from .hecke import (
    CharacterSpec,
    HeckeElement,
    ParabolicLabel,
    basis,
    character_word_value,
    eps,
    h0_label,
    hn_label,
    multiply,
    sgn,
    sgn_prime,
    theta,
)


@dataclass(frozen=True)
class InducedModule:
    """H (x)_{H_J} chi for a character chi of the parabolic subalgebra H_J."""

    n: int
    label: ParabolicLabel
    chi: CharacterSpec

    def __post_init__(self):
        if self.chi.domain != self.label:
            raise ValueError("character domain does not match the parabolic label")
        if self.chi.rank != self.n:
            raise ValueError("character rank mismatch")

    @property
    def J(self) -> frozenset[int]:
        return self.label.indices

    def describe(self) -> dict:
        return {"J": sorted(self.J), "character": self.chi.name}


def unramified_module(n: int) -> InducedModule:
    """(H_n, sgn'): the Iwahori component of the unramified Bessel model."""
    return InducedModule(n, hn_label(n), sgn_prime(n))


def whittaker_module(n: int) -> InducedModule:
    """(H_n, sgn): the module whose presence detects Whittaker functionals."""
    return InducedModule(n, hn_label(n), sgn(n))


def ramified_module(n: int, sign: int) -> InducedModule:
    """(H_0, eps+-): the ramified Bessel / restricted Steinberg modules."""
    return InducedModule(n, h0_label(n), eps(n, sign))


def standard_modules(n: int) -> list[InducedModule]:
    return [
        unramified_module(n),
        whittaker_module(n),
        ramified_module(n, +1),
        ramified_module(n, -1),
    ]


class ModuleVector:
    """A finitely supported combination of basis vectors T_w (x) 1.

    Support elements must be minimal coset representatives.
    """

    __slots__ = ("module", "_c")

    def __init__(self, module: InducedModule,
                 coeffs: Mapping[ExtAffineWeylElement, LaurentPoly] | None = None):
        self.module = module
        self._c: dict[ExtAffineWeylElement, LaurentPoly] = {}
        if coeffs:
            for w, c in coeffs.items():
                c = lp(c)
                if c:
                    if not is_minimal_coset_rep(w, module.J):
                        raise ValueError(f"{element_to_text(w)} is not a minimal coset rep")
                    self._c[w] = c

    def items(self):
        return self._c.items()

    def support(self):
        return self._c.keys()

    def coeff(self, w: ExtAffineWeylElement) -> LaurentPoly:
        return self._c.get(w, LaurentPoly.zero())

    def __len__(self):
        return len(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.module == other.module and self._c == other._c

    def scale(self, c) -> "ModuleVector":
        c = lp(c)
        out = ModuleVector(self.module)
        if c:
            out._c = {w: c * v for w, v in self._c.items()}
        return out

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.module != other.module:
            raise ValueError("module mismatch")
        c = dict(self._c)
        for w, v in other._c.items():
            s = c.get(w)
            s = v if s is None else s + v
            if s:
                c[w] = s
            elif w in c:
                del c[w]
        out = ModuleVector(self.module)
        out._c = c
        return out

    def __repr__(self):
        terms = sorted(self._c, key=lambda w: (length(w), reduced_word(w)))
        body = ", ".join(f"[{','.join(map(str, reduced_word(w)))}]: {self._c[w].pretty()}"
                         for w in terms)
        return f"ModuleVector({body or '0'})"


def generator_vector(m: InducedModule) -> ModuleVector:
    """The cyclic vector T_e (x) 1."""
    return ModuleVector(m, {identity(m.n): ONE})


def reduce_basis(m: InducedModule, w: ExtAffineWeylElement) -> ModuleVector:
    """Write T_w (x) 1 in the minimal-representative basis."""
    rep, tail = parabolic_factorize(w, m.J)
    value = character_word_value(m.chi, reduced_word(tail))
    return ModuleVector(m, {rep: value})


def act(m: InducedModule, h: HeckeElement, v: ModuleVector) -> ModuleVector:
    """The module action of a Hecke element, via lift-multiply-reduce."""
    if h.n != m.n:
        raise ValueError("rank mismatch")
    acc: dict[ExtAffineWeylElement, LaurentPoly] = {}
    for w, cw in v.items():
        prod = multiply(h, basis(w))
        for u, cu in prod.items():
            rep, tail = parabolic_factorize(u, m.J)
            val = cw * cu * character_word_value(m.chi, reduced_word(tail))
            s = acc.get(rep)
            s = val if s is None else s + val
            if s:
                acc[rep] = s
            elif rep in acc:
                del acc[rep]
    out = ModuleVector(m)
    out._c = acc
    return out


def minimal_coset_reps(m: InducedModule, L: int) -> list[ExtAffineWeylElement]:
    """Minimal coset representatives of length <= L, deterministically ordered."""
    return [w for w in ball(m.n, L) if is_minimal_coset_rep(w, m.J)]


@dataclass
class ActionMatrixResult:
    """The matrix of a generator on a finite window of basis vectors.

    Columns whose image leaves the window are flagged partial; their recorded
    entries are still exact within the window.
    """

    matrix: LaurentMatrix
    window: list[ExtAffineWeylElement]
    partial: list[bool]

    def to_json(self) -> dict:
        return {
            "window": [element_to_text(w) for w in self.window],
            "partial": self.partial,
            "matrix": self.matrix.to_json(),
        }


def action_matrix(m: InducedModule, i: int,
                  window: Sequence[ExtAffineWeylElement]) -> ActionMatrixResult:
    """The matrix of T_{s_i} on span{T_w (x) 1 : w in window}."""
    window = list(window)
    index = {w: k for k, w in enumerate(window)}
    cols: list[dict[int, LaurentPoly]] = []
    partial: list[bool] = []
    for w in window:
        image = act(m, basis(generator(m.n, i)), ModuleVector(m, {w: ONE}))
        col: dict[int, LaurentPoly] = {}
        flag = False
        for u, c in image.items():
            k = index.get(u)
            if k is None:
                flag = True
            else:
                col[k] = c
        cols.append(col)
        partial.append(flag)
    entries = [[cols[j].get(r, LaurentPoly.zero()) for j in range(len(window))]
               for r in range(len(window))]
    return ActionMatrixResult(LaurentMatrix(entries), window, partial)


def hom_dim_to_character(m: InducedModule, chi_full: CharacterSpec) -> int:
    """dim Hom_H(H (x)_{H_J} chi, chi_full) by Frobenius reciprocity.

    Equals 1 exactly when chi_full restricted to the generators of J agrees
    with chi.
    """
    if chi_full.domain is not None:
        raise ValueError("target character must be defined on all of H")
    if chi_full.rank != m.n:
        raise ValueError("rank mismatch")
    full = chi_full.value_map
    mine = m.chi.value_map
    return int(all(full[i] == mine[i] for i in sorted(m.J)))


@dataclass
class FreenessReport:
    """Window-indexed certificate that theta moves the cyclic vector freely."""

    module: dict
    box: list[tuple[int, ...]]
    rank: int
    expected_rank: int
    leading_map: list[dict]
    passed: bool
    failures: list[str]

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "box": [list(v) for v in self.box],
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "leading_map": self.leading_map,
            "pass": self.passed,
        }


def freeness_witness(m: InducedModule, box: Iterable[Sequence[int]],
                     length_bound: int) -> FreenessReport:
    """Certify full rank and a triangular leading structure on a lattice window.

    For each lam in the box, v_lam = theta_lam . (T_e (x) 1) is expanded in
    the minimal-representative basis.  The certificate requires (i) the
    coefficient matrix to have rank |box|, (ii) each v_lam to have a unique
    maximal-length support element with coefficient +-q^k, and (iii) the map
    lam |-> leading representative to be injective.
    """
    lams = sorted(tuple(int(v) for v in lam) for lam in box)
    if len(set(lams)) != len(lams):
        raise ValueError("box contains repeated lattice points")
    failures: list[str] = []
    vectors: list[ModuleVector] = []
    needed = 0
    for lam in lams:
        v = act(m, theta(m.n, lam), generator_vector(m))
        vectors.append(v)
        if v.support():
            needed = max(needed, max(length(w) for w in v.support()))
    if needed > length_bound:
        raise ValueError(
            f"length_bound {length_bound} insufficient: supports reach length {needed}"
        )

    reps = sorted({w for v in vectors for w in v.support()},
                  key=lambda w: (length(w), reduced_word(w)))
    index = {w: k for k, w in enumerate(reps)}
    entries = [[LaurentPoly.zero()] * len(reps) for _ in lams]
    for r, v in enumerate(vectors):
        for w, c in v.items():
            entries[r][index[w]] = c
    matrix = LaurentMatrix(entries)
    rank = matrix.rank()
    if rank != len(lams):
        failures.append(f"rank {rank} != expected {len(lams)}")

    leading_map: list[dict] = []
    seen_leads: dict[ExtAffineWeylElement, tuple[int, ...]] = {}
    for lam, v in zip(lams, vectors):
        if not v.support():
            failures.append(f"lambda={lam}: zero vector")
            continue
        top = max(length(w) for w in v.support())
        leads = [w for w in v.support() if length(w) == top]
        if len(leads) != 1:
            failures.append(f"lambda={lam}: leading representative not unique")
            continue
        lead = leads[0]
        coeff = v.coeff(lead)
        if coeff.as_signed_q_power() is None:
            failures.append(f"lambda={lam}: leading coefficient {coeff.pretty()} is not +-q^k")
        if lead in seen_leads:
            failures.append(f"lambda={lam}: leading rep collides with lambda={seen_leads[lead]}")
        seen_leads[lead] = lam
        leading_map.append({
            "lambda": list(lam),
            "rep": element_to_text(lead),
            "coeff": coeff.to_json(),
        })

    return FreenessReport(
        module=m.describe(),
        box=lams,
        rank=rank,
        expected_rank=len(lams),
        leading_map=leading_map,
        passed=not failures,
        failures=failures,
    )


def box_range(n: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """The lattice box {lo..hi}^n in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for _ in range(n):
        out = [v + (k,) for v in out for k in range(lo, hi + 1)]
    return out


def default_length_bound(n: int, box: Iterable[Sequence[int]]) -> int:
    """Length of the longest translation pair occurring in theta over the box."""
    from .hecke import dominant_pair
    bound = 0
    for lam in box:
        mu, nu = dominant_pair(tuple(lam))
        bound = max(bound, length(translation(mu)) + length(translation(nu)))
    return bound
