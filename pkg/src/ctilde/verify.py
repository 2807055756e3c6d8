"""Named verification suites with machine-readable results.

Each suite checks one family of exact identities and returns a SuiteResult
whose ``anchor`` states the identity under test.  A result passes exactly
when its failure list is empty; failures carry the parameters needed to
reproduce the offending case.  Cases may run concurrently up to a jobs
limit, with results assembled in deterministic order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import charsum, finitew, hecke, induce, weyl

SUITE_NAMES = (
    "relations",
    "bernstein",
    "freeness",
    "homs",
    "folding",
    "finite-lemma",
    "gauss",
)

_INDEPENDENCE_SEED = 20231114


@dataclass
class SuiteResult:
    suite: str
    anchor: str
    cases: int
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "anchor": self.anchor,
            "cases": self.cases,
            "failures": self.failures,
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }


def _run_cases(cases: Sequence[tuple[dict, Callable[[], bool]]], jobs: int) -> list[dict]:
    """Run boolean cases, preserving order; return the failing case labels."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda c: c[1](), cases))
    else:
        outcomes = [fn() for _, fn in cases]
    return [label for (label, _), ok in zip(cases, outcomes) if not ok]


def suite_relations(rank: int, jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    report = hecke.verify_presentation(rank)
    failures = [{"rank": rank, "relation": c["relation"]}
                for c in report["checks"] if not c["ok"]]
    return SuiteResult(
        suite="relations",
        anchor="t_0^2 = 1, (t_i - q)(t_i + 1) = 0, and the braid relations "
               "of the C-tilde diagram",
        cases=len(report["checks"]),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def _theta_table(rank: int, lo: int, hi: int) -> dict[tuple[int, ...], hecke.HeckeElement]:
    table = {}
    for lam in induce.box_range(rank, lo, hi):
        table[lam] = hecke.theta(rank, lam)
    return table


def _theta_product(th: hecke.HeckeElement, mu, nu) -> hecke.HeckeElement:
    """th * theta_(mu - nu) through the factored form T_{t_mu} (T_{t_nu})^{-1}."""
    return th.times_basis(weyl.translation(mu)).times_basis_inverse(weyl.translation(nu))


def suite_bernstein(rank: int, lo: int = -2, hi: int = 2, jobs: int = 1,
                    independence_samples: int = 100) -> SuiteResult:
    t0 = time.perf_counter()
    box = induce.box_range(rank, lo, hi)
    sums = _theta_table(rank, 2 * lo, 2 * hi)
    table = {lam: sums[lam] for lam in box}

    cases: list[tuple[dict, Callable[[], bool]]] = []
    for lam in box:
        for mu in box:
            target = sums[tuple(a + b for a, b in zip(lam, mu))]
            dec = hecke.dominant_pair(mu)

            def check(lam=lam, mu=mu, target=target, dec=dec):
                return _theta_product(table[lam], dec[0], dec[1]) == target

            cases.append(({"lambda": list(lam), "mu": list(mu)}, check))

    # dual route: the factored product must agree with the bilinear product
    sample = box[:: max(1, len(box) // 5)]
    for lam in sample:
        mu = sample[-1]

        def cross(lam=lam, mu=mu):
            return hecke.multiply(table[lam], table[mu]) == _theta_product(
                table[lam], *hecke.dominant_pair(mu))

        cases.append(({"cross-check": True, "lambda": list(lam), "mu": list(mu)}, cross))

    rng = random.Random(_INDEPENDENCE_SEED)
    rho = tuple(range(rank, 0, -1))
    for _ in range(independence_samples):
        lam = tuple(rng.randint(-3, 3) for _ in range(rank))
        mu, nu = hecke.dominant_pair(lam)
        mu2 = tuple(a + b for a, b in zip(mu, rho))
        nu2 = tuple(a + b for a, b in zip(nu, rho))

        def indep(lam=lam, mu2=mu2, nu2=nu2):
            return hecke.theta(rank, lam) == hecke.theta_from_pair(rank, mu2, nu2)

        cases.append(({"independence": True, "lambda": list(lam)}, indep))

    failures = _run_cases(cases, jobs)
    return SuiteResult(
        suite="bernstein",
        anchor="theta_lam theta_mu = theta_{lam+mu} = theta_mu theta_lam, "
               "independent of the dominant decomposition",
        cases=len(cases),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def suite_freeness(rank: int, lo: int = -2, hi: int = 2,
                   length_bound: int | None = None, jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    box = induce.box_range(rank, lo, hi)
    bound = length_bound if length_bound is not None else induce.default_length_bound(rank, box)
    failures: list[dict] = []
    reports: list[induce.FreenessReport] = []
    modules = induce.standard_modules(rank)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(
                lambda m: induce.freeness_witness(m, box, bound), modules))
    else:
        reports = [induce.freeness_witness(m, box, bound) for m in modules]
    for m, rep in zip(modules, reports):
        if not rep.passed:
            failures.append({"module": m.describe(), "reasons": rep.failures})
    return SuiteResult(
        suite="freeness",
        anchor="the theta orbit of the cyclic vector is free of rank one "
               "on the lattice window",
        cases=len(modules),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def hom_table(rank: int) -> list[dict]:
    """The eight Hom dimensions against the two Steinberg characters."""
    rows = []
    for m in induce.standard_modules(rank):
        for sign in (+1, -1):
            st = hecke.steinberg(rank, sign)
            rows.append({
                "module": m.describe(),
                "target": st.name,
                "dim": induce.hom_dim_to_character(m, st),
            })
    return rows


def _expected_hom(module: dict, target: str) -> int:
    chi = module["character"]
    if chi == "sgn":
        return 1
    if chi == "sgn'":
        return 0
    return int((chi == "eps+") == (target == "St+"))


def suite_homs(rank: int, jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    rows = hom_table(rank)
    failures = [row for row in rows
                if row["dim"] != _expected_hom(row["module"], row["target"])]
    return SuiteResult(
        suite="homs",
        anchor="Hom(H (x)_{H_J} chi, St^+-) has dimension 1 exactly when chi "
               "matches the Steinberg character on the parabolic generators",
        cases=len(rows),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def suite_folding(rank: int, radius: int = 4, jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    cases: list[tuple[dict, Callable[[], bool]]] = []

    if rank >= 2:
        def s0_prime_identity():
            word = weyl.evaluate_word(rank, (0, 1, 0))
            refl = weyl.affine_reflection(rank, (1, 1) + (0,) * (rank - 2), 1)
            return word == refl
        cases.append(({"identity": "s_0' = s_0 s_1 s_0", "rank": rank}, s0_prime_identity))

    def sigma_on_generators():
        st = weyl.sigma(weyl.d_generator(rank, rank))
        ok = st == weyl.d_generator(rank, rank + 1)
        lam = (0,) * rank + (1,)
        tr = weyl.DExtElement(weyl.SignedPermutation.identity(rank + 1), lam)
        ok = ok and weyl.sigma(tr) == tr.inverse()
        return ok
    cases.append(({"check": "sigma swaps the fork and negates the last coordinate"},
                  sigma_on_generators))

    ball_small = weyl.d_ball_sigma_fixed(rank, radius // 2)
    ball_full = weyl.d_ball_sigma_fixed(rank, radius)

    def all_sigma_fixed():
        return all(weyl.is_sigma_fixed(g) for g in ball_full)
    cases.append(({"check": "closure under the involution"}, all_sigma_fixed))

    def injective():
        return len({weyl.fold(g) for g in ball_full}) == len(ball_full)
    cases.append(({"check": f"fold injective on the radius-{radius} ball"}, injective))

    def homomorphism():
        for g in ball_small:
            for h in ball_small:
                if weyl.fold(g * h) != weyl.fold(g) * weyl.fold(h):
                    return False
        return True
    cases.append(({"check": "fold(gh) = fold(g) fold(h)"}, homomorphism))

    def generators_hit():
        images = {weyl.fold(g) for g in ball_full}
        return all(weyl.generator(rank, i) in images for i in range(rank + 1))
    cases.append(({"check": "every W_e generator is a folded element"}, generators_hit))

    failures = _run_cases(cases, jobs)
    return SuiteResult(
        suite="folding",
        anchor="restriction to E identifies the sigma-fixed extended type-D "
               "group with W_e; s_0' = s_0 s_1 s_0",
        cases=len(cases),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


_FINITE_GROUPS = (("A", 1), ("A", 2), ("A", 3), ("A", 4),
                  ("B", 2), ("B", 3), ("B", 4), ("D", 4))


def suite_finite_lemma(jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    cases: list[tuple[dict, Callable[[], bool]]] = []
    for family, rank in _FINITE_GROUPS:
        def check(family=family, rank=rank):
            report = finitew.delta_membership(finitew.FiniteWeylGroup(family, rank))
            return report["not_in_span"] and report["sign_certificate"]
        cases.append(({"group": f"{family}{rank}"}, check))
    failures = _run_cases(cases, jobs)
    return SuiteResult(
        suite="finite-lemma",
        anchor="the delta function at the identity is not in the span of the "
               "parabolic-invariant functions (sign-character certificate)",
        cases=len(cases),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def suite_gauss(primes: Iterable[int] = (3, 5, 7, 11, 13), jobs: int = 1) -> SuiteResult:
    t0 = time.perf_counter()
    cases: list[tuple[dict, Callable[[], bool]]] = []
    for p in primes:
        for a in range(1, p):
            def check(p=p, a=a):
                rep = charsum.verify_pair(p, a)
                routes_agree = (charsum.inverse_sum(p, a) == charsum.unit_sum(p, a)
                                == charsum.full_sum(p, a) - charsum.CyclotomicInteger.one(p))
                return rep["full_sum_zero"] and rep["inverse_sum_minus_one"] and routes_agree
            cases.append(({"p": p, "a": a}, check))
    failures = _run_cases(cases, jobs)
    return SuiteResult(
        suite="gauss",
        anchor="sum_t psi(t) = 0 over F_p and sum_t psi(1/t) = -1 over its units",
        cases=len(cases),
        failures=failures,
        seconds=time.perf_counter() - t0,
    )


def run_suite(name: str, *, rank: int = 2, lo: int = -2, hi: int = 2,
              length_bound: int | None = None,
              primes: Sequence[int] = (3, 5, 7, 11, 13), jobs: int = 1) -> SuiteResult:
    if name == "relations":
        return suite_relations(rank, jobs=jobs)
    if name == "bernstein":
        return suite_bernstein(rank, lo, hi, jobs=jobs)
    if name == "freeness":
        return suite_freeness(rank, lo, hi, length_bound, jobs=jobs)
    if name == "homs":
        return suite_homs(rank, jobs=jobs)
    if name == "folding":
        return suite_folding(rank, jobs=jobs)
    if name == "finite-lemma":
        return suite_finite_lemma(jobs=jobs)
    if name == "gauss":
        return suite_gauss(primes, jobs=jobs)
    raise ValueError(f"unknown suite {name!r}")
