"""Brute-force word-level oracle for the Hecke algebra product.

Everything here works on bare words (tuples of generator indices), with no
group elements, no alcove geometry and no length formulas:

- reducedness is decided by Tits' criterion: a word is non-reduced exactly
  when its closure under braid substitutions contains two equal adjacent
  letters;
- equal reduced words are detected through the same closure (two reduced
  words represent the same element exactly when braid moves connect them),
  and the lexicographically smallest member is the normal form;
- multiplication by a generator applies the defining quadratic recursion,
  with the shorter word found inside the closure.

This is exponential in word length and only meant as an independent check
for small ranks and short words.
"""

from __future__ import annotations

from ctilde.laurent import ONE, Q, LaurentPoly

Q_MINUS_ONE = Q + LaurentPoly.from_int(-1)
Q_INV = LaurentPoly.q_power(-1)
Q_INV_MINUS_ONE = Q_INV + LaurentPoly.from_int(-1)

_RULES: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
_CLOSURES: dict[tuple[int, tuple[int, ...]], frozenset] = {}


def braid_rules(n: int):
    if n not in _RULES:
        out = []

        def add(i, j, m):
            a = tuple(i if k % 2 == 0 else j for k in range(m))
            b = tuple(j if k % 2 == 0 else i for k in range(m))
            out.append((a, b))
            out.append((b, a))

        if n >= 2:
            add(0, 1, 4)
            add(n - 1, n, 4)
            for i in range(1, n - 1):
                add(i, i + 1, 3)
        for i in range(n + 1):
            for j in range(i + 2, n + 1):
                add(i, j, 2)
        _RULES[n] = out
    return _RULES[n]


def closure(n: int, word: tuple[int, ...]) -> frozenset:
    """All words reachable from `word` by braid substitutions."""
    key = (n, word)
    cached = _CLOSURES.get(key)
    if cached is not None:
        return cached
    rules = braid_rules(n)
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for pat, rep in rules:
                L = len(pat)
                for k in range(len(w) - L + 1):
                    if w[k:k + L] == pat:
                        w2 = w[:k] + rep + w[k + L:]
                        if w2 not in seen:
                            seen.add(w2)
                            nxt.append(w2)
        frontier = nxt
    result = frozenset(seen)
    for w in seen:
        _CLOSURES[(n, w)] = result
    return result


def is_reduced(n: int, word: tuple[int, ...]) -> bool:
    for w in closure(n, word):
        if any(w[k] == w[k + 1] for k in range(len(w) - 1)):
            return False
    return True


def normal_form(n: int, word: tuple[int, ...]) -> tuple[int, ...]:
    assert is_reduced(n, word), word
    return min(closure(n, word))


def _add(acc: dict, w: tuple[int, ...], c: LaurentPoly) -> None:
    s = acc.get(w)
    s = c if s is None else s + c
    if s:
        acc[w] = s
    elif w in acc:
        del acc[w]


def lmul_gen(n: int, i: int, element: dict) -> dict:
    """T_{s_i} times a combination of normal-form words."""
    out: dict = {}
    for w, c in element.items():
        wi = (i,) + w
        if is_reduced(n, wi):
            _add(out, normal_form(n, wi), c)
        else:
            member = next(x for x in closure(n, w) if x and x[0] == i)
            shorter = normal_form(n, member[1:])
            if i == 0:
                _add(out, shorter, c)
            else:
                _add(out, shorter, Q * c)
                _add(out, w, Q_MINUS_ONE * c)
    return out


def rmul_gen(n: int, element: dict, i: int) -> dict:
    """A combination of normal-form words times T_{s_i}."""
    out: dict = {}
    for w, c in element.items():
        wi = w + (i,)
        if is_reduced(n, wi):
            _add(out, normal_form(n, wi), c)
        else:
            member = next(x for x in closure(n, w) if x and x[-1] == i)
            shorter = normal_form(n, member[:-1])
            if i == 0:
                _add(out, shorter, c)
            else:
                _add(out, shorter, Q * c)
                _add(out, w, Q_MINUS_ONE * c)
    return out


def rmul_gen_inverse(n: int, element: dict, i: int) -> dict:
    if i == 0:
        return rmul_gen(n, element, 0)
    out: dict = {}
    for w, c in rmul_gen(n, element, i).items():
        _add(out, w, Q_INV * c)
    for w, c in element.items():
        _add(out, w, Q_INV_MINUS_ONE * c)
    return out


def product_of_letters(n: int, letters) -> dict:
    """T_{i_1} T_{i_2} ... T_{i_k} as a combination of normal-form words."""
    acc = {(): ONE}
    for i in reversed(tuple(letters)):
        acc = lmul_gen(n, i, acc)
    return acc


def theta_from_words(n: int, mu_word, nu_word) -> dict:
    """T_{w(mu)} (T_{w(nu)})^{-1} for reduced words of two translations."""
    assert is_reduced(n, tuple(mu_word)) and is_reduced(n, tuple(nu_word))
    acc = {(): ONE}
    for i in reversed(tuple(nu_word)):
        acc = rmul_gen_inverse(n, acc, i)
    for i in reversed(tuple(mu_word)):
        acc = lmul_gen(n, i, acc)
    return acc


def module_reduce(n: int, element: dict, J, chi_values: dict) -> dict:
    """Strip right letters lying in J, multiplying by character values."""
    Jset = frozenset(J)
    out: dict = {}
    for w, c in element.items():
        coeff = c
        while True:
            member = next((x for x in closure(n, w) if x and x[-1] in Jset), None)
            if member is None:
                break
            coeff = coeff * chi_values[member[-1]]
            w = normal_form(n, member[:-1])
        _add(out, w, coeff)
    return out


def from_hecke(element) -> dict:
    """Re-key a HeckeElement by oracle normal forms (comparison bridge only)."""
    from ctilde.weyl import reduced_word

    out: dict = {}
    for g, c in element.items():
        word = reduced_word(g)
        assert is_reduced(element.n, word)
        _add(out, normal_form(element.n, word), c)
    return out
