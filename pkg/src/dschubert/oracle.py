"""Brute-force divided-difference engine.

Everything here works on explicit polynomials: double Schubert polynomials
from the staircase product, basis expansion via the vanishing property, and
skew divided differences from their recurrence.  Slow but independent of the
path formulas, so it doubles as the test oracle.
"""

from __future__ import annotations

from functools import lru_cache

from .perm import Permutation, IDENTITY, length, simple
from .poly import Poly, X, Y, Z, var, family_of, index_of, linear

__all__ = [
    "InexactDivision", "divided_difference", "apply_word", "swap_variables",
    "double_schubert", "skew_dd", "expand_in_schubert_basis",
    "oracle_coefficient", "reduced_word", "set_x_to_y",
]


class InexactDivision(ArithmeticError):
    """Raised if a divided difference leaves a remainder (never on valid input)."""


def divided_difference(p: Poly, i: int, family: int = X) -> Poly:
    """``(p - s_i p) / (v_i - v_{i+1})`` where ``v`` is the chosen family.

    Works monomial by monomial: for ``v_i^a v_{i+1}^b`` with ``a > b`` the
    quotient is ``sum_t v_i^(a-1-t) v_(i+1)^(b+t)`` over ``0 <= t < a-b``.
    """
    vi, vj = var(family, i), var(family, i + 1)
    out: dict = {}
    for m, c in p.terms.items():
        a = b = 0
        rest = []
        for v, e in m:
            if v == vi:
                a = e
            elif v == vj:
                b = e
            else:
                rest.append((v, e))
        if a == b:
            continue
        if a > b:
            sign, hi, lo = 1, a, b
        else:
            sign, hi, lo = -1, b, a
        for t in range(hi - lo):
            # for a < b the roles of the two variables swap
            ei, ej = (hi - 1 - t, lo + t) if sign > 0 else (lo + t, hi - 1 - t)
            key = list(rest)
            if ei:
                key.append((vi, ei))
            if ej:
                key.append((vj, ej))
            key.sort()
            key = tuple(key)
            s = out.get(key, 0) + sign * c
            if s:
                out[key] = s
            else:
                del out[key]
    return Poly._raw(out)


def swap_variables(p: Poly, i: int, family: int = X) -> Poly:
    """The action of ``s_i`` on one variable family."""
    vi, vj = var(family, i), var(family, i + 1)

    def fn(v):
        if v == vi:
            return vj
        if v == vj:
            return vi
        return v
    return p.rename(fn)


def apply_word(p: Poly, word, family: int = X) -> Poly:
    """Apply ``d_{w1} d_{w2} ... d_{wr}`` as an operator product.

    The rightmost letter acts first, so passing a reduced word of ``u``
    yields ``d^u(p)``.
    """
    for i in reversed(tuple(word)):
        if not p:
            break
        p = divided_difference(p, i, family)
    return p


def reduced_word(u: Permutation) -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_l)`` with ``u = s_{i_1} ... s_{i_l}``."""
    w = list(u)
    letters = []
    while True:
        i = next((j for j in range(len(w) - 1) if w[j] > w[j + 1]), None)
        if i is None:
            break
        w[i], w[i + 1] = w[i + 1], w[i]
        letters.append(i + 1)
    return tuple(reversed(letters))


@lru_cache(maxsize=None)
def double_schubert(u: Permutation, family: int = Y) -> Poly:
    """``S_u(x; c)`` with ``c`` the y or z family."""
    u = Permutation(u)
    n = len(u) - 1
    if n <= 0:
        return Poly(1)
    asc = next((i for i in range(1, n + 1) if u(i) < u(i + 1)), None)
    if asc is None:
        top = Poly(1)
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                top = top * linear(var(X, i), var(family, j))
        return top
    return divided_difference(double_schubert(u.swap_positions(asc, asc + 1), family), asc)


def set_x_to_y(p: Poly) -> Poly:
    def fn(v):
        if family_of(v) == X:
            return var(Y, index_of(v))
        return v
    return p.rename(fn)


def skew_dd(u: Permutation, w: Permutation, p: Poly) -> Poly:
    """``d_u^w(p)`` from the recurrence on the largest descent of ``w``."""
    return _skew(Permutation(u), Permutation(w), p)


@lru_cache(maxsize=200_000)
def _skew(u: Permutation, w: Permutation, p: Poly) -> Poly:
    if not w:
        return p if not u else Poly()
    if length(u) > length(w) or not p:
        return Poly()
    i = max(w.descents())
    ws = w.swap_positions(i, i + 1)
    out = _skew(u, ws, divided_difference(p, i))
    if u.has_descent(i):
        out = out + _skew(u.swap_positions(i, i + 1), ws, swap_variables(p, i))
    return out


def expand_in_schubert_basis(p: Poly) -> dict[Permutation, Poly]:
    """Coefficients of ``p`` in the basis ``S_w(x; y)``.

    Walks ``w`` by left multiplication, since ``d^{s_i w} = d_i d^w`` when
    the length goes up, and drops a branch as soon as ``d^w(p)`` vanishes.
    """
    out: dict = {}
    seen = {IDENTITY}
    stack = [(IDENTITY, p)]
    while stack:
        w, q = stack.pop()
        c = set_x_to_y(q)
        if c:
            out[w] = c
        top = q.max_index(X)
        winv = w.inverse()
        for i in range(1, top + 1):
            if winv(i) > winv(i + 1):
                continue
            sw = simple(i) * w
            if sw in seen:
                continue
            seen.add(sw)
            nq = divided_difference(q, i)
            if nq:
                stack.append((sw, nq))
    return out


def oracle_coefficient(u: Permutation, v: Permutation, family: int = Z) -> dict[Permutation, Poly]:
    """Expansion of ``S_u(x;y) S_v(x;c)`` by explicit multiplication."""
    return expand_in_schubert_basis(double_schubert(Permutation(u), Y)
                                    * double_schubert(Permutation(v), family))
