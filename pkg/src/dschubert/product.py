"""Products of double Schubert polynomials.

The positive formula multiplies ``S_u(x;y)`` by the dominant polynomial
``S_{mu_v}(x;z)``, written as a product of factorial elementary polynomials
``E_{lambda_j}(x; z_j)``, one Pieri step per column, then shifts endpoints
back by ``v^{-1} mu_v``.  It needs one of two hypotheses on ``(u, v)``.

Outside those hypotheses we climb ``v`` to a dominant permutation on the
left instead.  Divided differences in ``z`` satisfy
``d^z_j S_w(x;z) = -S_{s_j w}(x;z)`` when ``s_j w < w`` and never touch the
``S_w(x;y)`` basis, so every coefficient of ``S_u S_v`` is ``(-1)^m`` times a
z-divided difference of the dominant coefficients.  This is exact for all
``u, v`` and is what the ordinary kernel runs on.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .oracle import apply_word, oracle_coefficient
from .perm import (
    Permutation, IDENTITY, bruhat_leq, code, conjugate, dominant_approximation, length,
)
from .pieri import CoeffMap, pieri_successors, pieri_targets, successor_table
from .poly import (
    Poly, Factored, X, Y, Z, var, family_of, index_of, linear,
    expand_in_negative_roots,
)

__all__ = [
    "PieriPath", "Factor", "Hypotheses", "HypothesesFail", "LengthOrder",
    "enumerate_paths", "d_coefficients", "check_hypotheses", "e_coefficients",
    "product_mixed", "product_equivariant", "product_ordinary",
    "reduction_coefficients", "schubert_positive", "skew_schubert",
    "skew_schubert_factored", "to_negative_roots",
]


class HypothesesFail(ValueError):
    """Neither separated descents nor the general-word condition holds."""


class LengthOrder(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    row: int
    column: int
    value: int

    @property
    def kind(self) -> str:
        if self.value < self.column:
            return "negative"
        if self.value == self.column:
            return "zero"
        return "positive"


@dataclass(frozen=True)
class PieriPath:
    chain: tuple
    shape: tuple
    steps: tuple

    def weight(self) -> Factored:
        factors = []
        for j, step in enumerate(self.steps, start=1):
            factors.extend((var(Y, i), var(Z, j)) for i in step.fixed_values)
        return Factored.product(factors)

    def factors(self) -> list[Factor]:
        out = []
        for q, step in enumerate(self.steps, start=1):
            prev, cur = self.chain[q - 1], self.chain[q]
            for a in range(1, step.k + 1):
                if prev(a) == cur(a):
                    out.append(Factor(a, q, cur(a)))
        return out


@dataclass(frozen=True)
class Hypotheses:
    verdict: str          # "separated", "general_word" or "fails"
    p: int | None = None
    word: tuple = ()

    @property
    def ok(self) -> bool:
        return self.verdict != "fails"


def enumerate_paths(u: Permutation, lam: Iterable[int]) -> list[tuple[PieriPath, Factored]]:
    """Every element of ``Path_lambda(u, *)`` with its weight."""
    u = Permutation(u)
    lam = tuple(lam)
    out = []

    def rec(chain, steps):
        j = len(steps)
        if j == len(lam):
            path = PieriPath(tuple(chain), lam, tuple(steps))
            out.append((path, path.weight()))
            return
        for step in pieri_successors(chain[-1], lam[j]):
            rec(chain + [step.target], steps + [step])

    rec([u], [])
    return out


def _fold(u: Permutation, lam: tuple, max_gain: int | None, factored: bool):
    """Column-by-column accumulation of path weights per endpoint."""
    state = {u: Factored.one() if factored else Poly(1)}
    budget = max_gain
    for j, k in enumerate(lam, start=1):
        nxt: dict = {}
        zj = var(Z, j)
        cache: dict = {}
        lu = length(u)
        for x, coeff in state.items():
            room = None if budget is None else budget - (length(x) - lu)
            for w, gain, fixed in successor_table(x, k, None if room is None else min(room, k)):
                if factored:
                    term = coeff.times_factors(tuple((var(Y, i), zj) for i in fixed))
                else:
                    if fixed not in cache:
                        p = Poly(1)
                        for i in fixed:
                            p = p * linear(var(Y, i), zj)
                        cache[fixed] = p
                    term = coeff * cache[fixed]
                if w in nxt:
                    nxt[w] = nxt[w] + term
                else:
                    nxt[w] = term
        state = nxt
    return state


def d_coefficients(u: Permutation, lam: Iterable[int], max_gain: int | None = None) -> CoeffMap:
    """``w -> d_{u,lambda}^w(y;z)``, multiplying ``E_{lambda_1}(x;z_1)`` first."""
    u = Permutation(u)
    fac = _fold(u, tuple(lam), max_gain, True)
    fac = {w: f for w, f in fac.items() if f}
    out = CoeffMap({w: f.expand() for w, f in fac.items()}, factored=fac, method="formula")
    return out.clean()


def check_hypotheses(u: Permutation, v: Permutation) -> Hypotheses:
    u, v = Permutation(u), Permutation(v)
    du, dv = u.descents(), v.descents()
    p = max(dv, default=1)
    if not du or p <= min(du):
        return Hypotheses("separated", p=p)
    word = dominant_approximation(v).word
    if all(not u.has_descent(i) for i in word):
        return Hypotheses("general_word", word=word)
    return Hypotheses("fails", word=word)


def _shift_data(v: Permutation):
    dom = dominant_approximation(v)
    shift = v.inverse() * dom.mu          # v^{-1} mu_v
    return dom, shift.inverse(), len(dom.word)


def e_coefficients(u: Permutation, v: Permutation) -> CoeffMap:
    """``S_u(x;y) S_v(x;z)`` by the path formula; needs the hypotheses."""
    u, v = Permutation(u), Permutation(v)
    hyp = check_hypotheses(u, v)
    if not hyp.ok:
        raise HypothesesFail(f"no formula for u={u}, v={v}")
    dom, back, m = _shift_data(v)
    d = d_coefficients(u, dom.lam)
    out = CoeffMap(factored={}, method="formula")
    for wp, f in d.factored.items():
        w = wp * back
        if length(w) != length(wp) - m:
            continue
        out[w] = d[wp]
        out.factored[w] = f
    return out


def _z_climb(v: Permutation):
    """Left climb of ``v`` to a dominant ``v'``; ``v = s_{j_1} ... `` reading."""
    dom = dominant_approximation(v.inverse())
    return dom.mu.inverse(), dom.word


def reduction_coefficients(u: Permutation, v: Permutation) -> CoeffMap:
    """Exact expansion for any ``u, v`` by z-divided differences."""
    u, v = Permutation(u), Permutation(v)
    top, word = _z_climb(v)
    lam = conjugate(code(top))
    state = _fold(u, lam, length(v), False)
    sign = -1 if len(word) % 2 else 1
    out = CoeffMap(method="reduction")
    for w, p in state.items():
        q = apply_word(p, word, Z)
        if q:
            out[w] = q * sign
    return out


def product_mixed(u: Permutation, v: Permutation, method: str = "auto") -> CoeffMap:
    """``S_u(x;y) S_v(x;z)`` expanded in ``S_w(x;y)``.

    ``method`` is ``auto`` (formula when it applies, else reduction),
    ``formula``, ``reduction`` or ``oracle``.
    """
    u, v = Permutation(u), Permutation(v)
    if method == "oracle":
        return CoeffMap(oracle_coefficient(u, v), method="oracle")
    if method == "reduction":
        return reduction_coefficients(u, v)
    if method == "formula" or check_hypotheses(u, v).ok:
        return e_coefficients(u, v)
    return reduction_coefficients(u, v)


def _z_to_y(v: int) -> int:
    return var(Y, index_of(v)) if family_of(v) == Z else v


def _specialize_factor(f):
    a, b = f
    nb = _z_to_y(b)
    if a == nb:
        return None
    return (a, nb)


def product_equivariant(u: Permutation, v: Permutation, method: str = "auto") -> CoeffMap:
    """``S_u(x;y) S_v(x;y)``; formula coefficients stay in factored form.

    With ``z = y`` the product is symmetric, so the formula is tried in
    both orders.  Paths with a zero factor drop out before expansion.
    """
    u, v = Permutation(u), Permutation(v)
    pair = None
    if method in ("auto", "formula"):
        if check_hypotheses(u, v).ok:
            pair = (u, v)
        elif check_hypotheses(v, u).ok:
            pair = (v, u)
        elif method == "formula":
            raise HypothesesFail(f"no formula for u={u}, v={v} in either order")
    if pair is not None:
        e = e_coefficients(*pair)
        out = CoeffMap(factored={}, method="formula")
        for w, f in e.factored.items():
            g = f.map_factors(_specialize_factor)
            if g:
                out[w] = g.expand()
                out.factored[w] = g
        return out.clean()
    base = product_mixed(u, v, "oracle" if method == "oracle" else "reduction")
    out = CoeffMap(method=base.method)
    for w, p in base.items():
        q = p.rename(_z_to_y)
        if q:
            out[w] = q
    return out


def to_negative_roots(coeffs: dict) -> dict:
    """Rewrite each equivariant coefficient in ``beta_i = y_{i+1} - y_i``."""
    return {w: expand_in_negative_roots(p) for w, p in coeffs.items()}


# ---- ordinary kernel ---------------------------------------------------


def _orientations(u: Permutation, v: Permutation):
    # c_{uv}^w = c_{vu}^w once y = z = 0
    return [(u, v), (v, u)]


def _cost(a: Permutation, b: Permutation) -> tuple:
    top, word = _z_climb(b)
    return (len(word), length(top), len(a))


def _monk_step(t: Permutation, j: int) -> list:
    """``z_j S_t(z)``: covers ``t t_{jq}``, signed by the side of ``q``."""
    n = max(len(t), j) + 1
    w = t.window(n)
    tj = w[j - 1]
    out = []
    # q > j: need t(j) < t(q) with nothing in between
    lo_best = None
    for q in range(j + 1, n + 1):
        x = w[q - 1]
        if x > tj and (lo_best is None or x < lo_best):
            lo_best = x
            out.append((t.swap_positions(j, q), 1))
    # q < j: need t(q) < t(j) with nothing in between
    hi_best = 0
    for q in range(j - 1, 0, -1):
        x = w[q - 1]
        if hi_best < x < tj:
            hi_best = x
            out.append((t.swap_positions(q, j), -1))
    return out


def _monk_power(tau: Permutation, j: int, c: int, below) -> dict:
    """``z_j^c S_tau(z)`` in the single Schubert basis, restricted by ``below``."""
    cur = {tau: 1}
    for _ in range(c):
        nxt: dict = defaultdict(int)
        for t, coef in cur.items():
            for r, sign in _monk_step(t, j):
                if below(r):
                    nxt[r] += sign * coef
        cur = {t: c2 for t, c2 in nxt.items() if c2}
        if not cur:
            break
    return cur


def _ordinary_oriented(a: Permutation, b: Permutation, order=None) -> dict:
    """Ordinary structure constants for one orientation.

    Column ``j`` of a path contributes ``(-z_j)^{|P|}``; we keep the running
    z-polynomial in the basis ``S_tau(z)`` and finally read off the coefficient
    of ``S_sigma(z)``, where ``d^sigma`` is the z-divided difference that
    carries the dominant ``b'`` back down to ``b``.  The two signs ``(-1)^m``
    cancel.  Monk's rule only moves ``tau`` up in Bruhat order, so a ``tau``
    is kept only while later columns can still carry it to ``sigma``.
    With ``y = z = 0`` the columns commute, so ``order`` may permute them.
    """
    top, word = _z_climb(b)
    lam = conjugate(code(top))
    r = len(lam)
    if order is None:
        order = tuple(range(1, r + 1))
    ks = [lam[j - 1] for j in order]
    sigma = Permutation()
    for i in word:
        sigma = sigma.swap_positions(i, i + 1)
    m = length(sigma)
    need = length(b)
    tail = [sum(ks[s:]) for s in range(r + 1)]
    prefix = [sum(ks[:s]) for s in range(r + 1)]

    @lru_cache(maxsize=None)
    def below(t):
        return bruhat_leq(t, sigma)

    @lru_cache(maxsize=None)
    def monk(t, j, c):
        return tuple(_monk_power(t, j, c, below).items())

    @lru_cache(maxsize=None)
    def alive(t, s):
        # can the columns after step s still turn S_t into one containing S_sigma?
        if s == r:
            return t == sigma
        rest = m - length(t)
        return any(alive(t2, s + 1)
                   for c in range(min(ks[s], rest) + 1)
                   for t2, _ in monk(t, order[s], c))

    @lru_cache(maxsize=None)
    def options(t, s):
        # gain at step s -> surviving (tau', coefficient) pairs
        k = ks[s - 1]
        got = prefix[s - 1] - length(t)
        out = {}
        for gain in range(min(k, need - got) + 1):
            if need - got - gain > tail[s]:
                continue
            hits = tuple((t2, c2) for t2, c2 in monk(t, order[s - 1], k - gain) if alive(t2, s))
            if hits:
                out[gain] = hits
        return out

    state = {(tuple(a), IDENTITY): 1}
    for s, k in enumerate(ks, start=1):
        nxt: dict = defaultdict(int)
        table: dict = {}
        for (x, tau), c in state.items():
            opts = options(tau, s)
            if not opts:
                continue
            key = (x, max(opts))
            succ = table.get(key)
            if succ is None:
                succ = table[key] = pieri_targets(x, k, key[1])
            for w, gain in succ.items():
                hits = opts.get(gain)
                if hits:
                    for t2, c2 in hits:
                        nxt[(w, t2)] += c * c2
        state = {key: c for key, c in nxt.items() if c}
    out: dict = defaultdict(int)
    for (w, tau), c in state.items():
        if tau == sigma:
            out[Permutation._make(w)] += c
    return {w: c for w, c in out.items() if c}


def product_ordinary(u: Permutation, v: Permutation) -> dict[Permutation, int]:
    """Structure constants ``c_{uv}^w(0;0)`` as integers."""
    u, v = Permutation(u), Permutation(v)
    a, b = min(_orientations(u, v), key=lambda t: _cost(*t))
    return _ordinary_oriented(a, b)


# ---- Schubert and skew Schubert polynomials -------------------------------


def _to_xy(f):
    a, b = f
    return (var(X, index_of(a)), var(Y, index_of(b)))


def schubert_positive(v: Permutation) -> Factored:
    """``S_v(x;y)`` as a positive sum of products of ``x_i - y_j``."""
    v = Permutation(v)
    dom = dominant_approximation(v)
    target = v.inverse() * dom.mu
    d = d_coefficients(IDENTITY, dom.lam)
    f = d.factored.get(target, Factored())
    return f.map_factors(_to_xy)


def skew_schubert_factored(u: Permutation, w: Permutation, n: int) -> Factored:
    """``c_{u,w_0(n)}^w`` in factored form, families renamed to ``(x; y)``."""
    u, w = Permutation(u), Permutation(w)
    if length(u) > length(w):
        raise LengthOrder(f"length of {u} exceeds length of {w}")
    if len(u) > n + 1 or len(w) > n + 1:
        raise ValueError(f"permutations must lie in S_{n + 1}")
    lam = tuple(range(n, 0, -1))
    d = d_coefficients(u, lam, max_gain=length(w) - length(u))
    return d.factored.get(w, Factored()).map_factors(_to_xy)


def skew_schubert(u: Permutation, w: Permutation, n: int, set_y_zero: bool = False,
                  relabel: bool = False) -> Poly:
    """``c_{u,w_0(n)}^w(x;y)``; optionally ``y = 0`` and ``x_i -> x_{u^{-1}(i)}``."""
    u = Permutation(u)
    p = skew_schubert_factored(u, w, n).expand()
    if set_y_zero:
        p = p.rename(lambda v: None if family_of(v) == Y else v)
    if relabel:
        ui = u.inverse()
        p = p.rename(lambda v: var(X, ui(index_of(v))) if family_of(v) == X else v)
    return p
