"""The k-Pieri relation and multiplication by (factorial) elementary polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .perm import Permutation, length, grassmannian, disjoint_cycles
from .poly import Poly, Factored, Y, Z, var

__all__ = [
    "PieriStep", "CoeffMap", "BadShape", "pieri_related", "pieri_successors",
    "weight", "weight_factors", "successor_table", "pieri_targets", "mul_single_variable", "mul_elementary",
    "mul_factorial_elementary", "elem_expand", "elem_factored", "elementary_cycle",
]


class BadShape(ValueError):
    pass


class CoeffMap(dict):
    """Mapping ``w -> coefficient of S_w(x;y)``.

    ``factored`` optionally holds the same coefficients as sums of products
    of linear differences; ``method`` records how the map was produced.
    """

    def __init__(self, *args, factored=None, method: str = "", **kwargs):
        super().__init__(*args, **kwargs)
        self.factored = factored
        self.method = method

    def clean(self) -> "CoeffMap":
        for w in [w for w, c in self.items() if not c]:
            del self[w]
            if self.factored is not None:
                self.factored.pop(w, None)
        return self


@dataclass(frozen=True)
class PieriStep:
    source: Permutation
    target: Permutation
    k: int
    fixed_values: frozenset

    @property
    def gain(self) -> int:
        return length(self.target) - length(self.source)


def pieri_related(u: Permutation, w: Permutation, k: int) -> bool:
    """Decide ``u ->_k w`` from the cycle structure of ``u^{-1} w``."""
    c = u.inverse() * w
    total = 0
    for cyc in disjoint_cycles(c):
        # cycles come rotated with their largest element last
        b = cyc[-1]
        a_s = cyc[:-1]
        if b <= k or any(a > k for a in a_s):
            return False
        vals = [u(a) for a in a_s] + [u(b)]
        if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            return False
        total += len(a_s)
    return total == length(w) - length(u)


def _successors(u: Permutation, k: int, max_gain: int | None = None):
    """Yield ``(target, moved positions)`` for every ``u ->_k w``.

    Chains use transpositions ``t_{ab}`` with ``a <= k < b``, distinct ``a``,
    nondecreasing ``b``, and each step adding exactly one inversion.  Past
    the current window every value is fixed, so ``b`` never needs to exceed
    the window size plus one.  ``max_gain`` caps the chain length.
    """
    if max_gain is None or max_gain > k:
        max_gain = k
    n0 = max(len(u), k)
    w = list(u.window(n0 + max_gain))
    seen = {}

    def rec(used, depth, bmin, eff):
        key = tuple(w)
        if key not in seen:
            seen[key] = used
        if depth >= max_gain:
            return
        for b in range(bmin, eff + 2):
            wb = w[b - 1]
            # mb: largest value below wb strictly between the two positions
            mb = 0
            for c in range(b - 2, k - 1, -1):
                x = w[c]
                if mb < x < wb:
                    mb = x
            for a in range(k - 1, -1, -1):
                x = w[a]
                if mb < x < wb:
                    if not (used >> a) & 1:
                        w[a], w[b - 1] = wb, x
                        rec(used | (1 << a), depth + 1, b, b if b > eff else eff)
                        w[a], w[b - 1] = x, wb
                    mb = x

    rec(0, 0, k + 1, n0)
    for key, used in seen.items():
        yield Permutation._make(key), frozenset(i + 1 for i in range(k) if (used >> i) & 1)


def pieri_targets(window: tuple, k: int, max_gain: int) -> dict:
    """Lean form of :func:`_successors` on raw windows: ``{target: gain}``.

    Targets are trimmed tuples.  Used by the ordinary kernel, which only
    needs how many inversions each step adds.
    """
    max_gain = min(max_gain, k)
    n0 = max(len(window), k)
    w = list(window) + list(range(len(window) + 1, n0 + max_gain + 1))
    seen = {}

    def rec(used, depth, bmin, eff):
        key = tuple(w)
        if key not in seen:
            seen[key] = depth
        if depth >= max_gain:
            return
        for b in range(bmin, eff + 2):
            wb = w[b - 1]
            mb = 0
            for c in range(b - 2, k - 1, -1):
                x = w[c]
                if mb < x < wb:
                    mb = x
            for a in range(k - 1, -1, -1):
                x = w[a]
                if mb < x < wb:
                    if not (used >> a) & 1:
                        w[a], w[b - 1] = wb, x
                        rec(used | (1 << a), depth + 1, b, b if b > eff else eff)
                        w[a], w[b - 1] = x, wb
                    mb = x

    rec(0, 0, k + 1, n0)
    out = {}
    for key, depth in seen.items():
        n = len(key)
        while n and key[n - 1] == n:
            n -= 1
        out[key[:n]] = depth
    return out


def pieri_successors(u: Permutation, k: int) -> list[PieriStep]:
    if k < 1:
        raise BadShape("k must be positive")
    u = Permutation(u)
    out = []
    for w, used in _successors(u, k):
        fixed = frozenset(u(i) for i in range(1, k + 1) if i not in used)
        out.append(PieriStep(u, w, k, fixed))
    return out


def successor_table(u: Permutation, k: int, max_gain: int | None = None) -> tuple:
    """Cached ``(target, gain, sorted fixed values)`` triples for ``u ->_k w``."""
    out = []
    for w, used in _successors(u, k, max_gain):
        fixed = tuple(sorted(u(i) for i in range(1, k + 1) if i not in used))
        out.append((w, len(used), fixed))
    return tuple(out)


def weight_factors(step: PieriStep, j: int) -> tuple:
    return tuple(sorted((var(Y, i), var(Z, j)) for i in step.fixed_values))


def weight(step: PieriStep, j: int) -> Poly:
    """``prod_{i in P_k(u,w)} (y_i - z_j)``."""
    return Factored.product(weight_factors(step, j)).expand()


def mul_single_variable(u: Permutation, i: int, j: int) -> CoeffMap:
    """Expansion of ``(x_i - z_j) S_u(x;y)`` (a Monk-type rule)."""
    u = Permutation(u)
    lu = length(u)
    out = CoeffMap(method="formula")
    diag = Factored.product([(var(Y, u(i)), var(Z, j))])
    fac = {u: diag}
    out[u] = diag.expand()
    n = max(len(u), i) + 1
    for q in range(1, n + 1):
        if q == i:
            continue
        a, b = min(i, q), max(i, q)
        w = u.swap_positions(a, b)
        if length(w) != lu + 1:
            continue
        sign = 1 if q > i else -1
        out[w] = Poly(sign)
        fac[w] = Factored({(): sign})
    out.factored = fac
    return out.clean()


def mul_elementary(u: Permutation, k: int, j: int) -> CoeffMap:
    """``S_u(x;y) * prod_{i<=k} (x_i - z_j)`` by the k-Pieri rule."""
    u = Permutation(u)
    out = CoeffMap(method="formula")
    fac = {}
    for step in pieri_successors(u, k):
        f = Factored.product(weight_factors(step, j))
        fac[step.target] = f
        out[step.target] = f.expand()
    out.factored = fac
    return out


def elem_factored(p: int, k: int, alphabet) -> Factored:
    """Positive form of ``E_{p,k}(Y; z)`` for the y-indices in ``alphabet``."""
    if p < 0 or p > k:
        return Factored()
    if p == 0:
        return Factored.one()
    alphabet = tuple(alphabet)
    if len(alphabet) != k:
        raise BadShape(f"alphabet has {len(alphabet)} entries, expected {k}")
    out = Factored()
    for seq in combinations_with_replacement(range(1, k + 2 - p), p):
        factors = tuple((var(Y, alphabet[a + i - 1]), var(Z, a)) for i, a in enumerate(seq))
        out.terms[tuple(sorted(factors))] += 1
    return out


def elem_expand(p: int, k: int, alphabet) -> Poly:
    return elem_factored(p, k, alphabet).expand()


def elementary_cycle(p: int, k: int) -> Permutation:
    """The cycle ``c_{p,k} = s_{k-p+1} ... s_k`` with ``S_{c_{p,k}} = E_{p,k}``."""
    if p < 1 or p > k:
        raise BadShape(f"need 1 <= p <= k, got p={p}, k={k}")
    return grassmannian((1,) * p, k)


def mul_factorial_elementary(u: Permutation, p: int, k: int) -> CoeffMap:
    """``S_u(x;y) * E_{p,k}(x;z)`` in the ``S_w(x;y)`` basis."""
    if p < 1 or p > k:
        raise BadShape(f"need 1 <= p <= k, got p={p}, k={k}")
    u = Permutation(u)
    out = CoeffMap(method="formula")
    fac = {}
    for step in pieri_successors(u, k):
        gain = step.gain
        if gain > p:
            continue
        f = elem_factored(p - gain, k - gain, sorted(step.fixed_values))
        fac[step.target] = f
        out[step.target] = f.expand()
    out.factored = fac
    return out.clean()
