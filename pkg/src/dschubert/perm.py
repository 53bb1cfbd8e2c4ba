"""
Permutations of S_infinity in trimmed window notation.

A permutation is stored as the tuple ``(u(1), ..., u(n))`` with trailing fixed
points removed, so the identity is the empty tuple and ``[1, 3, 2]`` equals
``[1, 3, 2, 4, 5]``.  Values past the window are fixed.

>>> u = Permutation([1, 3, 5, 2, 4])
>>> code(u)
(0, 1, 2)
>>> dominant_approximation(u).mu
Permutation([5, 3, 1, 2, 4])
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "DominantData", "PermutationError", "DuplicateValue",
    "OutOfRange", "ShapeTooLong", "from_window", "from_code", "length",
    "code", "dominant_approximation", "disjoint_cycles", "grassmannian",
    "compose", "inverse", "longest_element", "simple", "transposition",
    "cycle", "descents", "is_dominant", "conjugate", "bruhat_leq",
    "all_permutations",
]


class PermutationError(ValueError):
    pass


class DuplicateValue(PermutationError):
    pass


class OutOfRange(PermutationError):
    pass


class ShapeTooLong(ValueError):
    pass


def _trim(seq) -> tuple:
    n = len(seq)
    while n and seq[n - 1] == n:
        n -= 1
    return tuple(seq[:n])


class Permutation(tuple):
    """Finite-support bijection of the positive integers.

    Indexing with ``u[i]`` is 0-based over the stored window; calling ``u(i)``
    is 1-based and valid for every positive ``i``.
    """

    __slots__ = ()

    def __new__(cls, window: Iterable[int] = ()):
        seq = tuple(int(a) for a in window)
        n = len(seq)
        seen = set()
        for a in seq:
            if a < 1 or a > n:
                raise OutOfRange(f"value {a} is outside 1..{n}")
            if a in seen:
                raise DuplicateValue(f"value {a} repeated")
            seen.add(a)
        return tuple.__new__(cls, _trim(seq))

    @classmethod
    def _make(cls, seq) -> "Permutation":
        # caller guarantees seq is a valid window
        return tuple.__new__(cls, _trim(seq))

    def __call__(self, i: int) -> int:
        if i <= len(self):
            return tuple.__getitem__(self, i - 1)
        return i

    def __repr__(self):
        return f"Permutation({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return compose(self, other)
        return NotImplemented

    def __invert__(self):
        return inverse(self)

    # tuple concatenation/repetition would silently produce non-permutations
    def __add__(self, other):
        return NotImplemented

    def __rmul__(self, other):
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self)

    def window(self, n: int | None = None) -> tuple[int, ...]:
        """Window of length ``n`` (default: the trimmed length)."""
        if n is None or n <= len(self):
            return tuple(self)
        return tuple(self) + tuple(range(len(self) + 1, n + 1))

    def length(self) -> int:
        return length(self)

    def code(self) -> tuple[int, ...]:
        return code(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def swap_positions(self, a: int, b: int) -> "Permutation":
        """``u * t_{ab}``: exchange the entries at positions ``a`` and ``b``."""
        n = max(len(self), a, b)
        w = list(self.window(n))
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation._make(w)

    def descents(self) -> set[int]:
        return descents(self)

    def has_descent(self, i: int) -> bool:
        return self(i) > self(i + 1)


IDENTITY = Permutation()


def from_window(seq: Sequence[int]) -> Permutation:
    return Permutation(seq)


def length(u: Sequence[int]) -> int:
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def code(u: Sequence[int]) -> tuple[int, ...]:
    n = len(u)
    c = [sum(1 for j in range(i + 1, n) if u[j] < u[i]) for i in range(n)]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def from_code(entries: Sequence[int]) -> Permutation:
    """Inverse of :func:`code`, placing values greedily left to right."""
    entries = [int(c) for c in entries]
    if any(c < 0 for c in entries):
        raise ValueError("code entries must be nonnegative")
    n = max((i + 1 + c for i, c in enumerate(entries)), default=0)
    available = list(range(1, n + 1))
    window = []
    for i in range(n):
        c = entries[i] if i < len(entries) else 0
        window.append(available.pop(c))
    return Permutation._make(window)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u v)(i) = u(v(i))``."""
    n = max(len(u), len(v))
    return Permutation._make([u(v(i)) for i in range(1, n + 1)])


def inverse(u: Permutation) -> Permutation:
    w = [0] * len(u)
    for i, a in enumerate(u, start=1):
        w[a - 1] = i
    return Permutation._make(w)


def longest_element(n: int) -> Permutation:
    """Longest element of S_{n+1}."""
    return Permutation._make(list(range(n + 1, 0, -1)))


def simple(i: int) -> Permutation:
    return transposition(i, i + 1)


def transposition(a: int, b: int) -> Permutation:
    n = max(a, b)
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return Permutation._make(w)


def cycle(*elements: int) -> Permutation:
    """The cycle sending ``elements[i]`` to ``elements[i+1]`` (wrapping)."""
    if not elements:
        return IDENTITY
    n = max(elements)
    w = list(range(1, n + 1))
    for a, b in zip(elements, elements[1:] + elements[:1]):
        w[a - 1] = b
    return Permutation(w)


def descents(u: Sequence[int]) -> set[int]:
    return {i + 1 for i in range(len(u) - 1) if u[i] > u[i + 1]}


def is_dominant(u: Sequence[int]) -> bool:
    c = code(u)
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, max(parts) + 1))


@dataclass(frozen=True)
class DominantData:
    mu: Permutation
    word: tuple[int, ...]
    lam: tuple[int, ...]


def dominant_approximation(v: Permutation) -> DominantData:
    """Climb from ``v`` to a dominant permutation by right multiplication.

    Each step applies ``s_i`` at the largest ``i`` with ``c_i < c_{i+1}``;
    ``word`` records those indices in order, so ``v * s_{word[0]} * ... = mu``.
    """
    c = list(code(v))
    word = []
    while True:
        i = max((j for j in range(len(c) - 1) if c[j] < c[j + 1]), default=None)
        if i is None:
            break
        c[i], c[i + 1] = c[i + 1] + 1, c[i]
        word.append(i + 1)
    mu = from_code(c)
    return DominantData(mu, tuple(word), conjugate(c))


def disjoint_cycles(u: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``u``.

    Each cycle ``(a_1, ..., a_m)`` means ``a_1 -> a_2 -> ... -> a_m -> a_1`` and
    is rotated so its largest element comes last; cycles are ordered by their
    smallest element.
    """
    seen = set()
    out = []
    for start in range(1, len(u) + 1):
        if start in seen or u(start) == start:
            continue
        cyc = [start]
        seen.add(start)
        a = u(start)
        while a != start:
            cyc.append(a)
            seen.add(a)
            a = u(a)
        top = cyc.index(max(cyc))
        cyc = cyc[top + 1:] + cyc[:top + 1]
        out.append(tuple(cyc))
    out.sort(key=min)
    return out


def grassmannian(lam: Sequence[int], m: int) -> Permutation:
    if len(lam) > m:
        raise ShapeTooLong(f"partition {tuple(lam)} has more than {m} parts")
    parts = list(lam) + [0] * (m - len(lam))
    head = [i + parts[m - i] for i in range(1, m + 1)]
    n = max(head, default=0)
    rest = sorted(set(range(1, n + 1)) - set(head))
    return Permutation(head + rest)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Tableau criterion for the strong Bruhat order."""
    n = max(len(u), len(w))
    uw, ww = u.window(n), w.window(n)
    for i in range(1, n):
        a = sorted(uw[:i])
        b = sorted(ww[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def all_permutations(n: int) -> list[Permutation]:
    """All elements of S_n, ordered by length then window."""
    from itertools import permutations
    perms = [Permutation._make(p) for p in permutations(range(1, n + 1))]
    perms.sort(key=lambda p: (length(p), p.window(n)))
    return perms
