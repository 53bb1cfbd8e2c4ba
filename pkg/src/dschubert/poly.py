"""
Sparse multivariate polynomials with integer coefficients.

Variables come in four families ``x``, ``y``, ``z`` and ``beta`` (the simple
negative roots ``beta_i = y_{i+1} - y_i``), each indexed from 1.  A variable
is encoded as one int, ``family_rank << 20 | index``, so that sorting codes
sorts by (family, index).  A monomial is a tuple of ``(var, exponent)`` pairs
sorted by var; a polynomial is a dict from monomials to nonzero ints.

>>> p = (y(1) - z(1)) * (y(4) - z(1))
>>> str(p)
'y1*y4 - y1*z1 - y4*z1 + z1^2'
>>> Poly.parse(str(p)) == p
True
"""

from __future__ import annotations

import ast
from collections import Counter
from typing import Callable, Iterable, Mapping

__all__ = [
    "Poly", "Factored", "ResidualBase", "X", "Y", "Z", "BETA", "var", "x",
    "y", "z", "beta", "linear", "family_of", "index_of", "substitute",
    "expand_in_negative_roots", "is_nonnegative",
]

X, Y, Z, BETA = 0, 1, 2, 3
FAMILIES = ("x", "y", "z", "beta")
_SHIFT = 20
_MASK = (1 << _SHIFT) - 1


class ResidualBase(ValueError):
    """The polynomial is not a polynomial in the differences y_{i+1} - y_i."""


def var(family: int, index: int) -> int:
    if index < 1:
        raise ValueError("variable index must be >= 1")
    return (family << _SHIFT) | index


def family_of(v: int) -> int:
    return v >> _SHIFT


def index_of(v: int) -> int:
    return v & _MASK


def _var_name(v: int) -> str:
    return f"{FAMILIES[v >> _SHIFT]}{v & _MASK}"


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_key(m: tuple) -> tuple:
    return tuple((v >> _SHIFT, v & _MASK, e) for v, e in m)


class Poly:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | int | None = None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, int):
            self.terms = {(): terms} if terms else {}
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # terms already free of zero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def variable(cls, v: int) -> "Poly":
        return cls._raw({((v, 1),): 1})

    # ---- ring structure -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly()
            return Poly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- inspection -----------------------------------------------------

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e for _, e in m) for m in self.terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def degree_in(self, family: int) -> int:
        return max((sum(e for v, e in m if v >> _SHIFT == family)
                    for m in self.terms), default=-1)

    def max_index(self, family: int) -> int:
        return max((v & _MASK for m in self.terms for v, _ in m
                    if v >> _SHIFT == family), default=0)

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    # ---- substitution ---------------------------------------------------

    def substitute(self, mapping: Mapping[int, "Poly | int"]) -> "Poly":
        return substitute(self, mapping)

    def rename(self, fn: Callable[[int], int | None]) -> "Poly":
        """Apply a variable-to-variable map; ``None`` sends a variable to 0."""
        out: dict = {}
        for m, c in self.terms.items():
            acc = []
            dead = False
            for v, e in m:
                nv = fn(v)
                if nv is None:
                    dead = True
                    break
                acc.append((nv, e))
            if dead:
                continue
            acc.sort()
            merged = []
            for v, e in acc:
                if merged and merged[-1][0] == v:
                    merged[-1] = (v, merged[-1][1] + e)
                else:
                    merged.append((v, e))
            key = tuple(merged)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return Poly._raw(out)

    # ---- text form ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            body = "*".join(_var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + text)
            else:
                pieces.append((" - " if c < 0 else " + ") + text)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the rendered grammar (and anything built from +, -, *, ^, ())."""
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _eval_ast(tree.body)


def _parse_name(name: str) -> int:
    for rank in (BETA, X, Y, Z):
        prefix = FAMILIES[rank]
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return var(rank, int(name[len(prefix):]))
    raise ValueError(f"unknown variable {name!r}")


def _eval_ast(node) -> Poly:
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left)
        if isinstance(node.op, ast.Pow):
            if not isinstance(node.right, ast.Constant):
                raise ValueError("exponent must be a literal integer")
            return left ** int(node.right.value)
        right = _eval_ast(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    elif isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.USub):
            return -_eval_ast(node.operand)
        if isinstance(node.op, ast.UAdd):
            return _eval_ast(node.operand)
    elif isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Poly(node.value)
    elif isinstance(node, ast.Name):
        return Poly.variable(_parse_name(node.id))
    raise ValueError(f"cannot parse {ast.dump(node)}")


def x(i: int) -> Poly:
    return Poly.variable(var(X, i))


def y(i: int) -> Poly:
    return Poly.variable(var(Y, i))


def z(i: int) -> Poly:
    return Poly.variable(var(Z, i))


def beta(i: int) -> Poly:
    return Poly.variable(var(BETA, i))


def linear(a: int, b: int) -> Poly:
    """``a - b`` for variable codes ``a`` and ``b``."""
    if a == b:
        return Poly()
    return Poly._raw({((a, 1),): 1, ((b, 1),): -1})


def substitute(p: Poly, mapping: Mapping[int, Poly | int]) -> Poly:
    """Simultaneous substitution; variables missing from ``mapping`` stay."""
    images = {v: (Poly(q) if isinstance(q, int) else q) for v, q in mapping.items()}
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = images[v] ** e
        return powers[key]

    out = Poly()
    acc: dict = {}
    for m, c in p.terms.items():
        kept = tuple((v, e) for v, e in m if v not in images)
        term = Poly._raw({kept: c})
        for v, e in m:
            if v in images:
                term = term * power(v, e)
                if not term:
                    break
        for tm, tc in term.terms.items():
            s = acc.get(tm, 0) + tc
            if s:
                acc[tm] = s
            else:
                del acc[tm]
    out = Poly._raw(acc)
    return out


def expand_in_negative_roots(p: Poly) -> Poly:
    """Rewrite a y-polynomial in ``beta_i = y_{i+1} - y_i``.

    Raises ResidualBase when the result still depends on ``y_1`` (the
    polynomial is not invariant under shifting every y by the same amount).
    """
    fams = {family_of(v) for v in p.variables()}
    if fams - {Y}:
        raise ValueError("expand_in_negative_roots expects a polynomial in y only")
    top = p.max_index(Y)
    base = var(Y, 1)
    mapping = {}
    running = Poly.variable(base)
    for i in range(1, top + 1):
        if i > 1:
            running = running + beta(i - 1)
            mapping[var(Y, i)] = running
    out = substitute(p, mapping)
    if base in out.variables():
        raise ResidualBase(f"{p} is not a polynomial in root differences")
    return out


def is_nonnegative(p: Poly) -> bool:
    return all(c >= 0 for c in p.terms.values())


class Factored:
    """A sum of products of linear differences, kept unexpanded.

    ``terms`` counts each product, stored as a sorted tuple of
    ``(left_var, right_var)`` pairs meaning ``left - right``.

    >>> f = Factored.product([(var(Y, 3), var(Z, 2))]) + Factored.product([(var(Y, 1), var(Z, 1))])
    >>> str(f)
    '(y1-z1) + (y3-z2)'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        self.terms = Counter()
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] += c

    @classmethod
    def one(cls) -> "Factored":
        return cls({(): 1})

    @classmethod
    def product(cls, factors: Iterable[tuple[int, int]]) -> "Factored":
        return cls({tuple(sorted(factors)): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Factored):
            return NotImplemented
        return +self.terms == +other.terms

    def __add__(self, other: "Factored") -> "Factored":
        out = Factored()
        out.terms = self.terms + other.terms
        return out

    def __mul__(self, other: "Factored") -> "Factored":
        out = Factored()
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out.terms[tuple(sorted(a + b))] += ca * cb
        return out

    def times_factors(self, factors: tuple) -> "Factored":
        if not factors:
            return self
        out = Factored()
        for a, c in self.terms.items():
            out.terms[tuple(sorted(a + factors))] += c
        return out

    def __len__(self):
        return sum(self.terms.values())

    def expand(self) -> Poly:
        acc = Poly()
        cache: dict = {}
        for factors, c in self.terms.items():
            term = Poly(c)
            for f in factors:
                if f not in cache:
                    cache[f] = linear(*f)
                term = term * cache[f]
            acc = acc + term
        return acc

    def map_factors(self, fn: Callable[[tuple[int, int]], tuple[int, int] | None]) -> "Factored":
        """Rewrite every factor; a ``None`` image kills the product."""
        out = Factored()
        for factors, c in self.terms.items():
            new = []
            for f in factors:
                g = fn(f)
                if g is None:
                    break
                new.append(g)
            else:
                out.terms[tuple(sorted(new))] += c
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for factors, c in sorted(self.terms.items(), key=lambda t: _factored_key(t[0])):
            body = "*".join(f"({_var_name(a)}-{_var_name(b)})" for a, b in _sorted_factors(factors))
            if not body:
                body = str(c)
            elif c != 1:
                body = f"{c}*{body}"
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self):
        return f"Factored('{self}')"


def _sorted_factors(factors):
    return sorted(factors, key=lambda f: (index_of(f[0]), index_of(f[1]), f))


def _factored_key(factors):
    return [(index_of(a), index_of(b)) for a, b in _sorted_factors(factors)]
