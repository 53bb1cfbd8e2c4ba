"""Property-based checks of the structural invariants."""

from hypothesis import given, settings, strategies as st

from dschubert.oracle import (
    apply_word, divided_difference, double_schubert, expand_in_schubert_basis, reduced_word,
    skew_dd, swap_variables,
)
from dschubert.perm import (
    IDENTITY, Permutation, all_permutations, code, compose, cycle, disjoint_cycles,
    dominant_approximation, from_code, inverse, length, simple,
)
from dschubert.pieri import mul_factorial_elementary, pieri_related, pieri_successors
from dschubert.poly import BETA, X, Y, Z, Poly, expand_in_negative_roots, substitute, var, y
from dschubert.product import product_mixed, product_ordinary


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


# ---- permutations ----------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(perms(6))
def test_code_roundtrip(u):
    assert from_code(code(u)) == u
    assert sum(code(u)) == length(u)


@settings(max_examples=80, deadline=None)
@given(perms(6), st.integers(1, 5))
def test_code_transformation(v, i):
    pad = lambda c: list(c) + [0] * (10 - len(c))  # noqa: E731
    c = pad(code(v))
    if c[i - 1] <= c[i]:
        c[i - 1], c[i] = c[i] + 1, c[i - 1]
        assert pad(code(v * simple(i))) == c


@settings(max_examples=80, deadline=None)
@given(perms(6))
def test_dominant_approximation_replay(v):
    d = dominant_approximation(v)
    c = code(d.mu)
    assert all(c[i] >= c[i + 1] for i in range(len(c) - 1))
    w = v
    for i in d.word:
        nxt = w * simple(i)
        assert length(nxt) == length(w) + 1
        w = nxt
    assert w == d.mu


@settings(max_examples=80, deadline=None)
@given(perms(7), st.randoms())
def test_cycles_multiply_back(u, rnd):
    cycles = disjoint_cycles(u)
    rnd.shuffle(cycles)
    acc = IDENTITY
    for c in cycles:
        acc = acc * cycle(*c)
    assert acc == u


@settings(max_examples=80, deadline=None)
@given(perms(5), perms(5), perms(5))
def test_group_axioms(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, inverse(a)) == IDENTITY
    assert compose(IDENTITY, a) == a


# ---- polynomials -----------------------------------------------------------

_VARS = [var(f, i) for f in (X, Y) for i in (1, 2, 3, 4)]
monos = st.lists(st.tuples(st.sampled_from(_VARS), st.integers(1, 3)), max_size=3)
polys = st.lists(st.tuples(monos, st.integers(-4, 4)), max_size=4).map(
    lambda ts: sum((c * _mono(m) for m, c in ts), Poly()))


def _mono(m):
    p = Poly(1)
    for v, e in m:
        p = p * Poly.variable(v) ** e
    return p


images = st.fixed_dictionaries({v: polys for v in _VARS[:3]})


@settings(max_examples=50, deadline=None)
@given(polys, polys, images)
def test_substitute_is_a_homomorphism(p, q, mapping):
    assert substitute(p * q, mapping) == substitute(p, mapping) * substitute(q, mapping)
    assert substitute(p + q, mapping) == substitute(p, mapping) + substitute(q, mapping)


ypolys = st.lists(st.tuples(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 2)), max_size=3),
                            st.integers(-3, 3)), max_size=4)


@settings(max_examples=50, deadline=None)
@given(ypolys)
def test_negative_roots_back_substitution(terms):
    # build a polynomial in root differences y_b - y_a, then round trip it
    p = Poly()
    for m, c in terms:
        t = Poly(c)
        for i, e in m:
            t = t * (y(i + 1) - y(1)) ** e
        p = p + t
    b = expand_in_negative_roots(p)
    back = {var(BETA, i): y(i + 1) - y(i) for i in range(1, 6)}
    assert substitute(b, back) == p


# ---- divided differences ----------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(polys, st.integers(1, 3))
def test_nil(p, i):
    assert divided_difference(divided_difference(p, i), i) == 0


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(1, 2))
def test_braid(p, i):
    assert apply_word(p, (i, i + 1, i)) == apply_word(p, (i + 1, i, i + 1))


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.integers(1, 3))
def test_leibniz(p, q, i):
    lhs = divided_difference(p * q, i)
    rhs = divided_difference(p, i) * swap_variables(q, i) + p * divided_difference(q, i)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(polys, polys, perms(3))
def test_generalized_leibniz(p, q, w):
    lhs = apply_word(p * q, reduced_word(w))
    rhs = Poly()
    for u in all_permutations(3):
        if length(u) <= length(w):
            rhs = rhs + apply_word(p, reduced_word(u)) * skew_dd(u, w, q)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(perms(5))
def test_basis_roundtrip(u):
    assert expand_in_schubert_basis(double_schubert(u)) == {u: 1}


# ---- Pieri ------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(perms(5), st.integers(1, 5))
def test_pieri_step_invariants(u, k):
    for step in pieri_successors(u, k):
        w = step.target
        for i in range(1, k + 1):
            assert u(i) <= w(i)
        for i in range(k + 1, max(len(w), k) + 2):
            assert u(i) >= w(i)
        assert len(step.fixed_values) == k - step.gain
        assert pieri_related(u, w, k)


@settings(max_examples=40, deadline=None)
@given(perms(4), st.integers(1, 4), st.data())
def test_pieri_homogeneity(u, k, data):
    p = data.draw(st.integers(1, k))
    for w, c in mul_factorial_elementary(u, p, k).items():
        assert c.is_homogeneous(p - (length(w) - length(u)))


# ---- products ---------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(perms(4), perms(4))
def test_product_homogeneity(u, v):
    total = length(u) + length(v)
    for w, c in product_mixed(u, v).items():
        assert length(w) <= total
        assert c.is_homogeneous(total - length(w))


@settings(max_examples=40, deadline=None)
@given(perms(4), perms(4))
def test_ordinary_commutes(u, v):
    assert product_ordinary(u, v) == product_ordinary(v, u)
    zero = {var(f, i): 0 for f in (Y, Z) for i in range(1, 9)}
    direct = {w: substitute(c, zero) for w, c in product_mixed(u, v).items()}
    assert product_ordinary(u, v) == {w: c.constant_term() for w, c in direct.items() if c}
