import pytest

from dschubert.perm import (
    IDENTITY, DuplicateValue, OutOfRange, Permutation, all_permutations, bruhat_leq,
    code, compose, conjugate, cycle, disjoint_cycles, dominant_approximation, from_code,
    from_window, grassmannian, inverse, is_dominant, length, longest_element, simple,
    transposition,
)


def test_window_trimming():
    assert from_window([1, 3, 2]) == Permutation([1, 3, 2, 4, 5])
    assert from_window([1, 2, 3]) == IDENTITY
    assert len(from_window([1, 3, 4, 7, 2, 5, 6])) == 7


@pytest.mark.parametrize("bad,exc", [([1, 1], DuplicateValue), ([0, 1], OutOfRange), ([3, 1], OutOfRange)])
def test_invalid_windows(bad, exc):
    with pytest.raises(exc):
        from_window(bad)


def test_call_is_one_based_and_fixes_tail():
    u = Permutation([2, 3, 1])
    assert [u(i) for i in range(1, 6)] == [2, 3, 1, 4, 5]


def test_length_and_code():
    assert length(Permutation([1, 3, 2])) == 1
    assert length(Permutation([5, 3, 1, 2, 4])) == 6
    assert length(longest_element(3)) == 6
    assert code(Permutation([1, 3, 5, 2, 4])) == (0, 1, 2)
    assert code(IDENTITY) == ()
    assert code(Permutation([5, 3, 1, 2, 4])) == (4, 2)


def test_from_code():
    assert from_code((0, 1, 1, 2)) == Permutation([1, 3, 4, 6, 2, 5])
    assert from_code(()) == IDENTITY
    assert from_code((2,)) == Permutation([3, 1, 2])
    assert from_code((1, 0, 2, 3)) == Permutation([2, 1, 5, 7, 3, 4, 6])


def test_code_roundtrip_s5():
    for u in all_permutations(5):
        assert from_code(code(u)) == u
        assert sum(code(u)) == length(u)


def test_group_operations():
    s = Permutation([1, 3, 2])
    assert compose(s, s) == IDENTITY
    assert inverse(Permutation([2, 3, 1])) == Permutation([3, 1, 2])
    assert longest_element(2) == Permutation([3, 2, 1])
    assert Permutation([2, 1]) * Permutation([1, 3, 2]) == Permutation([2, 3, 1])
    # right multiplication by s_i swaps positions
    u = Permutation([3, 1, 4, 2])
    assert u * simple(2) == u.swap_positions(2, 3)
    assert transposition(2, 5) == Permutation([1, 5, 3, 4, 2])
    assert cycle(1, 2, 3) == Permutation([2, 3, 1])


def test_dominant_approximation():
    d = dominant_approximation(Permutation([1, 3, 5, 2, 4]))
    assert d.mu == Permutation([5, 3, 1, 2, 4])
    assert d.word == (2, 1, 2)
    assert d.lam == (2, 2, 1, 1)
    d = dominant_approximation(Permutation([3, 1, 2]))
    assert (d.mu, d.word, d.lam) == (Permutation([3, 1, 2]), (), (1, 1))
    d = dominant_approximation(Permutation([1, 3, 2]))
    assert (d.mu, d.word, d.lam) == (Permutation([3, 1, 2]), (1,), (1, 1))


def test_dominant_approximation_is_dominant_s5():
    for v in all_permutations(5):
        d = dominant_approximation(v)
        assert is_dominant(d.mu)
        assert d.lam == conjugate(code(d.mu))
        w = v
        for i in d.word:
            w = w * simple(i)
        assert w == d.mu
        assert length(d.mu) == length(v) + len(d.word)


def test_disjoint_cycles():
    u = Permutation([3, 1, 6, 5, 2, 4])
    w = Permutation([4, 2, 7, 6, 1, 3, 5])
    assert disjoint_cycles(u.inverse() * w) == [(1, 6), (2, 5), (4, 3, 7)]
    assert disjoint_cycles(IDENTITY) == []
    assert disjoint_cycles(transposition(2, 5)) == [(2, 5)]


def test_grassmannian():
    assert grassmannian((3, 1, 1), 4) == Permutation([1, 3, 4, 7, 2, 5, 6])
    assert grassmannian((), 3) == IDENTITY
    for k in range(1, 5):
        for p in range(1, k + 1):
            c = IDENTITY
            for i in range(k - p + 1, k + 1):
                c = c * simple(i)
            assert grassmannian((1,) * p, k) == c


def test_conjugate():
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert conjugate(()) == ()


def test_bruhat_matches_subword_closure_s4():
    # brute force: the order generated by length-increasing transpositions
    perms = all_permutations(4)
    up = {u: {u} for u in perms}
    for u in sorted(perms, key=length, reverse=True):
        for a in range(1, 5):
            for b in range(a + 1, 5):
                w = u.swap_positions(a, b)
                if length(w) > length(u):
                    up[u] |= up[w]
    for u in perms:
        for w in perms:
            assert bruhat_leq(u, w) == (w in up[u])
