import pytest
from hypothesis import given, strategies as st

from spcthecke.permutations import (
    all_perms,
    all_reduced_words,
    compose,
    compose_right_action,
    descent_set,
    identity,
    inverse,
    length,
    longest_element,
    min_coset_reps,
    perm_from_word,
    perms_by_length_lex,
    reduced_word,
    reduced_word_and_length,
    s_times,
    sigma_down,
    sign,
    standardize,
    times_s,
    weak_leq,
)

perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda m: st.permutations(list(range(1, m + 1))).map(tuple)
)


def test_standardize_examples():
    assert standardize((4, 6, 2)) == (2, 3, 1)
    assert standardize(tuple(range(1, 8))) == identity(7)
    assert standardize((10, 9, 8)) == (3, 2, 1)
    with pytest.raises(ValueError):
        standardize((1, 1))


@given(perms)
def test_standardize_idempotent(p):
    assert standardize(p) == p


def test_reduced_word_examples():
    word, l = reduced_word_and_length((3, 2, 1))
    assert l == 3 and perm_from_word(word, 3) == (3, 2, 1)
    assert reduced_word_and_length(identity(4)) == ((), 0)
    assert reduced_word_and_length((2, 1, 3, 4)) == ((1,), 1)


@given(perms)
def test_reduced_word_multiplies_back(p):
    word = reduced_word(p)
    assert len(word) == length(p)
    assert perm_from_word(word, len(p)) == p


@given(perms)
def test_sign_and_length_step(p):
    assert sign(p) == (-1) ** length(p)
    for i in range(1, len(p)):
        assert abs(length(times_s(p, i)) - length(p)) == 1


def test_all_reduced_words_small():
    words = set(all_reduced_words((3, 2, 1)))
    assert words == {(1, 2, 1), (2, 1, 2)}
    for w in words:
        assert perm_from_word(w, 3) == (3, 2, 1)


def test_longest_element_examples():
    assert longest_element(3, {1, 2}) == (3, 2, 1)
    assert longest_element(4, set()) == identity(4)
    assert longest_element(4, {2}) == (1, 3, 2, 4)
    # parabolic longest elements maximise length within the subgroup
    assert length(longest_element(5, {1, 2, 4})) == 3 + 1


def test_sigma_down_examples():
    assert sigma_down((2, 1, 3, 4)) == (1, 2, 3)
    assert sigma_down((2, 3, 1)) == (1, 2)
    assert sigma_down((1,)) == ()


def test_min_coset_reps_examples():
    assert min_coset_reps((2, 1)) == [(1, 2), (2, 1)]
    assert min_coset_reps((1, 1)) == [(1, 2)]
    assert len(min_coset_reps((2, 2, 1))) == 3
    with pytest.raises(ValueError):
        min_coset_reps((1, 2))


@pytest.mark.parametrize("lam", [(2, 1), (2, 2, 1), (3, 1, 1), (2, 2, 1, 1), (2, 2, 1, 1, 1)])
def test_min_coset_reps_brute_force(lam):
    m = len(lam)
    stab = [p for p in all_perms(m) if compose_right_action(lam, p) == lam]
    reps = min_coset_reps(lam)
    import math

    mult = 1
    for part in set(lam):
        mult *= math.factorial(lam.count(part))
    assert len(reps) == math.factorial(m) // mult
    cosets = {frozenset(compose(r, h) for h in stab) for r in reps}
    assert len(cosets) == len(reps)
    assert sum(len(c) for c in cosets) == math.factorial(m)
    for r in reps:
        assert all(length(r) <= length(q) for q in [compose(r, h) for h in stab])


def test_weak_leq_examples():
    w0 = longest_element(4)
    assert weak_leq(identity(4), w0)
    assert not weak_leq(w0, identity(4))
    s1 = (2, 1, 3)
    s1s2 = compose(s1, (1, 3, 2))
    assert weak_leq(s1, s1s2)


def test_weak_leq_against_cover_closure():
    # oracle: reflexive-transitive closure of the length-increasing
    # right-multiplication covers, over all of S_4
    m = 4
    ps = all_perms(m)
    below = {p: {p} for p in ps}
    changed = True
    order = sorted(ps, key=length)
    while changed:
        changed = False
        for p in order:
            for i in range(1, m):
                q = times_s(p, i)
                if length(q) == length(p) + 1 and not below[q] >= below[p] | {p}:
                    below[q] |= below[p] | {p}
                    changed = True
    for p in ps:
        for q in ps:
            assert weak_leq(p, q) == (p in below[q]), (p, q)


@given(perms)
def test_compose_inverse(p):
    assert compose(p, inverse(p)) == identity(len(p))
    assert compose(inverse(p), p) == identity(len(p))


def test_left_right_multiplication():
    p = (2, 3, 1, 4)
    assert times_s(p, 1) == (3, 2, 1, 4)
    assert s_times(1, p) == (1, 3, 2, 4)
    assert compose(p, (2, 1, 3, 4)) == times_s(p, 1)
    assert compose((2, 1, 3, 4), p) == s_times(1, p)


def test_perms_by_length_lex_is_stable_order():
    order = perms_by_length_lex(4)
    assert order[0] == identity(4)
    assert order[-1] == longest_element(4)
    lengths = [length(p) for p in order]
    assert lengths == sorted(lengths)


def test_descent_set():
    assert descent_set((2, 1, 3)) == {1}
    assert descent_set(identity(5)) == frozenset()
    assert descent_set(longest_element(4)) == {1, 2, 3}
