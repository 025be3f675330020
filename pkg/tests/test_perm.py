from itertools import permutations

import pytest

from klreg.errors import OutOfRangeError, ValidationError
from klreg.perm import (
    Permutation,
    all_permutations,
    bruhat_leq,
    coxeter_length,
    demazure_product,
    demazure_step,
    from_lehmer_code,
    identity,
    is_321_avoiding,
    is_grassmannian,
    lehmer_code,
    rank,
    right_mult_s,
    rothe_diagram,
)

from knowndata import LAD_A, V10, V11, V_LAD_A, W10


def brute_avoids_321(word):
    n = len(word)
    return not any(
        word[i] > word[j] > word[k]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def test_permutation_validation():
    with pytest.raises(ValidationError):
        Permutation((1, 3))
    with pytest.raises(ValidationError):
        Permutation((1, 1, 2))


def test_rank_examples():
    assert rank(identity(4), 2, 3) == 2
    assert rank(Permutation((2, 1)), 1, 1) == 0
    assert rank(V_LAD_A, 4, 3) == 0
    # identity rank is min(i, j) everywhere
    for n in range(1, 6):
        e = identity(n)
        assert all(rank(e, i, j) == min(i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    with pytest.raises(OutOfRangeError):
        rank(identity(3), 0, 1)
    with pytest.raises(OutOfRangeError):
        rank(identity(3), 1, 4)


def test_rothe_examples():
    assert rothe_diagram(identity(5)) == ()
    assert rothe_diagram(Permutation((2, 1))) == ((1, 1),)
    cells = rothe_diagram(V10)
    assert len(cells) == 14 == coxeter_length(V10)
    # definition check against the raw condition
    inv = V10.inverse().word
    expected = {
        (i, j)
        for i in range(1, 11)
        for j in range(1, 11)
        if V10.word[i - 1] > j and inv[j - 1] > i
    }
    assert set(cells) == expected


def test_rothe_size_is_inversion_count():
    for n in range(1, 7):
        for word in permutations(range(1, n + 1)):
            u = Permutation(word)
            inversions = sum(
                1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
            )
            assert len(rothe_diagram(u)) == inversions == coxeter_length(u)


def test_lehmer_code_round_trip():
    for n in range(1, 8):
        for word in permutations(range(1, n + 1)):
            u = Permutation(word)
            assert from_lehmer_code(lehmer_code(u)) == u
    # code counts boxes per diagram row
    code = lehmer_code(V10)
    for i in range(1, 11):
        assert code[i - 1] == sum(1 for (r, _) in rothe_diagram(V10) if r == i)


def test_lehmer_code_ladder_value():
    assert from_lehmer_code((3, 4, 5, 5, 0, 0, 0, 2, 2, 0, 0)) == V_LAD_A
    assert lehmer_code(V_LAD_A) == (3, 4, 5, 5, 0, 0, 0, 2, 2, 0, 0)
    assert lehmer_code(identity(6)) == (0,) * 6
    with pytest.raises(ValidationError):
        from_lehmer_code((2, 0))  # c_1 may be at most n - 1 = 1


def test_pattern_checks():
    assert not is_321_avoiding(Permutation((1, 7, 2, 5, 8, 3, 4, 6)))
    assert is_321_avoiding(identity(5)) and is_grassmannian(identity(5))
    assert is_321_avoiding(V11) and brute_avoids_321(V11.word)
    assert not is_grassmannian(V10)
    assert is_grassmannian(Permutation((1, 3, 4, 2)))
    for n in range(1, 7):
        for word in permutations(range(1, n + 1)):
            u = Permutation(word)
            assert is_321_avoiding(u) == brute_avoids_321(word)
            if is_grassmannian(u):
                assert is_321_avoiding(u)


def _reduced_words(u):
    if coxeter_length(u) == 0:
        yield ()
        return
    for i in range(1, u.n):
        if u.word[i - 1] > u.word[i]:
            for rest in _reduced_words(right_mult_s(u, i)):
                yield rest + (i,)


def test_demazure_examples():
    assert demazure_product((1, 1), 2) == Permutation((2, 1))
    assert demazure_product((3, 2, 1, 5, 7, 6, 8), 10) == W10
    assert demazure_product((), 3) == identity(3)
    with pytest.raises(OutOfRangeError):
        demazure_step(identity(3), 3)


def test_demazure_of_reduced_words():
    for word in permutations(range(1, 5)):
        u = Permutation(word)
        for red in _reduced_words(u):
            assert demazure_product(red, 4) == u
            # duplicating any letter in place leaves the product fixed
            for k in range(len(red)):
                doubled = red[: k + 1] + (red[k],) + red[k + 1 :]
                assert demazure_product(doubled, 4) == u


def test_bruhat_examples():
    for word in permutations(range(1, 5)):
        assert bruhat_leq(identity(4), Permutation(word))
    assert bruhat_leq(W10, V10)
    assert not bruhat_leq(Permutation((2, 1)), identity(2))
    with pytest.raises(ValidationError):
        bruhat_leq(identity(2), identity(3))


def test_bruhat_matches_cover_graph():
    for n in range(2, 6):
        perms = all_permutations(n)
        index = {u: k for k, u in enumerate(perms)}
        above = [set() for _ in perms]
        for u in perms:
            lu = coxeter_length(u)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    word = list(u.word)
                    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
                    t = Permutation(tuple(word))
                    if coxeter_length(t) == lu + 1:
                        above[index[u]].add(index[t])
        # transitive closure of covers
        reach = [set([k]) for k in range(len(perms))]
        for k in sorted(range(len(perms)), key=lambda k: -coxeter_length(perms[k])):
            for t in above[k]:
                reach[k] |= reach[t]
        for a, u in enumerate(perms):
            for b, w in enumerate(perms):
                assert bruhat_leq(u, w) == (b in reach[a])


def test_ladder_pair_is_comparable():
    from klreg.ladder import perm_of

    v, w = perm_of(LAD_A)
    assert bruhat_leq(w, v)
