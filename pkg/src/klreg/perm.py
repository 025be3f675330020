"""Permutations in one-line notation with rank matrices, Rothe diagrams,
Lehmer codes, Demazure products, Bruhat order, and pattern checks.

Conventions: everything is 1-indexed and uses matrix coordinates, so cell
(1, 1) is the northwest corner of the n x n grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfRangeError, ValidationError

Cell = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n], stored as its one-line word.

    >>> Permutation((2, 1, 3)).n
    3
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValidationError(f"not a permutation of [{len(word)}]: {word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value at position i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} out of range for S_{self.n}")
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        """
        >>> Permutation((3, 1, 2)).inverse().word
        (2, 3, 1)
        """
        inv = [0] * self.n
        for i, x in enumerate(self.word, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __repr__(self):
        return f"Permutation({self.word!r})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def coxeter_length(u: Permutation) -> int:
    """Number of inversions of u, which equals #rothe_diagram(u).

    >>> coxeter_length(Permutation((3, 1, 2)))
    2
    """
    w = u.word
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def rank(u: Permutation, i: int, j: int) -> int:
    """Number of k <= i with u(k) <= j.

    >>> rank(Permutation((2, 1)), 1, 1)
    0
    """
    if not (1 <= i <= u.n and 1 <= j <= u.n):
        raise OutOfRangeError(f"cell ({i}, {j}) out of range for S_{u.n}")
    return sum(1 for k in range(i) if u.word[k] <= j)


def rank_matrix(u: Permutation) -> list[list[int]]:
    """Full table R with R[i][j] = rank(u, i, j); row/col 0 are zero padding."""
    n = u.n
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        ui = u.word[i - 1]
        for j in range(1, n + 1):
            r[i][j] = r[i - 1][j] + r[i][j - 1] - r[i - 1][j - 1] + (1 if ui == j else 0)
    return r


def rothe_diagram(u: Permutation) -> tuple[Cell, ...]:
    """Cells (i, j) with u(i) > j and u^-1(j) > i, in row-major order.

    >>> rothe_diagram(Permutation((2, 1)))
    ((1, 1),)
    """
    inv = u.inverse().word
    return tuple(
        (i, j)
        for i in range(1, u.n + 1)
        for j in range(1, u.n + 1)
        if u.word[i - 1] > j and inv[j - 1] > i
    )


def lehmer_code(u: Permutation) -> tuple[int, ...]:
    """c_i = number of j > i with u(j) < u(i), i.e. boxes in row i of the Rothe diagram."""
    w = u.word
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))


def from_lehmer_code(code: Sequence[int]) -> Permutation:
    """Invert lehmer_code.

    >>> from_lehmer_code((1, 0)).word
    (2, 1)
    """
    n = len(code)
    remaining = list(range(1, n + 1))
    word = []
    for i, c in enumerate(code):
        if not 0 <= c <= n - i - 1:
            raise ValidationError(f"invalid Lehmer code entry c_{i + 1} = {c} for n = {n}")
        word.append(remaining.pop(c))
    return Permutation(tuple(word))


def is_321_avoiding(u: Permutation) -> bool:
    """True iff there are no positions i < j < k with u(i) > u(j) > u(k)."""
    w = u.word
    n = len(w)
    prefix_max = 0
    suffix_min = [0] * (n + 1)  # suffix_min[j] = min(w[j:]), sentinel past the end
    m = n + 1
    suffix_min[n] = m
    for j in range(n - 1, -1, -1):
        m = min(m, w[j])
        suffix_min[j] = m
    for j in range(1, n - 1):
        if prefix_max < w[j - 1]:
            prefix_max = w[j - 1]
        if prefix_max > w[j] > suffix_min[j + 1]:
            return False
    return True


def is_grassmannian(u: Permutation) -> bool:
    """True iff u has at most one descent."""
    w = u.word
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1]) <= 1


def descents(u: Permutation) -> tuple[int, ...]:
    w = u.word
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def right_mult_s(u: Permutation, i: int) -> Permutation:
    """u * s_i: swap the entries in positions i and i+1."""
    if not 1 <= i <= u.n - 1:
        raise OutOfRangeError(f"generator index {i} out of range for S_{u.n}")
    w = list(u.word)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def left_mult_s(u: Permutation, i: int) -> Permutation:
    """s_i * u: swap the values i and i+1."""
    if not 1 <= i <= u.n - 1:
        raise OutOfRangeError(f"generator index {i} out of range for S_{u.n}")
    w = [x if x not in (i, i + 1) else (i + 1 if x == i else i) for x in u.word]
    return Permutation(tuple(w))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u v)(k) = u(v(k))."""
    if u.n != v.n:
        raise ValidationError("size mismatch in composition")
    return Permutation(tuple(u.word[x - 1] for x in v.word))


def demazure_step(u: Permutation, i: int) -> Permutation:
    """u * s_i if that is longer than u, otherwise u.

    >>> demazure_step(Permutation((2, 1)), 1).word
    (2, 1)
    """
    if not 1 <= i <= u.n - 1:
        raise OutOfRangeError(f"generator index {i} out of range for S_{u.n}")
    if u.word[i - 1] < u.word[i]:
        return right_mult_s(u, i)
    return u


def demazure_step_left(u: Permutation, i: int) -> Permutation:
    """s_i * u if that is longer than u, otherwise u."""
    if not 1 <= i <= u.n - 1:
        raise OutOfRangeError(f"generator index {i} out of range for S_{u.n}")
    inv = u.inverse().word
    if inv[i - 1] < inv[i]:
        return left_mult_s(u, i)
    return u


def demazure_product(word: Iterable[int], n: int) -> Permutation:
    """Fold demazure_step over word, starting from the identity of S_n.

    >>> demazure_product((1, 1), 2).word
    (2, 1)
    """
    u = identity(n)
    for i in word:
        u = demazure_step(u, i)
    return u


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w in Bruhat order, tested by rank dominance:
    rank_u(i, j) >= rank_w(i, j) for all (i, j)."""
    if u.n != w.n:
        raise ValidationError("size mismatch in Bruhat comparison")
    ru, rw = rank_matrix(u), rank_matrix(w)
    n = u.n
    for i in range(1, n + 1):
        rui, rwi = ru[i], rw[i]
        for j in range(1, n + 1):
            if rui[j] < rwi[j]:
                return False
    return True


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n, sorted by (length, word)."""
    from itertools import permutations as _perms

    out = [Permutation(w) for w in _perms(range(1, n + 1))]
    out.sort(key=lambda u: (coxeter_length(u), u.word))
    return out


def all_321_avoiding(n: int) -> list[Permutation]:
    """All 321-avoiding elements of S_n, sorted by (length, word)."""
    return [u for u in all_permutations(n) if is_321_avoiding(u)]
