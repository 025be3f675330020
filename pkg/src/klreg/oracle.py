"""Independent brute-force references: breadth-first closures of the move
system, exhaustive earliest-subword search, pipe-set enumeration, degree
and support of the unspecialized Grothendieck polynomial, minimal-length
permutations for rank constraints, and small lattice-path enumerations.

These deliberately avoid the clever constructions they certify.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    InconsistentConstraintsError,
    ResourceError,
    StructureError,
)
from .perm import (
    Cell,
    Permutation,
    all_permutations,
    bruhat_leq,
    coxeter_length,
    demazure_step,
    identity,
    is_321_avoiding,
    rank,
)
from .pipes import box_labels, reading_order
from .skew import compress, d_top

DEFAULT_BUDGET = 1_000_000


@dataclass
class ClosureSet:
    """All diagrams reachable from the top diagram, with BFS statistics."""

    diagrams: tuple[tuple[Cell, ...], ...]  # sorted, deterministic
    size_histogram: dict
    max_size: int
    expanded: int

    def __len__(self):
        return len(self.diagrams)

    def as_sets(self) -> frozenset:
        return frozenset(frozenset(d) for d in self.diagrams)


def closure(v: Permutation, w: Permutation, budget: int = DEFAULT_BUDGET, moves: str = "both") -> ClosureSet:
    """BFS closure of the top diagram under excited moves, and under
    K-theoretic moves too when moves == "both"."""
    if moves not in ("both", "excited"):
        raise ValueError("moves must be 'both' or 'excited'")
    top = d_top(v, w)
    region = top.region
    cells = region.cells()
    index = {c: k for k, c in enumerate(cells)}

    transitions = []
    for c in cells:
        t = (c[0] + 1, c[1] - 1)
        s = (c[0] + 1, c[1])
        west = (c[0], c[1] - 1)
        if all(x in region for x in (t, s, west)):
            frame = (1 << index[t]) | (1 << index[s]) | (1 << index[west])
            transitions.append((1 << index[c], frame, 1 << index[t]))

    start = 0
    for c in top.pluses:
        start |= 1 << index[c]
    seen = {start}
    queue = deque([start])
    expanded = 0
    while queue:
        state = queue.popleft()
        expanded += 1
        for bit, frame, target in transitions:
            if state & bit and not state & frame:
                nxt = (state ^ bit) | target
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
                if moves == "both":
                    nxt = state | target
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
                if len(seen) > budget:
                    raise ResourceError(
                        f"closure budget {budget} exceeded",
                        partial={"visited": len(seen), "expanded": expanded},
                    )

    def unpack(state: int) -> tuple[Cell, ...]:
        return tuple(c for c in cells if state >> index[c] & 1)

    diagrams = sorted((unpack(s) for s in seen), key=lambda d: (len(d), d))
    hist = dict(Counter(len(d) for d in diagrams))
    return ClosureSet(tuple(diagrams), hist, max(hist) if hist else 0, expanded)


def max_closure_size(v: Permutation, w: Permutation, budget: int = DEFAULT_BUDGET) -> int:
    """Largest diagram cardinality in the full closure: the degree oracle."""
    return closure(v, w, budget).max_size


def groth_support(v: Permutation, w: Permutation, budget: int = DEFAULT_BUDGET):
    """Each closure element pulled back to D(v), with its sign."""
    _, maps = compress(v)
    lw = coxeter_length(w)
    out = []
    for d in closure(v, w, budget).diagrams:
        up = tuple(sorted(maps.backward[c] for c in d))
        out.append((up, (-1) ** (len(d) - lw)))
    return out


def enumerate_pipes(
    v: Permutation,
    w: Permutation,
    reduced_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[tuple[Cell, ...]]:
    """All subsets of D(v) whose reading word has Demazure product w,
    by direct subset search over the reading order."""
    order = reading_order(v)
    labels = box_labels(v)
    lw = coxeter_length(w)
    n = v.n
    count = 0

    def rec(k: int, u: Permutation, chosen: tuple, chosen_len: int):
        nonlocal count
        count += 1
        if count > budget:
            raise ResourceError(f"pipe enumeration budget {budget} exceeded")
        if k == len(order):
            if u == w and (not reduced_only or chosen_len == lw):
                yield chosen
            return
        if not bruhat_leq(u, w):
            return
        yield from rec(k + 1, u, chosen, chosen_len)
        cell = order[k]
        yield from rec(
            k + 1, demazure_step(u, labels[cell]), chosen + (cell,), chosen_len + 1
        )

    yield from rec(0, identity(n), (), 0)


def brute_earliest_subword(v: Permutation, w: Permutation, budget: int = DEFAULT_BUDGET) -> tuple[Cell, ...]:
    """Lexicographically earliest index subsequence of the reading word of
    D(v) that is a reduced word for w, by backtracking in lex order."""
    order = reading_order(v)
    labels = box_labels(v)
    need = coxeter_length(w)
    nodes = 0

    def rec(k: int, u: Permutation, taken: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceError(f"subword search budget {budget} exceeded")
        if len(taken) == need:
            return u == w
        if len(order) - k < need - len(taken):
            return False
        if not bruhat_leq(u, w):
            return False
        cell = order[k]
        a = labels[cell]
        if u.word[a - 1] < u.word[a]:
            taken.append(cell)
            if rec(k + 1, _swap(u, a), taken):
                return True
            taken.pop()
        return rec(k + 1, u, taken)

    taken: list = []
    if not rec(0, identity(v.n), taken):
        raise StructureError("no reduced subword found; is w <= v?")
    return tuple(taken)


def _swap(u: Permutation, i: int) -> Permutation:
    word = list(u.word)
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(tuple(word))


def brute_minimal_w(n: int, constraints: Iterable[tuple[Cell, int]]) -> Permutation:
    """First permutation of S_n in length order meeting every rank equality
    rank(w, a, b) == c for ((a, b), c) in constraints."""
    if n > 8:
        raise ResourceError(f"brute scan limited to n <= 8, got {n}")
    cons = [((a, b), c) for (a, b), c in constraints]
    for u in all_permutations(n):
        if all(rank(u, a, b) == c for (a, b), c in cons):
            return u
    raise InconsistentConstraintsError("no permutation satisfies the rank constraints")


def enumerate_nilp(ladder, budget: int = DEFAULT_BUDGET, allow_partial: bool = False):
    """All valid non-intersecting path families on the ladder.

    With allow_partial=True the enumeration stops quietly once `budget`
    families are collected; otherwise exceeding the budget is an error.
    """
    from . import ladder as lad

    bp = lad.boundary_points(ladder)
    lam_cells = lad.partition_cells(ladder)
    ell = len(bp.h)
    results = []

    def routes(start: Cell, goal: Cell, used: frozenset):
        """All monotone box routes start -> goal inside the partition shape."""
        if start not in lam_cells or start in used:
            return
        if start == goal:
            yield (start,)
            return
        if start[0] < goal[0] or start[1] < goal[1]:
            return
        for nxt in ((start[0], start[1] - 1), (start[0] - 1, start[1])):
            for rest in routes(nxt, goal, used):
                yield (start,) + rest

    def place(i: int, used: frozenset, acc: list):
        if i == ell:
            fam = lad.family_from_routes(ladder, bp, tuple(acc))
            if lad.nilp_is_valid(ladder, fam):
                results.append(fam)
                if len(results) >= budget:
                    if allow_partial:
                        raise _Stop()
                    raise ResourceError(f"path enumeration budget {budget} exceeded")
            return
        h = bp.h[i]
        vpt = bp.v[i]
        start = (int(h[0]), int(h[1] + 0.5))
        goal = (int(vpt[0] + 0.5), int(vpt[1] + 1))
        for route in routes(start, goal, used):
            acc.append(route)
            place(i + 1, used | frozenset(route), acc)
            acc.pop()

    class _Stop(Exception):
        pass

    try:
        place(0, frozenset(), [])
    except _Stop:
        pass
    return tuple(results)


def random_avoiding_pair(rng, n: int) -> tuple[Permutation, Permutation]:
    """A uniform-ish random 321-avoiding pair w <= v, sampled by taking a
    random 321-avoiding v and the Demazure product of a random subset of
    its reading word."""
    from .pipes import delta

    while True:
        word = list(range(1, n + 1))
        rng.shuffle(word)
        v = Permutation(tuple(word))
        if is_321_avoiding(v):
            break
    order = reading_order(v)
    while True:
        subset = [c for c in order if rng.random() < 0.5]
        w = delta(v, subset)
        if is_321_avoiding(w):
            return v, w
