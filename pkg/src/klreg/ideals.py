"""Explicit generators of Kazhdan-Lusztig ideals and two-sided ladder
determinantal ideals as expanded symbolic minors, and the K-polynomial
computed from enumerated pipe sets.

Polynomials live in variables z_{ij} indexed by cells; they are stored as
canonically ordered integer-coefficient term lists, sign-normalized so the
leading coefficient is positive, which makes generator sets comparable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import IncomparableError, ValidationError
from .ladder import Ladder, region_of, se_corner
from .oracle import DEFAULT_BUDGET, enumerate_pipes
from .perm import Cell, Permutation, bruhat_leq, coxeter_length, rank, rothe_diagram

Monomial = tuple[Cell, ...]  # sorted, repeats allowed


@dataclass(frozen=True, order=True)
class Poly:
    """Integer polynomial in cell variables, canonical and sign-normalized."""

    terms: tuple  # ((monomial, coeff), ...) sorted by monomial

    @staticmethod
    def from_dict(d: dict) -> "Poly | None":
        terms = tuple(sorted((m, c) for m, c in d.items() if c))
        if not terms:
            return None
        if terms[-1][1] < 0:  # leading (largest) monomial gets a positive sign
            terms = tuple((m, -c) for m, c in terms)
        return Poly(terms)

    def degree(self) -> int:
        return max(len(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m, _ in self.terms}) == 1

    def is_multilinear(self) -> bool:
        return all(len(set(m)) == len(m) for m, _ in self.terms)

    def rename(self, mapping: dict) -> "Poly":
        """Rewrite every variable through `mapping` (a cell -> cell dict)."""
        d: dict = {}
        for m, c in self.terms:
            m2 = tuple(sorted(mapping[cell] for cell in m))
            d[m2] = d.get(m2, 0) + c
        out = Poly.from_dict(d)
        if out is None:
            raise ValidationError("variable renaming collapsed the polynomial")
        return out

    def __str__(self):
        def mono(m):
            if not m:
                return "1"
            return "*".join(f"z_{i}_{j}" for i, j in m)

        parts = []
        for m, c in reversed(self.terms):
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            coef = "" if mag == 1 and m else str(mag)
            piece = coef + ("*" if coef and m else "") + (mono(m) if m else "")
            parts.append(sign + (piece or str(mag)))
        return "".join(parts)


def _det(entry, rows: tuple, cols: tuple, memo: dict) -> dict:
    """Expanded determinant of the submatrix, entries in {0, 1, variable}."""
    if not rows:
        return {(): 1}
    key = (rows, cols)
    if key in memo:
        return memo[key]
    out: dict = {}
    r = rows[0]
    rest = rows[1:]
    for idx, c in enumerate(cols):
        e = entry(r, c)
        if e == 0:
            continue
        sub = _det(entry, rest, cols[:idx] + cols[idx + 1 :], memo)
        sign = -1 if idx % 2 else 1
        if e == 1:
            for m, coef in sub.items():
                out[m] = out.get(m, 0) + sign * coef
        else:
            for m, coef in sub.items():
                m2 = tuple(sorted(m + (e,)))
                out[m2] = out.get(m2, 0) + sign * coef
    out = {m: c for m, c in out.items() if c}
    memo[key] = out
    return out


def _minors(entry, all_rows, all_cols, size: int, memo: dict):
    for rows in combinations(all_rows, size):
        for cols in combinations(all_cols, size):
            p = Poly.from_dict(_det(entry, rows, cols, memo))
            if p is not None:
                yield p


def kl_generators(v: Permutation, w: Permutation, all_minors: bool = False) -> frozenset:
    """The (rank_w(i,j)+1)-minors of the patterned matrix of v over rows [i]
    and columns [j], for the cells (i, j) of the Rothe diagram of w.

    By default each block is first fully reduced by its 1-entries, so the
    generators are the minors of the generic part of size
    rank_w(i,j) + 1 - rank_v(i,j); minors that use the 1-entries only
    partially are redundant combinations of these, and keeping them would
    break the generator-set match with ladder ideals.  With
    all_minors=True every nonzero minor of the full patterned block is
    returned instead.
    """
    if v.n != w.n:
        raise IncomparableError("size mismatch")
    if not bruhat_leq(w, v):
        raise IncomparableError(f"{w.word} is not below {v.word} in Bruhat order")
    dv = frozenset(rothe_diagram(v))

    def zentry(i, j):
        return (i, j) if (i, j) in dv else 0

    def entry(i, j):
        if v.word[i - 1] == j:
            return 1
        return zentry(i, j)

    memo: dict = {}
    gens = set()
    for (i, j) in rothe_diagram(w):
        size = rank(w, i, j) + 1
        if all_minors:
            if size <= min(i, j):
                rows = tuple(range(1, i + 1))
                cols = tuple(range(1, j + 1))
                gens.update(_minors(entry, rows, cols, size, memo))
            continue
        one_rows = tuple(r for r in range(1, i + 1) if v.word[r - 1] <= j)
        one_cols = {v.word[r - 1] for r in one_rows}
        zrows = tuple(r for r in range(1, i + 1) if r not in set(one_rows))
        zcols = tuple(c for c in range(1, j + 1) if c not in one_cols)
        m = size - len(one_rows)  # rank_v(i, j) ones sit inside the block
        if 1 <= m <= min(len(zrows), len(zcols)):
            gens.update(_minors(zentry, zrows, zcols, m, memo))
    return frozenset(gens)


def ladder_generators(ladder: Ladder, holes_as_zero: bool = False) -> frozenset:
    """For each marked point (p, r): the r-minors of the ladder matrix over
    rows [p(1)] and columns [p(2)+1, end].

    By default only minors whose entries all lie inside the ladder are taken
    (the classical ladder-determinantal convention, and the one under which
    the generator sets match the Kazhdan-Lusztig side).  With
    holes_as_zero=True, absent cells are read as zeros instead and every
    nonvanishing minor is kept.
    """
    cells = frozenset(region_of(ladder).cells())
    end_col = se_corner(ladder)[1]

    def entry(i, j):
        return (i, j) if (i, j) in cells else 0

    memo: dict = {}
    gens = set()
    for (p, r) in ladder.marked:
        all_rows = tuple(range(1, p[0] + 1))
        all_cols = tuple(range(p[1] + 1, end_col + 1))
        if r > min(len(all_rows), len(all_cols)):
            continue
        for rows in combinations(all_rows, r):
            for cols in combinations(all_cols, r):
                if not holes_as_zero and any((i, j) not in cells for i in rows for j in cols):
                    continue
                poly = Poly.from_dict(_det(entry, rows, cols, memo))
                if poly is not None:
                    gens.add(poly)
    return frozenset(gens)


def k_polynomial(v: Permutation, w: Permutation, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Coefficients (c_0, c_1, ...) of the K-polynomial: the signed sum of
    (1-t)^(#P) over all pipe sets P of the pair."""
    lw = coxeter_length(w)
    counts: Counter = Counter()
    for p in enumerate_pipes(v, w, reduced_only=False, budget=budget):
        counts[len(p)] += 1
    if not counts:
        raise IncomparableError(f"{w.word} is not below {v.word} in Bruhat order")
    top = max(counts)
    coeffs = [0] * (top + 1)
    for m, cnt in counts.items():
        signed = (-1) ** (m - lw) * cnt
        for j in range(m + 1):
            coeffs[j] += signed * comb(m, j) * (-1) ** j
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def k_degree(coeffs: tuple[int, ...]) -> int:
    return len(coeffs) - 1


def ideal_script(gens, variables) -> str:
    """Best-effort Macaulay2/Singular-style script for external checking."""
    vars_sorted = sorted(set(variables))
    names = ", ".join(f"z_{i}_{j}" for i, j in vars_sorted)
    body = ",\n  ".join(str(g) for g in sorted(gens)) or "0"
    return f"R = QQ[{names}];\nI = ideal(\n  {body}\n);\n"
