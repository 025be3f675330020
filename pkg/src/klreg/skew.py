"""Compression of Rothe diagrams of 321-avoiding permutations to skew
regions, plus-diagrams, and the excited move engine.

Skew regions are drawn in a convention that reflects English notation
across the vertical axis, so row starts and row ends both weakly increase
going down.  Excited moves translate a plus one step along the (+1, -1)
anti-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MoveNotApplicableError, PatternError, StructureError
from .perm import Cell, Permutation, is_321_avoiding, rothe_diagram
from .pipes import d_ne


@dataclass(frozen=True)
class SkewRegion:
    """Contiguous column interval [start_i, end_i] per row, 1-indexed."""

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        for a, b in rows:
            if not 1 <= a <= b:
                raise StructureError(f"bad row interval [{a}, {b}]")
        for (a1, b1), (a2, b2) in zip(rows, rows[1:]):
            if a2 < a1 or b2 < b1:
                raise StructureError("row starts/ends must weakly increase")
        object.__setattr__(
            self,
            "_cells",
            frozenset((i, j) for i, (a, b) in enumerate(rows, 1) for j in range(a, b + 1)),
        )

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._cells

    def cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self._cells))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return max((b for _, b in self.rows), default=0)

    def size(self) -> int:
        return len(self._cells)


EMPTY_REGION = SkewRegion(())


@dataclass(frozen=True)
class PlusDiagram:
    """A skew region together with a set of marked cells."""

    region: SkewRegion
    pluses: frozenset

    def __post_init__(self):
        pluses = frozenset(self.pluses)
        object.__setattr__(self, "pluses", pluses)
        bad = [c for c in pluses if c not in self.region]
        if bad:
            raise StructureError(f"pluses outside region: {sorted(bad)}")

    def plus_list(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.pluses))

    def size(self) -> int:
        return len(self.pluses)


@dataclass
class CellMaps:
    """The compression bijection between Rothe-diagram cells and region cells."""

    forward: dict
    backward: dict

    def image(self, cells) -> frozenset:
        return frozenset(self.forward[c] for c in cells)

    def preimage(self, cells) -> frozenset:
        return frozenset(self.backward[c] for c in cells)


def compress(v: Permutation) -> tuple[SkewRegion, CellMaps]:
    """Delete empty rows and columns of D(v), shifting up and left.

    Raises PatternError unless v is 321-avoiding, which is exactly the case
    in which the compressed diagram is a valid skew region.
    """
    if not is_321_avoiding(v):
        raise PatternError(f"{v.word} is not 321-avoiding")
    cells = rothe_diagram(v)
    rows = sorted({i for i, _ in cells})
    cols = sorted({j for _, j in cells})
    rmap = {r: k for k, r in enumerate(rows, 1)}
    cmap = {c: k for k, c in enumerate(cols, 1)}
    forward = {(i, j): (rmap[i], cmap[j]) for (i, j) in cells}
    backward = {img: src for src, img in forward.items()}
    intervals = []
    for r in rows:
        rcols = sorted(cmap[j] for (i, j) in cells if i == r)
        if rcols != list(range(rcols[0], rcols[-1] + 1)):
            raise StructureError(f"compressed row {rmap[r]} is not contiguous")
        intervals.append((rcols[0], rcols[-1]))
    return SkewRegion(tuple(intervals)), CellMaps(forward, backward)


def region_partitions(region: SkewRegion) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover the partition pair by reflecting across the vertical axis."""
    w = region.width
    lam = tuple(w - a + 1 for a, _ in region.rows)
    mu = tuple(w - b for _, b in region.rows)
    return lam, mu


def d_top(v: Permutation, w: Permutation) -> PlusDiagram:
    """Compressed image of the northeast-most reduced pipe set."""
    region, maps = compress(v)
    return PlusDiagram(region, maps.image(d_ne(v, w)))


def _move_frame(region: SkewRegion, b: Cell) -> tuple[Cell, Cell, Cell]:
    """Cells that must be inside the region and plus-free for a move at b:
    the target b+(1,-1) plus its east and north neighbours b+(1,0), b+(0,-1)."""
    i, j = b
    return (i + 1, j - 1), (i + 1, j), (i, j - 1)


def _movable(diagram: PlusDiagram, b: Cell) -> bool:
    frame = _move_frame(diagram.region, b)
    return all(c in diagram.region and c not in diagram.pluses for c in frame)


def excited_targets(diagram: PlusDiagram) -> tuple[Cell, ...]:
    """Pluses at which an excited move currently applies."""
    return tuple(sorted(b for b in diagram.pluses if _movable(diagram, b)))


def apply_excited(diagram: PlusDiagram, b: Cell) -> PlusDiagram:
    """Slide the plus at b one step to b+(1,-1)."""
    if b not in diagram.pluses:
        raise MoveNotApplicableError(f"no plus at {b}")
    if not _movable(diagram, b):
        raise MoveNotApplicableError(f"excited move does not apply at {b}")
    target = (b[0] + 1, b[1] - 1)
    return PlusDiagram(diagram.region, diagram.pluses - {b} | {target})


def apply_k_excited(diagram: PlusDiagram, b: Cell) -> PlusDiagram:
    """Copy the plus at b to b+(1,-1), keeping b occupied."""
    if b not in diagram.pluses:
        raise MoveNotApplicableError(f"no plus at {b}")
    if not _movable(diagram, b):
        raise MoveNotApplicableError(f"K-theoretic excited move does not apply at {b}")
    target = (b[0] + 1, b[1] - 1)
    return PlusDiagram(diagram.region, diagram.pluses | {target})


def render_diagram(diagram: PlusDiagram, bold=()) -> str:
    """ASCII picture: '.' empty cell, '+' plus, 'K' cells from `bold`,
    ' ' outside the region."""
    bold = frozenset(bold)
    lines = []
    for i, (a, b) in enumerate(diagram.region.rows, 1):
        chars = []
        for j in range(1, b + 1):
            if j < a:
                chars.append(" ")
            elif (i, j) in bold:
                chars.append("K")
            elif (i, j) in diagram.pluses:
                chars.append("+")
            else:
                chars.append(".")
        lines.append("".join(chars).rstrip() or "")
    return "\n".join(lines)
