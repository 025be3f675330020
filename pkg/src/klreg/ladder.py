"""Two-sided mixed ladder regions with marked points: minimality checks,
the associated permutation pair, boundary points, non-intersecting lattice
paths, blanks / weight / unforced elbows, and the lattice-path formulas for
regularity and the a-invariant.

Drawn coordinates: boundary lattice points are (row, col) with (0, 0) at
the region's northwest corner; a box inherits the label of its southeast
corner, so box (i, j) is the cell in row i, column j of the grid.  The
partition pair is drawn reflected across the vertical axis, so the second
partition cuts the region out of the northeast.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import inf

from .errors import (
    ConstructionError,
    ContainmentError,
    InconsistentConstraintsError,
    InfeasibleError,
    MoveNotApplicableError,
    PairingError,
    StructureError,
    ValidationError,
)
from .perm import (
    Cell,
    Permutation,
    bruhat_leq,
    from_lehmer_code,
    is_321_avoiding,
    rank,
)
from .skew import PlusDiagram, SkewRegion, compress

Point = tuple[float, float]


class Tile(Enum):
    """Path tiles; ELBOW_NE connects the north and east edges of its box,
    ELBOW_SW the south and west edges."""

    ELBOW_NE = "ne"
    ELBOW_SW = "sw"
    VERT = "vert"
    HORIZ = "horiz"
    BLANK = "blank"


@dataclass(frozen=True)
class Ladder:
    """A skew board with marked points (p_i, r_i) on its southwest border."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    marked: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        mu = tuple(int(x) for x in self.mu)
        if len(mu) < len(lam):
            mu = mu + (0,) * (len(lam) - len(mu))
        if not lam or any(a <= 0 for a in lam):
            raise ValidationError("lambda must be a nonempty positive partition")
        if any(a < b for a, b in zip(lam, lam[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
            raise ValidationError("partition parts must be weakly decreasing")
        if len(mu) != len(lam) or any(m < 0 for m in mu):
            raise ValidationError("mu must have one nonnegative part per row")
        if any(m >= l for l, m in zip(lam, mu)):
            raise ValidationError("every ladder row must be nonempty")
        # an empty column means the board is not reduced: its bounding width
        # is smaller than lam[0] and the pair correspondence breaks down
        if mu[-1] != 0 or any(mu[i] > lam[i + 1] for i in range(len(lam) - 1)):
            raise ValidationError("ladder has an empty column; reduce the board first")
        marks = tuple(sorted(((int(p[0]), int(p[1])), int(r)) for p, r in self.marked))
        if any(r <= 0 for _, r in marks):
            raise ValidationError("marked point multiplicities must be positive")
        border = _sw_border_points(lam, mu)
        for p, _ in marks:
            if p not in border:
                raise ValidationError(f"marked point {p} is not on the southwest border")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "marked", marks)

    @property
    def n_rows(self) -> int:
        return len(self.lam)

    @property
    def width(self) -> int:
        return self.lam[0]

    @property
    def perimeter_half(self) -> int:
        """n, where the perimeter is 2n."""
        return self.lam[0] + len(self.lam)


def _west_walls(lam) -> list[int]:
    return [lam[0] - l for l in lam]


def _east_walls(lam, mu) -> list[int]:
    return [lam[0] - m for m in mu]


def _sw_border_points(lam, mu) -> set:
    """All lattice points on the southwest border polyline, from the
    northwest corner to the southeast corner."""
    ws = _west_walls(lam)
    pts = set()
    row = 0
    col = 0
    for r in range(1, len(lam) + 1):
        while row < r:
            row += 1
            pts.add((row, col))
        nxt = ws[r] if r < len(lam) else lam[0] - mu[-1]
        while col < nxt:
            col += 1
            pts.add((row, col))
    pts.add((0, 0))
    return pts


def region_of(ladder: Ladder) -> SkewRegion:
    """The ladder's cells as a skew region in drawn coordinates."""
    w = ladder.width
    return SkewRegion(tuple((w - l + 1, w - m) for l, m in zip(ladder.lam, ladder.mu)))


def partition_cells(ladder: Ladder) -> frozenset:
    """All cells of the full outer shape, including the northeast cutout."""
    w = ladder.width
    return frozenset(
        (i, j)
        for i, l in enumerate(ladder.lam, 1)
        for j in range(w - l + 1, w + 1)
    )


def cutout_cells(ladder: Ladder) -> frozenset:
    """Cells of the outer shape that are not ladder cells."""
    w = ladder.width
    return frozenset(
        (i, j)
        for i, m in enumerate(ladder.mu, 1)
        for j in range(w - m + 1, w + 1)
    )


def cell_count(ladder: Ladder) -> int:
    return sum(l - m for l, m in zip(ladder.lam, ladder.mu))


def sw_corners(ladder: Ladder) -> tuple[Cell, ...]:
    """Convex corners along the southwest border, northwest to southeast."""
    ws = _west_walls(ladder.lam)
    corners = []
    for r in range(1, ladder.n_rows):
        if ws[r] > ws[r - 1]:
            corners.append((r, ws[r - 1]))
    corners.append((ladder.n_rows, ws[-1]))
    return tuple(corners)


def ne_corners(ladder: Ladder) -> tuple[Cell, ...]:
    """Convex corners along the northeast border, northwest to southeast."""
    ee = _east_walls(ladder.lam, ladder.mu)
    corners = [(0, ee[0])]
    for r in range(1, ladder.n_rows):
        if ee[r] > ee[r - 1]:
            corners.append((r, ee[r]))
    return tuple(corners)


def se_corner(ladder: Ladder) -> Cell:
    ee = _east_walls(ladder.lam, ladder.mu)
    return (ladder.n_rows, ee[-1])


def ladder_from_json(data) -> Ladder:
    """Accepts a dict or a JSON string of the documented ladder schema."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        marks = tuple((tuple(m["point"]), m["r"]) for m in data["marked"])
        return Ladder(tuple(data["lambda"]), tuple(data.get("mu", ())), marks)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad ladder description: {exc}") from exc


def ladder_to_json(ladder: Ladder) -> dict:
    return {
        "lambda": list(ladder.lam),
        "mu": list(ladder.mu),
        "marked": [{"point": list(p), "r": r} for p, r in ladder.marked],
    }


# ---------------------------------------------------------------------------
# minimality


@dataclass
class MinimalityReport:
    passed: bool
    uncovered: tuple
    row_offset_violations: tuple
    col_offset_violations: tuple


def _max_matching(rows, cols, present) -> int:
    match_col: dict = {}

    def augment(r, seen):
        for c in cols:
            if (r, c) in present and c not in seen:
                seen.add(c)
                if c not in match_col or augment(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    return sum(1 for r in rows if augment(r, set()))


def validate_minimal(ladder: Ladder) -> MinimalityReport:
    """Check that every cell appears in some generator monomial and that the
    marked-point offsets p(1)-r and p(2)-r strictly increase."""
    region = region_of(ladder)
    cells = set(region.cells())
    end_col = se_corner(ladder)[1]
    covered = set()
    for (p, r) in ladder.marked:
        rows = [i for i in range(1, p[0] + 1)]
        cols = [j for j in range(p[1] + 1, end_col + 1)]
        block = {(i, j) for i in rows for j in cols} & cells
        for cell in sorted(block - covered):
            rest = {c for c in block if c[0] != cell[0] and c[1] != cell[1]}
            sub_rows = sorted({i for i, _ in rest})
            sub_cols = sorted({j for _, j in rest})
            if _max_matching(sub_rows, sub_cols, rest) >= r - 1:
                covered.add(cell)
    uncovered = tuple(sorted(cells - covered))

    row_bad = []
    col_bad = []
    for m1, m2 in zip(ladder.marked, ladder.marked[1:]):
        (p1, r1), (p2, r2) = m1, m2
        if p1[0] - r1 >= p2[0] - r2:
            row_bad.append((m1, m2))
        if p1[1] - r1 >= p2[1] - r2:
            col_bad.append((m1, m2))
    passed = not uncovered and not row_bad and not col_bad
    return MinimalityReport(passed, uncovered, tuple(row_bad), tuple(col_bad))


# ---------------------------------------------------------------------------
# the permutation pair


def _rank_envelope_perm(n: int, constraints) -> Permutation:
    cons = [((a, b), c) for (a, b), c in constraints]
    env = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            val = min(a, b)
            for (ak, bk), ck in cons:
                cand = ck + max(0, a - ak) + max(0, b - bk)
                if cand < val:
                    val = cand
            env[a][b] = val
    word = [0] * n
    seen_cols = set()
    for a in range(1, n + 1):
        hits = []
        for b in range(1, n + 1):
            d = env[a][b] - env[a - 1][b] - env[a][b - 1] + env[a - 1][b - 1]
            if d == 1:
                hits.append(b)
            elif d != 0:
                raise InconsistentConstraintsError(
                    f"rank envelope is not a permutation rank matrix at ({a}, {b})"
                )
        if len(hits) != 1 or hits[0] in seen_cols:
            raise InconsistentConstraintsError("rank envelope is not a permutation rank matrix")
        word[a - 1] = hits[0]
        seen_cols.add(hits[0])
    return Permutation(tuple(word))


def rank_constraints(ladder: Ladder, v: Permutation) -> tuple[tuple[Cell, int], ...]:
    """The rank equalities that define w: one per (marked point, NE corner)."""
    betas = ne_corners(ladder)
    out = []
    for (p, r) in ladder.marked:
        a = p[0] + p[1]
        for beta in betas:
            b = beta[0] + beta[1]
            out.append(((a, b), min(a, b, rank(v, a, b) + r - 1)))
    return tuple(out)


def perm_of(ladder: Ladder) -> tuple[Permutation, Permutation]:
    """The pair (v, w) whose Kazhdan-Lusztig ideal matches the ladder ideal.

    v is cut out by the row-length code of the ladder; w is the minimal
    length permutation realizing the marked rank conditions, built from the
    rank envelope and then verified.
    """
    lam, mu = ladder.lam, ladder.mu
    code = []
    for i, (l, m) in enumerate(zip(lam, mu)):
        code.append(l - m)
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        code.extend([0] * (l - nxt))
    v = from_lehmer_code(code)
    cons = rank_constraints(ladder, v)
    w = _rank_envelope_perm(v.n, cons)
    for (a, b), c in cons:
        if rank(w, a, b) != c:
            raise ConstructionError(f"envelope permutation violates rank({a},{b}) = {c}")
    if not (is_321_avoiding(v) and is_321_avoiding(w)):
        raise ConstructionError("ladder pair is not 321-avoiding")
    if not bruhat_leq(w, v):
        raise ConstructionError("ladder pair is not Bruhat-comparable")
    return v, w


# ---------------------------------------------------------------------------
# boundary points


@dataclass
class BoundaryPoints:
    """Labeled endpoints: h[i-1] is H_i, v[i-1] is the V_i paired with it."""

    h: tuple[Point, ...]
    v: tuple[Point, ...]
    extended_marks: tuple[tuple[Cell, int], ...]

    def pairs(self) -> tuple[tuple[Point, Point], ...]:
        return tuple(zip(self.h, self.v))


def boundary_points(ladder: Ladder) -> BoundaryPoints:
    """Half-integer start and end points for the path family, read off the
    rank jumps between consecutive marks along each border segment."""
    alphas = sw_corners(ladder)
    s = len(alphas)
    marks = list(ladder.marked)

    def min_r(pred):
        vals = [r for (p, r) in marks if pred(p)]
        return min(vals) if vals else inf

    r_h = {i: min_r(lambda p, a=a: p[0] == a[0]) for i, a in enumerate(alphas, 1)}
    r_v = {i: min_r(lambda p, a=a: p[1] == a[1]) for i, a in enumerate(alphas, 1)}

    extended = list(marks)
    for i in range(1, s):
        corner = (alphas[i - 1][0], alphas[i][1])
        if not any(p == corner for p, _ in extended):
            rval = min(r_h[i], r_v[i + 1])
            if rval == inf:
                raise StructureError(f"no mark determines the corner fill-in at {corner}")
            extended.append((corner, int(rval)))
    extended.append(((0, 0), 1))
    extended.append((se_corner(ladder), 1))

    v_points: list[Point] = []
    h_points: list[Point] = []
    for i, a in enumerate(alphas, 1):
        seg_v = sorted((m for m in extended if m[0][1] == a[1]), key=lambda m: m[0][0])
        for (p1, r1), (_, r2) in zip(seg_v, seg_v[1:]):
            for kp in range(1, r2 - r1 + 1):
                v_points.append((p1[0] + kp - 0.5, float(p1[1])))
        seg_h = sorted((m for m in extended if m[0][0] == a[0]), key=lambda m: -m[0][1])
        for (p1, r1), (_, r2) in zip(seg_h, seg_h[1:]):
            for kp in range(1, r2 - r1 + 1):
                h_points.append((float(p1[0]), p1[1] - kp + 0.5))

    if len(v_points) != len(h_points):
        raise StructureError(
            f"unbalanced boundary points: {len(v_points)} vertical, {len(h_points)} horizontal"
        )
    h_sorted = sorted(h_points, key=lambda p: (-p[1], -p[0]))  # east to west
    available = sorted(set(v_points))
    assigned: dict[int, Point] = {}
    for i in range(len(h_sorted), 0, -1):
        h = h_sorted[i - 1]
        cands = [p for p in available if p[0] < h[0] and p[1] < h[1]]
        if not cands:
            raise PairingError(f"no unused vertical point northwest of H_{i} = {h}")
        pick = max(cands, key=lambda p: (p[0], p[1]))  # southmost, ties nearest
        assigned[i] = pick
        available.remove(pick)
    labeled_v = tuple(assigned[i] for i in range(1, len(h_sorted) + 1))
    return BoundaryPoints(tuple(h_sorted), labeled_v, tuple(sorted(extended)))


# ---------------------------------------------------------------------------
# path families


@dataclass(frozen=True)
class PathFamily:
    """Tile assignment realizing one non-intersecting path family."""

    tiles: tuple  # sorted tuple of (cell, Tile)
    endpoints: tuple  # ((H_1, V_1), (H_2, V_2), ...)

    @staticmethod
    def make(tiles: dict, endpoints) -> "PathFamily":
        return PathFamily(tuple(sorted(tiles.items())), tuple(endpoints))

    def tile_map(self) -> dict:
        return dict(self.tiles)

    def tile_at(self, cell: Cell) -> Tile:
        return self.tile_map().get(cell, Tile.BLANK)


def _start_box(h: Point) -> Cell:
    return (int(h[0]), int(h[1] + 0.5))


def _goal_box(v: Point) -> Cell:
    return (int(v[0] + 0.5), int(v[1] + 1))


def family_from_routes(ladder: Ladder, bp: BoundaryPoints, routes) -> PathFamily:
    """Assemble tiles from per-path box routes (entered from the south,
    leaving west at the paired vertical point)."""
    tiles: dict = {}
    for route in routes:
        entry = "S"
        for k, box in enumerate(route):
            if box in tiles:
                raise StructureError(f"routes overlap at {box}")
            if k + 1 < len(route):
                nxt = route[k + 1]
                if nxt == (box[0], box[1] - 1):
                    exit_ = "W"
                elif nxt == (box[0] - 1, box[1]):
                    exit_ = "N"
                else:
                    raise StructureError(f"non-monotone step {box} -> {nxt}")
            else:
                exit_ = "W"
            tiles[box] = {
                ("S", "N"): Tile.VERT,
                ("S", "W"): Tile.ELBOW_SW,
                ("E", "N"): Tile.ELBOW_NE,
                ("E", "W"): Tile.HORIZ,
            }[(entry, exit_)]
            entry = "S" if exit_ == "N" else "E"
    return PathFamily.make(tiles, bp.pairs())


def _reachable(src: Cell, goal: Cell, free) -> bool:
    """Is there a north/west monotone route src -> goal through free cells?"""
    if src == goal:
        return True
    seen = set()
    stack = [src]
    while stack:
        cur = stack.pop()
        for nxt in ((cur[0], cur[1] - 1), (cur[0] - 1, cur[1])):
            if nxt == goal:
                return True
            if nxt in free and nxt not in seen and nxt[0] >= goal[0] and nxt[1] >= goal[1]:
                seen.add(nxt)
                stack.append(nxt)
    return False


def p_bot(ladder: Ladder) -> PathFamily:
    """The family in which every path hugs the southwest border maximally:
    paths are placed innermost first, always stepping west when a completion
    still exists."""
    bp = boundary_points(ladder)
    lcells = set(region_of(ladder).cells())
    used: set = set()
    routes: list = [()] * len(bp.h)
    for i in range(len(bp.h), 0, -1):
        start = _start_box(bp.h[i - 1])
        goal = _goal_box(bp.v[i - 1])
        free = lcells - used
        if start not in free or not _reachable(start, goal, free):
            raise InfeasibleError(f"no path from H_{i} to V_{i}; ladder is not minimal?")
        route = [start]
        cur = start
        while cur != goal:
            for cand in ((cur[0], cur[1] - 1), (cur[0] - 1, cur[1])):  # west first
                if cand in free and cand != cur and _reachable(cand, goal, free):
                    route.append(cand)
                    cur = cand
                    break
            else:
                raise InfeasibleError("southwest-hugging walk wedged; ladder is not minimal?")
        used |= set(route)
        routes[i - 1] = tuple(route)
    return family_from_routes(ladder, bp, routes)


def blanks(ladder: Ladder, family: PathFamily) -> tuple[Cell, ...]:
    """Ladder cells not occupied by any path."""
    occupied = {c for c, _ in family.tiles}
    return tuple(c for c in region_of(ladder).cells() if c not in occupied)


def weight(ladder: Ladder) -> int:
    """Number of ladder cells covered by paths; constant across families."""
    return cell_count(ladder) - len(blanks(ladder, p_bot(ladder)))


def elbows(ladder: Ladder, family: PathFamily) -> tuple[Cell, ...]:
    """Unforced elbows: north-east elbow tiles with a blank somewhere on
    their northeast anti-diagonal."""
    blank_set = set(blanks(ladder, family))
    out = []
    for cell, tile in family.tiles:
        if tile != Tile.ELBOW_NE:
            continue
        i, j = cell
        k = 1
        while True:
            probe = (i - k, j + k)
            if probe[0] < 1 or probe[1] > ladder.width:
                break
            if probe in blank_set:
                out.append(cell)
                break
            k += 1
    return tuple(sorted(out))


def nilp_is_valid(ladder: Ladder, family: PathFamily) -> bool:
    """Do the tiles realize non-intersecting north/west paths H_i -> V_i
    whose visits to the cutout satisfy the occupancy conditions?"""
    lam_cells = partition_cells(ladder)
    cut = cutout_cells(ladder)
    tiles = family.tile_map()
    if any(c not in lam_cells for c in tiles):
        return False
    visited: set = set()
    for h, vpt in family.endpoints:
        cur = _start_box(h)
        goal = _goal_box(vpt)
        entry = "S"
        while True:
            tile = tiles.get(cur)
            if tile is None or cur in visited or cur not in lam_cells:
                return False
            visited.add(cur)
            if entry == "S":
                if tile == Tile.VERT:
                    exit_ = "N"
                elif tile == Tile.ELBOW_SW:
                    exit_ = "W"
                else:
                    return False
            else:
                if tile == Tile.ELBOW_NE:
                    exit_ = "N"
                elif tile == Tile.HORIZ:
                    exit_ = "W"
                else:
                    return False
            nxt = (cur[0], cur[1] - 1) if exit_ == "W" else (cur[0] - 1, cur[1])
            if nxt not in lam_cells:
                if cur == goal and exit_ == "W":
                    break
                return False
            entry = "E" if exit_ == "W" else "S"
            cur = nxt
    if len(visited) != len(tiles):
        return False
    for cell in tiles:
        if cell in cut:
            if tiles[cell] == Tile.ELBOW_NE:
                return False
            i, j = cell
            k = 1
            while True:
                probe = (i + k, j - k)
                if probe not in lam_cells:
                    break
                if probe not in tiles:
                    return False  # a blank southeast along the anti-diagonal
                k += 1
    return True


# ---------------------------------------------------------------------------
# droops and the correspondence with plus-diagrams


def droop(family: PathFamily, b: Cell) -> PathFamily:
    """Reroute the path corner southwest of the blank cell b through b,
    matching one excited move of the blank from b to b+(1,-1)."""
    tiles = family.tile_map()
    s = (b[0] + 1, b[1])
    sw = (b[0] + 1, b[1] - 1)
    west = (b[0], b[1] - 1)
    if b in tiles:
        raise MoveNotApplicableError(f"cell {b} is occupied")
    if tiles.get(sw) != Tile.ELBOW_NE:
        raise MoveNotApplicableError(f"no northeast elbow at {sw}")
    ts = tiles.get(s)
    tw = tiles.get(west)
    if ts not in (Tile.HORIZ, Tile.ELBOW_SW) or tw not in (Tile.VERT, Tile.ELBOW_SW):
        raise MoveNotApplicableError(f"droop frame around {b} is malformed")
    del tiles[sw]
    tiles[b] = Tile.ELBOW_SW
    tiles[s] = Tile.ELBOW_NE if ts == Tile.HORIZ else Tile.VERT
    tiles[west] = Tile.ELBOW_NE if tw == Tile.VERT else Tile.HORIZ
    return PathFamily.make(tiles, family.endpoints)


def diagram_of_paths(ladder: Ladder, family: PathFamily) -> PlusDiagram:
    """The blank set of a family, as a plus-diagram on the ladder region."""
    return PlusDiagram(region_of(ladder), frozenset(blanks(ladder, family)))


def _check_region_matches(ladder: Ladder, v: Permutation) -> None:
    region, _ = compress(v)
    if region != region_of(ladder):
        raise StructureError("compressed diagram of v does not match the ladder region")


def paths_of_diagram(ladder: Ladder, diagram: PlusDiagram, budget: int = 1_000_000) -> PathFamily:
    """Inverse of diagram_of_paths: replay the excited moves leading from
    the top diagram to `diagram` as droops starting from the bottom family."""
    from .skew import d_top as _d_top

    v, w = perm_of(ladder)
    _check_region_matches(ladder, v)
    top = _d_top(v, w)
    family = p_bot(ladder)
    if frozenset(blanks(ladder, family)) != top.pluses:
        raise StructureError("bottom family does not match the top diagram")
    target = frozenset(diagram.pluses)
    if target == top.pluses:
        return family
    # breadth-first search in the excited-move closure, tracking parents
    from collections import deque

    parents: dict = {top.pluses: None}
    queue = deque([top.pluses])
    found = None
    while queue and found is None:
        state = queue.popleft()
        for b in sorted(state):
            t = (b[0] + 1, b[1] - 1)
            s = (b[0] + 1, b[1])
            west = (b[0], b[1] - 1)
            if all(c in diagram.region and c not in state for c in (t, s, west)):
                nxt = state - {b} | {t}
                if nxt not in parents:
                    parents[nxt] = (state, b)
                    if nxt == target:
                        found = nxt
                        break
                    queue.append(nxt)
                    if len(parents) > budget:
                        raise ContainmentError("diagram not reached within budget")
    if found is None:
        raise ContainmentError("diagram is not in the excited-move closure of the top diagram")
    moves = []
    state = found
    while parents[state] is not None:
        state, b = parents[state]
        moves.append(b)
    for b in reversed(moves):
        family = droop(family, b)
    return family


def p_zip(ladder: Ladder) -> PathFamily:
    """The family whose blanks form the canonical slid diagram."""
    from .zipdiag import _zip_data

    v, w = perm_of(ladder)
    _check_region_matches(ladder, v)
    data = _zip_data(v, w)
    family = p_bot(ladder)
    if frozenset(blanks(ladder, family)) != data.top.pluses:
        raise StructureError("bottom family does not match the top diagram")
    for b in data.move_log:
        family = droop(family, b)
    if frozenset(blanks(ladder, family)) != data.zipped.pluses:
        raise StructureError("droop replay did not land on the slid diagram")
    return family


def regularity_ladder(ladder: Ladder) -> int:
    """Number of unforced elbows of the zipped family."""
    return len(elbows(ladder, p_zip(ladder)))


def a_invariant_ladder(ladder: Ladder) -> int:
    return regularity_ladder(ladder) - weight(ladder)


# ---------------------------------------------------------------------------
# rendering

_GLYPH = {
    Tile.ELBOW_NE: "└",  # └
    Tile.ELBOW_SW: "┐",  # ┐
    Tile.VERT: "│",  # │
    Tile.HORIZ: "─",  # ─
}


def render_paths(ladder: Ladder, family: PathFamily) -> str:
    """ASCII grid of the five tiles plus a legend of labeled endpoints."""
    tiles = family.tile_map()
    lcells = set(region_of(ladder).cells())
    lam_cells = partition_cells(ladder)
    lines = []
    for i in range(1, ladder.n_rows + 1):
        chars = []
        for j in range(1, ladder.width + 1):
            cell = (i, j)
            if cell in tiles:
                chars.append(_GLYPH[tiles[cell]])
            elif cell in lcells:
                chars.append("·")  # ·
            elif cell in lam_cells:
                chars.append(" ")
            else:
                chars.append(" ")
        lines.append("".join(chars).rstrip())
    for i, (h, vpt) in enumerate(family.endpoints, 1):
        lines.append(f"H{i}=({h[0]:g},{h[1]:g})  V{i}=({vpt[0]:g},{vpt[1]:g})")
    return "\n".join(lines)
