"""Column-represented polyominoes and their shape predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence


class MalformedPolyomino(ValueError):
    pass


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        return cls(tuple(int(x) for x in text.split(","))) if text else cls()


@dataclass(frozen=True)
class ColumnPolyomino:
    """Columns left to right as half-open row ranges ``[bottom, top)``."""

    columns: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cols = tuple((int(b), int(t)) for b, t in self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise MalformedPolyomino("polyomino has no columns")
        for i, (b, t) in enumerate(cols):
            if t <= b:
                raise MalformedPolyomino(f"column {i + 1} is empty: [{b}, {t})")
        for i, ((b1, t1), (b2, t2)) in enumerate(zip(cols, cols[1:])):
            if min(t1, t2) <= max(b1, b2):
                raise MalformedPolyomino(f"columns {i + 1} and {i + 2} do not share an edge")

    @property
    def area(self) -> int:
        return sum(t - b for b, t in self.columns)

    @property
    def column_heights(self) -> tuple[int, ...]:
        return tuple(t - b for b, t in self.columns)

    def rows(self) -> set[int]:
        return {y for b, t in self.columns for y in range(b, t)}

    @property
    def semiperimeter(self) -> int:
        return len(self.columns) + len(self.rows())

    def cells(self) -> set[tuple[int, int]]:
        return {(x, y) for x, (b, t) in enumerate(self.columns) for y in range(b, t)}

    def rows_top_to_bottom(self) -> Composition:
        counts: dict[int, int] = {}
        for b, t in self.columns:
            for y in range(b, t):
                counts[y] = counts.get(y, 0) + 1
        return Composition(tuple(counts[y] for y in sorted(counts, reverse=True)))

    def format(self) -> str:
        return "\n".join(f"col {k}: [{b}, {t})" for k, (b, t) in enumerate(self.columns, 1))

    @classmethod
    def parse(cls, text: str) -> "ColumnPolyomino":
        """Accepts ``b:t;b:t`` or the multi-line ``col k: [b, t)`` form."""
        cols = []
        if "[" in text:
            for line in text.strip().splitlines():
                inner = line.split("[", 1)[1].rstrip(") ")
                b, t = inner.split(",")
                cols.append((int(b), int(t)))
        else:
            for chunk in text.strip().split(";"):
                b, t = chunk.split(":")
                cols.append((int(b), int(t)))
        return cls(tuple(cols))


@dataclass(frozen=True)
class PolyominoClass:
    column_convex: bool
    row_convex: bool
    convex: bool
    parallelogram: bool
    directed: bool
    area: int
    semiperimeter: int
    rows_top_to_bottom: Composition


def is_row_convex(p: ColumnPolyomino) -> bool:
    by_row: dict[int, list[int]] = {}
    for x, (b, t) in enumerate(p.columns):
        for y in range(b, t):
            by_row.setdefault(y, []).append(x)
    return all(xs[-1] - xs[0] + 1 == len(xs) for xs in by_row.values())


def is_staircase(p: ColumnPolyomino) -> bool:
    bottoms = [b for b, _ in p.columns]
    tops = [t for _, t in p.columns]
    return bottoms == sorted(bottoms) and tops == sorted(tops)


def is_directed(p: ColumnPolyomino) -> bool:
    cells = p.cells()
    seed = (0, p.columns[0][0])
    seen = {seed}
    todo = deque([seed])
    while todo:
        x, y = todo.popleft()
        for nxt in ((x + 1, y), (x, y + 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return len(seen) == len(cells)


def diagonals_connected(cells: set[tuple[int, int]]) -> bool:
    """Every line of slope -1 meets the union of cells in a connected set.

    A generic line ``x + y = s`` with ``c < s < c + 1`` crosses the cells of
    diagonals ``c`` and ``c - 1`` in the order ``(x, c-x), (x, c-1-x),
    (x+1, c-1-x), ...``; connectivity means the occupied positions of that
    sequence are consecutive.
    """
    if not cells:
        return True
    lo = min(x + y for x, y in cells)
    hi = max(x + y for x, y in cells) + 1
    for c in range(lo, hi + 1):
        pos = []
        for x, y in cells:
            if x + y == c:
                pos.append(2 * x)
            elif x + y == c - 1:
                pos.append(2 * x + 1)
        if pos and max(pos) - min(pos) + 1 != len(pos):
            return False
    return True


def classify_polyomino(p: ColumnPolyomino) -> PolyominoClass:
    row_convex = is_row_convex(p)
    return PolyominoClass(
        column_convex=True,
        row_convex=row_convex,
        convex=row_convex,
        parallelogram=is_staircase(p),
        directed=is_directed(p),
        area=p.area,
        semiperimeter=p.semiperimeter,
        rows_top_to_bottom=p.rows_top_to_bottom(),
    )


def column_convex_polyominoes(area: int) -> Iterator[ColumnPolyomino]:
    """All column-convex polyominoes of the given area, first column based at 0."""

    def rec(cols: list[tuple[int, int]], left: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if left == 0:
            yield tuple(cols)
            return
        pb, pt = cols[-1]
        for h in range(1, left + 1):
            for b in range(pb - h + 1, pt):
                cols.append((b, b + h))
                yield from rec(cols, left - h)
                cols.pop()

    if area < 1:
        return
    for h in range(1, area + 1):
        for cols in rec([(0, h)], area - h):
            yield ColumnPolyomino(cols)


def parallelogram_by_semiperimeter(sp: int) -> Iterator[ColumnPolyomino]:
    """Staircase polyominoes (first column based at 0) with ``#columns + #rows = sp``."""

    def rec(cols: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
        b0, t0 = cols[-1]
        used = len(cols) + t0 - cols[0][0]
        if used == sp:
            yield tuple(cols)
        if used >= sp:
            return
        for b in range(b0, t0):
            for t in range(t0, t0 + sp - used):
                cols.append((b, t))
                yield from rec(cols)
                cols.pop()

    for h in range(1, sp):
        yield from (ColumnPolyomino(c) for c in rec([(0, h)]))

