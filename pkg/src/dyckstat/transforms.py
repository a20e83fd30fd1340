"""Bijections between Dyck-path classes, compositions and polyominoes."""

from __future__ import annotations

from dataclasses import dataclass

from .paths import DOWN, UP, DyckPath, analyze, class_flags, peaks_and_valleys, pyramid
from .polyomino import ColumnPolyomino, Composition, MalformedPolyomino

__all__ = [
    "ColumnPolyomino",
    "Composition",
    "MarkedPath",
    "DecompositionRecord",
    "NotInClass",
    "PartBoundViolated",
    "NotSymmetricPeak",
    "WeightTooSmall",
    "EmptyPath",
    "wlt_decompose",
    "wlt_to_composition",
    "composition_to_wlt",
    "mlt_decompose",
    "mlt_to_composition",
    "composition_to_mlt",
    "eq8_insert",
    "eq8_delete",
    "eq8_pair",
    "eq8_unpair",
    "delest_viennot",
    "delest_viennot_inverse",
    "deutsch_prodinger",
    "deutsch_prodinger_inverse",
]


class TransformError(ValueError):
    pass


class NotInClass(TransformError):
    pass


class PartBoundViolated(TransformError):
    pass


class NotSymmetricPeak(TransformError):
    pass


class WeightTooSmall(TransformError):
    pass


class EmptyPath(TransformError):
    pass


@dataclass(frozen=True)
class MarkedPath:
    path: DyckPath
    peak_index: int

    def __post_init__(self):
        n_peaks = len(peaks_and_valleys(self.path)[0])
        if not 0 <= self.peak_index < n_peaks:
            raise ValueError(f"peak index {self.peak_index} out of range for {self.path}")

    @property
    def peak(self):
        return peaks_and_valleys(self.path)[0][self.peak_index]


@dataclass(frozen=True)
class DecompositionRecord:
    """Apex height and the pyramid or pit pieces of a restricted-class path."""

    apex_height: int
    pieces: tuple[DyckPath | str, ...]
    last_piece: DyckPath | None = None


def _pyramid_at(steps: str, pos: int) -> int:
    """Size of the pyramid ``U^k D^k`` starting at ``pos`` that is followed
    by an up step, or 0 when the step at ``pos`` is that up step."""
    k = 0
    while pos + k < len(steps) and steps[pos + k] == UP:
        k += 1
    j = 0
    while pos + k + j < len(steps) and steps[pos + k + j] == DOWN:
        j += 1
    return k if j == k and k > 0 else 0


# strictly increasing valley heights <-> compositions --------------------------------


def wlt_decompose(path: DyckPath) -> DecompositionRecord:
    """Split a path with strictly increasing valley heights into pyramids.

    Non-pyramids read ``P_0 U P_1 U ... U P_{a-1} U U P_a D U P'_a D^{a+1}``
    where ``a`` is the height of the last valley; for ``a = 0`` that is
    ``U P_0 D U P'_0 D``.
    """
    pieces = _wlt_pieces(path)
    if len(pieces) == 1:
        return DecompositionRecord(0, tuple(pieces))
    return DecompositionRecord(len(pieces) - 2, tuple(pieces[:-1]), pieces[-1])


def composition_to_wlt(comp: Composition) -> DyckPath:
    parts = comp.parts
    if not parts:
        return DyckPath()
    if len(parts) == 1:
        return pyramid(parts[0])
    a = len(parts) - 2
    pyr = [pyramid(p - 1).steps for p in parts]
    prefix = "".join(pyr[i] + UP for i in range(a))
    steps = prefix + UP + pyr[a] + DOWN + UP + pyr[a + 1] + DOWN * (a + 1)
    return DyckPath(steps)


def wlt_to_composition(path: DyckPath) -> Composition:
    """Strictly-increasing-valley path to a composition of its semilength."""
    if path.semilength == 0:
        return Composition()
    rec = _wlt_pieces(path)
    comp = Composition(tuple(p.semilength + 1 for p in rec)) if len(rec) > 1 else Composition((path.semilength,))
    if composition_to_wlt(comp) != path:
        raise NotInClass(f"{path} does not decompose")
    return comp


def _wlt_pieces(path: DyckPath) -> list[DyckPath]:
    flags = class_flags(path)
    if not flags.w_strict:
        raise NotInClass(f"{path} does not have strictly increasing valley heights")
    if flags.pyramid:
        return [path]
    steps = path.steps
    a = analyze(path).valley_heights[-1]
    pos = 0
    pieces = []
    for _ in range(a):
        k = _pyramid_at(steps, pos)
        pieces.append(pyramid(k))
        pos += 2 * k + 1
    # remainder is U P_a D U P'_a D^{a+1}
    rest = steps[pos:]
    k1 = 0
    while 1 + k1 < len(rest) and rest[1 + k1] == UP:
        k1 += 1
    pieces.append(pyramid(k1))
    mid = 1 + 2 * k1 + 1
    k2 = 0
    while mid + 1 + k2 < len(rest) and rest[mid + 1 + k2] == UP:
        k2 += 1
    pieces.append(pyramid(k2))
    return pieces


# strictly increasing peak heights <-> compositions with i-th part <= i ----------------


def mlt_decompose(path: DyckPath) -> DecompositionRecord:
    """``U P_1 U P_2 ... U P_{a-1} U D^a`` with ``P_i`` a pit of size at most ``i``."""
    if not class_flags(path).m_strict:
        raise NotInClass(f"{path} does not have strictly increasing peak heights")
    if path.semilength == 0:
        return DecompositionRecord(0, ())
    steps = path.steps
    pos, h = 1, 1
    pits: list[str] = []
    while steps[pos:] != DOWN * h:
        j = 0
        while steps[pos + j] == DOWN:
            j += 1
        if j > h or steps[pos + j: pos + 2 * j + 1] != UP * (j + 1):
            raise NotInClass(f"{path} does not decompose")
        pits.append(DOWN * j + UP * j)
        pos += 2 * j + 1
        h += 1
    return DecompositionRecord(h, tuple(pits))


def mlt_to_composition(path: DyckPath) -> Composition:
    if path.semilength == 0:
        return Composition()
    rec = mlt_decompose(path)
    comp = Composition((1,) + tuple(len(p) // 2 + 1 for p in rec.pieces))
    if composition_to_mlt(comp) != path:
        raise NotInClass(f"{path} does not decompose")
    return comp


def composition_to_mlt(comp: Composition) -> DyckPath:
    parts = comp.parts
    for i, p in enumerate(parts, 1):
        if p > i:
            raise PartBoundViolated(f"part {i} is {p} > {i}")
    if not parts:
        return DyckPath()
    a = len(parts)
    body = "".join(DOWN * (p - 1) + UP * (p - 1) + UP for p in parts[1:])
    return DyckPath(UP + body + DOWN * a)


# pyramid insertion at a distinguished symmetric peak ---------------------------------


def eq8_insert(marked: MarkedPath, n: int) -> tuple[MarkedPath, int]:
    """Insert ``U^(n-k) D^(n-k)`` at the apex of the distinguished peak.

    Returns the new marked path and ``i = n - k``; ``i = 0`` leaves the
    input unchanged and lies outside the counted range ``i >= 1``.
    """
    k = marked.path.semilength
    peak = marked.peak
    if not peak.symmetric:
        raise NotSymmetricPeak(f"peak {marked.peak_index} of {marked.path} is not symmetric")
    if n < k:
        raise ValueError(f"target semilength {n} < {k}")
    i = n - k
    s = marked.path.steps
    cut = peak.index + 1
    steps = s[:cut] + UP * i + DOWN * i + s[cut:]
    return MarkedPath(DyckPath(steps), marked.peak_index), i


def eq8_delete(marked: MarkedPath, i: int) -> MarkedPath:
    """Remove ``U^i D^i`` through the apex of the distinguished peak.

    ``i`` must leave the peak in place, i.e. ``1 <= i < weight``.
    """
    peak = marked.peak
    if not peak.symmetric:
        raise NotSymmetricPeak(f"peak {marked.peak_index} of {marked.path} is not symmetric")
    if i < 1:
        raise ValueError("deletion size must be positive")
    if i >= peak.weight:
        raise WeightTooSmall(
            f"deleting {i} steps from a peak of weight {peak.weight} removes the peak"
        )
    s = marked.path.steps
    cut = peak.index + 1
    steps = s[: cut - i] + s[cut + i:]
    return MarkedPath(DyckPath(steps), marked.peak_index)


def eq8_pair(marked: MarkedPath, n: int) -> tuple[MarkedPath, int]:
    """Counting bijection: marked paths of semilength ``<= n`` to pairs
    ``(path of semilength n, j)`` with ``1 <= j <= weight``; ``j = n - k + 1``."""
    image, i = eq8_insert(marked, n)
    return image, i + 1


def eq8_unpair(marked: MarkedPath, j: int) -> MarkedPath:
    if not marked.peak.symmetric:
        raise NotSymmetricPeak(f"peak {marked.peak_index} of {marked.path} is not symmetric")
    if not 1 <= j <= marked.peak.weight:
        raise WeightTooSmall(f"index {j} outside 1..{marked.peak.weight}")
    return marked if j == 1 else eq8_delete(marked, j - 1)


# polyomino maps ---------------------------------------------------------------------------


def _heights(path: DyckPath) -> tuple[tuple[int, ...], tuple[int, ...]]:
    peaks, valleys = peaks_and_valleys(path)
    return tuple(p.height for p in peaks), tuple(v.height for v in valleys)


def _path_from_heights(peaks: tuple[int, ...], valleys: tuple[int, ...]) -> DyckPath:
    steps = []
    h = 0
    for k, a in enumerate(peaks):
        steps.append(UP * (a - h))
        b = valleys[k] if k < len(valleys) else 0
        steps.append(DOWN * (a - b))
        h = b
    return DyckPath("".join(steps))


def delest_viennot(path: DyckPath) -> ColumnPolyomino:
    """Columns of the peak heights, consecutive columns sharing valley height + 1 rows."""
    if path.semilength == 0:
        raise EmptyPath("the empty path has no polyomino image")
    peaks, valleys = _heights(path)
    cols = [(0, peaks[0])]
    for a, b in zip(peaks[1:], valleys):
        bottom = cols[-1][1] - (b + 1)
        cols.append((bottom, bottom + a))
    return ColumnPolyomino(tuple(cols))


def delest_viennot_inverse(poly: ColumnPolyomino) -> DyckPath:
    cols = poly.columns
    if cols[0][0] != 0:
        raise MalformedPolyomino("first column must start at row 0")
    peaks = tuple(t - b for b, t in cols)
    valleys = tuple(t1 - b2 - 1 for (_, t1), (b2, _) in zip(cols, cols[1:]))
    for k, v in enumerate(valleys):
        if v < 0 or v >= min(peaks[k], peaks[k + 1]):
            raise MalformedPolyomino(f"columns {k + 1}, {k + 2} are not a parallelogram step")
    return _path_from_heights(peaks, valleys)


def deutsch_prodinger(path: DyckPath) -> ColumnPolyomino:
    """Column ``i`` spans from the previous valley height (0 first) to peak ``i``."""
    if path.semilength == 0:
        raise EmptyPath("the empty path has no polyomino image")
    if not class_flags(path).w_weak:
        raise NotInClass(f"{path} does not have weakly increasing valley heights")
    peaks, valleys = _heights(path)
    bottoms = (0,) + valleys
    return ColumnPolyomino(tuple(zip(bottoms, peaks)))


def deutsch_prodinger_inverse(poly: ColumnPolyomino) -> DyckPath:
    bottoms = tuple(b for b, _ in poly.columns)
    if bottoms[0] != 0 or list(bottoms) != sorted(bottoms):
        raise NotInClass("column bottoms must start at 0 and weakly increase")
    peaks = tuple(t for _, t in poly.columns)
    return _path_from_heights(peaks, bottoms[1:])
