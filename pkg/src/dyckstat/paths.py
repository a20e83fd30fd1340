"""Dyck paths, exhaustive enumeration, and per-path statistics."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby
from typing import Callable, Iterator, Sequence

from .polynomial import ONE, Poly

UP, DOWN = "U", "D"

_SYMBOLS = {"U": UP, "u": UP, "(": UP, "D": DOWN, "d": DOWN, ")": DOWN}

DEFAULT_ORACLE_MAX = 14


class PathError(ValueError):
    pass


class BadSymbol(PathError):
    pass


class NonBalanced(PathError):
    pass


class BelowAxis(PathError):
    pass


class ResourceBound(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class DyckPath:
    """A validated Dyck path; ``steps`` is the canonical ``U``/``D`` string."""

    steps: str = ""

    def __post_init__(self):
        _validate(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return self.semilength

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> list[int]:
        """y-coordinates of the 2n+1 vertices."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == UP else -1))
        return h

    def runs(self) -> list[tuple[str, int]]:
        return [(s, len(list(g))) for s, g in groupby(self.steps)]

    def is_pyramid(self) -> bool:
        n = self.semilength
        return self.steps == UP * n + DOWN * n


def _validate(steps: str) -> None:
    bad = set(steps) - {UP, DOWN}
    if bad:
        raise BadSymbol(f"steps must be U/D, got {sorted(bad)}")
    if steps.count(UP) != steps.count(DOWN):
        raise NonBalanced(f"{steps.count(UP)} up steps vs {steps.count(DOWN)} down steps")
    h = 0
    for i, s in enumerate(steps):
        h += 1 if s == UP else -1
        if h < 0:
            raise BelowAxis(f"path goes below the axis after step {i}")


def parse_path(text: str) -> DyckPath:
    """Parse ``U/D``, ``u/d`` or bracket notation into a :class:`DyckPath`."""
    out = []
    for i, ch in enumerate(text.strip()):
        if ch not in _SYMBOLS:
            raise BadSymbol(f"unexpected symbol {ch!r} at position {i}")
        out.append(_SYMBOLS[ch])
    return DyckPath("".join(out))


def pyramid(n: int) -> DyckPath:
    return DyckPath(UP * n + DOWN * n)


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """All paths of semilength ``n`` in lexicographic order with U < D."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    buf: list[str] = []

    def rec(ups: int, downs: int) -> Iterator[str]:
        if ups == n and downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append(UP)
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append(DOWN)
            yield from rec(ups, downs + 1)
            buf.pop()

    for steps in rec(0, 0):
        yield _trusted(steps)


def _trusted(steps: str) -> DyckPath:
    # enumeration output is valid by construction
    p = object.__new__(DyckPath)
    object.__setattr__(p, "steps", steps)
    return p


@dataclass(frozen=True)
class PeakRecord:
    index: int
    height: int
    ascent: int
    descent: int

    @property
    def symmetric(self) -> bool:
        return self.ascent == self.descent

    @property
    def weight(self) -> int:
        return min(self.ascent, self.descent)


@dataclass(frozen=True)
class ValleyRecord:
    index: int
    height: int
    descent: int
    ascent: int

    @property
    def symmetric(self) -> bool:
        return self.ascent == self.descent

    @property
    def weight(self) -> int | None:
        return self.descent if self.symmetric else None


def peaks_and_valleys(path: DyckPath) -> tuple[list[PeakRecord], list[ValleyRecord]]:
    """Scan maximal runs once and return peak and valley records."""
    peaks: list[PeakRecord] = []
    valleys: list[ValleyRecord] = []
    runs = path.runs()
    pos = 0
    h = 0
    for k, (s, length) in enumerate(runs):
        if s == UP:
            h += length
            if k + 1 < len(runs):
                peaks.append(PeakRecord(pos + length - 1, h, length, runs[k + 1][1]))
        else:
            h -= length
            if k + 1 < len(runs):
                valleys.append(ValleyRecord(pos + length - 1, h, length, runs[k + 1][1]))
        pos += length
    return peaks, valleys


def _by_index(values: Sequence[int], size: int) -> tuple[int, ...]:
    c = Counter(values)
    return tuple(c.get(i, 0) for i in range(size + 1))


def _adjacent_equal(seq: Sequence[int]) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a == b)


@dataclass(frozen=True)
class StatProfile:
    """All statistics of one path.

    Sequences indexed by weight or height have a dummy slot at index 0 and
    length ``semilength + 1``.
    """

    semilength: int
    pea: int
    val: int
    sp: int
    ap: int
    spw: int
    apw: int
    sp_by_weight: tuple[int, ...]
    ap_by_weight: tuple[int, ...]
    sp_prime: int
    sval: int
    svw: int
    sval_by_weight: tuple[int, ...]
    peak_heights: tuple[int, ...]
    valley_heights: tuple[int, ...]
    ph_by_height: tuple[int, ...]
    hill_free: bool
    avoids_uudu: bool
    is_pyramid: bool
    peaks: tuple[PeakRecord, ...] = field(repr=False, compare=False, default=())
    valleys: tuple[ValleyRecord, ...] = field(repr=False, compare=False, default=())

    def as_dict(self) -> dict:
        return {
            "semilength": self.semilength,
            "pea": self.pea,
            "val": self.val,
            "sp": self.sp,
            "ap": self.ap,
            "spw": self.spw,
            "apw": self.apw,
            "sp_by_weight": list(self.sp_by_weight),
            "ap_by_weight": list(self.ap_by_weight),
            "sp_prime": self.sp_prime,
            "sval": self.sval,
            "svw": self.svw,
            "sval_by_weight": list(self.sval_by_weight),
            "peak_heights": list(self.peak_heights),
            "valley_heights": list(self.valley_heights),
            "ph_by_height": list(self.ph_by_height),
            "hill_free": self.hill_free,
            "avoids_uudu": self.avoids_uudu,
            "is_pyramid": self.is_pyramid,
        }


def analyze(path: DyckPath) -> StatProfile:
    n = path.semilength
    peaks, valleys = peaks_and_valleys(path)
    sym = [p.weight for p in peaks if p.symmetric]
    asym = [p.weight for p in peaks if not p.symmetric]
    sym_valleys = [v.weight for v in valleys if v.symmetric]
    peak_heights = tuple(p.height for p in peaks)
    valley_heights = tuple(v.height for v in valleys)
    return StatProfile(
        semilength=n,
        pea=len(peaks),
        val=len(valleys),
        sp=len(sym),
        ap=len(asym),
        spw=sum(sym),
        apw=sum(asym),
        sp_by_weight=_by_index(sym, n),
        ap_by_weight=_by_index(asym, n),
        sp_prime=_adjacent_equal(valley_heights),
        sval=_adjacent_equal(peak_heights),
        svw=sum(sym_valleys),
        sval_by_weight=_by_index(sym_valleys, n),
        peak_heights=peak_heights,
        valley_heights=valley_heights,
        ph_by_height=_by_index(peak_heights, n),
        hill_free=1 not in peak_heights,
        avoids_uudu="UUDU" not in path.steps,
        is_pyramid=path.is_pyramid(),
        peaks=tuple(peaks),
        valleys=tuple(valleys),
    )


# height-sequence shapes ------------------------------------------------------


def strictly_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def weakly_increasing(seq: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def strictly_decreasing(seq: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:]))


def weakly_decreasing(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def strictly_unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] < seq[i + 1]:
        i += 1
    return strictly_decreasing(seq[i:])


def weakly_unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    return weakly_decreasing(seq[i:])


def in_pit_set(segment: str, i: int) -> bool:
    """Membership in ``{d^j u^j : 0 <= j <= i}``."""
    j = len(segment) // 2
    return j <= i and segment == DOWN * j + UP * j


@dataclass(frozen=True)
class ClassFlags:
    w_strict: bool
    w_weak: bool
    w_strict_unimodal: bool
    w_weak_unimodal: bool
    m_strict: bool
    m_weak: bool
    m_strict_unimodal: bool
    m_weak_unimodal: bool
    pyramid: bool

    @staticmethod
    def is_pit_of_size_at_most(segment: str, i: int) -> bool:
        return in_pit_set(segment, i)


def class_flags(path: DyckPath, profile: StatProfile | None = None) -> ClassFlags:
    prof = profile or analyze(path)
    v, p = prof.valley_heights, prof.peak_heights
    return ClassFlags(
        w_strict=strictly_increasing(v),
        w_weak=weakly_increasing(v),
        w_strict_unimodal=strictly_unimodal(v),
        w_weak_unimodal=weakly_unimodal(v),
        m_strict=strictly_increasing(p),
        m_weak=weakly_increasing(p),
        m_strict_unimodal=strictly_unimodal(p),
        m_weak_unimodal=weakly_unimodal(p),
        pyramid=prof.is_pyramid,
    )


def path_height(path: DyckPath) -> int:
    return max(path.heights())


# brute-force aggregation ------------------------------------------------------


def _pow(name: str, e: int) -> Poly:
    return Poly.var(name, e) if e else ONE


def _family(letter: str, counts: Sequence[int]) -> Poly:
    out = ONE
    for i, c in enumerate(counts):
        if c:
            out = out * Poly.var(f"{letter}_{i}", c)
    return out


def _indicator(pred: Callable[[StatProfile, ClassFlags], bool], mono=None):
    def fn(prof: StatProfile, flags: ClassFlags) -> Poly:
        if not pred(prof, flags):
            return Poly()
        return mono(prof) if mono else ONE

    return fn


StatFn = Callable[[StatProfile, ClassFlags], Poly]

STAT_SPECS: dict[str, StatFn] = {
    "count": lambda prof, fl: ONE,
    "sp_ap_by_weight": lambda prof, fl: _family("t", prof.sp_by_weight) * _family("r", prof.ap_by_weight),
    "sp_ap_spw_apw": lambda prof, fl: _pow("t", prof.sp) * _pow("r", prof.ap) * _pow("w", prof.spw) * _pow("y", prof.apw),
    "sp_ap": lambda prof, fl: _pow("t", prof.sp) * _pow("r", prof.ap),
    "sp_prime": lambda prof, fl: _pow("t", prof.sp_prime),
    "sp_prime_zero": _indicator(lambda prof, fl: prof.sp_prime == 0),
    "avoid_uudu": _indicator(lambda prof, fl: prof.avoids_uudu),
    "sp_total": lambda prof, fl: Poly.const(prof.sp),
    "ap_total": lambda prof, fl: Poly.const(prof.ap),
    "pea_total": lambda prof, fl: Poly.const(prof.pea),
    "spw_total": lambda prof, fl: Poly.const(prof.spw),
    "apw_total": lambda prof, fl: Poly.const(prof.apw),
    "pyramid_weight": lambda prof, fl: _pow("q", prof.spw + prof.apw),
    "peak_heights": lambda prof, fl: _family("h", prof.ph_by_height),
    "sval": lambda prof, fl: _pow("s", prof.sval),
    "sval_zero": _indicator(lambda prof, fl: prof.sval == 0),
    "sval_total": lambda prof, fl: Poly.const(prof.sval),
    "sval_svw": lambda prof, fl: _pow("s", prof.sval) * _pow("w", prof.svw),
    "svw_total": lambda prof, fl: Poly.const(prof.svw),
    "hill_free_peaks": lambda prof, fl: Poly.const(prof.pea if prof.hill_free else 0),
    "hill_free": _indicator(lambda prof, fl: prof.hill_free),
    "height_at_most_5": _indicator(lambda prof, fl: max(prof.peak_heights, default=0) <= 5),
    "w_strict": _indicator(lambda prof, fl: fl.w_strict),
    "w_weak": _indicator(lambda prof, fl: fl.w_weak),
    "w_weak_t": _indicator(lambda prof, fl: fl.w_weak, lambda prof: _pow("t", prof.sp_prime)),
    "w_strict_unimodal": _indicator(lambda prof, fl: fl.w_strict_unimodal),
    "w_weak_le1_zero_valley": _indicator(lambda prof, fl: fl.w_weak and prof.valley_heights.count(0) <= 1),
    "w_weak_unimodal": _indicator(lambda prof, fl: fl.w_weak_unimodal),
    "w_weak_unimodal_t": _indicator(lambda prof, fl: fl.w_weak_unimodal, lambda prof: _pow("t", prof.sp_prime)),
    "m_strict": _indicator(lambda prof, fl: fl.m_strict),
    "m_weak": _indicator(lambda prof, fl: fl.m_weak),
    "m_weak_s": _indicator(lambda prof, fl: fl.m_weak, lambda prof: _pow("s", prof.sval)),
    "m_strict_unimodal": _indicator(lambda prof, fl: fl.m_strict_unimodal),
    "m_weak_unimodal": _indicator(lambda prof, fl: fl.m_weak_unimodal),
    "m_weak_unimodal_s": _indicator(lambda prof, fl: fl.m_weak_unimodal, lambda prof: _pow("s", prof.sval)),
}


def oracle_limit() -> int:
    env = os.environ.get("DYCKSTAT_ORACLE_MAX")
    return int(env) if env else DEFAULT_ORACLE_MAX


@lru_cache(maxsize=16)
def _analyzed(n: int) -> tuple[tuple[StatProfile, ClassFlags], ...]:
    out = []
    for p in enumerate_paths(n):
        prof = analyze(p)
        out.append((prof, class_flags(p, prof)))
    return tuple(out)


def _profiles(n: int) -> Iterator[tuple[StatProfile, ClassFlags]]:
    if n <= 11:
        yield from _analyzed(n)
        return
    for p in enumerate_paths(n):
        prof = analyze(p)
        yield prof, class_flags(p, prof)


def aggregate(n: int, stat_spec: str | StatFn, limit: int | None = None) -> Poly:
    """Sum over all paths of semilength ``n`` of the monomial ``stat_spec`` assigns."""
    limit = oracle_limit() if limit is None else limit
    if n > limit:
        raise ResourceBound(f"semilength {n} exceeds brute-force ceiling {limit}")
    fn = STAT_SPECS[stat_spec] if isinstance(stat_spec, str) else stat_spec
    acc: dict = {}
    for prof, flags in _profiles(n):
        for mono, c in fn(prof, flags).items():
            acc[mono] = acc.get(mono, 0) + c
    return Poly(acc)
