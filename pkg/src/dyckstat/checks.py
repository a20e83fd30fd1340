"""Exhaustive bijection sweeps and the numbered acceptance checks.

Every check returns ``None`` on success or a short message naming the first
failure, so callers can print one line per check without re-running it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from . import catalog, transforms
from .paths import (
    DyckPath,
    analyze,
    class_flags,
    enumerate_paths,
    peaks_and_valleys,
    strictly_decreasing,
    weakly_decreasing,
    weakly_unimodal,
)
from .polyomino import (
    ColumnPolyomino,
    Composition,
    classify_polyomino,
    column_convex_polyominoes,
    diagonals_connected,
    is_directed,
    is_row_convex,
    is_staircase,
    parallelogram_by_semiperimeter,
)
from .transforms import MarkedPath

SWEEP_MAX = 10


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, one per subset of the ``n - 1`` cut points."""
    if n == 0:
        yield Composition()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def _roundtrip_bijection(domain, forward, inverse, image, label) -> str | None:
    seen = {}
    for x in domain:
        y = forward(x)
        if y in seen:
            return f"{label}: {x} and {seen[y]} share image {y}"
        seen[y] = x
        if inverse(y) != x:
            return f"{label}: roundtrip fails at {x}"
    image = set(image)
    missing = image - seen.keys()
    extra = seen.keys() - image
    if missing or extra:
        return f"{label}: image differs ({len(missing)} missing, {len(extra)} unexpected)"
    return None


def _paths_where(n: int, pred: Callable) -> list[DyckPath]:
    return [p for p in enumerate_paths(n) if pred(class_flags(p), p)]


# individual sweeps --------------------------------------------------------------------


def sweep_wlt(n: int) -> str | None:
    dom = _paths_where(n, lambda f, p: f.w_strict)
    return _roundtrip_bijection(dom, transforms.wlt_to_composition, transforms.composition_to_wlt,
                                compositions(n), f"wlt n={n}")


def sweep_mlt(n: int) -> str | None:
    dom = _paths_where(n, lambda f, p: f.m_strict)
    img = [c for c in compositions(n) if all(p <= i for i, p in enumerate(c.parts, 1))]
    return _roundtrip_bijection(dom, transforms.mlt_to_composition, transforms.composition_to_mlt,
                                img, f"mlt n={n}")


def _marked(path: DyckPath) -> list[MarkedPath]:
    peaks = peaks_and_valleys(path)[0]
    return [MarkedPath(path, k) for k, pk in enumerate(peaks) if pk.symmetric]


def sweep_eq8(n: int) -> str | None:
    """Marked paths of semilength ``1..n`` against pairs (marked path of
    semilength ``n``, ``1 <= j <= weight``)."""
    if n == 0:
        return None
    seen = {}
    for k in range(1, n + 1):
        for p in enumerate_paths(k):
            for m in _marked(p):
                img, j = transforms.eq8_pair(m, n)
                if not 1 <= j <= img.peak.weight or not img.peak.symmetric:
                    return f"eq8 n={n}: index {j} out of range for {img}"
                if (img, j) in seen:
                    return f"eq8 n={n}: collision at {img}, j={j}"
                seen[(img, j)] = m
                if transforms.eq8_unpair(img, j) != m:
                    return f"eq8 n={n}: roundtrip fails at {m}"
    targets = {(m, j) for p in enumerate_paths(n) for m in _marked(p)
               for j in range(1, m.peak.weight + 1)}
    if targets != set(seen):
        return f"eq8 n={n}: image has {len(seen)} pairs, expected {len(targets)}"
    return None


def _adjacent_equal_columns(poly: ColumnPolyomino) -> int:
    h = poly.column_heights
    return sum(1 for a, b in zip(h, h[1:]) if a == b)


def sweep_dv(n: int) -> str | None:
    if n == 0:
        return None
    dom = list(enumerate_paths(n))
    for p in dom:
        poly = transforms.delest_viennot(p)
        prof = analyze(p)
        if poly.semiperimeter != n + 1:
            return f"dv: semiperimeter {poly.semiperimeter} for {p}"
        if not is_staircase(poly):
            return f"dv: image of {p} is not a parallelogram"
        if poly.column_heights != tuple(prof.peak_heights):
            return f"dv: column sizes differ from peak heights for {p}"
        if _adjacent_equal_columns(poly) != prof.sval:
            return f"dv: sval not transported for {p}"
    return _roundtrip_bijection(dom, transforms.delest_viennot, transforms.delest_viennot_inverse,
                                parallelogram_by_semiperimeter(n + 1), f"dv n={n}")


def sweep_dp(n: int) -> str | None:
    if n == 0:
        return None
    dom = _paths_where(n, lambda f, p: f.w_weak)
    for p in dom:
        poly = transforms.deutsch_prodinger(p)
        prof = analyze(p)
        if poly.area != n:
            return f"dp: area {poly.area} for {p}"
        if tuple(t for _, t in poly.columns) != tuple(prof.peak_heights):
            return f"dp: column tops differ from peak heights for {p}"
        if tuple(b for b, _ in poly.columns[1:]) != tuple(prof.valley_heights):
            return f"dp: column bottoms differ from valley heights for {p}"
    image = [q for q in column_convex_polyominoes(n) if is_directed(q)]
    return _roundtrip_bijection(dom, transforms.deutsch_prodinger,
                                transforms.deutsch_prodinger_inverse, image, f"dp n={n}")


# polyomino cases under the Deutsch-Prodinger map ------------------------------------------


def _weakly_unimodal(c: Composition) -> bool:
    return weakly_unimodal(list(c.parts))


def _rising_piece(parts: tuple[int, ...]) -> tuple[int, ...]:
    top = parts.index(max(parts))
    return parts[: top + 1]


def _case_image(n: int, pred: Callable, read: Callable) -> dict:
    out = {}
    for p in _paths_where(n, pred):
        key = read(transforms.deutsch_prodinger(p))
        if key in out:
            return {None: p}
        out[key] = p
    return out


def _compare(label: str, got: dict, want) -> str | None:
    if None in got:
        return f"{label}: two paths share an image"
    want = set(want)
    if set(got) != want:
        return f"{label}: image has {len(got)} objects, expected {len(want)}"
    return None


def _peaks(p: DyckPath) -> list[int]:
    return [pk.height for pk in peaks_and_valleys(p)[0]]


def case_a(n: int) -> str | None:
    got = _case_image(n, lambda f, p: f.w_weak and f.m_weak, lambda q: q)
    want = (q for q in column_convex_polyominoes(n) if is_staircase(q))
    return _compare(f"case (a) n={n}", got, want)


def case_b(n: int) -> str | None:
    got = _case_image(n, lambda f, p: f.w_weak and weakly_decreasing(_peaks(p)),
                      lambda q: q.rows_top_to_bottom())
    return _compare(f"case (b) n={n}", got, (c for c in compositions(n) if _weakly_unimodal(c)))


def case_c(n: int) -> str | None:
    got = _case_image(n, lambda f, p: f.w_strict and strictly_decreasing(_peaks(p)),
                      lambda q: Composition(q.rows_top_to_bottom().parts + (1,)))

    def ok(c: Composition) -> bool:
        ps = c.parts
        return (_weakly_unimodal(c) and ps[0] == 1 and ps[-1] == 1
                and all(abs(a - b) <= 1 for a, b in zip(ps, ps[1:])))

    return _compare(f"case (c) n={n}", got, (c for c in compositions(n + 1) if ok(c)))


def case_d(n: int) -> str | None:
    got = _case_image(n, lambda f, p: f.w_weak and strictly_decreasing(_peaks(p)),
                      lambda q: q.rows_top_to_bottom())

    def ok(c: Composition) -> bool:
        if not c.parts:
            return True
        rise = _rising_piece(c.parts)
        return (_weakly_unimodal(c) and c.parts[0] == 1
                and all(b - a <= 1 for a, b in zip(rise, rise[1:])))

    return _compare(f"case (d) n={n}", got, (c for c in compositions(n) if ok(c)))


def case_e(n: int) -> str | None:
    got = _case_image(n, lambda f, p: f.w_weak and f.m_weak_unimodal, lambda q: q)
    want = (q for q in column_convex_polyominoes(n) if is_directed(q) and is_row_convex(q))
    return _compare(f"case (e) n={n}", got, want)


def staircase_crosscheck(max_area: int = 8) -> str | None:
    """Staircase test against slope -1 connectivity of the cell set."""
    for a in range(1, max_area + 1):
        for q in column_convex_polyominoes(a):
            if is_staircase(q) != diagonals_connected(q.cells()):
                return f"staircase predicate disagrees on {q.columns}"
    return None


SWEEPS: dict[str, Callable[[int], str | None]] = {
    "wlt": sweep_wlt,
    "mlt": sweep_mlt,
    "eq8": sweep_eq8,
    "dv": sweep_dv,
    "dp": sweep_dp,
    "case_a": case_a,
    "case_b": case_b,
    "case_c": case_c,
    "case_d": case_d,
    "case_e": case_e,
}


def transform_sweeps(max_n: int = SWEEP_MAX) -> list[tuple[str, str | None]]:
    out = []
    for name, fn in SWEEPS.items():
        msg = None
        for n in range(1, max_n + 1):
            msg = fn(n)
            if msg:
                break
        out.append((name, msg))
    out.append(("staircase", staircase_crosscheck(min(8, max_n))))
    return out


# acceptance criteria ----------------------------------------------------------------------

CATALAN_12 = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
SVAL_AT_ZERO = [1, 1, 1, 3, 6, 16, 43, 116, 329, 947, 2762, 8176, 24469]
M_STRICT_UNIMODAL = [1, 1, 1, 3, 6, 15, 38, 95, 243, 627, 1622, 4208]
M_WEAK_UNIMODAL = [1, 1, 2, 5, 14, 41, 124, 383, 1200, 3796, 12088, 38676]


def _first_diff(got, want) -> int | None:
    for k, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return k
    return None if len(got) >= len(want) else min(len(got), len(want))


def criterion_1(oracle_max: int) -> str | None:
    k = _first_diff(catalog.expand("catalan", 12).numbers(), CATALAN_12)
    if k is not None:
        return f"catalan series differs at z^{k}"
    for n in range(min(12, oracle_max) + 1):
        if sum(1 for _ in enumerate_paths(n)) != CATALAN_12[n]:
            return f"enumerate_paths({n}) has the wrong count"
    return None


def criterion_2(oracle_max: int) -> str | None:
    from .polynomial import parse_poly

    printed = ["1", "t_1", "t_1^2 + t_2", "t_1^3 + r_1^2 + 2*t_1*t_2 + t_3",
               "t_1^4 + 3*t_1^2*t_2 + 3*t_1*r_1^2 + 2*t_1*t_3 + t_2^2 + r_1^2 + 2*r_1*r_2 + t_4"]
    s = catalog.expand("sp_ap_by_weight", 4)
    for k, text in enumerate(printed):
        if s[k] != parse_poly(text):
            return f"z^{k} coefficient is {s[k]}"
    rep = catalog.verify("sp_ap_by_weight", min(8, oracle_max), oracle_max=oracle_max)
    return None if rep.ok else rep.line()


def criterion_3(oracle_max: int) -> str | None:
    from .polynomial import parse_poly

    s = catalog.expand("sval", 12)
    k = _first_diff(catalog.expand("sval", 12, {"s": 0}).numbers(), SVAL_AT_ZERO)
    if k is not None:
        return f"sval at s=0 differs at z^{k}"
    if s[4] != parse_poly("s^3 + s^2 + 6*s + 6"):
        return f"z^4 coefficient is {s[4]}"
    return None


def criterion_4(oracle_max: int) -> str | None:
    for gf, want in (("m_strict_unimodal", M_STRICT_UNIMODAL), ("m_weak_unimodal", M_WEAK_UNIMODAL)):
        k = _first_diff(catalog.expand(gf, 11).numbers(), want)
        if k is not None:
            return f"{gf} differs at z^{k}"
    return None


def criterion_5(oracle_max: int, order: int = 10) -> str | None:
    for gf in catalog.oracle_entries():
        o = min(order, catalog.get_entry(gf).verify_order, oracle_max)
        rep = catalog.verify(gf, o, oracle_max=oracle_max)
        if not rep.ok:
            return rep.line()
    return None


def criterion_6(oracle_max: int, order: int = 10) -> str | None:
    rep = catalog.identity_checks(order, oracle_max=oracle_max)
    bad = [r for r in rep.results if not r.ok]
    return None if not bad else f"{bad[0].name} fails at z^{bad[0].first_bad}"


def criterion_7(oracle_max: int, order: int = SWEEP_MAX) -> str | None:
    for name, msg in transform_sweeps(min(order, oracle_max, SWEEP_MAX)):
        if msg:
            return f"{name}: {msg}"
    return None


def criterion_8(oracle_max: int, order: int = 16) -> str | None:
    from fractions import Fraction

    trend = dict(catalog.ratio_trend(order))
    third = Fraction(1, 3)
    if abs(trend[order] - third) < abs(trend[8] - third):
        return None
    return f"ratio at n={order} is {trend[order]}, not closer to 1/3 than at n=8"


def criterion_9(oracle_max: int, order: int = 10) -> str | None:
    for gf in ("sval", "sval_svw"):
        a = catalog.expand(gf, order, depth=order + 1, check_depth=False)
        b = catalog.expand(gf, order, depth=order + 2, check_depth=False)
        k = a.first_difference(b)
        if k is not None:
            return f"{gf} depth {order + 1} vs {order + 2} differs at z^{k}"
    return None


def criterion_10(oracle_max: int, order: int = 10) -> str | None:
    for gf in catalog.CATALOG:
        try:
            catalog.expand(gf, order)
        except catalog.IntegralityViolation as exc:
            return str(exc)
    for gf, k in catalog.mass_report(order).items():
        if k is not None:
            return f"{gf} at all-ones differs from catalan at z^{k}"
    return None


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]

DESCRIPTIONS = [
    "catalan series and path counts",
    "sp/ap by weight printed expansion and oracle",
    "sval printed values and z^4 coefficient",
    "unimodal peak-height sequences",
    "oracle verification of every catalog entry",
    "cross-generating-function identities",
    "bijection sweeps and polyomino cases",
    "symmetric-peak ratio trend",
    "continued-fraction depth stability",
    "integrality and total mass",
]

_ORDERED = {5, 6, 7, 9, 10}


def run_all(order: int = 10, oracle_max: int = 12) -> list[dict]:
    """Every acceptance criterion, orders taken from ``order`` where they vary."""
    out = []
    for k, (fn, desc) in enumerate(zip(CRITERIA, DESCRIPTIONS), 1):
        if k in _ORDERED:
            msg = fn(oracle_max, order)
        elif k == 8:
            msg = fn(oracle_max, max(order, 16))
        else:
            msg = fn(oracle_max)
        out.append({"name": f"criterion {k}: {desc}", "ok": msg is None, "detail": msg})
    return out
