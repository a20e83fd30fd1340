import pytest

from dyckstat.paths import (
    BadSymbol,
    BelowAxis,
    DyckPath,
    NonBalanced,
    ResourceBound,
    aggregate,
    analyze,
    class_flags,
    enumerate_paths,
    parse_path,
    peaks_and_valleys,
)
from dyckstat.polynomial import parse_poly

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def test_parse():
    assert parse_path("UUDD").semilength == 2
    assert parse_path("").semilength == 0
    assert parse_path("(()u)d").steps == "UUDUDD"
    with pytest.raises(BelowAxis):
        parse_path("UDDU")
    with pytest.raises(NonBalanced):
        parse_path("UUD")
    with pytest.raises(BadSymbol):
        parse_path("UXD")


def test_enumeration_counts_and_order():
    assert [p.steps for p in enumerate_paths(0)] == [""]
    assert [p.steps for p in enumerate_paths(3)] == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
    for n in range(11):
        assert sum(1 for _ in enumerate_paths(n)) == CATALAN[n]


def test_analyze_pyramid():
    p = analyze(parse_path("UUDD"))
    assert (p.pea, p.sp, p.spw, p.ap, p.sval, p.sp_prime) == (1, 1, 2, 0, 0, 0)


def test_analyze_zigzag():
    p = analyze(parse_path("UDUDUD"))
    assert p.sp == 3 and p.sp_by_weight[1] == 3
    assert (p.sp_prime, p.sval, p.svw) == (1, 2, 2)
    assert tuple(p.peak_heights) == (1, 1, 1)


def test_analyze_two_asymmetric_peaks():
    p = analyze(parse_path("UUDUDD"))
    assert (p.sp, p.ap, p.ap_by_weight[1], p.sval, p.svw) == (0, 2, 2, 1, 1)
    assert tuple(p.peak_heights) == (2, 2)
    assert not p.avoids_uudu


def test_class_flags_examples():
    f = class_flags(DyckPath(""))
    assert all(vars(f).values())
    f = class_flags(parse_path("UUDUDD"))
    assert f.w_strict and f.m_weak and not f.m_strict and f.m_weak_unimodal
    f = class_flags(parse_path("UDUDUD"))
    assert not f.w_strict and f.w_weak


def test_aggregate_examples():
    assert aggregate(3, "sp_ap_by_weight") == parse_poly("t_1^3 + r_1^2 + 2*t_1*t_2 + t_3")
    assert aggregate(4, "sval") == parse_poly("s^3 + s^2 + 6*s + 6")
    assert aggregate(2, "sp_total") == 3


def test_aggregate_resource_bound():
    with pytest.raises(ResourceBound):
        aggregate(5, "count", limit=4)


def _symmetric_valleys_by_runs(steps: str) -> int:
    runs = [(c, len(list(g))) for c, g in __import__("itertools").groupby(steps)]
    return sum(1 for (c1, a), (c2, b) in zip(runs, runs[1:]) if c1 == "D" and c2 == "U" and a == b)


def test_invariants_exhaustive():
    for n in range(11):
        for path in enumerate_paths(n):
            p = analyze(path)
            peaks, valleys = peaks_and_valleys(path)
            assert p.pea == p.sp + p.ap
            if n:
                assert p.val == p.pea - 1
            assert p.spw == sum(i * c for i, c in enumerate(p.sp_by_weight))
            assert p.apw == sum(i * c for i, c in enumerate(p.ap_by_weight))
            assert p.svw == sum(i * c for i, c in enumerate(p.sval_by_weight))
            assert p.sval <= p.val and p.sp_prime <= p.sp
            assert p.spw >= p.sp and p.svw >= p.sval
            assert p.sval == _symmetric_valleys_by_runs(path.steps)
            inner = sum(1 for pk in peaks[1:-1] if pk.symmetric)
            assert p.sp_prime == inner
            for pk in peaks:
                assert pk.weight <= pk.height
            for k, v in enumerate(valleys):
                if v.symmetric:
                    assert v.weight <= min(peaks[k].height, peaks[k + 1].height)
            for a, b, pk in zip(valleys, valleys[1:], peaks[1:]):
                if a.height == b.height:
                    assert pk.symmetric


def test_sp_prime_characterisation_n12():
    for n in (11, 12):
        for path in enumerate_paths(n):
            p = analyze(path)
            peaks = p.peaks
            assert p.sp_prime == sum(1 for pk in peaks[1:-1] if pk.symmetric)


def test_class_containments():
    for n in range(9):
        for path in enumerate_paths(n):
            f = class_flags(path)
            if f.w_strict:
                assert f.w_weak
            if f.m_strict:
                assert f.m_weak
            if f.w_weak:
                assert f.w_weak_unimodal
            if f.m_weak:
                assert f.m_weak_unimodal
            if f.w_strict_unimodal:
                assert f.w_weak_unimodal
            if f.pyramid:
                assert all(vars(f).values())
