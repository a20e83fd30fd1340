import pytest

from dyckstat import checks, transforms as tf
from dyckstat.paths import DyckPath, analyze, enumerate_paths, parse_path
from dyckstat.polyomino import (
    ColumnPolyomino,
    Composition,
    MalformedPolyomino,
    classify_polyomino,
)

P = parse_path


def test_wlt_examples():
    assert tf.wlt_to_composition(P("UUUDDD")) == Composition((3,))
    got = {tf.wlt_to_composition(P(s)) for s in ("UUUDDD", "UUDDUD", "UDUUDD", "UUDUDD")}
    assert {str(c) for c in got} == {"3", "2,1", "1,2", "1,1,1"}
    assert tf.wlt_to_composition(DyckPath("")) == Composition()
    assert tf.composition_to_wlt(Composition()) == DyckPath("")
    with pytest.raises(tf.NotInClass):
        tf.wlt_to_composition(P("UDUDUD"))


def test_wlt_degenerate_apex():
    rec = tf.wlt_decompose(P("UUDUDD"))
    assert rec.apex_height == 1
    assert tf.composition_to_wlt(Composition((1, 1, 1))) == P("UUDUDD")


def test_mlt_examples():
    imgs = {str(tf.mlt_to_composition(p)) for p in enumerate_paths(3)
            if p.steps in ("UUUDDD", "UDUUDD")}
    assert imgs == {"1,1,1", "1,2"}
    assert tf.mlt_to_composition(DyckPath("")) == Composition()
    with pytest.raises(tf.PartBoundViolated):
        tf.composition_to_mlt(Composition((2, 1)))
    with pytest.raises(tf.NotInClass):
        tf.mlt_to_composition(P("UUDUDD"))


def test_eq8_examples():
    m = tf.MarkedPath(P("UUDD"), 0)
    img, i = tf.eq8_insert(m, 3)
    assert img.path == P("UUUDDD") and img.peak_index == 0 and i == 1
    same, i0 = tf.eq8_insert(m, 2)
    assert same == m and i0 == 0
    assert tf.eq8_delete(img, 1) == m
    with pytest.raises(tf.WeightTooSmall):
        tf.eq8_delete(img, 3)
    with pytest.raises(tf.NotSymmetricPeak):
        tf.eq8_insert(tf.MarkedPath(P("UUDUDD"), 0), 4)


def test_eq8_count_at_three():
    marked = sum(analyze(p).sp for k in range(4) for p in enumerate_paths(k))
    pairs = sum(analyze(p).spw for p in enumerate_paths(3))
    assert marked == pairs == 12


def test_delest_viennot_examples():
    one = tf.delest_viennot(P("UUDD"))
    assert one.columns == ((0, 2),) and one.semiperimeter == 3
    two = tf.delest_viennot(P("UDUD"))
    assert two.columns == ((0, 1), (0, 1))
    assert analyze(P("UDUD")).sval == 1
    with pytest.raises(tf.EmptyPath):
        tf.delest_viennot(DyckPath(""))


def test_deutsch_prodinger_examples():
    assert tf.deutsch_prodinger(P("UUDD")).columns == ((0, 2),)
    q = tf.deutsch_prodinger(P("UDUDUD"))
    assert q.columns == ((0, 1),) * 3
    assert q.rows_top_to_bottom() == Composition((3,))
    with pytest.raises(tf.NotInClass):
        tf.deutsch_prodinger(P("UUDUUDDDUD"))


def test_polyomino_basics():
    cell = classify_polyomino(ColumnPolyomino(((0, 1),)))
    assert cell.area == 1 and cell.semiperimeter == 2
    assert cell.parallelogram and cell.directed and cell.convex and cell.row_convex
    with pytest.raises(MalformedPolyomino):
        ColumnPolyomino(((0, 1), (1, 2)))
    with pytest.raises(MalformedPolyomino):
        ColumnPolyomino(((0, 0),))
    q = ColumnPolyomino(((0, 2), (1, 3)))
    assert ColumnPolyomino.parse(q.format()) == q
    assert ColumnPolyomino.parse("0:2;1:3") == q


@pytest.mark.parametrize("name", sorted(checks.SWEEPS))
def test_sweeps_small(name):
    for n in range(1, 8):
        assert checks.SWEEPS[name](n) is None


def test_staircase_crosscheck():
    assert checks.staircase_crosscheck(8) is None


def test_compositions_helper():
    assert sum(1 for _ in checks.compositions(6)) == 32
    assert list(checks.compositions(0)) == [Composition()]
