import io
import json

import pytest

from dyckstat import catalog
from dyckstat.cli import render_plain, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_series_catalan_plain():
    code, out, _ = call("series", "--gf", "catalan", "--order", "6", "--format", "plain")
    assert code == 0 and out.strip() == "1 1 2 5 14 42 132"


def test_stats_json():
    code, out, _ = call("stats", "--path", "UUDUDD", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "stats"
    r = doc["results"]
    assert (r["sp"], r["ap"], r["sval"], r["svw"]) == (0, 2, 1, 1)


@pytest.mark.parametrize("argv", [
    ("stats", "--path", "UDUDUD"),
    ("series", "--gf", "sval", "--order", "5"),
    ("series", "--gf", "m_weak", "--order", "7"),
    ("gen", "--order", "3"),
    ("bij", "--bij", "dv", "--path", "UUDUDD"),
    ("verify", "--gf", "sp_prime", "--order", "6"),
])
def test_json_roundtrip(argv):
    _, plain, _ = call(*argv)
    _, js, _ = call(*argv, "--format", "json")
    doc = json.loads(js)
    assert render_plain(doc["command"], doc["results"]) + "\n" == plain


def test_bfile_and_seq():
    code, out, _ = call("seq", "--gf", "m_weak_unimodal", "--order", "4")
    assert code == 0 and out.splitlines() == ["0 1", "1 1", "2 2", "3 5", "4 14"]
    code, out, _ = call("seq", "--gf", "sval", "--order", "3", "--set", "s=0")
    assert out.splitlines()[-1] == "3 3"
    code, _, err = call("seq", "--gf", "sval", "--order", "3")
    assert code == 2 and "univariate" in err


def test_bijection_commands():
    assert call("bij", "--bij", "wlt", "--path", "UUDUDD")[1].strip() == "1,1,1"
    assert call("bij", "--bij", "wlt", "--inverse", "--path", "1,1,1")[1].strip() == "UUDUDD"
    assert call("bij", "--bij", "mlt", "--inverse", "--path", "2,1")[0] == 2
    assert call("bij", "--bij", "eq8", "--path", "UUDD", "--set", "n=3")[1].strip() == "UUUDDD"
    assert call("bij", "--bij", "eq8", "--inverse", "--path", "UUUDDD", "--set", "i=1")[1].strip() == "UUDD"
    _, out, _ = call("bij", "--bij", "dp", "--path", "UDUDUD")
    assert call("bij", "--bij", "dp", "--inverse", "--path", out)[1].strip() == "UDUDUD"


def test_usage_errors():
    assert call("bogus")[0] == 2
    assert call("series", "--gf", "nope")[0] == 2
    assert call("stats", "--path", "UDDU")[0] == 2
    assert call("series", "--gf", "sval", "--set", "s")[0] == 2
    assert call("gen", "--order", "20", "--oracle-max", "12")[0] == 2


def test_verify_all_order_8():
    code, out, _ = call("verify", "--gf", "all", "--order", "8")
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit(monkeypatch):
    real = catalog.verify

    def broken(gf, order, series=None, oracle_max=None):
        rep = real(gf, order, series=series, oracle_max=oracle_max)
        rep.first_mismatch = 5
        return rep

    monkeypatch.setattr(catalog, "verify", broken)
    code, out, _ = call("verify", "--gf", "catalan", "--order", "6")
    assert code == 1 and "z^5" in out


def test_identities_command():
    code, out, _ = call("identities", "--order", "6")
    assert code == 0 and out.count("PASS") == len(out.splitlines())
