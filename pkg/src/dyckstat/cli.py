"""Command-line interface: ``dyckstat <command> [flags]``.

Exit codes: 0 success, 1 verification or identity failure, 2 usage or
input error.  Every command builds a JSON-ready ``results`` payload; the
plain format is rendered from that payload, so ``json`` and ``plain`` carry
the same information.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import catalog, paths, transforms
from .polynomial import Poly, VariableError, parse_poly
from .polyomino import ColumnPolyomino, Composition, MalformedPolyomino, classify_polyomino
from .series import SeriesError

COMMANDS = ("stats", "gen", "series", "verify", "identities", "bij", "seq", "check-all")
DEFAULT_ORDER = 10


class UsageError(Exception):
    pass


def _oracle_max(args) -> int:
    if args.oracle_max is not None:
        return args.oracle_max
    env = os.environ.get("DYCKSTAT_ORACLE_MAX")
    return int(env) if env else 12


def _settings(args) -> dict[str, str]:
    out = {}
    for item in args.set or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--set expects var=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _bindings(args) -> dict[str, Poly]:
    try:
        return {k: parse_poly(v) for k, v in _settings(args).items()}
    except (ValueError, VariableError) as exc:
        raise UsageError(str(exc)) from None


def _coeff_text(c: Poly) -> str:
    return str(c)


# commands -----------------------------------------------------------------------


def cmd_stats(args) -> tuple[dict, int]:
    if not args.path and args.path != "":
        raise UsageError("stats needs --path")
    path = paths.parse_path(args.path)
    prof = paths.analyze(path)
    flags = paths.class_flags(path, prof)
    res = {"path": path.steps, **prof.as_dict(), "classes": vars(flags).copy()}
    return res, 0


def cmd_gen(args) -> tuple[dict, int]:
    n = args.order if args.order is not None else 3
    if n > _oracle_max(args):
        raise UsageError(f"semilength {n} exceeds --oracle-max {_oracle_max(args)}")
    return {"n": n, "paths": [p.steps for p in paths.enumerate_paths(n)]}, 0


def _expand(args) -> tuple[str, Any]:
    if not args.gf or args.gf == "all":
        raise UsageError("series needs a single --gf id")
    order = args.order if args.order is not None else DEFAULT_ORDER
    return args.gf, catalog.expand(args.gf, order, _bindings(args))


def cmd_series(args) -> tuple[dict, int]:
    gf, s = _expand(args)
    return {"gf": gf, "order": s.order, "coefficients": [_coeff_text(c) for c in s.coeffs]}, 0


def cmd_seq(args) -> tuple[dict, int]:
    res, code = cmd_series(args)
    if any(not Poly.is_constant(parse_poly(c)) for c in res["coefficients"]):
        raise UsageError(f"{res['gf']} is not univariate; bind its variables with --set")
    return res, code


def cmd_verify(args) -> tuple[dict, int]:
    order = args.order if args.order is not None else DEFAULT_ORDER
    limit = _oracle_max(args)
    ids = catalog.oracle_entries() if args.gf in (None, "all") else [args.gf]
    reports = []
    for gf in ids:
        o = min(order, catalog.get_entry(gf).verify_order) if args.gf in (None, "all") else order
        if o > limit:
            raise UsageError(f"order {o} exceeds --oracle-max {limit}")
        r = catalog.verify(gf, o, oracle_max=limit)
        reports.append({"gf": gf, "order": o, "ok": r.ok, "first_mismatch": r.first_mismatch})
    ok = all(r["ok"] for r in reports)
    return {"reports": reports, "ok": ok}, 0 if ok else 1


def cmd_identities(args) -> tuple[dict, int]:
    order = args.order if args.order is not None else DEFAULT_ORDER
    rep = catalog.identity_checks(order, oracle_max=_oracle_max(args))
    items = [{"name": r.name, "description": r.description, "ok": r.ok, "first_bad": r.first_bad}
             for r in rep.results]
    return {"identities": items, "ok": rep.ok}, 0 if rep.ok else 1


def _bij(args) -> dict:
    kind = args.bij
    if kind is None:
        raise UsageError("bij needs --bij")
    text = args.path if args.path is not None else ""
    sets = _settings(args)
    if kind == "wlt":
        if args.inverse:
            return {"output": transforms.composition_to_wlt(Composition.parse(text)).steps}
        return {"output": str(transforms.wlt_to_composition(paths.parse_path(text)))}
    if kind == "mlt":
        if args.inverse:
            return {"output": transforms.composition_to_mlt(Composition.parse(text)).steps}
        return {"output": str(transforms.mlt_to_composition(paths.parse_path(text)))}
    if kind == "eq8":
        peak = int(sets.get("peak", "1")) - 1
        marked = transforms.MarkedPath(paths.parse_path(text), peak)
        if args.inverse:
            out = transforms.eq8_delete(marked, int(sets.get("i", "1")))
            return {"output": out.path.steps, "peak": out.peak_index + 1}
        if "n" not in sets:
            raise UsageError("eq8 needs --set n=<target semilength>")
        out, i = transforms.eq8_insert(marked, int(sets["n"]))
        return {"output": out.path.steps, "peak": out.peak_index + 1, "i": i}
    if kind in ("dv", "dp"):
        fwd = transforms.delest_viennot if kind == "dv" else transforms.deutsch_prodinger
        inv = transforms.delest_viennot_inverse if kind == "dv" else transforms.deutsch_prodinger_inverse
        if args.inverse:
            return {"output": inv(ColumnPolyomino.parse(text)).steps}
        poly = fwd(paths.parse_path(text))
        cls = classify_polyomino(poly)
        return {
            "output": poly.format(),
            "columns": [list(c) for c in poly.columns],
            "area": cls.area,
            "semiperimeter": cls.semiperimeter,
            "rows_top_to_bottom": str(cls.rows_top_to_bottom),
            "parallelogram": cls.parallelogram,
            "directed": cls.directed,
            "convex": cls.convex,
        }
    raise UsageError(f"unknown bijection {kind!r}")


def cmd_bij(args) -> tuple[dict, int]:
    return {"bij": args.bij, "inverse": bool(args.inverse), **_bij(args)}, 0


def cmd_check_all(args) -> tuple[dict, int]:
    from .checks import run_all

    order = args.order if args.order is not None else DEFAULT_ORDER
    results = run_all(order, oracle_max=_oracle_max(args))
    ok = all(r["ok"] for r in results)
    return {"checks": results, "ok": ok}, 0 if ok else 1


HANDLERS: dict[str, Callable] = {
    "stats": cmd_stats,
    "gen": cmd_gen,
    "series": cmd_series,
    "verify": cmd_verify,
    "identities": cmd_identities,
    "bij": cmd_bij,
    "seq": cmd_seq,
    "check-all": cmd_check_all,
}


# rendering ----------------------------------------------------------------------------


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(type(x).__name__)


def render_plain(command: str, results: dict) -> str:
    if command == "stats":
        lines = []
        for k, v in results.items():
            if isinstance(v, dict):
                lines.extend(f"{k}.{kk}: {vv}" for kk, vv in v.items())
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)
    if command == "gen":
        return "\n".join(results["paths"])
    if command in ("series", "seq"):
        cs = results["coefficients"]
        if all(_is_number(c) for c in cs):
            return " ".join(cs)
        return "\n".join(f"z^{k}: {c}" for k, c in enumerate(cs))
    if command == "verify":
        out = []
        for r in results["reports"]:
            if r["ok"]:
                out.append(f"PASS {r['gf']} through z^{r['order']}")
            else:
                out.append(f"FAIL {r['gf']} first mismatch at z^{r['first_mismatch']}")
        return "\n".join(out)
    if command == "identities":
        return "\n".join(
            f"{'PASS' if r['ok'] else 'FAIL'} {r['name']}: {r['description']}"
            + ("" if r["ok"] else f" (first bad power {r['first_bad']})")
            for r in results["identities"]
        )
    if command == "bij":
        return str(results["output"])
    if command == "check-all":
        return "\n".join(
            f"{'PASS' if r['ok'] else 'FAIL'} {r['name']}" + ("" if r["ok"] else f": {r['detail']}")
            for r in results["checks"]
        )
    raise ValueError(command)


def _is_number(text: str) -> bool:
    try:
        Fraction(text)
    except ValueError:
        return False
    return True


def render_bfile(command: str, results: dict) -> str:
    if command not in ("series", "seq"):
        raise UsageError("bfile format applies to series and seq only")
    cs = results["coefficients"]
    if not all(_is_number(c) for c in cs):
        raise UsageError(f"{results['gf']} is not univariate; bind its variables with --set")
    return "\n".join(f"{n} {c}" for n, c in enumerate(cs))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyckstat", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--gf")
    p.add_argument("--order", type=int)
    p.add_argument("--path")
    p.add_argument("--set", action="append", metavar="VAR=VALUE")
    p.add_argument("--bij", choices=("wlt", "mlt", "eq8", "dv", "dp"))
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--format", choices=("plain", "json", "bfile"))
    p.add_argument("--oracle-max", type=int, dest="oracle_max")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    fmt = args.format or ("bfile" if args.command == "seq" else "plain")
    try:
        results, code = HANDLERS[args.command](args)
        if fmt == "json":
            params = {k: v for k, v in vars(args).items() if k != "command" and v not in (None, False)}
            text = json.dumps({"command": args.command, "params": params, "results": results},
                              default=_json_default, indent=2)
        elif fmt == "bfile":
            text = render_bfile(args.command, results)
        else:
            text = render_plain(args.command, results)
    except (UsageError, catalog.CatalogError, paths.PathError, paths.ResourceBound,
            transforms.TransformError, MalformedPolyomino, SeriesError, VariableError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"dyckstat: error: {msg}", file=err)
        return 2
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())
