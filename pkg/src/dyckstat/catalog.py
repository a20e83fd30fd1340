"""Named generating functions, their brute-force oracles, and cross-checks.

Every builder works from the closed form, sum, or continued fraction of the
entry and never looks at paths; ``verify`` compares it against
:func:`dyckstat.paths.aggregate`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import paths
from .polynomial import ONE, Poly, check_families, var_key
from .series import (
    Series,
    cf_eval,
    peak_height_levels,
    q_fact,
    q_int,
    substitute,
    z,
)


class CatalogError(Exception):
    pass


class UnknownGf(CatalogError, KeyError):
    pass


class IntegralityViolation(CatalogError):
    pass


class NoOracle(CatalogError):
    pass


class IdentityFailed(CatalogError):
    def __init__(self, name: str, power: int | None):
        super().__init__(f"identity {name} fails at z^{power}")
        self.name = name
        self.power = power


Value = Callable[[str], Poly]
Builder = Callable[[int, Value, int | None], Series]


@dataclass(frozen=True)
class GfEntry:
    id: str
    variables: tuple[str, ...]
    builder: Builder = field(repr=False)
    oracle: str | None
    anchor: str
    verify_order: int = 12
    distribution: bool = False
    continued_fraction: bool = False

    def accepts(self, name: str) -> bool:
        letter, idx = var_key(name)
        for v in self.variables:
            if v == name or (v.endswith("_i") and v[0] == letter and idx > 0):
                return True
        return False


# builders ------------------------------------------------------------------------


def _P(letter: str, order: int, val: Value, top: int) -> Series:
    """``sum_{1<=i<=top} x_i z^i`` at the given order."""
    cs = [Poly()] + [val(f"{letter}_{i}") if i <= top else Poly() for i in range(1, order + 1)]
    return Series(cs, order)


def _geometric_marked(mark: Poly, weight: Poly, order: int) -> Series:
    """``mark * weight z / (1 - weight z)``."""
    wz = z(order) * weight
    return (wz / (1 - wz)) * mark


def _sp_ap_from_P(pt: Series, pr: Series) -> Series:
    """Weighted symmetric/asymmetric peak GF from the two weight series."""
    m = pt.order
    zz = z(m)
    num = 1 + zz - (1 + zz) * pt + 2 * zz * pr
    rad = (1 - zz) * ((1 - pt) ** 2 - zz * (1 - pt + 2 * pr) ** 2)
    num = (num - rad.sqrt()).shift_down(1)
    den = (1 - pt + pr).truncate(m - 1)
    return num * (den * den * 2).inverse()


def build_catalan(order, val, depth=None):
    m = order + 1
    return (1 - (1 - 4 * z(m)).sqrt()).shift_down(1) / 2


def build_sp_ap_by_weight(order, val, depth=None):
    m = order + 1
    return _sp_ap_from_P(_P("t", m, val, order), _P("r", m, val, order))


def build_pea_ins_by_weight(order, val, depth=None):
    m = order + 1
    zz = z(m)
    q = val("q")
    qp = _P("p", m, val, order) * q
    rad = (1 - zz) * ((1 - qp) ** 2 - zz * (1 + qp) ** 2)
    num = 1 + zz - (1 - zz) * qp - rad.sqrt()
    return num.shift_down(1) * q / 2


def build_sp_ap_spw_apw(order, val, depth=None):
    m = order + 1
    zz = z(m)
    t, r, w, y = val("t"), val("r"), val("w"), val("y")
    a = _geometric_marked(t, w, m)
    b = _geometric_marked(r, y, m)
    num = 1 + zz - a * (1 + zz) + 2 * zz * b
    rad = (1 - zz) * ((1 - a) ** 2 - zz * (1 - a + 2 * b) ** 2)
    num = (num - rad.sqrt()).shift_down(1)
    den = (1 - a + b).truncate(order)
    return num * (den * den * 2).inverse()


def build_sp_ap(order, val, depth=None):
    # defined as the unit-weight specialization of the weighted form
    def spec(name: str) -> Poly:
        return ONE if name in ("w", "y") else val(name)

    return build_sp_ap_spw_apw(order, spec)


def build_sp_prime(order, val, depth=None):
    m = order + 1
    zz = z(m)
    t = val("t")
    a = 1 + zz - zz * t
    rad = a * a - 4 * zz * (1 - zz * t) / (1 - zz)
    return (a - rad.sqrt()).shift_down(1) / 2


def build_sp_prime_zero(order, val, depth=None):
    m = order + 1
    zz = z(m)
    rad = (1 - zz) * (1 - 3 * zz - zz**2 - zz**3)
    num = (1 - zz**2 - rad.sqrt()).shift_down(1)
    return num / (2 * (1 - z(order)))


def _inv_sqrt_1m4z(order):
    return (1 - 4 * z(order)).sqrt().inverse()


def build_sp_total(order, val, depth=None):
    zz = z(order)
    return ((5 * zz - 1) / (1 - zz) * _inv_sqrt_1m4z(order) + 1) / 2


def build_ap_total(order, val, depth=None):
    zz = z(order)
    return (1 - 3 * zz) / (1 - zz) * _inv_sqrt_1m4z(order) - 1


def build_spw_total(order, val, depth=None):
    zz = z(order)
    s = (1 - 4 * zz).sqrt()
    return (5 * zz - 1 + (1 - zz) * s) / (2 * (1 - zz) ** 2 * s)


def build_apw_total(order, val, depth=None):
    zz = z(order)
    s = (1 - 4 * zz).sqrt()
    return (1 - 3 * zz - (1 - zz) * s) / ((1 - zz) ** 2 * s)


def build_pyramid_weight(order, val, depth=None):
    m = order + 1
    zz = z(m)
    q = val("q")
    qz = zz * q
    rad = (1 - 4 * zz) * (1 - qz) ** 2 + zz * (1 - q) * (2 + zz - 3 * qz)
    # the power-series branch takes the minus sign in front of the radical
    num = (1 + zz - 2 * qz - rad.sqrt()).shift_down(1)
    return num / (2 * (1 - z(order) * q))


def _cf(order, depth, rule):
    depth = order + 1 if depth is None else depth
    return cf_eval(rule, depth, order, check=_DEPTH_CHECK[0])


_DEPTH_CHECK = [True]


def build_peak_height_cf(order, val, depth=None):
    def h(k, m):
        return Series.constant(val(f"h_{k}") if k <= order else ONE, m)

    return _cf(order, depth, peak_height_levels(h))


def build_sval(order, val, depth=None):
    s = val("s")

    def rule(k, m):
        zz = z(m)
        return 1 + zz - zz / (1 - (s - 1) * (zz * q_int(k, m)))

    return _cf(order, depth, rule)


def build_sval_svw(order, val, depth=None):
    s, w = val("s"), val("w")

    def rule(k, m):
        zz = z(m)
        inner = 1 + zz * q_int(k, m) - zz * q_int(k, m, w) * (s * w)
        return 1 + zz - zz / inner

    return _cf(order, depth, rule)


def build_sval_total(order, val, depth=None):
    m = order + 2
    zz = z(m)
    den = 1 - 3 * zz - 4 * zz**2 + (1 - zz) * (1 - 4 * zz).sqrt()
    return (den.inverse() * 2).shift_up(2).truncate(order)


def build_svw_total(order, val, depth=None):
    zz = z(order)
    den = 1 - 3 * zz - 3 * zz**2 - 4 * zz**3 + (1 - zz - 3 * zz**2) * (1 - 4 * zz).sqrt()
    return (den.inverse() * 2).shift_up(2)


def _rational(num: Sequence, den: Sequence, order: int) -> Series:
    return Series(num, order) / Series(den, order)


def build_w_strict(order, val, depth=None):
    return _rational([1, -1], [1, -2], order)


def build_w_weak(order, val, depth=None):
    return _rational([1, -2], [1, -3, 1], order)


def build_w_weak_t(order, val, depth=None):
    t = val("t")
    return Series([1, -(1 + t)], order) / Series([1, -(2 + t), t], order)


def build_w_strict_unimodal(order, val, depth=None):
    den = Series([1, -1], order) * Series([1, -3, 1], order)
    return Series([1, -3, 2, -1], order) / den


def build_w_strict_unimodal_alt(order, val, depth=None):
    zz = z(order)
    return 1 + zz / (1 - zz) * build_w_weak(order, val)


def build_w_weak_unimodal(order, val, depth=None):
    return _rational([1, -4, 3], [1, -5, 6, -1], order)


def build_w_weak_unimodal_t(order, val, depth=None):
    t = val("t")
    num = Series([1, -(3 + 2 * t), 2 + 4 * t + t * t, -(1 + t + t * t)], order)
    den = Series([1, -1], order) * Series([1, -(2 * t + 3), 1 + 4 * t + t * t, -(t * t)], order)
    return num / den


def build_m_strict(order, val, depth=None):
    out = Series.zero(order)
    for a in range(order + 1):
        out = out + q_fact(a, order).shift_up(a)
    return out


def build_m_strict_unimodal(order, val, depth=None):
    out = Series.zero(order)
    for a in range(order + 1):
        f = q_fact(a, order)
        out = out + (f * f).shift_up(a)
    return out


def _pit_sequences(order: int, s: Poly | int = 1):
    """``1/(1 - s z[i])`` and ``1 + (1-s) z[i]`` for ``i = 1..order``."""
    zz = z(order)
    seq, corr = {}, {}
    for i in range(1, order + 1):
        zq = zz * q_int(i, order)
        seq[i] = (1 - zq * s).inverse()
        corr[i] = 1 + zq * (1 - Poly.coerce(s))
    return seq, corr


def build_m_weak(order, val, depth=None):
    seq, _ = _pit_sequences(order)
    out = Series.one(order)
    prod = Series.one(order)
    for a in range(1, order + 1):
        prod = prod * seq[a]
        out = out + prod.shift_up(a)
    return out


def _m_weak_refined(order, s, squared: bool):
    seq, corr = _pit_sequences(order, s)
    out = Series.one(order)
    prod = Series.one(order)
    for a in range(1, order + 1):
        body = prod * prod if squared else prod
        out = out + (body * seq[a]).shift_up(a)
        prod = prod * corr[a] * seq[a]
    return out


def build_m_weak_s(order, val, depth=None):
    return _m_weak_refined(order, val("s"), squared=False)


def build_m_weak_unimodal(order, val, depth=None):
    return _m_weak_refined(order, ONE, squared=True)


def build_m_weak_unimodal_s(order, val, depth=None):
    return _m_weak_refined(order, val("s"), squared=True)


# second transcriptions of the section-4 families, used by identity checks


def _lam(order):
    return (1 - z(order)).inverse()


def alt_w_strict(order):
    zz, lam = z(order), _lam(order)
    out = lam
    for a in range(order + 1):
        out = out + (lam ** (a + 2)).shift_up(a + 2)
    return out


def alt_w_strict_recursive(order):
    # W = 1 + z/(1-z) W
    return (1 - z(order) * _lam(order)).inverse()


def alt_w_weak(order):
    zz, lam = z(order), _lam(order)
    seq = (1 - zz * lam).inverse()
    out = lam
    for a in range(order + 1):
        out = out + (lam**2 * seq ** (a + 1)).shift_up(a + 2)
    return out


def alt_w_weak_t(order, t):
    zz, lam = z(order), _lam(order)
    tl = (1 - zz * lam * t).inverse()
    ratio = 1 + zz * lam * tl
    out = lam
    for a in range(order + 1):
        out = out + (lam**2 * tl * ratio**a).shift_up(a + 2)
    return out


def alt_w_strict_unimodal(order):
    lam = _lam(order)
    out = lam
    for a in range(order + 1):
        out = out + (lam ** (2 * a + 2)).shift_up(a + 2)
    return out


def alt_w_weak_unimodal(order):
    zz, lam = z(order), _lam(order)
    seq = (1 - zz * lam).inverse()
    out = lam
    for a in range(order + 1):
        out = out + (lam**2 * seq ** (2 * a + 1)).shift_up(a + 2)
    return out


def alt_w_weak_unimodal_t(order, t):
    zz, lam = z(order), _lam(order)
    tl = (1 - zz * lam * t).inverse()
    ratio = 1 + zz * lam * tl
    out = lam
    for a in range(order + 1):
        out = out + (lam**2 * tl * ratio ** (2 * a)).shift_up(a + 2)
    return out


def alt_m_strict(order):
    out = Series.one(order)
    prod = Series.one(order)
    for a in range(1, order + 1):
        if a >= 2:
            prod = prod * q_int(a, order)
        out = out + prod.shift_up(a)
    return out


def alt_m_weak(order):
    zz = z(order)
    out = Series.one(order)
    prod = Series.one(order)
    for a in range(1, order + 1):
        prod = prod * (1 - zz) / (1 - 2 * zz + zz ** (a + 1))
        out = out + prod.shift_up(a)
    return out


def alt_m_weak_s(order, s):
    zz = z(order)
    out = Series.one(order)
    num = Series.one(order)
    den = Series.one(order)
    for a in range(1, order + 1):
        den = den * (1 - (s + 1) * zz + s * zz ** (a + 1))
        out = out + ((1 - zz) * num / den).shift_up(a)
        num = num * (1 - s * zz + (s - 1) * zz ** (a + 1))
    return out


def alt_m_weak_unimodal(order, literal: bool = False):
    """Second closed form of the weakly unimodal peak family.

    The printed expression lacks the ``1/(1 - 2z + z^(a+1))`` factor of the
    top pit sequence; ``literal=True`` reproduces it as printed.
    """
    zz = z(order)
    out = Series.one(order)
    den = Series.one(order)
    for a in range(1, order + 1):
        f = 1 - 2 * zz + zz ** (a + 1)
        top = den if literal else den * f
        out = out + ((1 - zz) ** (2 * a - 1) / top).shift_up(a)
        den = den * f * f
    return out


def alt_m_weak_unimodal_s(order, s):
    zz = z(order)
    out = Series.one(order)
    ratio = Series.one(order)
    for a in range(1, order + 1):
        last = (1 - zz) / (1 - (s + 1) * zz + s * zz ** (a + 1))
        out = out + (last * ratio * ratio).shift_up(a)
        ratio = ratio * (1 - s * zz + (s - 1) * zz ** (a + 1)) / (1 - (s + 1) * zz + s * zz ** (a + 1))
    return out


# registry ------------------------------------------------------------------------

_E = GfEntry

CATALOG: dict[str, GfEntry] = {
    e.id: e
    for e in [
        _E("catalan", (), build_catalan, "count", "all Dyck paths by semilength", distribution=True),
        _E("sp_ap_by_weight", ("t_i", "r_i"), build_sp_ap_by_weight, "sp_ap_by_weight",
           "symmetric/asymmetric peaks by weight", verify_order=8, distribution=True),
        _E("pea_ins_by_weight", ("p_i", "q"), build_pea_ins_by_weight, None,
           "peaks by weight and insertion points (identity only)", verify_order=8, distribution=True),
        _E("sp_ap_spw_apw", ("t", "r", "w", "y"), build_sp_ap_spw_apw, "sp_ap_spw_apw",
           "symmetric/asymmetric peaks and their weight sums", verify_order=10, distribution=True),
        _E("sp_ap", ("t", "r"), build_sp_ap, "sp_ap", "symmetric and asymmetric peaks",
           verify_order=10, distribution=True),
        _E("sp_prime", ("t",), build_sp_prime, "sp_prime", "consecutive valleys at equal height",
           verify_order=10, distribution=True),
        _E("sp_prime_zero", (), build_sp_prime_zero, "sp_prime_zero",
           "no consecutive valleys at equal height"),
        _E("sp_total", (), build_sp_total, "sp_total", "total symmetric peaks"),
        _E("ap_total", (), build_ap_total, "ap_total", "total asymmetric peaks"),
        _E("pyramid_weight", ("q",), build_pyramid_weight, "pyramid_weight",
           "pyramid weight (sum of all peak weights)", verify_order=10, distribution=True),
        _E("spw_total", (), build_spw_total, "spw_total", "total weight of symmetric peaks"),
        _E("apw_total", (), build_apw_total, "apw_total", "total weight of asymmetric peaks"),
        _E("peak_height_cf", ("h_i",), build_peak_height_cf, "peak_heights",
           "peaks by height (continued fraction)", verify_order=10, distribution=True,
           continued_fraction=True),
        _E("sval", ("s",), build_sval, "sval", "symmetric valleys (continued fraction)",
           verify_order=10, distribution=True, continued_fraction=True),
        _E("sval_total", (), build_sval_total, "sval_total", "total symmetric valleys"),
        _E("sval_svw", ("s", "w"), build_sval_svw, "sval_svw",
           "symmetric valleys and their weight sum (continued fraction)", verify_order=10,
           distribution=True, continued_fraction=True),
        _E("svw_total", (), build_svw_total, "svw_total", "total weight of symmetric valleys"),
        _E("w_strict", (), build_w_strict, "w_strict", "strictly increasing valley heights"),
        _E("w_weak", (), build_w_weak, "w_weak", "weakly increasing valley heights"),
        _E("w_weak_t", ("t",), build_w_weak_t, "w_weak_t",
           "weakly increasing valley heights, t marks equal consecutive valleys", verify_order=10),
        _E("w_strict_unimodal", (), build_w_strict_unimodal, "w_strict_unimodal",
           "strictly unimodal valley heights"),
        _E("w_strict_unimodal_alt", (), build_w_strict_unimodal_alt, "w_weak_le1_zero_valley",
           "weakly increasing valley heights, at most one valley at height 0"),
        _E("w_weak_unimodal", (), build_w_weak_unimodal, "w_weak_unimodal",
           "weakly unimodal valley heights"),
        _E("w_weak_unimodal_t", ("t",), build_w_weak_unimodal_t, "w_weak_unimodal_t",
           "weakly unimodal valley heights, t marks equal consecutive valleys", verify_order=10),
        _E("m_strict", (), build_m_strict, "m_strict", "strictly increasing peak heights"),
        _E("m_weak", (), build_m_weak, "m_weak", "weakly increasing peak heights"),
        _E("m_weak_s", ("s",), build_m_weak_s, "m_weak_s",
           "weakly increasing peak heights, s marks equal consecutive peaks", verify_order=10),
        _E("m_strict_unimodal", (), build_m_strict_unimodal, "m_strict_unimodal",
           "strictly unimodal peak heights"),
        _E("m_weak_unimodal", (), build_m_weak_unimodal, "m_weak_unimodal",
           "weakly unimodal peak heights"),
        _E("m_weak_unimodal_s", ("s",), build_m_weak_unimodal_s, "m_weak_unimodal_s",
           "weakly unimodal peak heights, s marks equal consecutive peaks", verify_order=10),
    ]
}


def get_entry(gf_id: str) -> GfEntry:
    try:
        return CATALOG[gf_id]
    except KeyError:
        raise UnknownGf(f"unknown generating function {gf_id!r}") from None


def _valuation(entry: GfEntry, bindings: Mapping[str, Poly | int | Fraction] | None) -> Value:
    binds: dict[str, Poly] = {}
    for name, value in (bindings or {}).items():
        if not entry.accepts(name):
            raise CatalogError(f"{entry.id} has no variable {name!r}")
        binds[name] = Poly.coerce(value)

    def val(name: str) -> Poly:
        return binds[name] if name in binds else Poly.var(name)

    return val


def expand(
    gf_id: str,
    order: int,
    bindings: Mapping[str, Poly | int | Fraction] | None = None,
    depth: int | None = None,
    check_depth: bool = True,
) -> Series:
    """Exact expansion of a catalog entry through ``z^order``."""
    entry = get_entry(gf_id)
    if order < 0:
        raise ValueError("order must be nonnegative")
    val = _valuation(entry, bindings)
    prev = _DEPTH_CHECK[0]
    _DEPTH_CHECK[0] = check_depth
    try:
        result = entry.builder(order, val, depth)
    finally:
        _DEPTH_CHECK[0] = prev
    if result.order != order:
        result = result.truncate(order)
    if not result.is_integral():
        bad = next(k for k, c in enumerate(result.coeffs) if not c.is_integral())
        raise IntegralityViolation(f"{gf_id}: non-integer coefficient at z^{bad}: {result[bad]}")
    check_families(result.variables())
    return result


# verification -----------------------------------------------------------------------


@dataclass
class VerificationReport:
    gf: str
    order: int
    first_mismatch: int | None
    expected: Poly | None = None
    actual: Poly | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def line(self) -> str:
        if self.ok:
            return f"{self.gf}: agrees with brute force through z^{self.order}"
        return (f"{self.gf}: MISMATCH at z^{self.first_mismatch}: "
                f"series {self.actual} vs brute force {self.expected}")


def default_oracle_max() -> int:
    env = os.environ.get("DYCKSTAT_ORACLE_MAX")
    return int(env) if env else 12


def verify(gf_id: str, order: int, series: Series | None = None,
           oracle_max: int | None = None) -> VerificationReport:
    """Compare an entry's expansion with brute-force enumeration."""
    entry = get_entry(gf_id)
    if entry.oracle is None:
        raise NoOracle(f"{gf_id} has no path oracle")
    limit = paths.oracle_limit() if oracle_max is None else oracle_max
    if order > limit:
        raise paths.ResourceBound(f"order {order} exceeds brute-force ceiling {limit}")
    got = expand(gf_id, order) if series is None else series
    for n in range(order + 1):
        want = paths.aggregate(n, entry.oracle, limit=limit)
        if got[n] != want:
            return VerificationReport(gf_id, order, n, want, got[n])
    return VerificationReport(gf_id, order, None)


def oracle_entries() -> list[str]:
    return [k for k, e in CATALOG.items() if e.oracle is not None]


# cross-generating-function identities ---------------------------------------------


@dataclass
class IdentityResult:
    name: str
    description: str
    first_bad: int | None

    @property
    def ok(self) -> bool:
        return self.first_bad is None


@dataclass
class IdentityReport:
    order: int
    results: list[IdentityResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def raise_for_failure(self) -> None:
        for r in self.results:
            if not r.ok:
                raise IdentityFailed(r.name, r.first_bad)


def _cmp(a: Series, b: Series) -> int | None:
    return a.first_difference(b)


def _cmp_numbers(a: Sequence, b: Sequence) -> int | None:
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k
    return None


def _brute(stat: str, upto: int) -> list:
    return [paths.aggregate(n, stat, limit=upto) for n in range(upto + 1)]


def _d_at_one(f: Series, name: str, others: Sequence[str] = ()) -> Series:
    out = f.diff(name).evaluate({name: 1, **{o: 1 for o in others}})
    return out


def identity_checks(order: int, oracle_max: int | None = None,
                    weighted_order: int | None = None) -> IdentityReport:
    """Run every cross-generating-function identity through ``z^order``.

    Brute-force sides stop at ``min(order, oracle_max)``.  ``weighted_order``
    caps the identity that expands the infinitely-many-variable series.
    """
    N = order
    B = min(N, default_oracle_max() if oracle_max is None else oracle_max)
    W = N if weighted_order is None else min(N, weighted_order)
    res: list[IdentityResult] = []

    def add(name, desc, bad):
        res.append(IdentityResult(name, desc, bad))

    zz = z(N)
    geo = (1 - zz).inverse()
    sp_t, ap_t = expand("sp_total", N), expand("ap_total", N)
    spw_t, apw_t = expand("spw_total", N), expand("apw_total", N)
    add("a.spw", "spw_total = sp_total/(1-z)", _cmp(spw_t, sp_t * geo))
    add("a.apw", "apw_total = ap_total/(1-z)", _cmp(apw_t, ap_t * geo))
    sp_b, spw_b = _brute("sp_total", B), _brute("spw_total", B)
    ap_b, apw_b = _brute("ap_total", B), _brute("apw_total", B)
    cum_sp = [sum(sp_b[: n + 1], Poly()) for n in range(B + 1)]
    cum_ap = [sum(ap_b[: n + 1], Poly()) for n in range(B + 1)]
    add("a.brute", "brute force: spw over D_n = sp over D_k, k<=n (and for ap)",
        _cmp_numbers(spw_b + apw_b, cum_sp + cum_ap))

    q = Poly.var("q")
    add("b", "weighted peaks at t=r=1, w=y=q equal pyramid weight",
        _cmp(expand("sp_ap_spw_apw", N, {"t": 1, "r": 1, "w": q, "y": q}), expand("pyramid_weight", N)))

    four = expand("sp_ap_spw_apw", N)
    add("c", "sp_ap equals weighted peaks at w=y=1",
        _cmp(substitute(four, {"w": 1, "y": 1}), expand("sp_ap", N)))

    mw = W
    ins = expand("pea_ins_by_weight", mw)
    pt = Series([Poly()] + [Poly.var(f"t_{i}") for i in range(1, mw + 1)], mw)
    pr = Series([Poly()] + [Poly.var(f"r_{i}") for i in range(1, mw + 1)], mw)
    qser = (1 - pt + pr).inverse()
    binds: dict = {f"p_{i}": Poly.var(f"r_{i}") for i in range(1, mw + 1)}
    binds["q"] = qser
    add("d", "insertion-point series under q = 1/(1-P(t)+P(r)) gives weighted sp/ap",
        _cmp(substitute(ins, binds), expand("sp_ap_by_weight", mw)))

    spz = expand("sp_prime_zero", N)
    add("e.series", "sp_prime at t=0 equals the no-equal-valley display",
        _cmp(expand("sp_prime", N, {"t": 0}), spz))
    add("e.brute", "no-equal-valley counts equal uudu-avoiding counts",
        _cmp_numbers(spz.numbers()[: B + 1], [p.to_number() for p in _brute("avoid_uudu", B)]))

    add("f", "svw_total equals total peaks over hill-free paths",
        _cmp_numbers(expand("svw_total", N).numbers()[: B + 1],
                     [p.to_number() for p in _brute("hill_free_peaks", B)]))

    add("g", "strictly unimodal valley heights equal 1 + z/(1-z) * weak increasing",
        _cmp(expand("w_strict_unimodal", N), expand("w_strict_unimodal_alt", N)))

    add("h", "weakly unimodal valley heights equal height <= 5 counts",
        _cmp_numbers(expand("w_weak_unimodal", N).numbers()[: B + 1],
                     [p.to_number() for p in _brute("height_at_most_5", B)]))

    sp_ap = expand("sp_ap", N)
    add("i.sp", "sp_total = d/dt sp_ap(t,1) at t=1", _cmp(_d_at_one(sp_ap, "t", ["r"]), sp_t))
    add("i.ap", "ap_total = d/dr sp_ap(1,r) at r=1", _cmp(_d_at_one(sp_ap, "r", ["t"]), ap_t))
    add("i.spw", "spw_total = d/dw of weighted peaks at 1",
        _cmp(_d_at_one(four, "w", ["t", "r", "y"]), spw_t))
    add("i.apw", "apw_total = d/dy of weighted peaks at 1",
        _cmp(_d_at_one(four, "y", ["t", "r", "w"]), apw_t))
    add("i.sval", "sval_total = d/ds sval at s=1",
        _cmp(_d_at_one(expand("sval", N), "s"), expand("sval_total", N)))
    add("i.svw", "svw_total = d/dw sval_svw(1,w) at w=1",
        _cmp(_d_at_one(expand("sval_svw", N, {"s": 1}), "w"), expand("svw_total", N)))

    for refined, base, var in [("w_weak_t", "w_weak", "t"), ("w_weak_unimodal_t", "w_weak_unimodal", "t"),
                               ("m_weak_s", "m_weak", "s"), ("m_weak_unimodal_s", "m_weak_unimodal", "s")]:
        add(f"j.{refined}", f"{refined} at {var}=1 equals {base}",
            _cmp(expand(refined, N).evaluate({var: 1}), expand(base, N)))

    t, s = Poly.var("t"), Poly.var("s")
    for label, alt in [
        ("w_strict", alt_w_strict(N)),
        ("w_strict.recursive", alt_w_strict_recursive(N)),
        ("w_weak", alt_w_weak(N)),
        ("w_weak_t", alt_w_weak_t(N, t)),
        ("w_strict_unimodal", alt_w_strict_unimodal(N)),
        ("w_weak_unimodal", alt_w_weak_unimodal(N)),
        ("w_weak_unimodal_t", alt_w_weak_unimodal_t(N, t)),
        ("m_strict", alt_m_strict(N)),
        ("m_weak", alt_m_weak(N)),
        ("m_weak_s", alt_m_weak_s(N, s)),
        ("m_weak_unimodal", alt_m_weak_unimodal(N)),
        ("m_weak_unimodal_s", alt_m_weak_unimodal_s(N, s)),
    ]:
        name = label.split(".")[0]
        add(f"k.{label}", f"{label}: closed form equals decomposition sum", _cmp(expand(name, N), alt))

    ph = expand("peak_height_cf", N)
    hb = {}
    for i in range(1, N + 1):
        hb[f"h_{i}"] = (1 - (s - 1) * (zz * q_int(i, N))).inverse()
    add("l", "peak-height fraction under h_i = 1/(1-(s-1)z[i]) gives sval",
        _cmp(substitute(ph, hb), expand("sval", N)))

    bad = [k for k in mass_report(N).values() if k is not None]
    add("m", "all-ones specialization of distributions gives Catalan numbers",
        min(bad) if bad else None)
    return IdentityReport(N, res)


def mass_report(order: int, weighted_order: int = 8) -> dict[str, int | None]:
    """Per-entry first failure of the all-ones equals Catalan check."""
    cat = expand("catalan", order)
    out = {}
    for gf_id, entry in CATALOG.items():
        if not entry.distribution:
            continue
        indexed = any(v.endswith("_i") for v in entry.variables)
        n = min(order, weighted_order) if indexed else order
        ones: dict[str, int] = {}
        for v in entry.variables:
            if v.endswith("_i"):
                ones.update({f"{v[0]}_{i}": 1 for i in range(1, n + 1)})
            else:
                ones[v] = 1
        out[gf_id] = expand(gf_id, n, ones).first_difference(cat.truncate(n))
    return out


# peak ratio -------------------------------------------------------------------------


def ratio_trend(order: int) -> list[tuple[int, Fraction]]:
    """``(n, total symmetric peaks / total peaks)`` for ``1 <= n <= order``."""
    if order < 8:
        raise ValueError("ratio_trend needs order >= 8")
    t = Poly.var("t")
    pea = expand("sp_ap", order, {"r": t}).diff("t").evaluate({"t": 1}).numbers()
    sp = expand("sp_total", order).numbers()
    return [(n, Fraction(sp[n], pea[n])) for n in range(1, order + 1)]
