"""Truncated power series in ``z`` with polynomial coefficients.

Everything is exact.  A series of order ``N`` carries the coefficients of
``z^0 .. z^N``; operations never invent coefficients beyond ``N``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .polynomial import ONE, ZERO, Number, Poly, var_key

Coeff = Union[Poly, int, Fraction]


class SeriesError(ArithmeticError):
    pass


class OrderMismatch(SeriesError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class NonUnitDenominator(NonUnitConstantTerm):
    pass


class BadConstantTerm(SeriesError):
    pass


class TruncationUnsound(SeriesError):
    pass


class DepthTooShallow(SeriesError):
    pass


class Series:
    """``coeffs[k]`` is the coefficient of ``z^k`` for ``0 <= k <= order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Coeff], order: int | None = None):
        cs = [Poly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[Poly, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Coeff, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Coeff = 1) -> "Series":
        """``c * z^k``; zero if ``k > order``."""
        cs = [ZERO] * (order + 1)
        if k <= order:
            cs[k] = Poly.coerce(c)
        return cls(cs, order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([ONE], order)

    def __getitem__(self, k: int) -> Poly:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Series(order={self.order}, {[str(c) for c in self.coeffs]})"

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def _lift(self, other: "Series | Coeff") -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return other
        return Series.constant(other, self.order)

    def __add__(self, other: "Series | Coeff") -> "Series":
        other = self._lift(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "Series | Coeff") -> "Series":
        return self + (-self._lift(other))

    def __rsub__(self, other: "Series | Coeff") -> "Series":
        return self._lift(other) - self

    def __mul__(self, other: "Series | Coeff") -> "Series":
        if not isinstance(other, Series):
            c = Poly.coerce(other)
            return Series([a * c for a in self.coeffs], self.order)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        na = [k for k, c in enumerate(a) if c]
        nb = [k for k, c in enumerate(b) if c]
        out = [ZERO] * (self.order + 1)
        for i in na:
            for j in nb:
                if i + j > self.order:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return Series(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other: "Series | Coeff") -> "Series":
        if isinstance(other, Series):
            return self * other.inverse()
        return Series([c / other for c in self.coeffs], self.order)

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return self.inverse() ** (-n)
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # structural ---------------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationUnsound(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], order)

    def shift_up(self, k: int) -> "Series":
        """Multiply by ``z^k`` keeping the order."""
        return Series([ZERO] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def shift_down(self, k: int) -> "Series":
        """Divide by ``z^k``; the order drops by ``k``."""
        for i in range(min(k, self.order + 1)):
            if self.coeffs[i]:
                raise SeriesError(f"coefficient of z^{i} is {self.coeffs[i]}, cannot divide by z^{k}")
        if k > self.order:
            raise TruncationUnsound(f"dividing order-{self.order} series by z^{k}")
        return Series(self.coeffs[k:], self.order - k)

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if not c0 or not c0.is_constant():
            raise NonUnitConstantTerm(f"constant term {c0} is not a nonzero number")
        inv0 = Fraction(1) / Fraction(c0.constant_term())
        nz = [(k, c) for k, c in enumerate(self.coeffs) if k and c]
        g = [Poly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k, c in nz:
                if k > n:
                    break
                acc = acc + c * g[n - k]
            g.append(acc * (-inv0))
        return Series(g, self.order)

    def sqrt(self) -> "Series":
        """The square root with constant term ``+1``."""
        if self.coeffs[0] != ONE:
            raise BadConstantTerm(f"constant term {self.coeffs[0]} is not 1")
        g = [ONE]
        half = Fraction(1, 2)
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for j in range(1, (n + 1) // 2):
                if g[j] and g[n - j]:
                    acc = acc - 2 * (g[j] * g[n - j])
            if n % 2 == 0 and g[n // 2]:
                acc = acc - g[n // 2] * g[n // 2]
            g.append(acc * half)
        return Series(g, self.order)

    # coefficient maps ----------------------------------------------------------

    def map_coeffs(self, fn: Callable[[Poly], Poly]) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.order)

    def diff(self, name: str) -> "Series":
        return self.map_coeffs(lambda c: c.diff(name))

    def evaluate(self, values: Mapping[str, Coeff]) -> "Series":
        return self.map_coeffs(lambda c: c.subs(values))

    def variables(self) -> set[str]:
        out: set[str] = set()
        for c in self.coeffs:
            out |= c.variables()
        return out

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def numbers(self) -> list[Number]:
        """Coefficients as numbers; fails if any coefficient has a variable."""
        return [c.to_number() for c in self.coeffs]

    def first_difference(self, other: "Series") -> int | None:
        self._check(other)
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        return None

    def format(self) -> str:
        return "\n".join(f"z^{k}: {c}" for k, c in enumerate(self.coeffs))


def z(order: int) -> Series:
    return Series.monomial(1, order)


def substitute(f: Series, bindings: Mapping[str, "Series | Coeff"]) -> Series:
    """Simultaneously replace variables by polynomials or by series in ``z``.

    Coefficients of ``f`` are polynomials, so a series binding only has to be
    known through ``f.order``; a shorter binding raises ``TruncationUnsound``.
    """
    if not bindings:
        return f
    poly_binds: dict[str, Poly] = {}
    series_binds: dict[str, Series] = {}
    for name, value in bindings.items():
        var_key(name)
        if isinstance(value, Series):
            if value.order < f.order:
                raise TruncationUnsound(
                    f"binding for {name} known to order {value.order} < {f.order}"
                )
            if value.order > f.order:
                value = value.truncate(f.order)
            if all(not c for c in value.coeffs[1:]):
                poly_binds[name] = value.coeffs[0]
            else:
                series_binds[name] = value
        else:
            poly_binds[name] = Poly.coerce(value)
    if not series_binds:
        return f.map_coeffs(lambda c: c.subs(poly_binds))

    order = f.order
    cache: dict[tuple[str, int], Series] = {}

    def power(name: str, e: int) -> Series:
        key = (name, e)
        if key not in cache:
            cache[key] = series_binds[name] ** e
        return cache[key]

    out = Series.zero(order)
    for k, coeff in enumerate(f.coeffs):
        if not coeff:
            continue
        coeff = coeff.subs(poly_binds)
        acc = Series.zero(order - k)
        for mono, c in coeff.items():
            rest = []
            term = Series.constant(c, order - k)
            for v, e in mono:
                if v in series_binds:
                    term = term * power(v, e).truncate(order - k)
                else:
                    rest.append((v, e))
            acc = acc + term * Poly({tuple(rest): 1})
        out = out + Series(list(acc.coeffs), order).shift_up(k)
    return out


def q_int(i: int, order: int, base: Coeff = 1) -> Series:
    """``[i]`` evaluated at ``base*z``: ``1 + base z + ... + (base z)^(i-1)``."""
    if i < 1:
        raise ValueError("q-integer index must be >= 1")
    b = Poly.coerce(base)
    cs = []
    p = ONE
    for k in range(min(i, order + 1)):
        cs.append(p)
        p = p * b
    return Series(cs, order)


def q_fact(a: int, order: int, base: Coeff = 1) -> Series:
    if a < 0:
        raise ValueError("q-factorial argument must be >= 0")
    out = Series.one(order)
    for i in range(1, a + 1):
        out = out * q_int(i, order, base)
    return out


LevelRule = Callable[[int, int], Series]


def cf_eval(levels: LevelRule, depth: int, order: int, check: bool = True) -> Series:
    """Evaluate ``1/(a_1 - z/(a_2 - z/(a_3 - ...)))`` bottom-up.

    ``levels(k, order)`` returns the local term ``a_k``.  The tail below
    ``depth`` is replaced by 1.  With ``check`` the result is compared with
    the depth ``depth + 1`` evaluation through ``z^order``.
    """
    if depth < order + 1:
        raise DepthTooShallow(f"depth {depth} < order + 1 = {order + 1}")
    result = _cf_bottom_up(levels, depth, order)
    if check:
        deeper = _cf_bottom_up(levels, depth + 1, order)
        bad = result.first_difference(deeper)
        if bad is not None:
            raise DepthTooShallow(f"depth {depth} and {depth + 1} disagree at z^{bad}")
    return result


def _cf_bottom_up(levels: LevelRule, depth: int, order: int) -> Series:
    zz = z(order)
    tail = Series.one(order)
    for k in range(depth, 0, -1):
        denom = levels(k, order) - zz * tail
        try:
            tail = denom.inverse()
        except NonUnitConstantTerm as exc:
            raise NonUnitDenominator(f"level {k}: {exc}") from None
    return tail


def peak_height_levels(h: Callable[[int, int], Series]) -> LevelRule:
    """Local terms ``1 - z(h_k - 1)`` of the peak-height continued fraction."""

    def rule(k: int, order: int) -> Series:
        return 1 - z(order) * (h(k, order) - 1)

    return rule


def series_from_numbers(values: Sequence[Number]) -> Series:
    return Series(list(values))
