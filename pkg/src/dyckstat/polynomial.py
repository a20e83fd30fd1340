"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
key, so monomials hash and compare structurally.  Variables are named by a
letter from ``trswyqph`` optionally followed by ``_i`` for an index ``i >= 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

Monomial = tuple[tuple[str, int], ...]
Number = Union[int, Fraction]

_VAR_RE = re.compile(r"^([trswyqph])(?:_([1-9][0-9]*))?$")


class VariableError(ValueError):
    pass


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple[str, int]:
    """Sort key ``(letter, index)``; unindexed variables get index 0."""
    m = _VAR_RE.match(name)
    if m is None:
        raise VariableError(f"bad variable name {name!r}")
    return m.group(1), int(m.group(2) or 0)


def var_name(letter: str, index: int | None = None) -> str:
    name = letter if index is None else f"{letter}_{index}"
    var_key(name)
    return name


def check_families(names: Iterable[str]) -> None:
    """Reject a mix of ``x`` and ``x_i`` for the same letter."""
    seen: dict[str, bool] = {}
    for name in names:
        letter, idx = var_key(name)
        indexed = idx > 0
        if seen.setdefault(letter, indexed) != indexed:
            raise VariableError(f"variable {letter!r} used both indexed and unindexed")


@lru_cache(maxsize=1 << 16)
def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: var_key(item[0])))


def _normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: dict[Monomial, Number] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _normalize(c)
        self._terms = clean
        self._hash: int | None = None

    # construction --------------------------------------------------------

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls({(): c}) if c else cls()

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "Poly":
        var_key(name)
        if exponent < 0:
            raise ValueError("negative exponent")
        if exponent == 0:
            return cls.const(1)
        return cls({((name, exponent),): 1})

    @classmethod
    def coerce(cls, x: "Poly | Number") -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
            return cls.const(Fraction(x) if not isinstance(x, int) else x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # inspection ------------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_term(self) -> Number:
        return self._terms.get((), 0)

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def coefficient(self, mono: Mapping[str, int] | Monomial = ()) -> Number:
        if isinstance(mono, Mapping):
            mono = tuple(sorted(((v, e) for v, e in mono.items() if e), key=lambda it: var_key(it[0])))
        return self._terms.get(tuple(mono), 0)

    def total_degree(self) -> int:
        return max((sum(e for _, e in mono) for mono in self._terms), default=0)

    # arithmetic -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Poly | Number") -> "Poly":
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly | Number") -> "Poly":
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: "Poly | Number") -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 1:
                return self
            return Poly({m: c * other for m, c in self._terms.items()})
        if not self._terms or not other._terms:
            return Poly()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1 and () in b:
            k = b[()]
            return self if k == 1 and a is self._terms else Poly({m: c * k for m, c in a.items()})
        out: dict[Monomial, Number] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                mono = _merge(ma, mb)
                out[mono] = out.get(mono, 0) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, k: Number) -> "Poly":
        if isinstance(k, Poly):
            if not k.is_constant() or not k:
                raise ZeroDivisionError("division by non-constant or zero polynomial")
            k = k.constant_term()
        inv = Fraction(1) / Fraction(k)
        return Poly({m: c * inv for m, c in self._terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # transformations --------------------------------------------------------

    def subs(self, bindings: Mapping[str, "Poly | Number"]) -> "Poly":
        """Simultaneous substitution of polynomials for variables."""
        if not bindings or not (self.variables() & bindings.keys()):
            return self
        vals = {v: Poly.coerce(p) for v, p in bindings.items()}
        powers: dict[tuple[str, int], Poly] = {}
        out = Poly()
        for mono, c in self._terms.items():
            kept = []
            factor = Poly.const(c)
            for v, e in mono:
                if v in vals:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = vals[v] ** e
                    factor = factor * powers[key]
                else:
                    kept.append((v, e))
            out = out + factor * Poly({tuple(kept): 1})
        return out

    def diff(self, name: str) -> "Poly":
        out: dict[Monomial, Number] = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.get(name, 0)
            if not e:
                continue
            if e == 1:
                del exps[name]
            else:
                exps[name] = e - 1
            key = tuple(sorted(exps.items(), key=lambda it: var_key(it[0])))
            out[key] = out.get(key, 0) + c * e
        return Poly(out)

    def to_number(self) -> Number:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.constant_term()

    # printing -----------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Number]]:
        """Terms by descending total degree, then by exponent vector."""

        def key(item):
            mono = item[0]
            deg = sum(e for _, e in mono)
            return (-deg, [(var_key(v), -e) for v, e in mono])

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def parse_poly(text: str) -> Poly:
    """Parse the printed form produced by ``str(Poly)``.

    Accepts sums of terms like ``3*t_1^2*r`` or ``-2/3*s``; no parentheses.
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return Poly()
    terms = re.findall(r"[+-]?[^+-]+", text)
    if "".join(terms) != text:
        raise ValueError(f"cannot parse polynomial {text!r}")
    out = Poly()
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        coeff: Number = 1
        factor = Poly.const(1)
        for piece in term.split("*"):
            if re.fullmatch(r"[0-9]+(/[0-9]+)?", piece):
                coeff = coeff * Fraction(piece)
            else:
                name, _, exp = piece.partition("^")
                factor = factor * Poly.var(name, int(exp) if exp else 1)
        out = out + factor * (sign * coeff)
    return out


ONE = Poly.const(1)
ZERO = Poly()
