"""Exact arithmetic in Q(q).

Elements are reduced fractions of integer Laurent polynomials in a formal
parameter ``q``.  Polynomial kernels (multiplication, gcd) run on
``flint.fmpz_poly``; the Laurent shift is carried separately so that every
stored polynomial has a nonzero constant term.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "LaurentPoly",
    "QScalar",
    "PoleError",
    "ZERO",
    "ONE",
    "Q",
    "qs",
    "qint",
    "qpow",
    "qs_arith",
    "qs_qint",
    "qs_eval",
    "qs_specialize_q1",
]

_ONE_POLY = flint.fmpz_poly([1])
_ZERO_POLY = flint.fmpz_poly([])


class PoleError(ZeroDivisionError):
    """Raised when a scalar is evaluated at a zero of its denominator."""


def _strip(p: flint.fmpz_poly) -> tuple[int, flint.fmpz_poly]:
    """Split ``p = q^s * p'`` with ``p'(0) != 0``."""
    if p.is_zero():
        return 0, p
    cs = p.coeffs()
    s = 0
    while cs[s] == 0:
        s += 1
    return s, (p.right_shift(s) if s else p)


class LaurentPoly:
    """Sparse integer Laurent polynomial ``q^shift * poly``.

    ``coefficients`` exposes the exponent -> coefficient association; zero
    coefficients are never present and the zero polynomial is ``{}``.
    """

    __slots__ = ("shift", "poly")

    def __init__(self, coefficients=None):
        if not coefficients:
            self.shift, self.poly = 0, _ZERO_POLY
            return
        items = {e: int(c) for e, c in dict(coefficients).items() if c}
        if not items:
            self.shift, self.poly = 0, _ZERO_POLY
            return
        lo = min(items)
        cs = [0] * (max(items) - lo + 1)
        for e, c in items.items():
            cs[e - lo] = c
        self.shift, self.poly = lo, flint.fmpz_poly(cs)

    @classmethod
    def _raw(cls, shift: int, poly: flint.fmpz_poly) -> "LaurentPoly":
        s, p = _strip(poly)
        obj = cls.__new__(cls)
        obj.shift = shift + s if not p.is_zero() else 0
        obj.poly = p
        return obj

    @property
    def coefficients(self) -> dict[int, int]:
        return {self.shift + i: int(c) for i, c in enumerate(self.poly.coeffs()) if c}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def min_exp(self) -> int:
        return self.shift

    def max_exp(self) -> int:
        return self.shift + self.poly.degree()

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self.shift, other.shift)
        p = self.poly.left_shift(self.shift - s) + other.poly.left_shift(other.shift - s)
        return LaurentPoly._raw(s, p)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.shift, -self.poly)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly._raw(self.shift + other.shift, self.poly * other.poly)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.shift, tuple(int(c) for c in self.poly.coeffs())))

    def __call__(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        val = Fraction(0)
        for e, c in self.coefficients.items():
            val += c * x**e
        return val

    def __str__(self) -> str:
        return _format_laurent(self.coefficients)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _format_laurent(coeffs: dict[int, int]) -> str:
    if not coeffs:
        return "0"
    out = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*)?\s*(q(?:\s*\^\s*(-?\d+))?)?")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the ``c_k*q^k + ...`` grammar, e.g. ``"q - q^-1"`` or ``"3*q^2 + 1"``."""
    s = text.strip()
    if s in ("", "0"):
        return LaurentPoly()
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial at position {pos}: {text!r}")
        sign, num, _star, qpart, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        if num is None and qpart is None:
            raise ValueError(f"empty term at position {pos}: {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0 if qpart is None else (int(exp) if exp is not None else 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return LaurentPoly(coeffs)


class QScalar:
    """Element ``q^shift * num / den`` of Q(q) in canonical form.

    ``num`` and ``den`` are coprime in Z[q], neither is divisible by ``q``,
    and ``den`` has positive constant term.  Canonical forms are unique, so
    ``==`` and ``hash`` are structural.
    """

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, numerator=0, denominator=1):
        n = _as_laurent(numerator)
        d = _as_laurent(denominator)
        if d.is_zero():
            raise ZeroDivisionError("QScalar with zero denominator")
        self._set(n.shift - d.shift, n.poly, d.poly)

    def _set(self, shift, num, den):
        if num.is_zero():
            self.shift, self.num, self.den = 0, _ZERO_POLY, _ONE_POLY
            self._hash = None
            return
        s, num = _strip(num)
        t, den = _strip(den)
        shift += s - t
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den.coeffs()[0] < 0:
                num, den = -num, -den
        self.shift, self.num, self.den = shift, num, den
        self._hash = None

    @classmethod
    def _make(cls, shift, num, den) -> "QScalar":
        obj = cls.__new__(cls)
        obj._set(shift, num, den)
        return obj

    @classmethod
    def _poly(cls, shift, num) -> "QScalar":
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.shift, obj.num, obj.den = 0, _ZERO_POLY, _ONE_POLY
        else:
            s, num = _strip(num)
            obj.shift, obj.num, obj.den = shift + s, num, _ONE_POLY
        obj._hash = None
        return obj

    # -- structure -------------------------------------------------------
    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly._raw(self.shift, self.num)

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, QScalar):
            try:
                other = qs(other)
            except TypeError:
                return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shift, tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other) -> "QScalar":
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        s = min(self.shift, other.shift)
        a = self.num.left_shift(self.shift - s)
        b = other.num.left_shift(other.shift - s)
        if self.den.is_one() and other.den.is_one():
            return QScalar._poly(s, a + b)
        if self.den == other.den:
            return QScalar._make(s, a + b, self.den)
        g = self.den.gcd(other.den)
        d1 = self.den // g
        d2 = other.den // g
        return QScalar._make(s, a * d2 + b * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        obj = QScalar.__new__(QScalar)
        obj.shift, obj.num, obj.den, obj._hash = self.shift, -self.num, self.den, None
        return obj

    def __sub__(self, other) -> "QScalar":
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QScalar":
        other = _coerce(other)
        return NotImplemented if other is None else other - self

    def __mul__(self, other) -> "QScalar":
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        shift = self.shift + other.shift
        if self.den.is_one() and other.den.is_one():
            obj = QScalar.__new__(QScalar)
            obj.shift, obj.num, obj.den, obj._hash = shift, self.num * other.num, _ONE_POLY, None
            return obj
        # cross-cancel keeps intermediate sizes small
        n1, d2 = self.num, other.den
        n2, d1 = other.num, self.den
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if den.coeffs()[0] < 0:
            num, den = -num, -den
        obj = QScalar.__new__(QScalar)
        obj.shift, obj.num, obj.den, obj._hash = shift, num, den, None
        return obj

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero QScalar")
        num, den = self.den, self.num
        if den.coeffs()[0] < 0:
            num, den = -num, -den
        obj = QScalar.__new__(QScalar)
        obj.shift, obj.num, obj.den, obj._hash = -self.shift, num, den, None
        return obj

    def __truediv__(self, other) -> "QScalar":
        if not isinstance(other, QScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QScalar":
        other = _coerce(other)
        return NotImplemented if other is None else other * self.inverse()

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            return self.inverse() ** (-n)
        return QScalar._make(self.shift * n, self.num ** n, self.den ** n)

    # -- evaluation ------------------------------------------------------
    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if q0 == 0:
            raise PoleError("evaluation at q = 0")
        x = flint.fmpq(q0.numerator, q0.denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"denominator {self.denominator} vanishes at q = {q0}")
        v = self.num(x) / d
        v = Fraction(int(v.p), int(v.q))
        return v * q0**self.shift

    # -- text ------------------------------------------------------------
    def to_strings(self) -> tuple[str, str]:
        return str(self.numerator), str(self.denominator)

    def __str__(self) -> str:
        n, d = self.to_strings()
        if d == "1":
            return n
        return f"({n})/({d})"

    def __repr__(self) -> str:
        return f"QScalar({self})"

    def __lt__(self, other):  # deterministic ordering for reports only
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.shift, [int(c) for c in self.num.coeffs()], [int(c) for c in self.den.coeffs()])


def _coerce(x):
    try:
        return qs(x)
    except TypeError:
        return None


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x} if x else None)
    if isinstance(x, dict):
        return LaurentPoly(x)
    if isinstance(x, str):
        return parse_laurent(x)
    raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")


def qs(x) -> QScalar:
    """Coerce ints, Fractions, strings and QScalars into a QScalar."""
    if isinstance(x, QScalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return _int_scalar(x)
    if isinstance(x, Fraction):
        return QScalar(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_qscalar(x)
    if isinstance(x, (LaurentPoly, dict)):
        return QScalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to QScalar")


@lru_cache(maxsize=4096)
def _int_scalar(n: int) -> QScalar:
    return QScalar._poly(0, flint.fmpz_poly([n]))


@lru_cache(maxsize=4096)
def qpow(k: int) -> QScalar:
    """``q^k``."""
    return QScalar._poly(k, _ONE_POLY)


def parse_qscalar(text: str) -> QScalar:
    """Parse ``"num"`` or ``"(num)/(den)"`` where each side is a Laurent polynomial."""
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return QScalar(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return QScalar(parse_laurent(s))


ZERO = _int_scalar(0)
ONE = _int_scalar(1)
Q = qpow(1)


@lru_cache(maxsize=None)
def qint(n: int, d: int = 1) -> QScalar:
    """Quantum integer ``[n]_d = (q^{dn} - q^{-dn}) / (q^d - q^{-d})``."""
    if d <= 0:
        raise ValueError("d must be positive")
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    m = abs(n)
    # sum_{k=0}^{m-1} q^{d(m-1-2k)}
    coeffs = {d * (m - 1 - 2 * k): sign for k in range(m)}
    return QScalar(LaurentPoly(coeffs))


def qs_arith(a: QScalar, b: QScalar, op: str) -> QScalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def qs_qint(n: int, d: int = 1) -> QScalar:
    return qint(n, d)


def qs_eval(a: QScalar, q0) -> Fraction:
    return a.evaluate(q0)


def qs_specialize_q1(a: QScalar) -> Fraction:
    return a.evaluate(1)


def _spread(p: flint.fmpz_poly, d: int) -> flint.fmpz_poly:
    coeffs = p.coeffs()
    out = [0] * ((len(coeffs) - 1) * d + 1) if coeffs else []
    for i, c in enumerate(coeffs):
        out[i * d] = c
    return flint.fmpz_poly(out)


def _shrink(p: flint.fmpz_poly, d: int):
    coeffs = p.coeffs()
    if any(c != 0 and i % d for i, c in enumerate(coeffs)):
        return None
    return flint.fmpz_poly(coeffs[::d])


def qs_inflate(a: QScalar, d: int) -> QScalar:
    """Substitute ``q -> q^d`` (used to pass to the field of ``q^(1/d)``)."""
    if d == 1 or a.is_zero():
        return a
    return QScalar._make(a.shift * d, _spread(a.num, d), _spread(a.den, d))


def qs_deflate(a: QScalar, d: int):
    """Inverse of :func:`qs_inflate`; None when ``a`` is not a function of ``q^d``."""
    if d == 1 or a.is_zero():
        return a
    if a.shift % d:
        return None
    num, den = _shrink(a.num, d), _shrink(a.den, d)
    if num is None or den is None:
        return None
    return QScalar._make(a.shift // d, num, den)
