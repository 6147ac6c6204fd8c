"""Exact univariate polynomials in ``q`` over the integers.

:class:`Poly` is the value type used everywhere else in the package.  It stores
dense little-endian coefficient tuples (index ``i`` is the coefficient of
``q**i``) of Python ints, so there is no overflow at any genus.

:class:`RatPoly` is a staging type for expressions carrying a factor ``1/2``;
it has to be turned back into a :class:`Poly` with :func:`halve` (or
:meth:`RatPoly.to_integral`) before it leaves a module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Poly",
    "RatPoly",
    "NotDivisible",
    "NotIntegral",
    "Q",
    "ZERO",
    "ONE",
    "add",
    "mul",
    "pow",
    "exact_div",
    "eval",
    "halve",
]

NEG_INF = float("-inf")


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the remainder is nonzero."""

    def __init__(self, dividend: "Poly", divisor: "Poly", remainder: "Poly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"({dividend}) is not divisible by ({divisor}); remainder {remainder}")


class NotIntegral(ArithmeticError):
    """Raised when a rational polynomial has a non-integer coefficient."""

    def __init__(self, value: "RatPoly"):
        self.value = value
        super().__init__(f"rational polynomial {value} has non-integral coefficients")


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _format_terms(coeffs: Sequence, latex: bool) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            if i == 1:
                mono = "q"
            elif latex:
                mono = f"q^{{{i}}}"
            else:
                mono = f"q^{i}"
            if mag == 1:
                body = mono
            elif latex:
                body = f"{mag}{mono}"
            else:
                body = f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f"{sign}{body}" if latex else f" {sign} {body}"
    return out


class Poly:
    """Immutable polynomial in ``q`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for x in c:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"Poly coefficients must be int, got {type(x).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Poly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(int(s) for s in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Poly.const(other)
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return _format_terms(self.coeffs, latex=False)

    def latex(self) -> str:
        return _format_terms(self.coeffs, latex=True)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _long_division(self, d: "Poly") -> tuple["Poly", "Poly"]:
        # Stops early when the leading coefficient of d does not divide; the
        # returned remainder is then nonzero, which is all exact_div needs.
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = d.coeffs
        n = len(dc) - 1
        lead = dc[-1]
        if len(rem) <= n:
            return ZERO, self
        quot = [0] * (len(rem) - n)
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            qk, r = divmod(c, lead)
            if r:
                # over Z the division is not exact at this step
                return Poly(quot), Poly(rem)
            quot[k - n] = qk
            for j in range(n + 1):
                rem[k - n + j] -= qk * dc[j]
        return Poly(quot), Poly(rem)

    def __call__(self, x):
        return eval(self, x)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Poly.const(x)
    return NotImplemented


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def add(p: Poly, r: Poly) -> Poly:
    return p + r


def mul(p: Poly, r: Poly) -> Poly:
    return p * r


def pow(p: Poly, n: int) -> Poly:  # noqa: A001 - mirrors the ring operation name
    return p**n


def exact_div(p: Poly, d: Poly) -> Poly:
    """Return ``s`` with ``s * d == p``; raise :class:`NotDivisible` otherwise."""
    quot, rem = p._long_division(d)
    if rem:
        raise NotDivisible(p, d, rem)
    return quot


def eval(p: Poly, x):  # noqa: A001
    """Horner evaluation of ``p`` at ``x``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


Number = Union[int, Fraction]


class RatPoly:
    """Polynomial with :class:`~fractions.Fraction` coefficients.

    Only used to stage closed forms that contain a literal ``1/2``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> "RatPoly":
        return cls(p.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = RatPoly.from_poly(other)
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]!r})"

    def __str__(self) -> str:
        return _format_terms(self.coeffs, latex=False)

    def _other(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, Poly):
            return RatPoly.from_poly(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatPoly((other,))
        return NotImplemented

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "RatPoly":
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatPoly(c * other for c in self.coeffs)
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatPoly(c / other for c in self.coeffs)
        return NotImplemented

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integral(self) -> Poly:
        if not self.is_integral():
            raise NotIntegral(self)
        return Poly(int(c) for c in self.coeffs)


def halve(p: RatPoly) -> Poly:
    """Return the integral polynomial behind a staged half-integer expression.

    >>> halve(RatPoly.from_poly(Q * 2) / 2)
    Poly([0, 1])
    """
    if isinstance(p, Poly):
        return p
    return p.to_integral()
