"""Representation-ring valued polynomials and the e-maps of punctured lines.

``R(Z2)[q]`` elements are written ``t*T + n*N``; ``R(Z2 x Z2)[q]`` elements
are written ``t*T + s2*S2 + sm2*S-2 + s0*S0`` where ``S0 = S2 (x) S-2``.
Coefficients may be negative (virtual representations).

Which punctured line a representation lives over is a calling convention,
not part of the value: use :func:`e_over_three_punctures` for the base
``C - {0, 1, -1}`` and :func:`e_over_two_punctures` /
:func:`e_plus_minus_klein4` for ``C - {2, -2}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import ONE, Q, ZERO, Poly

__all__ = [
    "Z2Rep",
    "Klein4Rep",
    "tensor_z2",
    "tensor_klein4",
    "pushforward_to_z2",
    "lift_to_double_cover",
    "e_over_three_punctures",
    "e_over_two_punctures",
    "e_plus_minus_klein4",
    "e_fibration_generic",
]


def _p(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


@dataclass(frozen=True)
class Z2Rep:
    t: Poly = ZERO
    n: Poly = ZERO

    def __post_init__(self):
        object.__setattr__(self, "t", _p(self.t))
        object.__setattr__(self, "n", _p(self.n))

    def __add__(self, other: "Z2Rep") -> "Z2Rep":
        return Z2Rep(self.t + other.t, self.n + other.n)

    def __sub__(self, other: "Z2Rep") -> "Z2Rep":
        return Z2Rep(self.t - other.t, self.n - other.n)

    def __neg__(self) -> "Z2Rep":
        return Z2Rep(-self.t, -self.n)

    def scale(self, p) -> "Z2Rep":
        p = _p(p)
        return Z2Rep(self.t * p, self.n * p)

    def __mul__(self, other):
        if isinstance(other, Z2Rep):
            return tensor_z2(self, other)
        if isinstance(other, (Poly, int)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    @property
    def dimension(self) -> Poly:
        """Sum of the coefficients: the E-polynomial of the fibre."""
        return self.t + self.n

    def to_json(self) -> dict:
        return {"T": self.t.to_json(), "N": self.n.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "Z2Rep":
        return cls(Poly.from_json(data["T"]), Poly.from_json(data["N"]))

    def __str__(self) -> str:
        return f"({self.t})T + ({self.n})N"


@dataclass(frozen=True)
class Klein4Rep:
    t: Poly = ZERO
    s2: Poly = ZERO
    sm2: Poly = ZERO
    s0: Poly = ZERO

    def __post_init__(self):
        for name in ("t", "s2", "sm2", "s0"):
            object.__setattr__(self, name, _p(getattr(self, name)))

    def __add__(self, other: "Klein4Rep") -> "Klein4Rep":
        return Klein4Rep(self.t + other.t, self.s2 + other.s2, self.sm2 + other.sm2, self.s0 + other.s0)

    def __sub__(self, other: "Klein4Rep") -> "Klein4Rep":
        return Klein4Rep(self.t - other.t, self.s2 - other.s2, self.sm2 - other.sm2, self.s0 - other.s0)

    def scale(self, p) -> "Klein4Rep":
        p = _p(p)
        return Klein4Rep(self.t * p, self.s2 * p, self.sm2 * p, self.s0 * p)

    def __mul__(self, other):
        if isinstance(other, Klein4Rep):
            return tensor_klein4(self, other)
        if isinstance(other, (Poly, int)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "T": self.t.to_json(),
            "S2": self.s2.to_json(),
            "Sm2": self.sm2.to_json(),
            "S0": self.s0.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Klein4Rep":
        return cls(*(Poly.from_json(data[k]) for k in ("T", "S2", "Sm2", "S0")))

    def __str__(self) -> str:
        return f"({self.t})T + ({self.s2})S2 + ({self.sm2})S-2 + ({self.s0})S0"


T = Z2Rep(ONE, ZERO)
N = Z2Rep(ZERO, ONE)


def tensor_z2(x: Z2Rep, y: Z2Rep) -> Z2Rep:
    """Product in ``R(Z2)[q]``, using ``N (x) N = T``."""
    return Z2Rep(x.t * y.t + x.n * y.n, x.t * y.n + x.n * y.t)


# Characters of Z2 x Z2 as sign pairs; S0 is the product character.
_K4_INDEX = {"t": (0, 0), "s2": (1, 0), "sm2": (0, 1), "s0": (1, 1)}
_K4_NAME = {v: k for k, v in _K4_INDEX.items()}


def tensor_klein4(x: Klein4Rep, y: Klein4Rep) -> Klein4Rep:
    """Product in ``R(Z2 x Z2)[q]`` from the character table of the Klein group."""
    acc = {name: ZERO for name in _K4_INDEX}
    for a, (a1, a2) in _K4_INDEX.items():
        xa = getattr(x, a)
        if not xa:
            continue
        for b, (b1, b2) in _K4_INDEX.items():
            yb = getattr(y, b)
            if not yb:
                continue
            target = _K4_NAME[((a1 + b1) % 2, (a2 + b2) % 2)]
            acc[target] = acc[target] + xa * yb
    return Klein4Rep(**acc)


def pushforward_to_z2(x: Klein4Rep) -> Z2Rep:
    """Restrict a ``Z2 x Z2`` monodromy to the ``Z2`` seen over ``C - {0, 1, -1}``.

    ``T`` and ``S0`` become trivial, ``S2`` and ``S-2`` become ``N``.
    """
    return Z2Rep(x.t + x.s0, x.s2 + x.sm2)


def lift_to_double_cover(x: Z2Rep) -> Z2Rep:
    """Monodromy over ``C - {0, 1, -1}`` of the pullback of ``x`` along ``l -> l + 1/l``.

    The covering group acts trivially upstairs, so ``tT + nN`` becomes ``(t+n)T``.
    """
    return Z2Rep(x.t + x.n, ZERO)


def e_over_three_punctures(x: Z2Rep) -> Poly:
    """E-polynomial of a total space over ``C - {0, 1, -1}``: ``e(T) = q-3``, ``e(N) = -2``."""
    return (Q - 3) * x.t - 2 * x.n


def e_over_two_punctures(x: Z2Rep) -> Poly:
    """E-polynomial of a total space over ``C - {2, -2}``: ``e(T) = q-2``, ``e(N) = -1``."""
    return (Q - 2) * x.t - x.n


def e_plus_minus_klein4(x: Klein4Rep) -> tuple[Poly, Poly]:
    """Invariant and anti-invariant E-polynomials of the double cover.

    ``x`` is the Hodge monodromy of the quotient fibration over ``C - {2, -2}``.
    Returns ``(e+, e-)``; their sum is ``e_over_three_punctures(pushforward_to_z2(x))``.
    """
    plus = (Q - 2) * x.t - (x.s2 + x.sm2 + x.s0)
    minus = (Q - 2) * x.s0 - (x.t + x.s2 + x.sm2)
    return plus, minus


def e_fibration_generic(invariant_part: Poly, total: Poly, num_punctures: int) -> Poly:
    """E-polynomial over ``C`` minus ``num_punctures`` points with finite monodromy.

    ``(q - l) * inv - (l - 1) * (total - inv)``, written as
    ``(q - 1) * inv - (l - 1) * total``.
    """
    if num_punctures < 0:
        raise ValueError("number of punctures must be non-negative")
    return (Q - 1) * invariant_part - (num_punctures - 1) * total
