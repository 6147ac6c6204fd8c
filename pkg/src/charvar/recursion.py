"""Genus induction: ``v^g = M v^(g-1)`` and its closed-form solution.

The vector ``v^g = (e0, e1, e2, e3, a, b)`` collects the E-polynomials of the
genus-``g`` representation spaces with fixed commutator ``Id, -Id, J+, J-``
and the Hodge monodromy ``aT + bN`` of the diagonalizable family over
``C - {2, -2}``.  ``v^0 = (1, 0, 0, 0, 0, 0)``.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .polyring import ONE, Q, ZERO, NotDivisible, Poly, RatPoly, exact_div, halve
from .repring import Z2Rep, e_over_three_punctures, e_over_two_punctures, lift_to_double_cover
from .report import Report

PGL = Q**3 - Q
HALF = Fraction(1, 2)
GLUE_SPACES = ("Z0", "Z1", "Z2", "Z3", "Z4")

# Left eigenvector of M for (q^3-q)^2: the weights with which the six
# components add up to e(PGL(2,C)^(2g)).
GRAND_SUM_WEIGHTS = (ONE, ONE, Q**2 - 1, Q**2 - 1, Q**3 - 2 * Q**2 - Q, -2 * Q)
GRAND_SUM_ANCHOR = "e0 + e1 + (q^2-1)(e2+e3) + (q^3-2q^2-q)a - 2q b = (q^3-q)^(2g)"


class InvariantViolation(ArithmeticError):
    """A genus vector broke a divisibility or sum identity."""


@dataclass(frozen=True)
class GenusVector:
    e0: Poly
    e1: Poly
    e2: Poly
    e3: Poly
    a: Poly
    b: Poly
    genus: int

    @classmethod
    def seed(cls) -> "GenusVector":
        return cls(ONE, ZERO, ZERO, ZERO, ZERO, ZERO, 0)

    @classmethod
    def from_tuple(cls, comps: Sequence[Poly], genus: int) -> "GenusVector":
        return cls(*comps, genus=genus)

    def as_tuple(self) -> tuple[Poly, ...]:
        return (self.e0, self.e1, self.e2, self.e3, self.a, self.b)

    def hodge_monodromy(self) -> Z2Rep:
        return Z2Rep(self.a, self.b)

    def grand_sum(self) -> Poly:
        return sum((w * x for w, x in zip(GRAND_SUM_WEIGHTS, self.as_tuple())), ZERO)

    def violations(self) -> list[str]:
        out = []
        for label, num, den in (
            ("e1 / (q^3-q)", self.e1, PGL),
            ("e2 / q", self.e2, Q),
            ("e3 / q", self.e3, Q),
            ("(a+b) / (q-1)", self.a + self.b, Q - 1),
        ):
            try:
                exact_div(num, den)
            except NotDivisible as exc:
                out.append(f"{label} leaves remainder {exc.remainder}")
        if self.grand_sum() != PGL ** (2 * self.genus):
            out.append(f"grand sum {self.grand_sum()} != (q^3-q)^{2 * self.genus}")
        return out

    def assert_invariants(self) -> "GenusVector":
        bad = self.violations()
        if bad:
            raise InvariantViolation(f"genus {self.genus}: " + "; ".join(bad))
        return self

    def to_json(self) -> dict:
        out = {f.name: getattr(self, f.name).to_json() for f in fields(self) if f.name != "genus"}
        out["genus"] = self.genus
        return out


class PolyMatrix:
    """Square matrix over ``Z[q]``; the recursion only uses the 6x6 case."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]):
        entries = tuple(tuple(x if isinstance(x, Poly) else Poly.const(x) for x in row) for row in rows)
        n = len(entries)
        if any(len(r) != n for r in entries):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def diagonal(cls, diag: Sequence[Poly]) -> "PolyMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.size
        cols = list(zip(*other.entries))
        return PolyMatrix([[_dot(self.entries[i], cols[j]) for j in range(n)] for i in range(n)])

    def matvec(self, v: Sequence[Poly]) -> tuple[Poly, ...]:
        return tuple(_dot(row, v) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def with_entry(self, i: int, j: int, value: Poly) -> "PolyMatrix":
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return PolyMatrix(rows)

    def det(self) -> Poly:
        """Fraction-free Bareiss elimination; every division is exact."""
        a = [list(r) for r in self.entries]
        n = self.size
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if a[k][k].is_zero():
                swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
                if swap is None:
                    return ZERO
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            prev = a[k][k]
        return a[n - 1][n - 1] * sign


def _dot(row: Sequence[Poly], col: Sequence[Poly]) -> Poly:
    acc = ZERO
    for x, y in zip(row, col):
        if x and y:
            acc = acc + x * y
    return acc


def matrix_M(perturb: Optional[tuple[int, int]] = None) -> PolyMatrix:
    """The recursion matrix; ``perturb=(i, j)`` adds 1 to one entry (0-based)."""
    q = Q
    m = PolyMatrix(
        [
            [q**4 + q**3 - q**2 - q, q**3 - q, q**5 - 2 * q**4 - q**3 + 2 * q**2, q**5 - q**3,
             q**6 - 2 * q**5 - q**4 + 2 * q, -2 * q**4 - q**3 + 2 * q**2 + q],
            [q**3 - q, q**4 + q**3 - q**2 - q, q**5 - q**3, q**5 - 2 * q**4 - q**3 + 2 * q**2,
             q**6 - 2 * q**5 - q**4 + 2 * q, -2 * q**4 - q**3 + 2 * q**2 + q],
            [q**3 - 2 * q**2, q**3, q**5 + q**4 - 3 * q**3 + 3 * q**2, q**5 - 3 * q**3,
             q**6 - 2 * q**5 - 3 * q**4 + 4 * q**3, -2 * q**4 + 2 * q**3],
            [q**3, q**3 - 2 * q**2, q**5 - 3 * q**3, q**5 + q**4 - 3 * q**3 + 3 * q**2,
             q**6 - 2 * q**5 - 3 * q**4 + 4 * q**3, -2 * q**4 + 2 * q**3],
            [q**3, q**3, q**5 - 3 * q**3, q**5 - 3 * q**3,
             q**6 - 2 * q**5 - 2 * q**4 + 4 * q**3 + q**2, -2 * q**4],
            [-ONE, -ONE, 2 * q**2, 2 * q**2, -4 * q**2 + 2, q**4 - 2 * q**2 + 2 * q + 1],
        ]
    )  # fmt: skip
    if perturb is not None:
        i, j = perturb
        m = m.with_entry(i, j, m[i, j] + 1)
    return m


def matrices_P_D() -> tuple[PolyMatrix, PolyMatrix]:
    """Eigenvector matrix ``P`` and diagonal ``D`` with ``M P = P D``."""
    q = Q
    p = PolyMatrix(
        [
            [-(q**2 - 2 * q - 3), -(q + 1), -((q - 1) ** 2), q - 1, q, ONE],
            [ZERO, q + 1, ZERO, -(q - 1), q, ONE],
            [-(q - 3), -ONE, q - 1, -ONE, ZERO, ONE],
            [ZERO, ONE, ZERO, ONE, ZERO, ONE],
            [ONE, ZERO, -ONE, ZERO, ZERO, ONE],
            [ONE, ZERO, ONE, ZERO, ONE, ZERO],
        ]
    )
    d = PolyMatrix.diagonal(
        [(q**2 - q) ** 2, (q**2 - q) ** 2, (q**2 + q) ** 2, (q**2 + q) ** 2, (q**2 - 1) ** 2, (q**3 - q) ** 2]
    )
    return p, d


def step(v: GenusVector, M: Optional[PolyMatrix] = None) -> GenusVector:
    """One genus step; the result's invariants are checked."""
    M = matrix_M() if M is None else M
    return GenusVector.from_tuple(M.matvec(v.as_tuple()), v.genus + 1).assert_invariants()


_cache: list[GenusVector] = [GenusVector.seed()]
_cache_lock = threading.Lock()


def iterate(g: int, M: Optional[PolyMatrix] = None) -> list[GenusVector]:
    """``[v^0, ..., v^g]`` by repeated :func:`step`.  The default-matrix run is cached."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if M is not None:
        out = [GenusVector.seed()]
        for _ in range(g):
            out.append(step(out[-1], M))
        return out
    with _cache_lock:
        while len(_cache) <= g:
            _cache.append(step(_cache[-1]))
        return _cache[: g + 1]


def genus_vector(g: int) -> GenusVector:
    return iterate(g)[g]


def closed_form(g: int) -> GenusVector:
    if g < 1:
        raise ValueError("closed forms need g >= 1")
    n = 2 * g - 1
    x = RatPoly.from_poly((Q**2 - Q) ** n)
    y = RatPoly.from_poly((Q**2 + Q) ** n)
    c = (Q**3 - Q) ** n
    s = (Q**2 - 1) ** n
    q = RatPoly.from_poly(Q)
    e0 = halve(c + Q * s + (q * (q - 1) * y + (q - 2) * (q + 1) * x) * HALF)
    e1 = halve(c + Q * s - ((q - 1) * y + (q + 1) * x) * HALF)
    e2 = halve(c + (-q * y + (q - 2) * x) * HALF)
    e3 = halve(c + (y - x) * HALF)
    a = halve(c + (y - x) * HALF)
    b = halve(s - (y + x) * HALF)
    return GenusVector(e0, e1, e2, e3, a, b, g).assert_invariants()


def _zq(v: GenusVector) -> Poly:
    # E-polynomial of the diagonalizable family over C - {2, -2}
    return e_over_two_punctures(v.hodge_monodromy())


def gluing_epoly(vk: GenusVector, vh: GenusVector, which: str) -> Poly:
    """Assemble a genus ``k+h`` component from genus ``k`` and genus ``h`` data.

    ``which`` is one of ``Z0, Z1, Z2, Z3`` (returning ``e0 .. e3``) or ``Z4``,
    which returns the fibre polynomial ``a + b`` of the diagonalizable family.
    """
    if which not in GLUE_SPACES:
        raise ValueError(f"unknown space {which!r}")
    k, h = vk, vh
    big_a = k.a * h.a + k.b * h.b
    big_b = k.a * h.b + k.b * h.a
    w4 = (Q**3 - 2 * Q**2 - Q) * big_a - 2 * Q * big_b
    if which == "Z0":
        return k.e0 * h.e0 + k.e1 * h.e1 + (Q**2 - 1) * (k.e2 * h.e2 + k.e3 * h.e3) + w4
    if which == "Z1":
        return k.e0 * h.e1 + k.e1 * h.e0 + (Q**2 - 1) * (k.e2 * h.e3 + k.e3 * h.e2) + w4

    mid_k = k.e2 + k.e3 + _zq(k)
    mid_h = h.e2 + h.e3 + _zq(h)
    v5_rep = Z2Rep(big_a, big_b)
    v5 = Q * (e_over_three_punctures(lift_to_double_cover(v5_rep)) - e_over_two_punctures(v5_rep))
    if which == "Z2":
        pure = k.e2 * h.e0 + k.e0 * h.e2 - 2 * k.e2 * h.e2 + k.e3 * h.e1 + k.e1 * h.e3 - 2 * k.e3 * h.e3
        return pure + Q * mid_k * mid_h + v5
    if which == "Z3":
        pure = k.e2 * h.e1 + k.e0 * h.e3 - 2 * k.e2 * h.e3 + k.e3 * h.e0 + k.e1 * h.e2 - 2 * k.e3 * h.e2
        return pure + Q * mid_k * mid_h + v5
    lam_k = k.a + k.b
    lam_h = h.a + h.b
    rest_k = k.e0 + k.e1 + (Q - 1) * (k.e2 + k.e3)
    rest_h = h.e0 + h.e1 + (Q - 1) * (h.e2 + h.e3)
    return (Q - 1) * mid_k * mid_h + rest_k * lam_h + rest_h * lam_k + Q * (Q - 5) * lam_k * lam_h


def _glued_target(v: GenusVector, which: str) -> Poly:
    if which == "Z4":
        return v.a + v.b
    return getattr(v, "e" + which[1])


def _genus_checks(g: int, vectors: Sequence[GenusVector], glue_splits: bool) -> list[tuple[str, str, Callable]]:
    v = vectors[g]
    checks: list[tuple[str, str, Callable]] = [
        (f"recursion: M^g v0 = closed form (g={g})", "v^g = M v^(g-1) = closed forms", lambda: v == closed_form(g)),
        (f"recursion: e3 = a (g={g})", "e3^g = a^g", lambda: v.e3 == v.a),
        (f"recursion: grand sum (g={g})", GRAND_SUM_ANCHOR, lambda: v.grand_sum() == PGL ** (2 * g)),
    ]

    def divisibility():
        bad = v.violations()
        return (not bad, "; ".join(bad))

    checks.append((f"recursion: divisibility invariants (g={g})", "exact stabilizer divisions", divisibility))
    if g >= 2:
        splits = range(1, g) if glue_splits else (g - 1,)
        for which in GLUE_SPACES:

            def glue(which=which):
                bad = [kk for kk in splits if gluing_epoly(vectors[kk], vectors[g - kk], which) != _glued_target(v, which)]
                return (not bad, f"failing splits k = {bad}" if bad else "")

            anchor = "prod_(i<=k+h)[A_i,B_i] = C  <=>  prod_(i<=k)[A_i,B_i] = C prod_(i<=h)[B_(k+i),A_(k+i)]"
            checks.append((f"recursion: gluing {which} (g={g})", anchor, glue))
    return checks


def verify_recursion(
    g_max: int, M: Optional[PolyMatrix] = None, workers: Optional[int] = None, glue_splits: bool = True
) -> Report:
    if g_max < 1:
        raise ValueError("g_max must be >= 1")
    report = Report()
    M = matrix_M() if M is None else M
    p, d = matrices_P_D()
    report.add("recursion: M P = P D", "M = P D P^(-1)", (M @ p - p @ d).is_zero())
    det_p = p.det()
    report.add("recursion: det P != 0", "det P = 4q^2(q-1)(q+1)", not det_p.is_zero(), f"det P = {det_p}")

    from .genus1 import blocks

    blk = blocks()
    seed = GenusVector(blk.e0, blk.e1, blk.e2, blk.e3, blk.hm_z4bar_quot.t, blk.hm_z4bar_quot.n, 1)
    report.add(
        "recursion: M v0 = genus-one blocks",
        "v^1 = M v^0 = (q^4+q^3-q^2-q, q^3-q, q^3-2q^2, q^3, q^3, -1)",
        M.matvec(GenusVector.seed().as_tuple()) == seed.as_tuple(),
    )

    try:
        vectors = iterate(g_max, None if M == matrix_M() else M)
    except InvariantViolation as exc:
        report.add("recursion: invariants along the iteration", "exact stabilizer divisions", False, str(exc))
        vectors = _unchecked_iterate(g_max, M)

    tasks = [t for g in range(1, g_max + 1) for t in _genus_checks(g, vectors, glue_splits)]

    def run(task):
        return task[0], task[1], _evaluate(task[2])

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    for name, anchor, (ok, detail) in results:
        report.add(name, anchor, ok, detail)
    return report


def _evaluate(fn: Callable) -> tuple[bool, str]:
    try:
        out = fn()
    except ArithmeticError as exc:
        return False, f"{type(exc).__name__}: {exc}"
    if isinstance(out, tuple):
        return bool(out[0]), out[1]
    return bool(out), ""


def _unchecked_iterate(g: int, M: PolyMatrix) -> list[GenusVector]:
    out = [GenusVector.seed()]
    for _ in range(g):
        out.append(GenusVector.from_tuple(M.matvec(out[-1].as_tuple()), out[-1].genus + 1))
    return out
