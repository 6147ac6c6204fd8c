import pytest
import sympy as sp

from charvar.polyring import Poly

q = sp.symbols("q")
half = sp.Rational(1, 2)

_acceptance_lines: list[str] = []


def to_sympy(p: Poly):
    return sum((c * q**i for i, c in enumerate(p.coeffs)), sp.Integer(0))


def from_sympy(expr) -> Poly:
    expr = sp.expand(expr)
    if expr == 0:
        return Poly()
    coeffs = sp.Poly(expr, q).all_coeffs()
    for c in coeffs:
        assert c.is_integer, f"non-integral coefficient {c}"
    return Poly(int(c) for c in reversed(coeffs))


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, text: str) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
        print(line)
        _acceptance_lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
