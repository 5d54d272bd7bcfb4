"""Exact integer polynomials and the falling-factorial bases.

Coefficients are stored ascending by degree with trailing zeros stripped,
so the zero polynomial is the empty tuple and equality is structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadIndex

__all__ = ["IntPolynomial", "ZERO", "ONE", "X", "monomial", "falling_factorial"]


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a))
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise BadIndex("negative polynomial power")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                parts.append(var if c == 1 else f"-{var}" if c == -1 else f"{c}{var}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def monomial(k: int) -> IntPolynomial:
    if k < 0:
        raise BadIndex("negative monomial degree")
    return IntPolynomial((0,) * k + (1,))


def _product(roots: Iterable[int]) -> IntPolynomial:
    result = ONE
    for c in roots:
        result = result * IntPolynomial((-c, 1))
    return result


def falling_factorial(
    kind: str, k: int, n: int | None = None, m: int | None = None
) -> IntPolynomial:
    """Degree-k basis polynomial for the requested kind.

    classical: x(x-1)...(x-k+1).  B: (x-1)(x-3)...(x-2k+1).  D: as B for
    k < n, while k = n swaps the last factor (x-2n+1) for (x-n+1); needs
    n and 0 <= k <= n.  G: (x-1)(x-1-m)...(x-1-(k-1)m); needs m >= 1.
    Every kind gives 1 at k = 0.
    """
    if k < 0:
        raise BadIndex("negative falling factorial index")
    if kind == "classical":
        return _product(range(k))
    if kind == "B":
        return _product(2 * i - 1 for i in range(1, k + 1))
    if kind == "D":
        if n is None:
            raise BadIndex("kind D needs n")
        if k > n:
            raise BadIndex(f"kind D is only defined for k <= n, got k={k} n={n}")
        if k < n or n == 0:
            return _product(2 * i - 1 for i in range(1, k + 1))
        return _product(2 * i - 1 for i in range(1, n)) * IntPolynomial(
            (-(n - 1), 1)
        )
    if kind == "G":
        if m is None or m < 1:
            raise BadIndex("kind G needs m >= 1")
        return _product(1 + i * m for i in range(k))
    raise ValueError(f"unknown falling factorial kind {kind!r}")
