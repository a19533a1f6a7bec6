"""Dense integer polynomials in the single variable ``n``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class Polynomial:
    """Integer coefficients in ascending degree; the zero polynomial is ``()``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = tuple(coeffs)
        if any(not isinstance(c, int) for c in coeffs):
            raise TypeError("polynomial coefficients must be integers")
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def n_minus(cls, t: int) -> Polynomial:
        """The linear polynomial ``n - t``."""
        return cls((-t, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    res[i + j] += x * y
        return Polynomial(res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "n" if d == 1 else f"n^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def falling(base: Polynomial, k: int) -> Polynomial:
    """``base * (base - 1) * ... * (base - k + 1)``."""
    result = Polynomial.constant(1)
    for i in range(k):
        result = result * (base - i)
    return result
