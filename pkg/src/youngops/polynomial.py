"""Dense univariate polynomials with exact rational coefficients.

Used for trace polynomials in the tensor-space parameter N: taking the
trace of a permutation operator on (C^N)^(x n) gives N**cycles, so traces
of group-algebra elements are polynomials in N with Fraction coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Polynomial:
    """Immutable polynomial sum(c[k] * N**k), coefficients little-endian."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] += c
        return Polynomial(cs)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-other if isinstance(other, Polynomial) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return Polynomial(cs)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Polynomial":
        d = _as_fraction(other)
        return Polynomial([c / d for c in self.coeffs])

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at a concrete value (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                mono = "N" if k == 1 else f"N^{k}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    # -- JSON wire format -------------------------------------------------

    def to_dict(self) -> dict:
        """{"coeffs": {"<degree>": "<p/q>", ...}}; the constant term is
        always present so the zero polynomial serializes non-emptily."""
        coeffs = {"0": str(self.coeffs[0] if self.coeffs else Fraction(0))}
        for k, c in enumerate(self.coeffs):
            if k > 0 and c != 0:
                coeffs[str(k)] = str(c)
        return {"coeffs": coeffs}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Polynomial":
        raw = data["coeffs"]
        if not raw:
            return cls()
        degree = max(int(k) for k in raw)
        cs = [Fraction(0)] * (degree + 1)
        for k, v in raw.items():
            cs[int(k)] = Fraction(v)
        return cls(cs)
