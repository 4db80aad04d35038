"""Dense integer polynomials in one variable ``z``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == _trim(other)
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def negate_variable(self) -> "IntPolynomial":
        """p(-z)."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def div_one_minus_z(self) -> "IntPolynomial":
        """Exact quotient by (1 - z); raises InexactDivision on a remainder."""
        # p = (1 - z) q  =>  q_i = sum_{k <= i} p_k, and the full sum must be 0
        if not self:
            return IntPolynomial()
        q, acc = [], 0
        for c in self.coeffs:
            acc += c
            q.append(acc)
        if q[-1] != 0:
            raise InexactDivision(f"{self} is not divisible by 1 - z (p(1) = {q[-1]})")
        return IntPolynomial(q[:-1])

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return render(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def render(coeffs: Sequence[int], var: str = "z") -> str:
    """Ascending signed form, e.g. ``1 - 10z + 8z^2 - z^3 - z^4``."""
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if i == 1 else f"^{i}")
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
