"""Exact arithmetic in Z[zeta_p].

Values are stored in the basis 1, zeta, ..., zeta^{p-2}; zeta^{p-1} is
eliminated through 1 + zeta + ... + zeta^{p-1} = 0, which makes the
coefficient vector a unique normal form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class CyclotomicInteger:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != max(self.p - 1, 1):
            raise ValueError(f"expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_int(cls, p: int, k: int) -> "CyclotomicInteger":
        return cls(p, (int(k),) + (0,) * (max(p - 1, 1) - 1))

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CyclotomicInteger":
        """sum_j counts[j] * zeta^j for j in [0, p)."""
        if len(counts) != p:
            raise ValueError("need one count per residue class")
        if p == 2:
            return cls(2, (int(counts[0]) - int(counts[1]),))
        top = int(counts[p - 1])
        return cls(p, tuple(int(c) - top for c in counts[: p - 1]))

    def _full(self) -> list[int]:
        # length-p vector, zeta^{p-1} coefficient zero
        if self.p == 2:
            return [self.coeffs[0], 0]
        return list(self.coeffs) + [0]

    @classmethod
    def _reduce(cls, p: int, full: list[int]) -> "CyclotomicInteger":
        return cls.from_counts(p, full)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def _check(self, other: "CyclotomicInteger") -> None:
        if self.p != other.p:
            raise ValueError("mixed cyclotomic fields")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        self._check(other)
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.p, tuple(other * a for a in self.coeffs))
        self._check(other)
        p = self.p
        a, b = self._full(), other._full()
        out = [0] * p
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[(i + j) % p] += ai * bj
        return self._reduce(p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = CyclotomicInteger.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sort_key(self) -> tuple:
        """Rational values first in ascending order, then the rest by coefficient vector."""
        if self.is_rational:
            return (0, self.coeffs[0], ())
        return (1, 0, self.coeffs)

    def to_json(self):
        if self.is_rational:
            return self.coeffs[0]
        return {"coeffs": list(self.coeffs), "rational": False}

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coeffs[0])
        terms = [f"{c}*z^{j}" if j else str(c) for j, c in enumerate(self.coeffs) if c]
        return "(" + " + ".join(terms) + ")"
