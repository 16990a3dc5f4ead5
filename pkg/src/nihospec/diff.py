"""Derivative counts, differential spectrum and the locally-APN predicate for x^d."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadExponent, NonIntegralRatio
from .field import Field


def check_exponent(f: Field, d: int) -> None:
    # d = p^n - 1 is admitted: it is what a Niho residue normalises to when
    # s(p^m - 1) + 1 is a multiple of p^n - 1 (only possible over F_4)
    if not 1 <= d <= f.group_order:
        raise BadExponent(f"exponent {d} outside [1, {f.group_order}]")


def delta_counts(f: Field, d: int) -> np.ndarray:
    """Dense array D with D[b] = #{x : (x+1)^d - x^d = b}."""
    check_exponent(f, d)
    F = f.pow_table(d)
    x = f.elements
    b = f.sub(F[f.add(x, 1)], F)
    return np.bincount(b, minlength=f.order)


def ddt_entry(f: Field, d: int, a: int, b: int, row: np.ndarray | None = None) -> int:
    """Delta_F(a, b) recovered from the a = 1 row via Delta(a, b) = Delta(1, b / a^d)."""
    if a == 0:
        return f.order if b == 0 else 0
    row = delta_counts(f, d) if row is None else row
    return int(row[f.div(b, f.power(a, d))])


@dataclass(frozen=True)
class DifferentialSpectrum:
    d: int
    counts: dict[int, int]
    uniformity: int
    locally_apn: bool
    max_outside_prime_field: int

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "uniformity": self.uniformity,
            "locally_apn": self.locally_apn,
            "max_outside_prime_field": self.max_outside_prime_field,
            "spectrum": {str(i): w for i, w in sorted(self.counts.items())},
        }

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def spectrum_from_counts(f: Field, d: int, row: np.ndarray) -> DifferentialSpectrum:
    values, mult = np.unique(row, return_counts=True)
    counts = {int(i): int(w) for i, w in zip(values, mult)}
    # constants 0 .. p-1 are exactly the reps of the prime field
    outside = int(row[f.p :].max())
    return DifferentialSpectrum(
        d=d,
        counts=counts,
        uniformity=int(row.max()),
        locally_apn=outside == 2,
        max_outside_prime_field=outside,
    )


def differential_spectrum(f: Field, d: int) -> DifferentialSpectrum:
    return spectrum_from_counts(f, d, delta_counts(f, d))


def second_moment_check(f: Field, d: int, spectrum: DifferentialSpectrum, M: int) -> bool:
    """Check sum_i i^2 w_i == (M - p^{2n}) / (p^n - 1) in exact integers."""
    num = M - f.order**2
    if num % f.group_order:
        raise NonIntegralRatio(f"{f.group_order} does not divide M - p^2n = {num}")
    lhs = sum(i * i * w for i, w in spectrum.counts.items())
    return lhs == num // f.group_order
