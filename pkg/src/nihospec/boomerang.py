"""Feistel boomerang connectivity (p = 2) and second-order zero differential spectra.

Both count zeros of the second-order difference
    F(x+a+b) - F(x+a) - F(x+b) + F(x),   F(x) = x^d,
which in characteristic 2 is the FBCT expression. For a power map the entry
only depends on c = a/b when b != 0, so distributions are built from one
row of p^n counts instead of the full p^{2n} table.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diff import check_exponent
from .errors import OddCharacteristic
from .field import Field
from .runtime import check_budget, chunks, pmap

NAIVE_LIMIT = 1 << 8


def _second_difference(f: Field, F: np.ndarray, x, a, b):
    """F(x+a+b) - F(x+a) - F(x+b) + F(x), broadcasting over array arguments."""
    xa = f.add(x, a)
    xb = f.add(x, b)
    xab = f.add(xa, b)
    return f.add(f.sub(F[xab], F[xa]), f.sub(F[x], F[xb]))


def sozd_entry(f: Field, d: int, a: int, b: int) -> int:
    check_exponent(f, d)
    F = f.pow_table(d)
    return int(np.count_nonzero(_second_difference(f, F, f.elements, a, b) == 0))


def fbct_entry(f: Field, d: int, a: int, b: int) -> int:
    if f.p != 2:
        raise OddCharacteristic("FBCT is defined in characteristic 2; use sozd_entry")
    return sozd_entry(f, d, a, b)


def ratio_counts(f: Field, d: int, workers: int | None = 1) -> np.ndarray:
    """E[c] = #{y : (y+c+1)^d - (y+c)^d - (y+1)^d + y^d = 0}, i.e. the entry at (a, b) = (c, 1)."""
    check_exponent(f, d)
    F = f.pow_table(d)
    y = f.elements

    def block(rows: range) -> np.ndarray:
        cs = f.elements[rows.start : rows.stop]
        vals = _second_difference(f, F, y[None, :], cs[:, None], 1)
        return np.count_nonzero(vals == 0, axis=1)

    return np.concatenate(pmap(block, chunks(f.order, max(1, (workers or 1) * 2)), workers))


@dataclass(frozen=True)
class BoomerangDistribution:
    d: int
    kind: str  # "FBCT" or "SOZD"
    entries: dict[int, int]
    uniformity: int
    convention: str

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.entries.items())

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "kind": self.kind,
            "uniformity": self.uniformity,
            "uniformity_convention": self.convention,
            "distribution": {str(v): k for v, k in self.rows()},
        }


FBCT_CONVENTION = "max over ab(a+b) != 0"
SOZD_CONVENTION_EVEN = "max over a != b, a, b nonzero"
SOZD_CONVENTION_ODD = "max over a, b nonzero"


def _from_ratio_counts(f: Field, d: int, E: np.ndarray, kind: str) -> BoomerangDistribution:
    full = f.order
    mult: dict[int, int] = {}
    if f.p == 2:
        # a = 0, b = 0 or a = b: 3 * 2^n - 2 pairs
        mult[full] = 3 * full - 2
        generic = [c for c in range(2, f.order)]
    else:
        mult[full] = 2 * full - 1  # ab = 0
        generic = list(range(1, f.order))
    for c in generic:
        v = int(E[c])
        mult[v] = mult.get(v, 0) + f.group_order  # b ranges over F*, a = cb
    uniformity = int(max(E[generic])) if generic else 0
    if kind == "FBCT":
        convention = FBCT_CONVENTION
    else:
        convention = SOZD_CONVENTION_EVEN if f.p == 2 else SOZD_CONVENTION_ODD
    return BoomerangDistribution(d, kind, dict(sorted(mult.items())), uniformity, convention)


def full_table(f: Field, d: int, workers: int | None = 1, budget: int | None = None) -> np.ndarray:
    """Naive T[a, b] = #{x : second difference vanishes}; p^{3n} work, small fields only."""
    check_exponent(f, d)
    if f.order > NAIVE_LIMIT:
        raise ValueError(f"naive table limited to fields of order <= {NAIVE_LIMIT}")
    check_budget(f.order**3, budget, "naive boomerang table")
    F = f.pow_table(d)
    x = f.elements

    def row(a: int) -> np.ndarray:
        vals = _second_difference(f, F, x[None, :], a, f.elements[:, None])
        return np.count_nonzero(vals == 0, axis=1)

    return np.stack(pmap(row, range(f.order), workers))


def _naive_distribution(f: Field, d: int, kind: str, workers, budget) -> BoomerangDistribution:
    T = full_table(f, d, workers, budget)
    values, counts = np.unique(T, return_counts=True)
    a = f.elements[:, None]
    b = f.elements[None, :]
    if f.p == 2:
        mask = (a != 0) & (b != 0) & (a != b)
    else:
        mask = (a != 0) & (b != 0)
    uniformity = int(T[mask].max()) if mask.any() else 0
    if kind == "FBCT":
        convention = FBCT_CONVENTION
    else:
        convention = SOZD_CONVENTION_EVEN if f.p == 2 else SOZD_CONVENTION_ODD
    return BoomerangDistribution(
        d, kind, {int(v): int(k) for v, k in zip(values, counts)}, uniformity, convention
    )


def sozd_distribution(
    f: Field, d: int, naive: bool = False, workers: int | None = 1, budget: int | None = None
) -> BoomerangDistribution:
    if naive:
        return _naive_distribution(f, d, "SOZD", workers, budget)
    check_budget(f.order**2, budget, "second-order zero differential distribution")
    return _from_ratio_counts(f, d, ratio_counts(f, d, workers), "SOZD")


def fbct_distribution(
    f: Field, d: int, naive: bool = False, workers: int | None = 1, budget: int | None = None
) -> BoomerangDistribution:
    if f.p != 2:
        raise OddCharacteristic("FBCT is defined in characteristic 2; use sozd_distribution")
    if naive:
        return _naive_distribution(f, d, "FBCT", workers, budget)
    check_budget(f.order**2, budget, "FBCT distribution")
    return _from_ratio_counts(f, d, ratio_counts(f, d, workers), "FBCT")
