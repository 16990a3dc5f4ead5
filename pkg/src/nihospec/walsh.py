"""Exact Walsh values W(u, v) = sum_x zeta^{Tr(u x^d - v x)}, their distribution and power moments.

Every value comes from trace-class counting: c_j(u, v) = #{x : Tr(u x^d - v x) = j}.
No complex floating point is involved anywhere.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .cyclotomic import CyclotomicInteger
from .diff import check_exponent
from .field import Field
from .runtime import check_budget, chunks, pmap


def walsh_value(f: Field, d: int, u: int, v: int) -> CyclotomicInteger:
    check_exponent(f, d)
    F = f.pow_table(d)
    t = f.trace(f.sub(f.mul(u, F), f.mul(v, f.elements)))
    return CyclotomicInteger.from_counts(f.p, np.bincount(t, minlength=f.p))


def _class_counts(G: np.ndarray, H: np.ndarray, p: int) -> np.ndarray:
    """C[i, k, j] = #{x : G[i, x] - H[k, x] = j mod p}.

    Computed as sums of products of 0/1 indicator matrices. float64 matmul is
    exact here because every partial sum is an integer below 2^53.
    """
    out = np.zeros((G.shape[0], H.shape[0], p), dtype=np.int64)
    hot_h = [(H == b).astype(np.float64) for b in range(p)]
    for a in range(p):
        ga = (G == a).astype(np.float64)
        for b in range(p):
            out[:, :, (a - b) % p] += np.rint(ga @ hot_h[b].T).astype(np.int64)
    return out


def walsh_counts(
    f: Field, d: int, us: np.ndarray | None = None, workers: int | None = 1
) -> np.ndarray:
    """Array C[i, v, j] = #{x : Tr(us[i] x^d - v x) = j} for every v in F."""
    check_exponent(f, d)
    us = f.elements if us is None else np.asarray(us, dtype=np.int64)
    F = f.pow_table(d)
    x = f.elements
    H = f.trace(f.mul(x[:, None], x[None, :]))  # H[v, x] = Tr(v x)

    def block(rows: range) -> np.ndarray:
        sel = us[rows.start : rows.stop]
        G = f.trace(f.mul(sel[:, None], F[None, :]))
        return _class_counts(G, H, f.p)

    parts = pmap(block, chunks(len(us), max(1, (workers or 1) * 2)), workers)
    return np.concatenate(parts, axis=0)


def _canonical_rows(counts: np.ndarray, p: int) -> np.ndarray:
    """Flatten trailing class-count axis into canonical basis coefficients."""
    flat = counts.reshape(-1, p)
    if p == 2:
        return (flat[:, 0] - flat[:, 1])[:, None]
    return flat[:, : p - 1] - flat[:, p - 1 : p]


def value_multiset(counts: np.ndarray, p: int) -> dict[CyclotomicInteger, int]:
    coeffs = _canonical_rows(counts, p)
    uniq, mult = np.unique(coeffs, axis=0, return_counts=True)
    values = {CyclotomicInteger(p, tuple(int(c) for c in row)): int(k) for row, k in zip(uniq, mult)}
    return dict(sorted(values.items(), key=lambda kv: kv[0].sort_key()))


@dataclass(frozen=True)
class WalshDistribution:
    """Value multiset of W(u, v) over u != 0; the u = 0 row is kept apart."""

    d: int
    p: int
    order: int
    entries: dict[CyclotomicInteger, int]
    zero_row: dict[int, int] = dc_field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def all_rational(self) -> bool:
        return all(v.is_rational for v in self.entries)

    def as_int_dict(self) -> dict[int, int] | None:
        """{value: multiplicity} when every value is rational, else None."""
        if not self.all_rational:
            return None
        return {v.to_int(): k for v, k in self.entries.items()}

    def value_sum(self) -> CyclotomicInteger:
        acc = CyclotomicInteger.from_int(self.p, 0)
        for v, k in self.entries.items():
            acc = acc + v * k
        return acc

    def rows(self) -> list[tuple[object, int]]:
        return [(v.to_json(), k) for v, k in self.entries.items()]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "distribution": [{"value": v, "multiplicity": k} for v, k in self.rows()],
            "zero_row": [{"value": v, "multiplicity": k} for v, k in sorted(self.zero_row.items())],
        }


def walsh_distribution(
    f: Field, d: int, workers: int | None = 1, budget: int | None = None
) -> WalshDistribution:
    check_exponent(f, d)
    check_budget(f.order**3, budget, "Walsh distribution")
    counts = walsh_counts(f, d, us=f.elements[1:], workers=workers)
    return WalshDistribution(
        d=d,
        p=f.p,
        order=f.order,
        entries=value_multiset(counts, f.p),
        zero_row={f.order: 1, 0: f.order - 1},
    )


def _enumerate_solutions(f: Field, d: int, signs: tuple[int, ...], budget, what: str) -> int:
    """#{(x_1..x_r) : sum s_i x_i = 0 and sum s_i x_i^d = 0}, last variable solved for.

    ``signs`` are +-1 with signs[-1] = +-1; the final variable is determined by
    the linear equation, all others are enumerated (the last two of them as a
    vectorised grid).
    """
    r = len(signs)
    check_budget(f.order ** max(r - 1, 1), budget, what)
    F = f.pow_table(d)
    x = f.elements

    def signed(v, s):
        return v if s == 1 else f.neg(v)

    last = signs[-1]
    if r == 1:
        return int(np.count_nonzero((x == 0) & (F == 0)))
    free = signs[:-1]
    looped, vec = free[:-2], free[-2:]
    total = 0
    for prefix in itertools.product(range(f.order), repeat=len(looped)):
        lin0, pow0 = 0, 0
        for s, xi in zip(looped, prefix):
            lin0 = f.add(lin0, signed(xi, s))
            pow0 = f.add(pow0, signed(int(F[xi]), s))
        if len(vec) == 1:
            lin = f.add(np.full(f.order, lin0), signed(x, vec[0]))
            pw = f.add(np.full(f.order, pow0), signed(F, vec[0]))
        else:
            lin = f.add(f.add(np.full(f.order, lin0), signed(x, vec[0]))[:, None], signed(x, vec[1])[None, :])
            pw = f.add(f.add(np.full(f.order, pow0), signed(F, vec[0]))[:, None], signed(F, vec[1])[None, :])
        # last * x_r = -lin
        xr = f.neg(lin) if last == 1 else lin
        total += int(np.count_nonzero(f.add(pw, signed(F[xr], last)) == 0))
    return total


def count_Nr(f: Field, d: int, r: int, budget: int | None = None) -> int:
    """#{x in F^r : x_1 + ... + x_r = 0, x_1^d + ... + x_r^d = 0}."""
    if r not in (1, 2, 3, 4):
        raise ValueError("r must be in 1..4")
    check_exponent(f, d)
    return _enumerate_solutions(f, d, (1,) * r, budget, f"N_{r}")


def count_M(f: Field, d: int, budget: int | None = None) -> int:
    """#{x in F^4 : x_1 - x_2 + x_3 - x_4 = 0, x_1^d - x_2^d + x_3^d - x_4^d = 0}."""
    check_exponent(f, d)
    return _enumerate_solutions(f, d, (1, -1, 1, -1), budget, "M")


@dataclass(frozen=True)
class MomentReport:
    r: int
    lhs: CyclotomicInteger
    N_r: int
    rhs: int
    match: bool

    def to_json(self) -> dict:
        return {"r": self.r, "lhs": self.lhs.to_json(), "N_r": self.N_r, "rhs": self.rhs, "match": self.match}


def power_sum(values: dict[CyclotomicInteger, int], r: int, p: int) -> CyclotomicInteger:
    acc = CyclotomicInteger.from_int(p, 0)
    for v, k in values.items():
        acc = acc + (v**r) * k
    return acc


def moment(
    f: Field,
    d: int,
    r: int,
    workers: int | None = 1,
    budget: int | None = None,
    all_values: dict[CyclotomicInteger, int] | None = None,
) -> MomentReport:
    """Compare sum over all (u, v) in F^2 of W^r with p^{2n} N_r."""
    if all_values is None:
        check_budget(f.order**3, budget, "Walsh moment")
        all_values = value_multiset(walsh_counts(f, d, workers=workers), f.p)
    lhs = power_sum(all_values, r, f.p)
    n_r = count_Nr(f, d, r, budget=budget)
    rhs = f.order**2 * n_r
    return MomentReport(r=r, lhs=lhs, N_r=n_r, rhs=rhs, match=lhs.is_rational and lhs.to_int() == rhs)


def moments(
    f: Field, d: int, rs=(1, 2, 3, 4), workers: int | None = 1, budget: int | None = None
) -> list[MomentReport]:
    check_budget(f.order**3, budget, "Walsh moments")
    values = value_multiset(walsh_counts(f, d, workers=workers), f.p)
    return [moment(f, d, r, budget=budget, all_values=values) for r in rs]
