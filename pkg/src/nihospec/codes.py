"""Weight distribution of the cyclic code C_{1,d} = {(Tr(u psi^{id} + v psi^i))_i : u, v in F}."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diff import check_exponent
from .field import Field
from .runtime import check_budget, chunks, pmap
from .walsh import WalshDistribution


def codeword(f: Field, d: int, u: int, v: int) -> np.ndarray:
    """Coordinates Tr(u psi^{id} + v psi^i) for i = 0 .. p^n - 2."""
    check_exponent(f, d)
    i = np.arange(f.group_order, dtype=np.int64)
    pts = f.exp(i)
    return f.trace(f.add(f.mul(u, f.exp(i * d)), f.mul(v, pts)))


def codeword_weight(f: Field, d: int, u: int, v: int) -> int:
    return int(np.count_nonzero(codeword(f, d, u, v)))


def weight_from_walsh(f: Field, walsh: int) -> int:
    """Hamming weight of c_{u,v} from a rational W(u, -v)."""
    num = (f.p - 1) * walsh
    if num % f.p:
        raise ValueError(f"(p-1) W / p is not integral for W = {walsh}")
    return f.order // f.p * (f.p - 1) - num // f.p


@dataclass(frozen=True)
class WeightDistribution:
    d: int
    length: int
    weights: dict[int, int]
    distinct_codewords: int
    dimension: int | None  # None if the codeword count is not a power of p

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w in self.weights if w)

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.weights.items())

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "length": self.length,
            "weights": {str(w): k for w, k in self.rows()},
            "distinct_codewords": self.distinct_codewords,
            "dimension": self.dimension,
        }


def _log_p(n: int, p: int) -> int | None:
    k = round(math.log(n, p)) if n > 1 else 0
    return k if p**k == n else None


def weight_distribution(
    f: Field, d: int, workers: int | None = 1, budget: int | None = None
) -> WeightDistribution:
    """Direct count over every (u, v) in F^2 and every coordinate i."""
    check_exponent(f, d)
    check_budget(f.order**2 * f.group_order, budget, "code weight distribution")
    i = np.arange(f.group_order, dtype=np.int64)
    pts = f.exp(i)
    pts_d = f.exp(i * d)
    # trace is F_p-linear: Tr(u y + v z) = Tr(u y) + Tr(v z)
    H = f.trace(f.mul(f.elements[:, None], pts[None, :]))  # H[v, i]

    def block(rows: range) -> np.ndarray:
        us = f.elements[rows.start : rows.stop]
        G = f.trace(f.mul(us[:, None], pts_d[None, :]))  # G[u, i]
        coords = (G[:, None, :] + H[None, :, :]) % f.p
        return np.count_nonzero(coords, axis=2).ravel()

    weights = np.concatenate(pmap(block, chunks(f.order, max(1, (workers or 1) * 2)), workers))
    values, mult = np.unique(weights, return_counts=True)
    # (u, v) -> c_{u,v} is F_p-linear, so #codewords = p^{2n} / #kernel
    kernel = int(np.count_nonzero(weights == 0))
    distinct = f.order**2 // kernel
    return WeightDistribution(
        d=d,
        length=f.group_order,
        weights={int(w): int(k) for w, k in zip(values, mult)},
        distinct_codewords=distinct,
        dimension=_log_p(distinct, f.p),
    )


def weights_from_walsh_distribution(f: Field, dist: WalshDistribution) -> dict[int, int] | None:
    """Weight multiset implied by the Walsh distribution plus the u = 0 row.

    (u, v) -> (u, -v) is a bijection, so the multiset of W(u, -v) over u != 0
    equals the Walsh distribution itself. Returns None when some value is
    not rational.
    """
    ints = dist.as_int_dict()
    if ints is None:
        return None
    out: dict[int, int] = {0: 1}
    base = f.order // f.p * (f.p - 1)
    out[base] = f.group_order  # u = 0, v != 0
    for w, k in ints.items():
        wt = weight_from_walsh(f, w)
        out[wt] = out.get(wt, 0) + k
    return dict(sorted(out.items()))
