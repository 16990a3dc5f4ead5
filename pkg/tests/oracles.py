"""Slow reference implementations that share no code with the package kernels.

Field arithmetic goes through sympy's dense polynomial routines over F_p;
everything else is plain Python loops.
"""
from __future__ import annotations

import cmath
import itertools
from collections import Counter
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_mul, gf_neg, gf_rem


class PolyField:
    """F_{p^n} as F_p[x]/(modulus), elements encoded as base-p digit integers (low degree first)."""

    def __init__(self, p: int, n: int, modulus_low_first):
        self.p, self.n = p, n
        self.order = p**n
        self.mod = [ZZ(c) for c in reversed(list(modulus_low_first))]  # sympy wants high degree first

    def to_poly(self, a: int) -> list:
        coeffs = []
        for _ in range(self.n):
            coeffs.append(ZZ(a % self.p))
            a //= self.p
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return list(reversed(coeffs))

    def from_poly(self, poly) -> int:
        out = 0
        for c in poly:
            out = out * self.p + int(c) % self.p
        return out

    def add(self, a: int, b: int) -> int:
        return self.from_poly(gf_add(self.to_poly(a), self.to_poly(b), self.p, ZZ))

    def neg(self, a: int) -> int:
        return self.from_poly(gf_neg(self.to_poly(a), self.p, ZZ))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        prod = gf_mul(self.to_poly(a), self.to_poly(b), self.p, ZZ)
        return self.from_poly(gf_rem(prod, self.mod, self.p, ZZ))

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        acc, y = 0, a
        for _ in range(self.n):
            acc = self.add(acc, y)
            y = self.pow(y, self.p)
        assert acc < self.p, "trace must land in the prime field"
        return acc

    def elements(self) -> range:
        return range(self.order)


@lru_cache(maxsize=None)
def poly_field(p: int, n: int, modulus: tuple) -> PolyField:
    return PolyField(p, n, modulus)


def oracle_for(f) -> PolyField:
    return poly_field(f.p, f.n, tuple(f.params.modulus))


def power_list(P: PolyField, d: int) -> list[int]:
    return [P.pow(x, d) for x in P.elements()]


def delta_row(P: PolyField, d: int) -> Counter:
    F = power_list(P, d)
    return Counter(P.sub(F[P.add(x, 1)], F[x]) for x in P.elements())


def walsh_complex(P: PolyField, d: int, u: int, v: int) -> complex:
    zeta = cmath.exp(2j * cmath.pi / P.p)
    total = 0j
    for x in P.elements():
        t = P.trace(P.sub(P.mul(u, P.pow(x, d)), P.mul(v, x)))
        total += zeta**t
    return total


def n_r_brute(P: PolyField, d: int, r: int) -> int:
    F = power_list(P, d)
    count = 0
    for xs in itertools.product(P.elements(), repeat=r):
        s = 0
        t = 0
        for x in xs:
            s = P.add(s, x)
            t = P.add(t, F[x])
        count += s == 0 and t == 0
    return count


def second_difference_count(P: PolyField, d: int, a: int, b: int) -> int:
    F = power_list(P, d)
    n = 0
    for x in P.elements():
        xa, xb = P.add(x, a), P.add(x, b)
        xab = P.add(xa, b)
        val = P.add(P.sub(F[xab], F[xa]), P.sub(F[x], F[xb]))
        n += val == 0
    return n


def codeword_weight_brute(P: PolyField, psi: int, d: int, u: int, v: int) -> int:
    w = 0
    g = 1
    for _ in range(P.order - 1):
        w += P.trace(P.add(P.mul(u, P.pow(g, d)), P.mul(v, g))) != 0
        g = P.mul(g, psi)
    return w
