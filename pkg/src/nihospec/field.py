"""Dense-table model of F_{p^n}, n = 2m.

Elements are plain integers in [0, p^n): the base-p packing of the coefficient
vector in the power basis of the modulus root psi (digit i is the coefficient
of psi^i). Every method accepts either a Python int or a numpy integer array
and returns the same kind.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

from .errors import BadOrder, ConstructionFailure, NotPrime, TooLarge, ZeroElement

DEFAULT_SIZE_CAP = 1 << 20


def size_cap() -> int:
    return int(os.environ.get("NIHOSPEC_SIZE_CAP", DEFAULT_SIZE_CAP))


@dataclass(frozen=True)
class FieldParams:
    p: int
    m: int
    modulus: tuple[int, ...]  # c_0 .. c_n, monic

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def order(self) -> int:
        return self.p**self.n


def _polymulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    n = len(f) - 1
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # f is monic: x^n = -(c_0 + ... + c_{n-1} x^{n-1})
    for k in range(len(prod) - 1, n - 1, -1):
        t = prod[k]
        if t:
            prod[k] = 0
            for i in range(n):
                prod[k - n + i] = (prod[k - n + i] - t * f[i]) % p
    return prod[:n]


def _x_power(e: int, f: list[int], p: int) -> list[int]:
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = [0, 1] + [0] * (n - 2)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f: list[int], p: int) -> bool:
    """True iff the root of monic ``f`` (coefficients c_0..c_n) has order p^n - 1.

    Order p^n - 1 for x in F_p[x]/(f) already forces f irreducible.
    """
    n = len(f) - 1
    if f[0] % p == 0:
        return False
    group = p**n - 1
    one = [1] + [0] * (n - 1)
    if _x_power(group, f, p) != one:
        return False
    return all(_x_power(group // r, f, p) != one for r in factorint(group))


def find_modulus(p: int, n: int) -> tuple[int, ...]:
    """First primitive monic degree-n polynomial, constant term varying fastest."""
    for k in range(p**n):
        coeffs = [(k // p**i) % p for i in range(n)] + [1]
        if is_primitive(coeffs, p):
            return tuple(coeffs)
    raise ConstructionFailure(f"no primitive polynomial of degree {n} over F_{p}")


def _matpow_mod(mat: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(mat.shape[0], dtype=np.int64)
    base = mat.copy()
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


class Field:
    """F_{p^{2m}} with log/antilog/trace tables.

    Immutable after construction; every method is a pure table lookup, so a
    single instance can be shared across threads.
    """

    def __init__(self, params: FieldParams):
        self.params = params
        p, n = params.p, params.n
        self.p, self.m, self.n = p, params.m, n
        self.order = p**n
        self.group_order = self.order - 1
        self.q = p**params.m  # size of the subfield F_{p^m}
        self.weights = np.array([p**i for i in range(n)], dtype=np.int64)

        # companion matrix: column j holds the digits of psi^{j+1}
        comp = np.zeros((n, n), dtype=np.int64)
        for j in range(n - 1):
            comp[j + 1, j] = 1
        comp[:, n - 1] = [(-c) % p for c in params.modulus[:n]]

        # rows of `powers` are the digit vectors of psi^0, psi^1, ...
        powers = np.zeros((1, n), dtype=np.int64)
        powers[0, 0] = 1
        while powers.shape[0] < self.group_order:
            step = _matpow_mod(comp, powers.shape[0], p)
            powers = np.vstack([powers, (powers @ step.T) % p])
        powers = powers[: self.group_order]
        exp = powers @ self.weights

        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(self.group_order, dtype=np.int64)
        if log[0] != -1 or np.count_nonzero(log >= 0) != self.group_order:
            raise ConstructionFailure(f"modulus {params.modulus} is not primitive")

        self.exp_table = np.concatenate([exp, exp])  # period group_order, length 2(p^n-1)
        self.log_table = log

        digit_dtype = np.int16 if p > 127 else np.int8
        reps = np.arange(self.order, dtype=np.int64)
        self.digits = np.stack([(reps // p**i) % p for i in range(n)], axis=1).astype(digit_dtype)

        basis_traces = np.array(
            [int(np.trace(_matpow_mod(comp, i, p))) % p for i in range(n)], dtype=np.int64
        )
        self.trace_table = ((self.digits.astype(np.int64) @ basis_traces) % p).astype(np.int64)

        for arr in (self.exp_table, self.log_table, self.digits, self.trace_table):
            arr.setflags(write=False)

    # ---- constants -----------------------------------------------------
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def psi(self) -> int:
        return int(self.exp_table[1])

    @cached_property
    def elements(self) -> np.ndarray:
        arr = np.arange(self.order, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, modulus={list(self.params.modulus)})"

    # ---- additive structure --------------------------------------------
    def _pack(self, digits):
        return digits @ self.weights

    def add(self, x, y):
        if self.p == 2:
            return np.bitwise_xor(x, y) if isinstance(x, np.ndarray) or isinstance(y, np.ndarray) else x ^ y
        d = (self.digits[x].astype(np.int64) + self.digits[y]) % self.p
        out = self._pack(d)
        return out if isinstance(out, np.ndarray) and out.ndim else int(out)

    def neg(self, x):
        if self.p == 2:
            return x
        d = (-self.digits[x].astype(np.int64)) % self.p
        out = self._pack(d)
        return out if isinstance(out, np.ndarray) and out.ndim else int(out)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scalar(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    @cached_property
    def neg_table(self) -> np.ndarray:
        arr = np.asarray(self.neg(self.elements), dtype=np.int64)
        arr.setflags(write=False)
        return arr

    # ---- multiplicative structure --------------------------------------
    def mul(self, x, y):
        if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
            x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
            out = self.exp_table[(self.log_table[x] + self.log_table[y]) % self.group_order]
            return np.where((x == 0) | (y == 0), 0, out)
        if x == 0 or y == 0:
            return 0
        return int(self.exp_table[self.log_table[x] + self.log_table[y]])

    def inv(self, x):
        if isinstance(x, np.ndarray):
            if np.any(x == 0):
                raise ZeroElement("0 has no inverse")
            return self.exp_table[(-self.log_table[x]) % self.group_order]
        if x == 0:
            raise ZeroElement("0 has no inverse")
        return int(self.exp_table[(-self.log_table[x]) % self.group_order])

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def exp(self, t):
        """psi^t for any integer (or integer array) t."""
        if isinstance(t, np.ndarray):
            return self.exp_table[t % self.group_order]
        return int(self.exp_table[t % self.group_order])

    def power(self, x, e: int):
        """x^e with 0^0 = 1 and 0^e = 0 for e > 0; e is reduced only for nonzero x."""
        if e < 0:
            raise ValueError("negative exponent")
        if isinstance(x, np.ndarray):
            out = self.exp_table[(self.log_table[x] * (e % self.group_order)) % self.group_order]
            return np.where(x == 0, 1 if e == 0 else 0, out)
        if x == 0:
            return 1 if e == 0 else 0
        return int(self.exp_table[(int(self.log_table[x]) * e) % self.group_order])

    def pow_table(self, d: int) -> np.ndarray:
        """Array F with F[x] = x^d for every element x."""
        return self.power(self.elements, d)

    def log(self, x):
        """Discrete logarithm to base psi, in [0, p^n - 1)."""
        if isinstance(x, np.ndarray):
            if np.any(x == 0):
                raise ZeroElement("discrete log of 0")
            return self.log_table[x]
        if x == 0:
            raise ZeroElement("discrete log of 0")
        return int(self.log_table[x])

    def conj(self, x):
        """x^{p^m}."""
        return self.power(x, self.q)

    # ---- trace and subgroups -------------------------------------------
    def trace(self, x):
        if isinstance(x, np.ndarray):
            return self.trace_table[x]
        return int(self.trace_table[x])

    def in_subfield(self, x):
        """Membership in F_{p^m}, i.e. x^{p^m} = x."""
        return self.conj(x) == x

    def in_mu(self, x, e: int):
        """True iff x != 0 and x^e = 1; e must divide p^n - 1."""
        if e <= 0 or self.group_order % e:
            raise BadOrder(f"{e} does not divide {self.group_order}")
        period = self.group_order // e
        if isinstance(x, np.ndarray):
            return (x != 0) & (self.log_table[x] % period == 0)
        return x != 0 and int(self.log_table[x]) % period == 0

    def mu(self, e: int) -> np.ndarray:
        """Elements of the cyclic subgroup of order e, listed as psi^{k(p^n-1)/e}."""
        if e <= 0 or self.group_order % e:
            raise BadOrder(f"{e} does not divide {self.group_order}")
        return self.exp_table[np.arange(e, dtype=np.int64) * (self.group_order // e)]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "modulus": list(self.params.modulus),
            "primitive_check": True,
        }


_CACHE: dict[tuple[int, int], Field] = {}


def build_field(p: int, m: int, cap: int | None = None) -> Field:
    """Construct F_{p^{2m}} deterministically; repeated calls share one instance."""
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("m must be positive")
    cap = size_cap() if cap is None else cap
    if p ** (2 * m) > cap:
        raise TooLarge(f"field of order {p}^{2 * m} exceeds the size cap {cap}")
    key = (p, m)
    if key not in _CACHE:
        _CACHE[key] = Field(FieldParams(p, m, find_modulus(p, 2 * m)))
    return _CACHE[key]


# Functional aliases mirroring the method surface.
def power(f: Field, x, e: int):
    return f.power(x, e)


def trace(f: Field, x):
    return f.trace(x)


def discrete_log(f: Field, x):
    return f.log(x)


def in_mu(f: Field, x, e: int):
    return f.in_mu(x, e)
