"""Niho exponents d = s(p^m - 1) + 1 over F_{p^{2m}}: closed-form predictions and their checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .boomerang import (
    FBCT_CONVENTION,
    SOZD_CONVENTION_EVEN,
    SOZD_CONVENTION_ODD,
    BoomerangDistribution,
    fbct_distribution,
    sozd_distribution,
)
from .codes import weight_distribution, weights_from_walsh_distribution
from .cyclotomic import CyclotomicInteger
from .diff import DifferentialSpectrum, differential_spectrum
from .errors import FieldMismatch, HypothesisViolated, IndexRange, WrongCharacteristic
from .field import Field
from .runtime import check_budget
from .walsh import WalshDistribution, _canonical_rows, _class_counts, count_Nr, walsh_counts, walsh_distribution

FAMILIES = ("F1", "F2", "F3")


@dataclass(frozen=True)
class NihoExponent:
    p: int
    m: int
    s: int  # canonical residue in [0, p^m]
    d: int
    s1: int
    s2: int

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def order(self) -> int:
        return self.p**self.n


def normalize_exponent(d: int, group_order: int) -> int:
    """Reduce into [1, p^n - 1]; a multiple of p^n - 1 maps to p^n - 1, not 0."""
    r = d % group_order
    return r if r else group_order


def make_niho(p: int, m: int, s: int) -> NihoExponent:
    q = p**m
    s = s % (q + 1)
    d = normalize_exponent(s * (q - 1) + 1, q * q - 1)
    return NihoExponent(p, m, s, d, math.gcd(s, q + 1), math.gcd(s - 1, q + 1))


# ---------------------------------------------------------------------------
# closed-form predictions
# ---------------------------------------------------------------------------


def predicted_uniformity(e: NihoExponent) -> int:
    return e.q + (e.s1 - 1) * (e.s1 - 2) + (e.s2 - 1) * (e.s2 - 2)


def predicted_locally_apn(e: NihoExponent) -> bool:
    # s = 0, 1 give x and x^{p^m}: additive maps, whose derivative never equals 2
    return e.s1 * (e.s1 - 1) + e.s2 * (e.s2 - 1) <= 2 and e.s not in (0, 1)


def predicted_N3(e: NihoExponent) -> int:
    pn = e.order
    return 3 * pn - 2 + (pn - 1) * (predicted_uniformity(e) - 2)


def predicted_N4_locally_apn(e: NihoExponent) -> int:
    pn, q = e.order, e.q
    return 4 * pn * pn - 2 * q**3 - 3 * pn + 2 * q


def _merge(pairs) -> dict[int, int]:
    out: dict[int, int] = {}
    for v, k in pairs:
        if k:
            out[v] = out.get(v, 0) + k
    return dict(sorted(out.items()))


def predicted_spectrum(e: NihoExponent) -> DifferentialSpectrum:
    q = e.q
    counts = _merge([(0, (q * q + q - 2) // 2), (2, (q * q - q) // 2), (q, 1)])
    return DifferentialSpectrum(e.d, counts, max(counts), True, 2)


def predicted_walsh(e: NihoExponent) -> WalshDistribution:
    q, p = e.q, e.p
    base = q**4 - q**3 - q**2 + q
    ints = _merge([(-q, base // 3), (0, base // 2), (q, q**3 - q), (2 * q, base // 6)])
    entries = {CyclotomicInteger.from_int(p, v): k for v, k in ints.items()}
    return WalshDistribution(e.d, p, e.order, entries, {e.order: 1, 0: e.order - 1})


def predicted_boomerang(e: NihoExponent, kind: str) -> BoomerangDistribution:
    pn, q = e.order, e.q
    if e.p == 2:
        entries = _merge([(pn, 3 * pn - 2), (q, (q - 2) * (pn - 1)), (0, (pn - q) * (pn - 1))])
        uniformity = q if q > 2 else 0
        convention = FBCT_CONVENTION if kind == "FBCT" else SOZD_CONVENTION_EVEN
    else:
        entries = _merge([(pn, 2 * pn - 1), (q, (q - 1) * (pn - 1)), (1, (pn - q) * (pn - 1))])
        uniformity = q
        convention = SOZD_CONVENTION_ODD
    return BoomerangDistribution(e.d, kind, entries, uniformity, convention)


@dataclass(frozen=True)
class PredictionReport:
    exponent: NihoExponent
    predicted_uniformity: int
    predicted_locally_apn: bool
    predicted_N3: int
    predicted_N4: int | None = None
    predicted_spectrum: DifferentialSpectrum | None = None
    predicted_walsh: WalshDistribution | None = None
    predicted_fbct: BoomerangDistribution | None = None
    predicted_sozd: BoomerangDistribution | None = None
    predicted_code_weights: dict[int, int] | None = None

    def to_json(self) -> dict:
        e = self.exponent
        out: dict[str, Any] = {
            "p": e.p,
            "m": e.m,
            "s": e.s,
            "d": e.d,
            "s1": e.s1,
            "s2": e.s2,
            "uniformity": self.predicted_uniformity,
            "locally_apn": self.predicted_locally_apn,
            "N3": self.predicted_N3,
            "N4": self.predicted_N4,
            "spectrum": _spectrum_json(self.predicted_spectrum),
            "walsh": _walsh_json(self.predicted_walsh),
            "fbct": _boomerang_json(self.predicted_fbct),
            "sozd": _boomerang_json(self.predicted_sozd),
            "code_weights": _int_map_json(self.predicted_code_weights),
        }
        return out


def predict(e: NihoExponent) -> PredictionReport:
    """Evaluate every closed form for ``e``; no field is built."""
    lapn = predicted_locally_apn(e)
    if not lapn:
        return PredictionReport(e, predicted_uniformity(e), False, predicted_N3(e))
    walsh = predicted_walsh(e)
    weights = _weights_from_ints(e, walsh.as_int_dict())
    return PredictionReport(
        exponent=e,
        predicted_uniformity=predicted_uniformity(e),
        predicted_locally_apn=True,
        predicted_N3=predicted_N3(e),
        predicted_N4=predicted_N4_locally_apn(e),
        predicted_spectrum=predicted_spectrum(e),
        predicted_walsh=walsh,
        predicted_fbct=predicted_boomerang(e, "FBCT") if e.p == 2 else None,
        predicted_sozd=predicted_boomerang(e, "SOZD"),
        predicted_code_weights=weights,
    )


def _weights_from_ints(e: NihoExponent, walsh: dict[int, int]) -> dict[int, int]:
    p, pn = e.p, e.order
    base = pn // p * (p - 1)
    pairs = [(0, 1), (base, pn - 1)]
    pairs += [(base - (p - 1) * w // p, k) for w, k in walsh.items()]
    return _merge(pairs)


# ---------------------------------------------------------------------------
# serialisation helpers shared with verify/search
# ---------------------------------------------------------------------------


def _int_map_json(m: dict[int, int] | None):
    if m is None:
        return None
    return {str(k): v for k, v in sorted(m.items())}


def _spectrum_json(s: DifferentialSpectrum | None):
    return None if s is None else _int_map_json(s.counts)


def _walsh_json(w: WalshDistribution | None):
    if w is None:
        return None
    return [{"value": v, "multiplicity": k} for v, k in w.rows()]


def _boomerang_json(b: BoomerangDistribution | None):
    if b is None:
        return None
    return {"distribution": _int_map_json(b.entries), "uniformity": b.uniformity}


# ---------------------------------------------------------------------------
# verification against brute force
# ---------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    predicted: Any
    measured: Any

    @property
    def match(self) -> bool:
        return self.predicted == self.measured

    def to_json(self) -> dict:
        return {"name": self.name, "predicted": self.predicted, "measured": self.measured, "match": self.match}


@dataclass
class VerifyReport:
    field: dict
    exponent: NihoExponent
    checks: list[Check] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.match for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        e = self.exponent
        return {
            "field": self.field,
            "s": e.s,
            "d": e.d,
            "s1": e.s1,
            "s2": e.s2,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }


def _require_field(f: Field, e: NihoExponent) -> None:
    if (f.p, f.m) != (e.p, e.m):
        raise FieldMismatch(f"exponent is for p={e.p}, m={e.m}; field has p={f.p}, m={f.m}")


def verify(f: Field, e: NihoExponent, workers: int | None = 1, budget: int | None = None) -> VerifyReport:
    """Measure everything ``predict`` states and pair each prediction with its measurement."""
    _require_field(f, e)
    pred = predict(e)
    d = e.d
    heavy = pred.predicted_locally_apn
    check_budget(
        (4 * f.order**3 if heavy else 0) + f.order**2 + (e.q + 1) * f.order, budget, "verify"
    )
    report = VerifyReport(field=f.to_json(), exponent=e)
    spec = differential_spectrum(f, d)
    report.checks.append(Check("uniformity", pred.predicted_uniformity, spec.uniformity))
    report.checks.append(Check("locally_apn", pred.predicted_locally_apn, spec.locally_apn))
    report.checks.append(Check("N3", pred.predicted_N3, count_Nr(f, d, 3, budget=budget)))
    if not heavy:
        return report

    report.checks.append(Check("spectrum", _spectrum_json(pred.predicted_spectrum), _spectrum_json(spec)))
    walsh = walsh_distribution(f, d, workers=workers, budget=budget)
    report.checks.append(Check("walsh", _walsh_json(pred.predicted_walsh), _walsh_json(walsh)))
    if f.p == 2:
        fbct = fbct_distribution(f, d, workers=workers, budget=budget)
        report.checks.append(Check("fbct", _boomerang_json(pred.predicted_fbct), _boomerang_json(fbct)))
    sozd = sozd_distribution(f, d, workers=workers, budget=budget)
    report.checks.append(Check("sozd", _boomerang_json(pred.predicted_sozd), _boomerang_json(sozd)))
    weights = weight_distribution(f, d, workers=workers, budget=budget)
    report.checks.append(
        Check("code_weights", _int_map_json(pred.predicted_code_weights), _int_map_json(weights.weights))
    )
    report.checks.append(
        Check(
            "code_weights_via_walsh",
            _int_map_json(weights.weights),
            _int_map_json(weights_from_walsh_distribution(f, walsh)),
        )
    )
    report.checks.append(Check("N4", pred.predicted_N4, count_Nr(f, d, 4, budget=budget)))
    return report


# ---------------------------------------------------------------------------
# known families
# ---------------------------------------------------------------------------


def family_s_values(p: int, m: int, family: str) -> list[int]:
    """Canonical s residues of the families F1 (p = 2), F2 (any p) and F3 (p = 2)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    q1 = p**m + 1
    if family == "F2":
        return [2 % q1]
    if p != 2:
        raise WrongCharacteristic(f"{family} is only defined for p = 2")
    out: set[int] = set()
    if family == "F1":
        for r in range(1, m):
            if math.gcd(r, m) != 1:
                continue
            for den in (2**r - 1, 2**r + 1):
                if math.gcd(den, q1) == 1:
                    out.add(2**r * pow(den, -1, q1) % q1)
    else:
        # 2^k has order 2m modulo 2^m + 1, so k in [1, 2m) exhausts the residues
        for k in range(1, 2 * m):
            if math.gcd(k, m) == 1 and math.gcd(2**k + 1, q1) == 1:
                out.add(pow(2**k + 1, -1, q1))
    return sorted(out)


def cyclotomic_partner(e_or_s, p: int | None = None, m: int | None = None) -> int:
    """Residue s' with d(s') = p^m * d(s) mod p^n - 1, namely s' = 1 - s."""
    if isinstance(e_or_s, NihoExponent):
        p, m, s = e_or_s.p, e_or_s.m, e_or_s.s
    else:
        s = e_or_s
    return (1 - s) % (p**m + 1)


# ---------------------------------------------------------------------------
# C_{i,j}
# ---------------------------------------------------------------------------


def cij_table(f: Field) -> np.ndarray:
    """T[i, j] = #{x not in {0, -1} : ind(x+1) = i, ind(x) = j mod p^m + 1}."""
    q1 = f.q + 1
    x = f.elements
    x1 = f.add(x, 1)
    keep = (x != 0) & (x1 != 0)
    i = f.log_table[x1[keep]] % q1
    j = f.log_table[x[keep]] % q1
    return np.bincount(i * q1 + j, minlength=q1 * q1).reshape(q1, q1)


def cij_count(f: Field, i: int, j: int) -> int:
    q = f.q
    if not (0 <= i <= q and 0 <= j <= q):
        raise IndexRange(f"indices must lie in [0, {q}]")
    return int(cij_table(f)[i, j])


def predicted_cij(q: int, i: int, j: int) -> int:
    if i == j == 0:
        return q - 2
    if i != j and i * j != 0:
        return 1
    return 0


# ---------------------------------------------------------------------------
# the polynomial system on mu_{p^m+1}
# ---------------------------------------------------------------------------


def count_V(f: Field, g1: int, g2: int, u, v):
    """#{z in mu_{p^m+1} : vbar z^{2g1-1} + ubar z^{g1+g2-1} + u z^{g1-g2} + v = 0}.

    ``u`` and ``v`` may be arrays (broadcast together); exponents of z are
    read modulo p^m + 1.
    """
    q1 = f.q + 1
    z = f.mu(q1)
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    u, v = np.broadcast_arrays(u, v)
    shape = u.shape
    u = u.reshape(-1, 1)
    v = v.reshape(-1, 1)

    def zp(e: int) -> np.ndarray:
        return f.power(z, e % q1)[None, :]

    terms = f.add(
        f.add(f.mul(f.conj(v), zp(2 * g1 - 1)), f.mul(f.conj(u), zp(g1 + g2 - 1))),
        f.add(f.mul(u, zp(g1 - g2)), np.broadcast_to(v, (v.shape[0], q1))),
    )
    counts = np.count_nonzero(terms == 0, axis=1).reshape(shape)
    return int(counts) if counts.ndim == 0 else counts


def paired_character_sum(f: Field, g1: int, g2: int, u: int, v: int) -> CyclotomicInteger:
    """sum_x zeta^{Tr(v x^{d1} + u x^{d2})} with d_i = g_i (p^m - 1) + 1.

    This is the sum that (count_V(g1, g2, u, v) - 1) * p^m evaluates: the
    coefficient v multiplies x^{d1} and u multiplies x^{d2}.
    """
    N = f.group_order
    d1 = normalize_exponent(g1 * (f.q - 1) + 1, N)
    d2 = normalize_exponent(g2 * (f.q - 1) + 1, N)
    x = f.elements
    t = f.trace(f.add(f.mul(v, f.power(x, d1)), f.mul(u, f.power(x, d2))))
    return CyclotomicInteger.from_counts(f.p, np.bincount(t, minlength=f.p))


@dataclass(frozen=True)
class VSystemReport:
    """All-pairs comparison of (count_V - 1) p^m with two character sums.

    ``paired`` uses sum_x zeta^{Tr(v x^{d1} + u x^{d2})}. ``literal`` uses the
    Walsh value W_{x^{d1}}(u, -v), with u on x^{d1}.
    """

    p: int
    m: int
    g1: int
    g2: int
    d1: int
    d2: int
    pairs: int
    paired_mismatches: int
    literal_mismatches: int

    @property
    def passed(self) -> bool:
        return self.paired_mismatches == 0

    def to_json(self) -> dict:
        return {
            "g1": self.g1,
            "g2": self.g2,
            "d1": self.d1,
            "d2": self.d2,
            "pairs": self.pairs,
            "paired_mismatches": self.paired_mismatches,
            "literal_mismatches": self.literal_mismatches,
            "pass": self.passed,
        }


def vsystem_check(f: Field, g1: int, g2: int, workers: int | None = 1, budget: int | None = None) -> VSystemReport:
    check_budget(f.order**3, budget, "V-system check")
    q1 = f.q + 1
    N = f.group_order
    d1 = normalize_exponent(g1 * (f.q - 1) + 1, N)
    d2 = normalize_exponent(g2 * (f.q - 1) + 1, N)
    x = f.elements
    uu, vv = np.meshgrid(x, x, indexing="ij")
    V = count_V(f, g1 % q1, g2 % q1, uu, vv)  # V[u, v]
    target = (V.astype(np.int64) - 1) * f.q

    F1 = f.pow_table(d1)
    F2 = f.pow_table(d2)
    G = f.trace(f.mul(x[:, None], F1[None, :]))  # Tr(v x^{d1}), rows v
    H = f.trace(f.neg(f.mul(x[:, None], F2[None, :])))  # -Tr(u x^{d2}), rows u
    paired = _canonical_rows(_class_counts(G, H, f.p), f.p).reshape(f.order, f.order, -1)  # [v, u]
    paired = np.transpose(paired, (1, 0, 2))  # [u, v]

    literal = _canonical_rows(walsh_counts(f, d1, workers=workers), f.p).reshape(f.order, f.order, -1)
    literal = literal[:, f.neg_table]  # W(u, -v)

    def mismatches(vals: np.ndarray) -> int:
        ok = (vals[..., 0] == target) & np.all(vals[..., 1:] == 0, axis=-1)
        return int(np.count_nonzero(~ok))

    return VSystemReport(
        f.p, f.m, g1, g2, d1, d2, f.order**2, mismatches(paired), mismatches(literal)
    )


# ---------------------------------------------------------------------------
# points on alpha x^{n1} + beta y^{n2} + 1 = 0
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveReport:
    n1: int
    n2: int
    alpha: int
    beta: int
    r1: int
    r2: int
    t: int
    k: int
    l: int
    case: str | None
    measured: int
    predicted: int | None

    @property
    def match(self) -> bool | None:
        return None if self.predicted is None else self.measured == self.predicted

    def to_json(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "alpha": self.alpha,
            "beta": self.beta,
            "r1": self.r1,
            "r2": self.r2,
            "t": self.t,
            "k": self.k,
            "l": self.l,
            "case": self.case,
            "measured": self.measured,
            "predicted": self.predicted,
            "match": self.match,
        }


def curve_parameters(f: Field, n1: int, n2: int) -> tuple[int, int]:
    """Smallest l with l | m and lcm(n1, n2) | p^l + 1, together with k = m / l."""
    L = math.lcm(n1, n2)
    for l in range(1, f.m + 1):
        if f.m % l == 0 and (f.p**l + 1) % L == 0:
            return l, f.m // l
    raise HypothesisViolated(f"lcm({n1}, {n2}) = {L} divides no p^l + 1 with l | m")


def predicted_curve_points(p: int, n: int, n1: int, n2: int, r1: int, r2: int, k: int) -> tuple[str | None, int | None]:
    """(case label, point count) from the five-case formula; (None, None) if no case applies."""
    t = math.gcd(n1, n2)
    pn, half = p**n, p ** (n // 2)
    sgn = (-1) ** k
    if r1 == 0 and r2 == 0:
        return "i", pn - sgn * ((n1 - 1) * (n2 - 1) + 1 - t) * half - t + 1
    if r1 == 0 and r2 % t:
        return "ii", pn + sgn * (n1 - 2) * half + 1
    if r2 == 0 and r1 % t:
        return "iii", pn + sgn * (n2 - 2) * half + 1
    if r1 and r2 and (r1 - r2) % t:
        return "iv", pn - sgn * 2 * half + 1
    if r1 and r2:
        return "v", pn + sgn * (t - 2) * half - t + 1
    return None, None


def measured_curve_points(f: Field, n1: int, n2: int, alpha: int, beta: int) -> int:
    """#{(x, y) in F^2 : alpha x^{n1} + beta y^{n2} + 1 = 0} by counting n2-th roots per x."""
    x = f.elements
    w = f.neg(f.add(f.mul(alpha, f.power(x, n1)), 1))  # beta y^{n2} = w
    target = f.div(w, beta)
    g = math.gcd(n2, f.group_order)
    nonzero = target != 0
    roots = np.zeros(f.order, dtype=np.int64)
    roots[~nonzero] = 1
    logs = f.log_table[target[nonzero]]
    roots[nonzero] = np.where(logs % g == 0, g, 0)
    return int(roots.sum())


def curve_points(f: Field, n1: int, n2: int, alpha: int, beta: int) -> CurveReport:
    if alpha == 0 or beta == 0:
        raise ValueError("alpha and beta must be nonzero")
    l, k = curve_parameters(f, n1, n2)
    r1 = f.log(alpha) % n1
    r2 = f.log(beta) % n2
    case, pred = predicted_curve_points(f.p, f.n, n1, n2, r1, r2, k)
    return CurveReport(
        n1, n2, alpha, beta, r1, r2, math.gcd(n1, n2), k, l, case,
        measured_curve_points(f, n1, n2, alpha, beta), pred,
    )


# ---------------------------------------------------------------------------
# exhaustive search over s
# ---------------------------------------------------------------------------


@dataclass
class SearchRow:
    s: int
    d: int
    s1: int
    s2: int
    predicted: dict
    measured: dict
    f1_member: bool | None
    families: list[str]
    cyclotomic_class: int | None = None

    @property
    def match(self) -> bool:
        return self.predicted == self.measured

    def to_json(self) -> dict:
        out = {
            "s": self.s,
            "d": self.d,
            "s1": self.s1,
            "s2": self.s2,
            "predicted": self.predicted,
            "measured": self.measured,
            "match": self.match,
            "f1_member": self.f1_member,
            "families": self.families,
        }
        if self.cyclotomic_class is not None:
            out["cyclotomic_class"] = self.cyclotomic_class
        return out


@dataclass
class SearchReport:
    field: dict
    p: int
    m: int
    rows: list[SearchRow]

    @property
    def locally_apn(self) -> list[int]:
        return [r.s for r in self.rows if r.measured["locally_apn"]]

    @property
    def mismatches(self) -> list[int]:
        return [r.s for r in self.rows if not r.match]

    @property
    def outside_f1(self) -> list[int] | None:
        """Measured locally-APN residues not covered by F1 or its s -> 1 - s partners."""
        if self.p != 2:
            return None
        f1 = set(family_s_values(2, self.m, "F1"))
        cover = f1 | {cyclotomic_partner(s, 2, self.m) for s in f1}
        return [s for s in self.locally_apn if s not in cover]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "p": self.p,
            "m": self.m,
            "rows": [r.to_json() for r in self.rows],
            "locally_apn": self.locally_apn,
            "mismatches": self.mismatches,
            "outside_f1": self.outside_f1,
            "pass": self.passed,
        }


def search_locally_apn(
    f: Field, annotate_equivalence: bool = False, budget: int | None = None
) -> SearchReport:
    """Brute-force locally-APN flag for every residue s in [0, p^m] next to the predicted one."""
    q = f.q
    check_budget((q + 1) * f.order, budget, "locally-APN search")
    families = {fam: set(family_s_values(f.p, f.m, fam)) for fam in FAMILIES if f.p == 2 or fam == "F2"}
    rows = []
    for s in range(q + 1):
        e = make_niho(f.p, f.m, s)
        spec = differential_spectrum(f, e.d)
        rows.append(
            SearchRow(
                s=s,
                d=e.d,
                s1=e.s1,
                s2=e.s2,
                predicted={"uniformity": predicted_uniformity(e), "locally_apn": predicted_locally_apn(e)},
                measured={"uniformity": spec.uniformity, "locally_apn": spec.locally_apn},
                f1_member=(s in families["F1"]) if f.p == 2 else None,
                families=[fam for fam in FAMILIES if fam in families and s in families[fam]],
                cyclotomic_class=min(s, cyclotomic_partner(e)) if annotate_equivalence else None,
            )
        )
    return SearchReport(f.to_json(), f.p, f.m, rows)
