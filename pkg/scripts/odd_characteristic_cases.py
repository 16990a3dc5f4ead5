"""Niho residues with s1 * s2 = p^m + 1 in odd characteristic.

These exponents are locally-APN (the large derivative counts sit on b in F_p)
but their Walsh spectrum is not the four-valued one, and N_4 differs from the
locally-APN closed form. The script prints the evidence for each case.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from nihospec.diff import delta_counts, differential_spectrum
from nihospec.field import build_field
from nihospec.niho import make_niho, predicted_N4_locally_apn, predicted_walsh
from nihospec.walsh import count_Nr, walsh_distribution


@dataclass
class OddCaseConfig:
    fields: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (5, 1), (3, 2), (7, 1)])
    n4: bool = True


def run(cfg: OddCaseConfig) -> None:
    for p, m in cfg.fields:
        f = build_field(p, m)
        for s in range(f.q + 1):
            e = make_niho(p, m, s)
            if s in (0, 1) or e.s1 * e.s2 != f.q + 1:
                continue
            spec = differential_spectrum(f, e.d)
            row = delta_counts(f, e.d)
            dist = walsh_distribution(f, e.d).as_int_dict()
            four = predicted_walsh(e).as_int_dict()
            print(f"F_{f.order} s={s} d={e.d} s1={e.s1} s2={e.s2}")
            print(f"  uniformity {spec.uniformity}, locally-APN {spec.locally_apn}")
            print(f"  counts on F_p: {[int(row[b]) for b in range(p)]}")
            print(f"  Walsh {dist}")
            print(f"  four-valued pattern {four} -> equal: {dist == four}")
            if cfg.n4:
                print(f"  N4 measured {count_Nr(f, e.d, 4)}, locally-APN formula {predicted_N4_locally_apn(e)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--no-n4", action="store_true", help="skip the p^{3n} N_4 count")
    args = ap.parse_args()
    run(OddCaseConfig(n4=not args.no_n4))


if __name__ == "__main__":
    main()
