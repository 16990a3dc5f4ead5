"""Run the full prediction check for every Niho residue on a list of fields.

    python3 scripts/verify_sweep.py --fields 2,2 2,3 3,1 3,2 5,1 --workers 4
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from nihospec.field import build_field
from nihospec.niho import make_niho, verify


@dataclass
class SweepConfig:
    fields: list[tuple[int, int]] = field(default_factory=lambda: [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
    workers: int = 1
    budget: int | None = None


def run(cfg: SweepConfig) -> int:
    failures = 0
    for p, m in cfg.fields:
        f = build_field(p, m)
        for s in range(f.q + 1):
            rep = verify(f, make_niho(p, m, s), workers=cfg.workers, budget=cfg.budget)
            bad = [c.name for c in rep.checks if not c.match]
            failures += bool(bad)
            status = "ok" if not bad else "MISMATCH " + ",".join(bad)
            print(f"F_{f.order} s={s:<3} d={rep.exponent.d:<6} checks={len(rep.checks):<2} {status}")
    print(f"{failures} residue(s) with at least one mismatch")
    return failures


def _pair(text: str) -> tuple[int, int]:
    p, m = text.split(",")
    return int(p), int(m)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", type=_pair, nargs="+", default=SweepConfig().fields)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=int)
    args = ap.parse_args()
    raise SystemExit(1 if run(SweepConfig(args.fields, args.workers, args.budget)) else 0)


if __name__ == "__main__":
    main()
