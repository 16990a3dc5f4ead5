"""Command-line front end: ``nihospec <command> --p P --m M [--d D | --s S] ...``.

Exit status: 0 success, 1 a prediction did not match, 2 usage error,
3 work budget (or field size cap) exceeded.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Callable

from . import boomerang, codes, diff, niho, walsh
from .errors import NihoSpecError, TooLarge
from .field import Field, build_field
from .report import Report, emit
from .runtime import check_budget, default_budget, default_workers

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

EXPONENT_COMMANDS = {"diff", "walsh", "fbct", "sozd", "codes", "predict", "verify", "vsys"}
NIHO_COMMANDS = {"predict", "verify", "vsys"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int
    m: int
    d: int | None
    s: int | None
    budget: int
    workers: int
    format: str
    output: str | None


# ---------------------------------------------------------------------------
# exponent resolution
# ---------------------------------------------------------------------------


def _resolve(cfg: RunConfig, f: Field) -> tuple[int, int | None]:
    """Return (d, s); s is None when d is not of Niho type."""
    q = f.q
    if cfg.s is not None:
        e = niho.make_niho(cfg.p, cfg.m, cfg.s)
        return e.d, e.s
    d = cfg.d
    diff.check_exponent(f, d)
    s = ((d - 1) // (q - 1)) % (q + 1) if (d - 1) % (q - 1) == 0 else None
    if cfg.command in NIHO_COMMANDS and s is None:
        raise UsageError(f"d = {d} is not a Niho exponent over F_{f.order}; pass --s instead")
    return d, s


def _base(cfg: RunConfig, f: Field, d: int | None = None, s: int | None = None) -> dict:
    out: dict = {"command": cfg.command, "field": f.to_json()}
    if d is not None:
        out["d"] = d
    if s is not None:
        out["s"] = s
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_field(cfg: RunConfig, f: Field, args) -> Report:
    x = f.elements
    logs = f.log_table
    tr = f.trace(x)
    payload = _base(cfg, f)
    payload.update(order=f.order, psi=f.psi, subfield_order=f.q)
    rows = [(int(a), int(logs[a]), int(tr[a])) for a in x]
    return Report(payload, ("element", "log", "trace"), rows)


def cmd_diff(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    spec = diff.differential_spectrum(f, d)
    payload = _base(cfg, f, d, s)
    payload.update(spec.to_json())
    return Report(payload, ("value", "multiplicity"), spec.rows())


def cmd_walsh(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    check_budget(f.order**3, cfg.budget, "Walsh distribution and moments")
    counts = walsh.walsh_counts(f, d, workers=cfg.workers)
    dist = walsh.WalshDistribution(
        d, f.p, f.order, walsh.value_multiset(counts[1:], f.p), {f.order: 1, 0: f.order - 1}
    )
    every = walsh.value_multiset(counts, f.p)
    moments = [walsh.moment(f, d, r, budget=cfg.budget, all_values=every) for r in (1, 2, 3, 4)]
    payload = _base(cfg, f, d, s)
    payload.update(dist.to_json())
    payload["moments"] = [mr.to_json() for mr in moments]
    return Report(payload, ("value", "multiplicity"), dist.rows(), ok=all(mr.match for mr in moments))


def _boomerang(kind: str) -> Callable:
    def run(cfg: RunConfig, f: Field, args) -> Report:
        d, s = _resolve(cfg, f)
        fn = boomerang.fbct_distribution if kind == "FBCT" else boomerang.sozd_distribution
        dist = fn(f, d, naive=args.naive, workers=cfg.workers, budget=cfg.budget)
        payload = _base(cfg, f, d, s)
        payload.update(dist.to_json())
        return Report(payload, ("value", "count"), dist.rows())

    return run


def cmd_codes(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    wd = codes.weight_distribution(f, d, workers=cfg.workers, budget=cfg.budget)
    payload = _base(cfg, f, d, s)
    payload.update(wd.to_json())
    return Report(payload, ("w", "count"), wd.rows())


def cmd_predict(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    pred = niho.predict(niho.make_niho(f.p, f.m, s))
    payload = _base(cfg, f, d, s)
    payload["prediction"] = pred.to_json()
    rows = [
        ("uniformity", pred.predicted_uniformity),
        ("locally_apn", pred.predicted_locally_apn),
        ("N3", pred.predicted_N3),
        ("N4", pred.predicted_N4),
    ]
    return Report(payload, ("quantity", "value"), rows)


def cmd_verify(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    rep = niho.verify(f, niho.make_niho(f.p, f.m, s), workers=cfg.workers, budget=cfg.budget)
    payload = _base(cfg, f, d, s)
    payload.update(rep.to_json())
    rows = [(c.name, c.predicted, c.measured, c.match) for c in rep.checks]
    return Report(payload, ("check", "predicted", "measured", "match"), rows, ok=rep.passed)


def cmd_search(cfg: RunConfig, f: Field, args) -> Report:
    rep = niho.search_locally_apn(f, annotate_equivalence=args.annotate_equivalence, budget=cfg.budget)
    payload = _base(cfg, f)
    payload.update(rep.to_json())
    header = [
        "s", "d", "s1", "s2",
        "predicted_uniformity", "measured_uniformity",
        "predicted_locally_apn", "measured_locally_apn",
        "match", "f1_member",
    ]
    rows = [
        [
            r.s, r.d, r.s1, r.s2,
            r.predicted["uniformity"], r.measured["uniformity"],
            r.predicted["locally_apn"], r.measured["locally_apn"],
            r.match, r.f1_member,
        ]
        for r in rep.rows
    ]
    if args.annotate_equivalence:
        header.append("cyclotomic_class")
        for row, r in zip(rows, rep.rows):
            row.append(r.cyclotomic_class)
    return Report(payload, header, rows, ok=rep.passed)


def cmd_curve(cfg: RunConfig, f: Field, args) -> Report:
    rep = niho.curve_points(f, args.n1, args.n2, args.alpha, args.beta)
    payload = _base(cfg, f)
    payload.update(rep.to_json())
    return Report(
        payload,
        ("case", "measured", "predicted", "match"),
        [(rep.case, rep.measured, rep.predicted, rep.match)],
        ok=rep.match is not False,
    )


def cmd_vsys(cfg: RunConfig, f: Field, args) -> Report:
    d, s = _resolve(cfg, f)
    rep = niho.vsystem_check(f, s, args.g2, workers=cfg.workers, budget=cfg.budget)
    payload = _base(cfg, f, d, s)
    payload.update(rep.to_json())
    rows = [(rep.g1, rep.g2, rep.pairs, rep.paired_mismatches, rep.literal_mismatches)]
    return Report(
        payload, ("g1", "g2", "pairs", "paired_mismatches", "literal_mismatches"), rows, ok=rep.passed
    )


def cmd_cij(cfg: RunConfig, f: Field, args) -> Report:
    T = niho.cij_table(f)
    q = f.q
    rows = []
    bad = 0
    for i in range(q + 1):
        for j in range(q + 1):
            pred = niho.predicted_cij(q, i, j)
            got = int(T[i, j])
            bad += got != pred
            rows.append((i, j, got, pred))
    total = int(T.sum())
    payload = _base(cfg, f)
    payload.update(total=total, expected_total=f.order - 2, mismatches=bad)
    payload["table"] = [[int(c) for c in row] for row in T]
    return Report(payload, ("i", "j", "count", "predicted"), rows, ok=bad == 0 and total == f.order - 2)


COMMANDS: dict[str, Callable[[RunConfig, Field, argparse.Namespace], Report]] = {
    "field": cmd_field,
    "diff": cmd_diff,
    "walsh": cmd_walsh,
    "fbct": _boomerang("FBCT"),
    "sozd": _boomerang("SOZD"),
    "codes": cmd_codes,
    "predict": cmd_predict,
    "verify": cmd_verify,
    "search": cmd_search,
    "curve": cmd_curve,
    "vsys": cmd_vsys,
    "cij": cmd_cij,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nihospec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="characteristic")
    common.add_argument("--m", type=int, required=True, help="half extension degree, n = 2m")
    common.add_argument("--budget", type=int, default=None, help="max element operations")
    common.add_argument("--workers", type=int, default=None, help="parallel workers (default: all cores)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None, help="output path (default: stdout)")

    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in EXPONENT_COMMANDS:
            grp = sp.add_mutually_exclusive_group(required=True)
            grp.add_argument("--d", type=int, help="exponent")
            grp.add_argument("--s", type=int, help="Niho residue: d = s(p^m - 1) + 1")
        if name in ("fbct", "sozd"):
            sp.add_argument("--naive", action="store_true", help="full-table oracle (small fields)")
        if name == "search":
            sp.add_argument("--annotate-equivalence", action="store_true", help="tag s with min(s, 1 - s)")
        if name == "curve":
            sp.add_argument("--n1", type=int, required=True)
            sp.add_argument("--n2", type=int, required=True)
            sp.add_argument("--alpha", type=int, default=1, help="field element (integer representative)")
            sp.add_argument("--beta", type=int, default=1, help="field element (integer representative)")
        if name == "vsys":
            sp.add_argument("--g2", type=int, default=0, help="second exponent residue (g1 is s)")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        p=args.p,
        m=args.m,
        d=getattr(args, "d", None),
        s=getattr(args, "s", None),
        budget=default_budget() if args.budget is None else args.budget,
        workers=default_workers() if args.workers is None else max(1, args.workers),
        format=args.format,
        output=args.output,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    cfg = _config(args)
    try:
        f = build_field(cfg.p, cfg.m)
        if args.command == "curve" and not (0 < args.alpha < f.order and 0 < args.beta < f.order):
            raise UsageError("alpha and beta must be nonzero field elements")
        report = COMMANDS[cfg.command](cfg, f, args)
    except TooLarge as exc:
        print(f"nihospec: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, NihoSpecError) as exc:
        print(f"nihospec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data = emit(report, cfg.format)
    if cfg.output:
        with open(cfg.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK if report.ok else EXIT_MISMATCH


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
