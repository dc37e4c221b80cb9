"""Command-line front end.

Exit status contract: 0 all checks passed, 1 a verification or comparison
failed, 2 usage errors (unknown names, bad flags).  Big integers are
always emitted as decimal strings in JSON and CSV so nothing is truncated
downstream.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import discovery, identities, oeis
from .cyclo import cos_power_vector
from .identities import OracleRef, builtin_registry, verify
from .sequences import get_oracle, seq_slice

DEFAULT_N_MAX = 50


@dataclass
class RunConfig:
    command: str
    identity: str | None = None
    n_max: int = DEFAULT_N_MAX
    sequence: str | None = None
    param: int | None = None
    count: int = 20
    period: int = 0
    row_odd: bool = False
    solve_range: tuple[int, int] | None = None
    index: tuple[int, int] = (1, 0)
    seq_id: str | None = None
    bfile: str | None = None
    allow_fetch: bool = False
    cache_dir: str | None = None  # None defers to $OEIS_CACHE_DIR
    fmt: str = "text"
    modulus: int = 0
    exp: int = 0
    power: int = 0


def _parse_index(text: str) -> tuple[int, int]:
    """Affine index maps like 'n', '2n', '2n+1', 'n-1'."""
    s = text.replace(" ", "")
    if "n" not in s:
        raise ValueError(f"index map {text!r} must mention n")
    head, _, tail = s.partition("n")
    a = int(head) if head not in ("", "+") else (-1 if head == "-" else 1)
    b = int(tail) if tail else 0
    return a, b


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    return int(lo), int(hi)


def _emit(config: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if config.fmt == "json":
        print(json.dumps(payload, indent=2))
    elif config.fmt == "csv":
        buf = io.StringIO()
        entries = payload.get("entries", [payload])
        writer = csv.DictWriter(buf, fieldnames=list(entries[0].keys()))
        writer.writeheader()
        for e in entries:
            writer.writerow(e)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


def _cmd_verify(config: RunConfig, registry) -> int:
    if config.identity and config.identity != "all":
        if not any(i.family == config.identity for i in registry):
            print(f"unknown identity {config.identity!r}; known: {', '.join(identities.FAMILIES)}",
                  file=sys.stderr)
            return 2
        families = [config.identity]
    else:
        families = list(dict.fromkeys(i.family for i in registry))
    entries = []
    n_pass = 0
    stream_text = config.fmt == "text"
    for fam in families:
        members = [i for i in registry if i.family == fam]
        reports = [verify(m, config.n_max) for m in members]
        bad = next((r for r in reports if not r.passed), None)
        entry = {
            "id": fam,
            "domain": str(members[0].domain),
            "status": "pass" if bad is None else "fail",
            "checked": sum(len(r.checked) for r in reports),
            "first_divergence": None if bad is None else bad.first_divergence,
            "lhs": None if bad is None else bad.lhs_at_divergence,
            "rhs": None if bad is None else bad.rhs_at_divergence,
            "millis": round(sum(r.elapsed for r in reports) * 1000, 3),
        }
        entries.append(entry)
        if bad is None:
            n_pass += 1
        if stream_text:
            line = f"{fam:24s} {entry['status'].upper():4s} n in {entry['domain']:>10s}  checked {entry['checked']:3d}  {entry['millis']:9.3f} ms"
            if bad is not None:
                line += f"  first divergence n={bad.first_divergence}: lhs={bad.lhs_at_divergence} rhs={bad.rhs_at_divergence}"
            print(line)
    summary = {"pass": n_pass, "fail": len(families) - n_pass}
    payload = {"command": "verify", "entries": entries, "summary": summary}
    if stream_text:
        tag = "PASS" if summary["fail"] == 0 else "FAIL"
        print(f"{tag} {n_pass}/{len(families)}")
    else:
        _emit(config, payload, [])
    return 0 if summary["fail"] == 0 else 1


def _cmd_table(config: RunConfig) -> int:
    try:
        values = seq_slice(config.sequence, config.count, config.param)
    except (KeyError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    start = get_oracle(config.sequence).start
    payload = {"command": "table", "sequence": config.sequence, "param": config.param,
               "start": start, "values": [str(v) for v in values]}
    _emit(config, payload, [", ".join(str(v) for v in values)])
    return 0


def _cmd_derive(config: RunConfig) -> int:
    a, b = config.index
    target = OracleRef(config.sequence, param=config.param, a=a, b=b)
    try:
        get_oracle(config.sequence)
        if config.solve_range:
            lo, hi = config.solve_range
            solution = discovery.derive_profile(target, config.period, config.row_odd, lo, hi)
        else:
            solution = discovery.derive_profile(target, config.period, config.row_odd)
    except (KeyError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    payload = discovery.profile_json(solution)
    payload["command"] = "derive"
    lines = [f"target {config.sequence} period {config.period} "
             f"rows {'2n+1' if config.row_odd else '2n'}: {solution.status}"]
    if solution.status == "unique":
        lines.append(f"center  {solution.center}")
        lines.append(f"weights {', '.join(str(w) for w in solution.weights)}")
        lines.append(json.dumps(payload["identity"]))
    elif solution.status == "underdetermined":
        lines.append(f"solution space dimension {solution.dimension}")
    else:
        lines.append(f"no profile exists; first violated n = {solution.violated_n}")
    _emit(config, payload, lines)
    return 0 if solution.status == "unique" else 1


def _cmd_oeis_check(config: RunConfig) -> int:
    try:
        get_oracle(config.sequence)
        if config.bfile:
            with open(config.bfile, "r", encoding="ascii") as fh:
                table = oeis.parse_bfile(fh.read(), config.seq_id, source=config.bfile)
        elif config.allow_fetch:
            table = oeis.fetch(config.seq_id, allow_network=True, cache_dir=config.cache_dir)
        else:
            try:
                table = oeis.fetch(config.seq_id, allow_network=False,
                                   cache_dir=config.cache_dir)
            except oeis.FetchDisabled:
                table = oeis.load_fixture(config.seq_id)
    except (KeyError, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    report = oeis.compare(config.sequence, table, config.count, config.param)
    payload = {"command": "oeis-check", "sequence": config.sequence, "id": config.seq_id,
               "shift": report.shift, "matched": report.matched,
               "match": report.is_match,
               "first_mismatch": None if report.first_mismatch is None else
               {"index": report.first_mismatch[0],
                "local": str(report.first_mismatch[1]),
                "bfile": str(report.first_mismatch[2])}}
    lines = [f"{config.sequence} vs {config.seq_id}: "
             f"{'MATCH' if report.is_match else 'MISMATCH'} "
             f"({report.matched} terms at shift {report.shift:+d})"]
    if report.first_mismatch:
        i, lv, bv = report.first_mismatch
        lines.append(f"first divergence at n={i}: local {lv}, b-file {bv}")
    _emit(config, payload, lines)
    return 0 if report.is_match else 1


def _cmd_cospow(config: RunConfig) -> int:
    vec = cos_power_vector(config.modulus, config.exp, config.power)
    payload = {"command": "cospow", "modulus": config.modulus, "exp": config.exp,
               "power": config.power, "coeffs": [str(c) for c in vec.coeffs]}
    _emit(config, payload, ["[" + ", ".join(str(c) for c in vec.coeffs) + "]"])
    return 0


def _cmd_export(config: RunConfig) -> int:
    print(json.dumps(identities.registry_json(), indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binsums",
        description="verify, tabulate and discover periodic weighted binomial sums",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check identities against their oracles")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--identity", help="single identity family id")
    g.add_argument("--all", action="store_true", help="all identities (default)")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("table", help="print leading values of a sequence")
    p.add_argument("--sequence", required=True)
    p.add_argument("--m", type=int, default=None, help="parameter for parameterized sequences")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("derive", help="solve for a periodic weight profile")
    p.add_argument("--target", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--row", choices=("even", "odd"), default="even")
    p.add_argument("--solve-range", default=None, help="A..B")
    p.add_argument("--index", default="n", help="target index map, e.g. 2n or 2n+1")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("oeis-check", help="compare a sequence against a b-file")
    p.add_argument("--sequence", required=True)
    p.add_argument("--id", required=True, dest="seq_id")
    p.add_argument("--m", type=int, default=None)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--bfile", help="path to a local b-file")
    src.add_argument("--fetch", action="store_true", help="allow a network fetch")
    p.add_argument("--cache-dir", default=None,
                   help="b-file cache directory (default $OEIS_CACHE_DIR or ./.oeis-cache)")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("cospow", help="print a cosine power vector")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--exp", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("export", help="dump the identity registry as JSON")
    p.add_argument("--format", choices=("json",), default="json")
    return parser


def run(argv: list[str] | None = None, registry=None) -> int:
    """Parse arguments and execute; returns the process exit status.

    A substitute identity registry can be injected for testing the
    exit-status contract.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(command=args.command, fmt=getattr(args, "format", "text"))
    if args.command == "verify":
        config.identity = "all" if args.all else args.identity
        if args.n_max < 1:
            parser.error("--n-max must be >= 1")
        config.n_max = args.n_max
        return _cmd_verify(config, registry if registry is not None else builtin_registry())
    if args.command == "table":
        config.sequence, config.param, config.count = args.sequence, args.m, args.count
        return _cmd_table(config)
    if args.command == "derive":
        config.sequence, config.param, config.period = args.target, args.m, args.period
        config.row_odd = args.row == "odd"
        try:
            config.index = _parse_index(args.index)
            if args.solve_range:
                config.solve_range = _parse_range(args.solve_range)
        except ValueError as exc:
            parser.error(str(exc))
        return _cmd_derive(config)
    if args.command == "oeis-check":
        config.sequence, config.seq_id, config.param = args.sequence, args.seq_id, args.m
        config.bfile, config.allow_fetch, config.count = args.bfile, args.fetch, args.count
        config.cache_dir = args.cache_dir
        return _cmd_oeis_check(config)
    if args.command == "cospow":
        config.modulus, config.exp, config.power = args.modulus, args.exp, args.power
        return _cmd_cospow(config)
    if args.command == "export":
        return _cmd_export(config)
    parser.error(f"unknown command {args.command!r}")
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
