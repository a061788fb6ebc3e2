"""Command line front end.

Subcommands: run (sampled protocol run), enumerate (exact outcome table),
tables (transcribed vs derived correction tables plus their diff), verify
(full audit).  Output is JSON or CSV on stdout or a file; identical
arguments and seed produce byte-identical output.  Exit codes: 0 ok, 1
audit failure or strict-mode discrepancy, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bases import parse_share_text, random_generic_share
from .channels import Protocol
from .corrections import diff_tables, published_table, regenerate_table
from .engine import RunConfig, enumerate_outcomes, report_csv, report_json, run_sampled
from .verify import full_audit

__all__ = ["main", "console_main"]


def _add_share_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--share1", required=required, help="four numbers, comma or space separated")
    p.add_argument("--share2", required=required, help="four numbers, comma or space separated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jrsp4",
        description="simulate and verify joint remote preparation of four-level states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="sampled protocol run")
    run.add_argument("--protocol", required=True, choices=[p.value for p in Protocol])
    _add_share_args(run)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--shots", type=int, default=1000)
    run.add_argument("--format", choices=["json", "csv"], default="json")
    run.add_argument("--out", default=None)
    run.add_argument("--provenance", choices=["derived", "transcribed"], default="derived")
    run.set_defaults(func=cmd_run)

    enum = sub.add_parser("enumerate", help="exact outcome enumeration")
    enum.add_argument("--protocol", required=True, choices=[p.value for p in Protocol])
    _add_share_args(enum)
    enum.add_argument("--format", choices=["json", "csv"], default="json")
    enum.add_argument("--out", default=None)
    enum.add_argument("--provenance", choices=["derived", "transcribed"], default="derived")
    enum.set_defaults(func=cmd_enumerate)

    tab = sub.add_parser("tables", help="correction tables and their diff")
    tab.add_argument("--protocol", required=True, choices=[p.value for p in Protocol])
    _add_share_args(tab, required=False)
    tab.add_argument("--seed", type=int, default=0, help="seed for share draws when none are given")
    tab.add_argument("--format", choices=["json"], default="json")
    tab.add_argument("--out", default=None)
    tab.set_defaults(func=cmd_tables)

    ver = sub.add_parser("verify", help="full audit against the transcription")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--draws", type=int, default=20)
    ver.add_argument("--strict", action="store_true",
                     help="fail even on known, ledgered discrepancies")
    ver.add_argument("--format", choices=["json"], default="json")
    ver.add_argument("--out", default=None)
    ver.set_defaults(func=cmd_verify)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _shares(args):
    return (
        parse_share_text(args.share1, sender_id=1),
        parse_share_text(args.share2, sender_id=2),
    )


def cmd_run(args) -> int:
    share1, share2 = _shares(args)
    config = RunConfig(
        Protocol(args.protocol), share1, share2,
        mode="sample", seed=args.seed, shots=args.shots,
        table_provenance=args.provenance,
    )
    report = run_sampled(config)
    _emit(report_json(report) if args.format == "json" else report_csv(report), args.out)
    return 0


def cmd_enumerate(args) -> int:
    share1, share2 = _shares(args)
    config = RunConfig(
        Protocol(args.protocol), share1, share2,
        table_provenance=args.provenance,
    )
    report = enumerate_outcomes(config)
    _emit(report_json(report) if args.format == "json" else report_csv(report), args.out)
    return 0


def cmd_tables(args) -> int:
    if (args.share1 is None) != (args.share2 is None):
        raise ValueError("supply both shares or neither")
    if args.share1 is None:
        rng = np.random.default_rng(args.seed)
        share1 = random_generic_share(rng, 1)
        share2 = random_generic_share(rng, 2)
    else:
        share1, share2 = _shares(args)
    protocol = Protocol(args.protocol)
    derived = regenerate_table(protocol, share1, share2)
    transcribed = published_table(protocol)
    doc = {
        "protocol": protocol.value,
        "shares": {
            "share1": [float(x) for x in share1.components],
            "share2": [float(x) for x in share2.components],
        },
        "transcribed": transcribed.to_doc(),
        "derived": derived.to_doc(),
        "diff": diff_tables(derived, transcribed),
    }
    _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    audit = full_audit(seed=args.seed, share_draws=args.draws)
    _emit(json.dumps(audit, sort_keys=True, indent=2) + "\n", args.out)
    if not audit["ok"]:
        return 1
    if args.strict and audit["discrepancies"]:
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
