"""
Command-line front end.

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .errors import WeylGarnirError
from .garnir import GarnirContext, find_pairing, garnir_report
from .rootsys import RootSystem, all_subsystems, build_root_system, subsystem_from_simples
from .specht import SystemPair, classify, polytabloid
from .suites import SUITES, group_for, run_suites
from .tableaux import all_tabloids, make_tableau
from .weyl import Order, WeylGroup, decompose, element_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _roots_arg(values: Sequence[str] | None) -> list[str]:
    out: list[str] = []
    for v in values or []:
        out.extend(x for x in v.replace(";", ",").split(",") if x.strip())
    return [x.strip() for x in out]


def _system(args) -> tuple[RootSystem, WeylGroup]:
    W = group_for(build_root_system(args.type, args.rank).label)
    return W.phi, W


def _pair(args, W: WeylGroup) -> SystemPair:
    return SystemPair.from_names(W, _roots_arg(args.J), _roots_arg(args.Jp))


def _emit(args, payload, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def cmd_roots(args) -> int:
    phi, _ = _system(args)
    rows = [{"name": phi.coeff_string(v), "coords": v.to_json()} for v in phi.positives]
    lines = [f"{phi.label}: {len(phi.roots)} roots, {phi.n_positive} positive"]
    lines += [f"{r['name']:>6}  ({', '.join(r['coords'])})" for r in rows]
    _emit(args, {"phi": phi.label, "positive_roots": rows, "system": phi.to_json()}, lines)
    return EXIT_OK


def cmd_group(args) -> int:
    _, W = _system(args)
    rows = [element_json(w) for w in W]
    lines = [f"|W({W.phi.label})| = {len(W)}"]
    lines += [f"{r['length']:>3} {r['sign']:+d}  {r['word']}" for r in rows]
    _emit(args, {"phi": W.phi.label, "order": len(W), "elements": rows}, lines)
    return EXIT_OK


def cmd_tabloids(args) -> int:
    _, W = _system(args)
    pair = _pair(args, W)
    tabs = all_tabloids(pair.frame)
    lines = [f"{t.rep.word_string():<24} {t.display}" for t in tabs]
    _emit(args, {"psi": pair.psi.diagram_label, "tabloids": [t.to_json() for t in tabs]}, lines)
    return EXIT_OK


def cmd_polytabloid(args) -> int:
    _, W = _system(args)
    pair = _pair(args, W)
    w = W.parse_word(args.d or "e")
    e = polytabloid(w, pair)
    d, rho = decompose(W, w, pair.psi_prime)
    payload = {
        "w": w.word_string(),
        "tableau": make_tableau(w, pair.frame).display(),
        "vector": e.to_json(pair.frame),
        "reduction": {"d": d.word_string(), "rho": rho.word_string(), "sign": rho.sign},
    }
    lines = [
        f"e({w} J, {w} J') = {e.format(pair.frame)}",
        f"w = d rho with d = {d}, rho = {rho}, s(rho) = {rho.sign:+d}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _garnir_text(rep: dict) -> list[str]:
    ctx = rep["context"]
    jp = ",".join(ctx["J'"])
    lines = [
        f"{ctx['phi']}  J={{{','.join(ctx['J'])}}}  J'={{{jp}}}  "
        f"J*={{{','.join(ctx['J*'])}}}  d={ctx['d']}",
        f"  H = {{{', '.join(rep['H'])}}}",
        f"  C = {{{', '.join(rep['C'])}}}",
        f"  G = {rep['garnir_element']}",
    ]
    if rep["pairing_found"]:
        rho = rep["global_rho"] or "per-element"
        lines.append(f"  pairing: rho = {rho}; annihilation zero: {rep['annihilation_zero']}")
        lines.append(f"  {rep['raw_form']}")
        lines.append(f"  {rep['reduced_form']}")
        if rep["coset_form"] != rep["reduced_form"]:
            lines.append(f"  (coset form) {rep['coset_form']}")
    else:
        lines.append("  pairing: none; hypothesis fails")
    return lines


def cmd_garnir(args) -> int:
    phi, W = _system(args)
    pair = _pair(args, W)
    d = W.parse_word(args.d or "e")
    if d not in set(pair.frame.col_reps):
        dd, rho = decompose(W, d, pair.psi_prime)
        raise UsageError(
            f"d = {d} is not a distinguished representative for W(J'); "
            f"write it as d rho with d = {dd}, rho = {rho} and use -d '{dd}'"
        )
    if args.all_jstar:
        stars = all_subsystems(phi)
    else:
        if args.Jstar is None:
            raise UsageError("garnir needs -Jstar or --all-jstar")
        stars = [subsystem_from_simples(phi, [phi.parse_root(s) for s in _roots_arg(args.Jstar)])]
    reports = []
    for star in stars:
        ctx = GarnirContext(pair, d, star)
        if args.all_jstar and find_pairing(ctx) is None:
            continue
        reports.append(garnir_report(ctx))
    if args.json:
        print(json.dumps(reports if args.all_jstar else reports[0], indent=2, ensure_ascii=False))
    else:
        for rep in reports:
            for line in _garnir_text(rep):
                print(line)
    return EXIT_OK


def cmd_classify(args) -> int:
    _, W = _system(args)
    if args.J is not None or args.Jp is not None:
        rows = [classify(_pair(args, W), Order(args.order))]
    else:
        from .suites import pairs_for

        rows = [classify(p, Order(args.order)) for p in pairs_for(W.phi.label)]
    fmt = lambda v: "-" if v is None else ("Y" if v is True else "N" if v is False else str(v))
    lines = ["J | J' | useful good vg(bruhat) vg(length) perfect | rank"]
    for r in rows:
        jp = ",".join(r["J'"])
        lines.append(
            f"{{{','.join(r['J'])}}} | {{{jp}}} | "
            + " ".join(fmt(r[k]) for k in ("useful", "good", "very_good(bruhat)", "very_good(length)", "perfect"))
            + f" | {r['specht_rank']}"
        )
    _emit(args, rows, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    phi, _ = _system(args)
    names = args.suite or None
    for n in names or []:
        if n not in SUITES and n != "example34":
            raise UsageError(f"unknown suite {n!r}")
    results = run_suites(phi.label, names)
    payload = [
        {"suite": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures, "notes": r.lines}
        for r in results
    ]
    lines = []
    for r in results:
        lines.append(r.summary())
        lines.extend(f"    {x}" for x in r.lines)
        lines.extend(f"    ! {x}" for x in r.failures[:20])
    _emit(args, payload, lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {
    "roots": cmd_roots,
    "group": cmd_group,
    "tabloids": cmd_tabloids,
    "polytabloid": cmd_polytabloid,
    "garnir": cmd_garnir,
    "verify": cmd_verify,
    "classify": cmd_classify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylgarnir", description="Garnir relations for Weyl groups")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", required=True, help="root system, e.g. G2 or G with --rank 2")
        p.add_argument("--rank", type=int, default=None)
        p.add_argument("--json", action="store_true")
        p.add_argument("-v", "--verbose", action="store_true")
        if name in ("tabloids", "polytabloid", "garnir", "classify"):
            p.add_argument("-J", nargs="+", default=None, help="row simple roots, e.g. 10,32")
            p.add_argument("-Jp", nargs="+", default=None, help="column simple roots")
        if name in ("polytabloid", "garnir"):
            p.add_argument("-d", default=None, help="group element as a word, e.g. 't2 t1'")
        if name == "garnir":
            p.add_argument("-Jstar", nargs="+", default=None)
            p.add_argument("--all-jstar", action="store_true")
        if name == "classify":
            p.add_argument("--order", choices=["bruhat", "length"], default="bruhat")
        if name == "verify":
            p.add_argument("--suite", action="append", default=None,
                           help="suite to run (repeatable): " + ", ".join(list(SUITES) + ["example34"]))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command in ("tabloids", "polytabloid", "garnir") and args.J is None:
        args.J = []
    if args.command in ("tabloids", "polytabloid", "garnir") and args.Jp is None:
        args.Jp = []
    try:
        return COMMANDS[args.command](args)
    except (UsageError, WeylGarnirError) as exc:
        print(f"weylgarnir {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
