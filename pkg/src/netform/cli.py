"""Command-line front end.

Subcommands: form, payoffs, equilibria, compromise, check-disjoint,
generate.  Players, profiles, and arcs are 1-based everywhere here.
Exit codes: 0 success, 1 negative domain verdict (an instability the
caller asked to be flagged), 2 usage, parse, or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .compromise import PayoffMatrix, compromise_solution, regret_vectors
from .datasets import BUILTIN, random_instance
from .formation import Network, form_network
from .instance_io import (
    DocumentError,
    load_instance_file,
    save_instance,
    to_csv,
)
from .model import ActivationRule, GameInstance, validate_instance
from .payoffs import payoff_vector
from .stability import (
    check_disjoint_stability,
    is_stable,
    restricted_equilibria,
)


def _fmt(value: Fraction) -> str:
    return str(value)


def _load(name: str, strict: bool) -> GameInstance:
    if name in BUILTIN:
        instance = BUILTIN[name]()
        report = validate_instance(instance, strict=strict)
        if report.errors:
            raise DocumentError("; ".join(report.errors))
    else:
        instance = load_instance_file(name, strict=strict)
        report = validate_instance(instance, strict=False)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return instance


def _rule(instance: GameInstance, args) -> ActivationRule:
    chosen = ActivationRule(args.rule) if args.rule else None
    return instance.rule_or(chosen)


def _arcs_1based(arcs) -> list[list[int]]:
    return [[i + 1, j + 1] for i, j in sorted(arcs)]


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )


# ---- form


def _profile_networks(instance: GameInstance, which: int | None) -> list[tuple[int, Network]]:
    if not instance.profiles:
        raise ValueError("instance has no stored profiles")
    if which is None:
        return [(k, form_network(p)) for k, p in enumerate(instance.profiles)]
    if not 1 <= which <= len(instance.profiles):
        raise ValueError(
            f"profile {which} out of range 1..{len(instance.profiles)}"
        )
    return [(which - 1, form_network(instance.profiles[which - 1]))]


def cmd_form(args) -> int:
    instance = _load(args.instance, args.strict)
    formed = _profile_networks(instance, args.profile)
    if args.format == "json":
        payload = {
            "profiles": [
                {
                    "profile": k + 1,
                    "matrix": [list(row) for row in net.matrix()],
                    "arcs": _arcs_1based(net.arcs),
                }
                for k, net in formed
            ]
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [
            (k + 1, i + 1, j + 1)
            for k, net in formed
            for i, j in sorted(net.arcs)
        ]
        print(to_csv(["profile", "from", "to"], rows).rstrip("\n"))
    else:
        blocks = []
        for k, net in formed:
            lines = [f"profile {k + 1}"]
            lines += [" ".join(str(v) for v in row) for row in net.matrix()]
            blocks.append("\n".join(lines))
        print("\n\n".join(blocks))
    return 0


# ---- payoffs


def _payoff_worker(payload) -> tuple[Fraction, ...]:
    instance, index, rule_value = payload
    rule = ActivationRule(rule_value)
    return payoff_vector(instance, form_network(instance.profiles[index]), rule)


def _map_jobs(worker, payloads, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, payloads))
    return [worker(p) for p in payloads]


def cmd_payoffs(args) -> int:
    instance = _load(args.instance, args.strict)
    rule = _rule(instance, args)
    payloads = [(instance, k, rule.value) for k in range(len(instance.profiles))]
    vectors = _map_jobs(_payoff_worker, payloads, args.jobs)
    mismatches = []
    if instance.payoff_matrix is not None:
        for k, vec in enumerate(vectors):
            for p, value in enumerate(vec):
                if k < len(instance.payoff_matrix) and value != instance.payoff_matrix[k][p]:
                    mismatches.append((k, p, value, instance.payoff_matrix[k][p]))
    if args.format == "json":
        payload = {
            "rule": rule.value,
            "payoffs": [[_fmt(v) for v in vec] for vec in vectors],
            "reference_mismatches": [
                {
                    "profile": k + 1,
                    "player": p + 1,
                    "computed": _fmt(computed),
                    "reference": _fmt(reference),
                }
                for k, p, computed, reference in mismatches
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [
            [k + 1] + [_fmt(v) for v in vec] for k, vec in enumerate(vectors)
        ]
        header = ["profile"] + [f"p{p + 1}" for p in range(instance.n)]
        print(to_csv(header, rows).rstrip("\n"))
    else:
        rows = [["profile"] + [f"p{p + 1}" for p in range(instance.n)]]
        rows += [
            [str(k + 1)] + [_fmt(v) for v in vec] for k, vec in enumerate(vectors)
        ]
        out = [f"rule: {rule.value}", _table(rows)]
        if mismatches:
            out.append("")
            out.append("reference table disagreements:")
            for k, p, computed, reference in mismatches:
                out.append(
                    f"  profile {k + 1} player {p + 1}: "
                    f"computed {_fmt(computed)}, reference {_fmt(reference)}"
                )
        print("\n".join(out))
    return 0


# ---- equilibria


def _stability_worker(payload):
    instance, index, rule_value = payload
    rule = ActivationRule(rule_value)
    net = form_network(instance.profiles[index])
    return is_stable(instance, net, rule)


def cmd_equilibria(args) -> int:
    instance = _load(args.instance, args.strict)
    rule = _rule(instance, args)
    failed = False
    if args.mode == "restricted":
        if not instance.profiles:
            raise ValueError("restricted mode needs stored profiles")
        report = restricted_equilibria(instance, rule)
        failed = len(report.equilibria) < len(instance.profiles)
        if args.format == "json":
            payload = {
                "mode": "restricted",
                "rule": rule.value,
                "equilibria": [s + 1 for s in report.equilibria],
                "deviations": [
                    {
                        "source": d.source + 1,
                        "target": d.target + 1,
                        "player": d.player + 1,
                        "gain": _fmt(d.gain),
                    }
                    for d in report.deviations
                ],
            }
            print(json.dumps(payload, indent=2))
        elif args.format == "csv":
            rows = [
                [d.source + 1, d.target + 1, d.player + 1, _fmt(d.gain)]
                for d in report.deviations
            ]
            print(to_csv(["source", "target", "player", "gain"], rows).rstrip("\n"))
        else:
            lines = [
                f"rule: {rule.value}",
                "equilibria: " + " ".join(str(s + 1) for s in report.equilibria),
            ]
            for d in report.deviations:
                lines.append(
                    f"profile {d.source + 1} -> profile {d.target + 1}: "
                    f"player {d.player + 1} gains {_fmt(d.gain)}"
                )
            print("\n".join(lines))
    else:
        payloads = [(instance, k, rule.value) for k in range(len(instance.profiles))]
        reports = _map_jobs(_stability_worker, payloads, args.jobs)
        failed = any(not r.stable for r in reports)
        if args.format == "json":
            items = []
            for k, rep in enumerate(reports):
                item = {"profile": k + 1, "stable": rep.stable}
                if rep.witness is not None:
                    item["witness"] = {
                        "player": rep.witness.player + 1,
                        "removed_arcs": _arcs_1based(rep.witness.removed_arcs),
                        "gain": _fmt(rep.witness.gain),
                    }
                items.append(item)
            print(json.dumps({"mode": "full", "rule": rule.value, "profiles": items}, indent=2))
        elif args.format == "csv":
            rows = []
            for k, rep in enumerate(reports):
                if rep.witness is None:
                    rows.append([k + 1, "stable", "", "", ""])
                else:
                    arcs = ";".join(
                        f"{i + 1}-{j + 1}" for i, j in rep.witness.removed_arcs
                    )
                    rows.append(
                        [k + 1, "unstable", rep.witness.player + 1, arcs, _fmt(rep.witness.gain)]
                    )
            print(to_csv(["profile", "verdict", "player", "removed", "gain"], rows).rstrip("\n"),
            )
        else:
            lines = [f"rule: {rule.value}"]
            for k, rep in enumerate(reports):
                if rep.stable:
                    lines.append(f"profile {k + 1}: stable")
                else:
                    w = rep.witness
                    arcs = " ".join(f"({i + 1},{j + 1})" for i, j in w.removed_arcs)
                    lines.append(
                        f"profile {k + 1}: unstable, player {w.player + 1} "
                        f"removes {arcs} and gains {_fmt(w.gain)}"
                    )
            print("\n".join(lines))
    if args.assert_stable and failed:
        return 1
    return 0


# ---- compromise


def cmd_compromise(args) -> int:
    instance = _load(args.instance, args.strict)
    rule = _rule(instance, args)
    if args.source == "printed":
        if instance.payoff_matrix is None:
            raise ValueError("instance carries no reference payoff table")
        rows = instance.payoff_matrix
    else:
        if not instance.profiles:
            raise ValueError("instance has no stored profiles")
        rows = tuple(
            payoff_vector(instance, form_network(p), rule)
            for p in instance.profiles
        )
    matrix = PayoffMatrix.of(rows)
    report = compromise_solution(matrix, refine_ties=args.refine_ties)
    shown = (
        regret_vectors(matrix, ascending=True) if args.sorted else report.regrets
    )
    if args.format == "json":
        payload = {
            "source": args.source,
            "rule": rule.value,
            "ideal": [_fmt(v) for v in report.ideal],
            "regrets": [[_fmt(v) for v in row] for row in shown],
            "row_max": [_fmt(v) for v in report.row_max],
            "value": _fmt(report.value),
            "solutions": [s + 1 for s in report.solutions],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        header = ["profile"] + [f"p{p + 1}" for p in range(matrix.n_players)] + ["max"]
        rows_out = [
            [k + 1] + [_fmt(v) for v in row] + [_fmt(report.row_max[k])]
            for k, row in enumerate(shown)
        ]
        print(to_csv(header, rows_out).rstrip("\n"))
    else:
        lines = [
            f"source: {args.source}",
            f"rule: {rule.value}",
            "ideal: " + " ".join(_fmt(v) for v in report.ideal),
        ]
        rows_t = [["profile"] + [f"p{p + 1}" for p in range(matrix.n_players)] + ["max"]]
        rows_t += [
            [str(k + 1)] + [_fmt(v) for v in row] + [_fmt(report.row_max[k])]
            for k, row in enumerate(shown)
        ]
        lines.append(_table(rows_t))
        lines.append(f"value: {_fmt(report.value)}")
        lines.append("solutions: " + " ".join(str(s + 1) for s in report.solutions))
        print("\n".join(lines))
    return 0


# ---- check-disjoint


def cmd_check_disjoint(args) -> int:
    instance = _load(args.instance, args.strict)
    rule = _rule(instance, args)
    if args.network is not None:
        try:
            rows = json.loads(args.network.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DocumentError(f"network file is not valid JSON: {exc}") from None
        net = Network.from_matrix(rows)
        if net.n != instance.n:
            raise ValueError(
                f"network on {net.n} players, instance has {instance.n}"
            )
    elif args.profile is not None:
        [(_, net)] = _profile_networks(instance, args.profile)
    else:
        raise ValueError("pick a network: --profile K or --network FILE")
    report = check_disjoint_stability(instance, net, rule)
    if args.format == "json":
        payload = {"rule": rule.value, "stable": report.stable}
        if report.witness is not None:
            payload["witness"] = {
                "player": report.witness.player + 1,
                "removed_arcs": _arcs_1based(report.witness.removed_arcs),
                "gain": _fmt(report.witness.gain),
            }
        print(json.dumps(payload, indent=2))
    else:
        if report.stable:
            print("stable: every active coalition has nonnegative income")
        else:
            lines = ["unstable: an active coalition has negative income"]
            if report.witness is not None:
                w = report.witness
                arcs = " ".join(f"({i + 1},{j + 1})" for i, j in w.removed_arcs)
                lines.append(
                    f"witness: player {w.player + 1} removes {arcs} "
                    f"and gains {_fmt(w.gain)}"
                )
            print("\n".join(lines))
    return 0 if report.stable else 1


# ---- generate


def cmd_generate(args) -> int:
    lo, hi = args.income_range
    instance = random_instance(
        seed=args.seed,
        n=args.players,
        coalition_count=args.coalitions,
        income_range=(lo, hi),
        disjoint=args.disjoint,
    )
    text = save_instance(instance)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netform",
        description=(
            "Form directed networks from offer/acceptance profiles, compute "
            "coalition payoffs exactly, check stability, and pick compromise "
            "outcomes.  INSTANCE is a JSON file or a builtin name: "
            + ", ".join(sorted(BUILTIN))
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance(p):
        p.add_argument("instance", help="instance file or builtin name")
        p.add_argument(
            "--strict",
            action="store_true",
            help="treat share-sum warnings as errors",
        )

    def add_rule(p):
        p.add_argument(
            "--rule",
            choices=[r.value for r in ActivationRule],
            help="coalition activation rule (default: the instance's, else linked)",
        )

    def add_format(p, choices=("table", "json", "csv")):
        p.add_argument("--format", choices=list(choices), default="table")

    def add_jobs(p):
        p.add_argument(
            "--jobs",
            type=int,
            default=1,
            metavar="N",
            help="compute profiles in N processes (output is identical)",
        )

    p_form = sub.add_parser("form", help="form networks from stored profiles")
    add_instance(p_form)
    p_form.add_argument(
        "profile",
        nargs="?",
        type=int,
        default=None,
        help="1-based profile index (default: all)",
    )
    add_format(p_form)
    p_form.set_defaults(func=cmd_form)

    p_pay = sub.add_parser("payoffs", help="payoff vectors of the formed networks")
    add_instance(p_pay)
    add_rule(p_pay)
    add_format(p_pay)
    add_jobs(p_pay)
    p_pay.set_defaults(func=cmd_payoffs)

    p_eq = sub.add_parser("equilibria", help="stability of the stored profiles")
    add_instance(p_eq)
    p_eq.add_argument(
        "--mode",
        choices=["restricted", "full"],
        default="restricted",
        help=(
            "restricted: deviations only between stored profiles; "
            "full: every break deviation"
        ),
    )
    add_rule(p_eq)
    add_format(p_eq)
    add_jobs(p_eq)
    p_eq.add_argument(
        "--assert-stable",
        action="store_true",
        help="exit 1 when any profile fails",
    )
    p_eq.set_defaults(func=cmd_equilibria)

    p_comp = sub.add_parser("compromise", help="min-max-regret selection")
    add_instance(p_comp)
    p_comp.add_argument(
        "--source",
        choices=["printed", "computed"],
        default="printed",
        help="use the instance's reference payoff table or recompute",
    )
    add_rule(p_comp)
    add_format(p_comp)
    p_comp.add_argument(
        "--sorted",
        action="store_true",
        help="show each regret row sorted ascending (display only)",
    )
    p_comp.add_argument(
        "--refine-ties",
        action="store_true",
        help="break value ties by comparing whole regret vectors",
    )
    p_comp.set_defaults(func=cmd_compromise)

    p_chk = sub.add_parser(
        "check-disjoint",
        help="fast stability verdict for pairwise-disjoint coalitions",
    )
    add_instance(p_chk)
    group = p_chk.add_mutually_exclusive_group(required=True)
    group.add_argument("--profile", type=int, help="check a stored profile's network")
    group.add_argument(
        "--network",
        type=Path,
        help="check an adjacency matrix from a JSON file",
    )
    add_rule(p_chk)
    add_format(p_chk, choices=("table", "json"))
    p_chk.set_defaults(func=cmd_check_disjoint)

    p_gen = sub.add_parser("generate", help="write a seeded random instance")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--players", type=int, default=5)
    p_gen.add_argument("--coalitions", type=int, default=4)
    p_gen.add_argument(
        "--income-range",
        type=int,
        nargs=2,
        default=(-5, 5),
        metavar=("LO", "HI"),
    )
    p_gen.add_argument("--disjoint", action="store_true")
    p_gen.add_argument(
        "-o",
        "--out",
        type=Path,
        default=None,
        help="write to a file instead of stdout",
    )
    p_gen.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
