"""Command line interface: ``mhk <command> ...``.

Exit codes: 0 success, 1 the checked property is false, 2 usage / input
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from . import designs, horn, matroid, minrep, set_family
from .bits import fmt, vset
from .errors import BudgetExceeded, MatroidHornError, set_budget

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class Reporter:
    def __init__(self, fmt_name: str, stream):
        self.json = fmt_name == "json-lines"
        self.stream = stream

    def emit(self, fields: dict[str, Any], text_blocks: dict[str, str] | None = None) -> None:
        text_blocks = text_blocks or {}
        if self.json:
            record = dict(fields)
            record.update(text_blocks)
            self.stream.write(json.dumps(record, sort_keys=False) + "\n")
            return
        for key, value in fields.items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, list):
                value = " ".join(map(str, value))
            self.stream.write(f"{key}: {value}\n")
        for key, block in text_blocks.items():
            self.stream.write(f"--- {key}\n{block}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse_set(text: str) -> int:
    tokens = text.replace(",", " ").split()
    try:
        return vset(int(t) for t in tokens)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad set {text!r}") from None


def _family_text(f) -> str:
    return set_family.format_hypergraph(f)


def cmd_dualize(args, out: Reporter) -> int:
    f = set_family.parse_hypergraph(_read(args.hypergraph))
    d = set_family.minimal_transversals(f)
    out.emit({"command": "dualize", "n": f.n, "transversals": len(d)}, {"family": _family_text(d)})
    return EXIT_OK


def cmd_closure(args, out: Reporter) -> int:
    phi = horn.parse_cnf(_read(args.cnf))
    z = _parse_set(args.set)
    if z >> phi.n:
        raise MatroidHornError(f"--set mentions variables outside 0..{phi.n - 1}")
    closed, steps = horn.forward_chain(phi, z)
    out.emit({"command": "closure", "start": fmt(z), "closure": fmt(closed), "steps": steps})
    return EXIT_OK


def cmd_check_matroid(args, out: Reporter) -> int:
    f = set_family.parse_hypergraph(_read(args.hypergraph))
    check = matroid.check_circuit_axioms(f)
    fields: dict[str, Any] = {"command": "check-matroid", "ok": check.ok}
    if not check.ok:
        fields["axiom"] = check.axiom
        fields["witness"] = check.describe()
    out.emit(fields)
    return EXIT_OK if check.ok else EXIT_FALSE


def cmd_characterize(args, out: Reporter) -> int:
    f = set_family.parse_hypergraph(_read(args.hypergraph))
    report = matroid.characterization_report(f)
    fields: dict[str, Any] = {"command": "characterize", "consistent": report.consistent}
    for name in matroid.CRITERIA:
        fields[name] = report.criteria[name]
        if name in report.witnesses:
            fields[name + "_witness"] = str(report.witnesses[name])
    out.emit(fields)
    return EXIT_OK if report.is_matroid else EXIT_FALSE


def cmd_is_matroid_horn(args, out: Reporter) -> int:
    phi = horn.parse_cnf(_read(args.cnf))
    result = matroid.is_matroid_horn(phi)
    blocks = {"circuits": _family_text(result.circuits)} if result.circuits else {}
    out.emit({"command": "is-matroid-horn", "value": result.value, "reason": result.reason}, blocks)
    return EXIT_OK if result else EXIT_FALSE


def cmd_is_hypergraph_horn(args, out: Reporter) -> int:
    phi = horn.parse_cnf(_read(args.cnf))
    value = horn.is_hypergraph_horn(phi)
    out.emit({"command": "is-hypergraph-horn", "value": value})
    return EXIT_OK if value else EXIT_FALSE


def cmd_implicate_dual(args, out: Reporter) -> int:
    phi = horn.parse_cnf(_read(args.cnf))
    dual = horn.implicate_dual(phi)
    # the dual is hypergraph Horn, so its hypergraph Horn majorant is itself
    cnf = horn.prime_implicates(horn.hypergraph_horn_majorant(dual))
    out.emit(
        {"command": "implicate-dual", "n": phi.n, "true_sets": int(dual.truth.sum()), "clauses": len(cnf)},
        {"cnf": horn.format_cnf(cnf)},
    )
    return EXIT_OK


def _load_matroid(args):
    if args.binary:
        m = matroid.circuits_from_binary(matroid.parse_matrix(_read(args.binary)))
        if args.hypergraph:
            given = set_family.parse_hypergraph(_read(args.hypergraph))
            if given != m.circuits:
                raise MatroidHornError("hypergraph does not match the circuits of --binary")
        return m, True
    if not args.hypergraph:
        raise MatroidHornError("need a circuit hypergraph or --binary <matrix>")
    return matroid.Matroid(set_family.parse_hypergraph(_read(args.hypergraph))), False


def cmd_min(args, out: Reporter) -> int:
    m, binary = _load_matroid(args)
    fn = {
        "min-generator": minrep.min_generator,
        "min-circuits": minrep.min_circuit_subsystem,
        "min-clauses": minrep.min_circuit_clauses,
    }[args.command]
    started = time.perf_counter()
    cost = fn(m, args.method, binary=binary)
    fields: dict[str, Any] = {
        "command": args.command,
        "objective": cost.objective,
        "method": cost.method,
        "value": cost.value,
        "exact": cost.exact,
        "unique": "unknown" if cost.unique is None else cost.unique,
    }
    if args.timing:
        fields["seconds"] = round(time.perf_counter() - started, 6)
    if isinstance(cost.witness, horn.DefiniteCNF):
        block = horn.format_cnf(cost.witness)
    else:
        block = _family_text(cost.witness)
    out.emit(fields, {"witness": block})
    return EXIT_OK


def cmd_construct(args, out: Reporter) -> int:
    n, r, kind = args.n, args.r, args.kind
    fields: dict[str, Any] = {"command": "construct-uniform", "kind": kind, "n": n, "r": r}
    if kind == "clauses":
        phi = minrep.uniform_clause_representation(n, r)
        valid = horn.equivalent(phi, matroid.canonical_cnf(matroid.uniform_matroid(n, r))) if n <= 16 else None
        fields.update(size=len(phi), valid="unchecked" if valid is None else valid)
        out.emit(fields, {"cnf": horn.format_cnf(phi)})
        return EXIT_OK if valid is not False else EXIT_FALSE
    if kind == "interval":
        fam = minrep.uniform_interval_generator(n, r)
        closed, _ = minrep.generate_closure(fam, matroid.uniform_matroid(n, r).circuits)
        valid = len(closed) == len(matroid.uniform_matroid(n, r).circuits)
    else:
        if kind == "star":
            fam = minrep.uniform_star_representation(n, r, args.v)
        elif kind == "rank2":
            if r != 2:
                raise MatroidHornError("rank2 construction needs --r 2")
            fam, p, b = minrep.rank2_group_representation(n)
            fields.update(p=p, b=b)
        elif kind == "doubling":
            if not args.cover:
                raise MatroidHornError("doubling construction needs --cover <file>")
            cover = designs.parse_design(_read(args.cover))
            fam = minrep.covering_doubling_representation(n, r, cover)
        else:
            raise MatroidHornError(f"unknown construction {kind!r}")
        valid = designs.verify(designs.DesignSpec("implication", n, r + 1, r), fam).valid
    fields.update(size=len(fam), valid=valid)
    header = f"construct-uniform {kind} n={n} r={r}"
    out.emit(fields, {"family": set_family.format_hypergraph(fam, [header])})
    return EXIT_OK if valid else EXIT_FALSE


def cmd_design(args, out: Reporter) -> int:
    action = args.action
    if action == "verify":
        spec = designs.DesignSpec(args.kind, args.n, args.q, args.r)
        report = designs.verify(spec, designs.parse_design(_read(args.file)))
        fields: dict[str, Any] = {"command": "design verify", "spec": spec.header(), "valid": report.valid}
        if not report.valid:
            fields["witness"] = fmt(report.witness)
            fields["reason"] = report.reason
        out.emit(fields)
        return EXIT_OK if report.valid else EXIT_FALSE
    if action == "covering-number":
        value, witness = designs.covering_number_bruteforce(args.n, args.q, args.r)
        spec = designs.DesignSpec("covering", args.n, args.q, args.r)
        out.emit(
            {"command": "design covering-number", "n": args.n, "q": args.q, "r": args.r, "value": value},
            {"witness": set_family.format_hypergraph(witness, [spec.header()])},
        )
        return EXIT_OK
    if action == "fort-hedlund":
        out.emit({"command": "design fort-hedlund", "n": args.n, "value": designs.fort_hedlund(args.n)})
        return EXIT_OK
    if action == "schonheim":
        value = designs.schonheim_bound(args.n, args.q, args.r)
        out.emit({"command": "design schonheim", "n": args.n, "q": args.q, "r": args.r, "value": value})
        return EXIT_OK
    if action == "steiner-bose":
        fam = designs.steiner_triple_bose(args.p)
        spec = designs.DesignSpec("steiner", args.p, 3, 2)
        out.emit(
            {"command": "design steiner-bose", "p": args.p, "triples": len(fam)},
            {"family": set_family.format_hypergraph(fam, [spec.header()])},
        )
        return EXIT_OK
    raise MatroidHornError(f"unknown design action {action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mhk", description="Matroid Horn function toolkit")
    parser.add_argument("--format", choices=("text", "json-lines"), default="text")
    parser.add_argument("--budget", type=int, default=None, help="log2 of the enumeration budget")
    parser.add_argument("--threads", type=int, default=None, help="worker cap (computation is sequential)")
    parser.add_argument("--output", default="-", help="report destination (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dualize", help="minimal transversals of a hypergraph")
    p.add_argument("hypergraph")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("closure", help="forward chaining closure and step count")
    p.add_argument("--cnf", required=True)
    p.add_argument("--set", required=True, help="start set, e.g. '0 2' or '0,2'")
    p.set_defaults(func=cmd_closure)

    for name, func in (("check-matroid", cmd_check_matroid), ("characterize", cmd_characterize)):
        p = sub.add_parser(name)
        p.add_argument("hypergraph")
        p.set_defaults(func=func)

    for name, func in (
        ("is-matroid-horn", cmd_is_matroid_horn),
        ("is-hypergraph-horn", cmd_is_hypergraph_horn),
        ("implicate-dual", cmd_implicate_dual),
    ):
        p = sub.add_parser(name)
        p.add_argument("--cnf", required=True)
        p.set_defaults(func=func)

    for name in ("min-generator", "min-circuits", "min-clauses"):
        p = sub.add_parser(name)
        p.add_argument("hypergraph", nargs="?")
        methods = ("exact", "chordless", "uniform") if name == "min-clauses" else ("exact", "chordless")
        p.add_argument("--method", choices=methods, default="exact")
        p.add_argument("--binary", help="binary matrix file presenting the matroid")
        p.add_argument("--timing", action="store_true", help="include wall-clock seconds")
        p.set_defaults(func=cmd_min)

    p = sub.add_parser("construct-uniform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", required=True, choices=("interval", "star", "clauses", "rank2", "doubling"))
    p.add_argument("--cover")
    p.add_argument("--v", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("design")
    p.add_argument("action", choices=("verify", "covering-number", "fort-hedlund", "schonheim", "steiner-bose"))
    p.add_argument("file", nargs="?")
    p.add_argument("--kind", choices=designs.KINDS, default="covering")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_design)
    return parser


def _check_design_args(args, parser) -> None:
    if args.command != "design":
        return
    need = {
        "verify": ("file", "n", "q", "r"),
        "covering-number": ("n", "q", "r"),
        "fort-hedlund": ("n",),
        "schonheim": ("n", "q", "r"),
        "steiner-bose": ("p",),
    }[args.action]
    missing = [name for name in need if getattr(args, name) is None]
    if missing:
        parser.error(f"design {args.action} needs " + ", ".join("--" + m if m != "file" else "<file>" for m in missing))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_design_args(args, parser)
    threads = args.threads if args.threads is not None else os.environ.get("MHK_THREADS")
    try:
        if threads is not None and int(threads) < 1:
            raise ValueError
    except ValueError:
        parser.error(f"--threads / MHK_THREADS must be a positive integer, got {threads!r}")
    previous = set_budget(args.budget) if args.budget is not None else None
    stream = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8")
    try:
        return args.func(args, Reporter(args.format, stream))
    except BudgetExceeded as exc:
        print(f"mhk: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MatroidHornError, OSError, ValueError) as exc:
        print(f"mhk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if stream is not sys.stdout:
            stream.close()
        if previous is not None:
            set_budget(previous)


if __name__ == "__main__":
    sys.exit(main())
