import argparse
import re
import sys
import time
from typing import List, Optional, TextIO

from src.diagram import (
    class_to_dot,
    diagram_mutate_sequence,
    diagram_of,
    mutation_class,
    recognize_matrix_type,
    recognize_type,
)
from src.engine import (
    build_exchange_graph,
    denominator_vector,
    exchange_graph_to_dot,
    initial_seed,
    root_seed,
    run_summary,
)
from src.matrix_core import is_sign_skew_symmetric, mutate_sequence
from src.rootsys import clusters, format_root, root_system_of_type
from src.utils.errors import DomainError, InputError, NotSignSkewSymmetricError
from src.utils.io import dumps_json
from src.utils.reporting import render_table, save_table, summarize, table, table_records
from src.utils.validation import dump_matrix, load_diagram, load_matrix, load_seed
from src.utils.settings import DEFAULT_SEED_CAP, DEFAULT_SIZE_CAP
from src.verification import SUITES, run_suite

# --- Configuration ---
FORMATS = ("json", "dot", "text")
_FAMILY_ONLY = re.compile(r"^[A-G]$")


def _emit(out: TextIO, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


def _positions(text: str, labels) -> List[int]:
    """'2' or '2,1,3' -> 0-based positions; tokens are matrix labels (1..n by default)."""
    positions = []
    for token in text.split(","):
        token = token.strip()
        if token in labels:
            positions.append(list(labels).index(token))
            continue
        try:
            k = int(token)
        except ValueError:
            raise InputError(f"--at: '{token}' is neither a label nor an index")
        if not 1 <= k <= len(labels):
            raise InputError(f"--at: index {k} out of range 1..{len(labels)}")
        positions.append(k - 1)
    return positions


def _type_text(args) -> str:
    if not args.type:
        raise InputError("--type is required for this command")
    if _FAMILY_ONLY.match(args.type.upper()):
        if args.n is None:
            raise InputError(f"--type {args.type} needs --n")
        return f"{args.type.upper()}{args.n}"
    return args.type


def _start_seed(args):
    if args.seed:
        return load_seed(args.seed), None
    if args.matrix:
        B = load_matrix(args.matrix)
        if not is_sign_skew_symmetric(B):
            raise NotSignSkewSymmetricError("exchange matrix must be sign-skew-symmetric")
        return initial_seed(B), None
    rs = root_system_of_type(_type_text(args))
    return root_seed(rs), rs


def cmd_mutate(args, out: TextIO) -> int:
    if not args.at:
        raise InputError("mutate needs --at")
    if args.diagram:
        gamma = load_diagram(args.diagram)
        result = diagram_mutate_sequence(gamma, _positions(args.at, [str(i + 1) for i in range(gamma.n)]))
        data = result.to_dict()
    elif args.matrix:
        B = load_matrix(args.matrix)
        data = dump_matrix(mutate_sequence(B, _positions(args.at, B.labels)))
    else:
        raise InputError("mutate needs --matrix or --diagram")
    _emit(out, dumps_json(data))
    return 0


def cmd_classify(args, out: TextIO) -> int:
    if args.diagram:
        found = recognize_type(load_diagram(args.diagram))
    elif args.matrix:
        found = recognize_matrix_type(load_matrix(args.matrix))
    else:
        raise InputError("classify needs --matrix or --diagram")
    name = str(found) if found is not None else "2-infinite"
    # plain type name unless json is asked for
    if args.format == "json":
        _emit(out, dumps_json({"type": name, "finite": found is not None}))
    else:
        _emit(out, name)
    return 0


def cmd_class(args, out: TextIO) -> int:
    if args.diagram:
        gamma = load_diagram(args.diagram)
    elif args.matrix:
        gamma = diagram_of(load_matrix(args.matrix))
    else:
        raise InputError("class needs --matrix or --diagram")
    cap = args.cap if args.cap is not None else DEFAULT_SIZE_CAP
    result = mutation_class(gamma, size_cap=cap, verbose=args.verbose)
    if not result.closed:
        print(f"Warning: mutation class stopped at {len(result)} members ({result.reason})", file=sys.stderr)
    if args.format == "dot":
        _emit(out, class_to_dot(result))
    elif args.count:
        _emit(out, str(len(result)))
    elif args.format == "text":
        rows = [{"member": i + 1, "diagram": str(result.members[f])} for i, f in enumerate(result.sorted_members())]
        _emit(out, render_table(table(rows, ["member", "diagram"])))
    else:
        _emit(out, dumps_json({
            "closed": result.closed,
            "reason": result.reason,
            "size": len(result),
            "members": [result.members[f].to_dict() for f in result.sorted_members()],
        }))
    return 0


def cmd_clusters(args, out: TextIO) -> int:
    rs = root_system_of_type(_type_text(args))
    found = clusters(rs)
    if args.count:
        _emit(out, str(len(found)))
    elif args.format == "text":
        rows = [{"cluster": i + 1, "roots": ", ".join(format_root(v) for v in c)} for i, c in enumerate(found)]
        _emit(out, render_table(table(rows, ["cluster", "roots"])))
    else:
        _emit(out, dumps_json({"type": rs.name(), "count": len(found),
                               "clusters": [[list(v) for v in c] for c in found]}))
    return 0


def cmd_exchange_graph(args, out: TextIO) -> int:
    seed, _ = _start_seed(args)
    cap = args.cap if args.cap is not None else DEFAULT_SEED_CAP
    run = build_exchange_graph(seed, seed_cap=cap, verbose=args.verbose)
    if args.format == "dot":
        _emit(out, exchange_graph_to_dot(run))
    elif args.count:
        _emit(out, str(len(run.seeds)))
    else:
        _emit(out, dumps_json(run_summary(run)))
    return 0


def cmd_variables(args, out: TextIO) -> int:
    seed, _ = _start_seed(args)
    cap = args.cap if args.cap is not None else DEFAULT_SEED_CAP
    run = build_exchange_graph(seed, seed_cap=cap, verbose=args.verbose)
    rows = [{"variable": str(v), "denominator": format_root(denominator_vector(v))} for v in run.variable_list()]
    df = table(rows, ["variable", "denominator"])
    if args.count:
        _emit(out, str(len(rows)))
    elif args.format == "text":
        _emit(out, render_table(df))
    else:
        _emit(out, dumps_json({"closed": run.closed, "count": len(rows), "variables": table_records(df)}))
    return 0


def cmd_verify(args, out: TextIO) -> int:
    options = {"verbose": args.verbose}
    if args.type:
        if _FAMILY_ONLY.match(args.type.upper()):
            options["family"] = args.type.upper()
            if args.n is not None:
                options["n"] = args.n
        else:
            options["type"] = args.type
            match = re.match(r"^([A-D])(\d+)$", args.type.upper())
            if match:
                options["family"], options["n"] = match.group(1), int(match.group(2))
    start = time.time()
    report = run_suite(args.suite, options)
    if args.verbose:
        print(f"[INFO] suite {args.suite}: {len(report.rows)} rows in {time.time() - start:.2f} seconds",
              file=sys.stderr)
    if args.save:
        save_table(report.rows, args.save)
    if args.format == "text":
        status = "pass" if report.passed else "FAIL"
        _emit(out, f"{args.suite}: {status} ({len(report.rows)} checked)")
        if "type" in report.rows.columns and not report.rows.empty:
            _emit(out, render_table(summarize(report.rows, "type")))
        if report.counterexample:
            _emit(out, f"counterexample: {report.counterexample}")
    else:
        _emit(out, dumps_json(report.to_dict()))
    return 0 if report.passed else 1


COMMANDS = {
    "mutate": cmd_mutate,
    "classify": cmd_classify,
    "class": cmd_class,
    "clusters": cmd_clusters,
    "exchange-graph": cmd_exchange_graph,
    "variables": cmd_variables,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mutant",
                                     description="Finite type classification and seed engine for cluster algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "verify":
            p.add_argument("suite", choices=sorted(SUITES), help="The acceptance suite to run.")
            p.add_argument("--save", type=str, help="Also write the suite table as CSV to this path.")
        p.add_argument("--matrix", type=str, help="Exchange matrix JSON file, '-' for stdin.")
        p.add_argument("--diagram", type=str, help="Diagram JSON file, '-' for stdin.")
        p.add_argument("--seed", type=str, help="Seed JSON file with matrix and coefficients, '-' for stdin.")
        p.add_argument("--type", type=str, help="Cartan-Killing type such as A3, or a family with --n.")
        p.add_argument("--n", type=int, help="Rank, when --type names a family only.")
        p.add_argument("--at", type=str, help="Mutation position(s): a label or index, or a comma list.")
        p.add_argument("--cap", type=int, help="Safety cap on explored members or seeds.")
        p.add_argument("--format", choices=FORMATS, help="Output format; json unless the command says otherwise.")
        p.add_argument("--count", action="store_true", help="Print only the number of results.")
        p.add_argument("--verbose", action="store_true", help="Progress messages on stderr.")
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Runs one command; returns 0 on success, 1 on a domain error or failed suite, 2 on bad input."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.cap is not None and args.cap < 1:
        print(f"Error: --cap must be positive, got {args.cap}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except InputError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
