"""
Acceptance suites behind `main.py verify`. Each suite returns a SuiteReport
whose table has one row per checked instance and an `ok` column.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from src.diagram import (
    CartanKillingType,
    are_mutation_equivalent,
    canonical_form,
    clear_class_cache,
    diagram_mutate,
    diagram_mutate_sequence,
    diagram_of,
    recognize_type,
)
from src.diagram.corpus import (
    crown_diagram,
    crown_instances,
    crown_witness_sequence,
    dynkin_corpus,
    extended_dynkin_corpus,
    non_cyclic_cycle_corpus,
    t_diagram,
)
from src.engine import (
    build_exchange_graph,
    check_positivity,
    label_variables,
    matches_cluster_complex,
    root_seed,
)
from src.matrix_core import ExchangeMatrix, mutate
from src.models import (
    MIN_RANK,
    check_flip_coherence,
    compare_with_engine,
    special_seed,
    verify_geometric_identities,
)
from src.rootsys import (
    brute_force_clusters,
    clusters,
    complex_exchange_graph,
    dihedral_order,
    exceptional_roots,
    format_root,
    geodesic_loops,
    loop_is_cycle,
    k_epsilon,
    root_system_of_type,
)
from src.utils.errors import DomainError, InputError
from src.utils.reporting import failed_rows, table
from src.utils.settings import GEOMETRIC_MAX_POLYGON, threads_from_env

DIHEDRAL_ORDERS = {"A2": 5, "A3": 6, "B2": 3, "D4": 4, "G2": 4}
RANK_TWO_POLYGONS = {"A1×A1": 4, "A2": 5, "B2": 6, "G2": 8}
CLUSTER_COUNTS = {"A3": 14, "D4": 50}
ENGINE_TYPES = ("A3", "B3", "D4")
LOOP_TYPES = ("A3", "B3", "D4")
SPECIAL_TYPES = (("A", 3), ("B", 3))
EXPECTED_EXCEPTIONAL = {
    "G2": [(3, 2), (2, 1)],
    "F4": [(2, 3, 4, 2), (1, 2, 3, 2)],
    "E8": [(2, 3, 4, 6, 5, 4, 3, 2)],
}


@dataclass
class SuiteReport:
    name: str
    passed: bool
    rows: pd.DataFrame
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": int(len(self.rows)),
            "counterexample": self.counterexample,
        }


def _parallel(func: Callable, items: List, verbose: bool = False) -> List:
    """Runs func over items with MUTANT_THREADS workers, results in item order."""
    n_jobs = threads_from_env()
    if verbose:
        print(f"[INFO] {len(items)} work units on {n_jobs} worker(s)", file=sys.stderr)
    if n_jobs == 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs)(delayed(func)(item) for item in items)


def _report(name: str, rows: List[Dict], columns: List[str], describe: Callable[[Dict], str]) -> SuiteReport:
    df = table(rows, columns)
    bad = failed_rows(df)
    counterexample = describe(bad.iloc[0].to_dict()) if not bad.empty else None
    return SuiteReport(name, bad.empty and not df.empty, df, counterexample)


def _random_sign_skew(rng: np.random.Generator, n: int, bound: int = 3) -> ExchangeMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b = int(rng.integers(-bound, bound + 1))
            if b:
                rows[i][j] = b
                rows[j][i] = -int(np.sign(b)) * int(rng.integers(1, bound + 1))
    return ExchangeMatrix.from_rows(rows)


def _random_skew_symmetrizable(rng: np.random.Generator, n: int) -> ExchangeMatrix:
    """B = S D with S skew-symmetric and D positive diagonal, so D B is skew-symmetric."""
    d = rng.integers(1, 4, size=n)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = int(rng.integers(-2, 3))
            rows[i][j] = s * int(d[j])
            rows[j][i] = -s * int(d[i])
    return ExchangeMatrix.from_rows(rows)


def suite_involution(options: Dict[str, Any]) -> SuiteReport:
    rng = np.random.default_rng(options.get("random_state", 0))
    rows = []
    for trial in range(options.get("samples", 1000)):
        B = _random_sign_skew(rng, int(rng.integers(2, 7)))
        for k in range(B.n):
            rows.append({"trial": trial, "n": B.n, "k": k + 1, "ok": mutate(mutate(B, k), k) == B,
                         "matrix": str(list(map(list, B.rows)))})
    return _report("involution", rows, ["trial", "n", "k", "ok", "matrix"],
                   lambda r: f"mutation at {r['k']} is not an involution on {r['matrix']}")


def suite_commutation(options: Dict[str, Any]) -> SuiteReport:
    rng = np.random.default_rng(options.get("random_state", 0))
    rows = []
    for trial in range(options.get("samples", 500)):
        B = _random_skew_symmetrizable(rng, int(rng.integers(3, 7)))
        for k in range(B.n):
            ok = diagram_of(mutate(B, k)) == diagram_mutate(diagram_of(B), k)
            rows.append({"trial": trial, "n": B.n, "k": k + 1, "ok": ok, "matrix": str(list(map(list, B.rows)))})
    return _report("commutation", rows, ["trial", "n", "k", "ok", "matrix"],
                   lambda r: f"diagram and matrix mutation at {r['k']} disagree on {r['matrix']}")


def _recognize_row(item: Tuple[str, str, Any]) -> Dict:
    group, name, gamma = item
    found = recognize_type(gamma)
    if group == "dynkin":
        ok = found is not None and found == CartanKillingType.parse(name)
    else:
        ok = found is None
    return {"group": group, "name": name, "found": str(found) if found else "2-infinite", "ok": ok,
            "diagram": str(gamma)}


def suite_dynkin(options: Dict[str, Any]) -> SuiteReport:
    max_rank = options.get("max_rank", 8)
    items = [("dynkin", name, gamma) for name, gamma in dynkin_corpus(max_rank)]
    items += [("extended", name, gamma) for name, gamma in extended_dynkin_corpus(max_rank + 1)]
    items += [("cycle", f"cycle{gamma.n}", gamma) for gamma in non_cyclic_cycle_corpus(max_rank)]
    rows = _parallel(_recognize_row, items, options.get("verbose", False))
    return _report("dynkin", rows, ["group", "name", "found", "ok", "diagram"],
                   lambda r: f"{r['name']} recognized as {r['found']}: {r['diagram']}")


def _crown_row(instance: Tuple[int, int, int, int]) -> Dict:
    p, q, r, s = instance
    crown = crown_diagram(p, q, r, s)
    target = t_diagram(p + r - 1, q, s)
    witness = canonical_form(diagram_mutate_sequence(crown, crown_witness_sequence(p, q, r, s))) == canonical_form(target)
    ok = witness or are_mutation_equivalent(crown, target)
    return {"p": p, "q": q, "r": r, "s": s, "witness": witness, "ok": ok}


def suite_crown(options: Dict[str, Any]) -> SuiteReport:
    items = crown_instances(options.get("max_vertices", 9))
    rows = _parallel(_crown_row, items, options.get("verbose", False))
    return _report("crown", rows, ["p", "q", "r", "s", "witness", "ok"],
                   lambda r: f"crown S^{r['s']}_{{{r['p']},{r['q']},{r['r']}}} is not equivalent to its T-diagram")


def suite_counts(options: Dict[str, Any]) -> SuiteReport:
    rows = []
    for name, expected in RANK_TWO_POLYGONS.items():
        G = complex_exchange_graph(root_system_of_type(name))
        cycle = G.number_of_nodes() == expected and all(d == 2 for _, d in G.degree())
        rows.append({"type": name, "check": "polygon", "expected": expected, "found": G.number_of_nodes(),
                     "ok": cycle})
    for name, expected in CLUSTER_COUNTS.items():
        rs = root_system_of_type(name)
        found = len(clusters(rs))
        brute = {frozenset(c) for c in brute_force_clusters(rs)}
        ok = found == expected and brute == {frozenset(c) for c in clusters(rs)}
        rows.append({"type": name, "check": "clusters", "expected": expected, "found": found, "ok": ok})
    return _report("counts", rows, ["type", "check", "expected", "found", "ok"],
                   lambda r: f"{r['type']} {r['check']}: expected {r['expected']}, found {r['found']}")


def suite_loops(options: Dict[str, Any]) -> SuiteReport:
    types = [options["type"]] if options.get("type") else list(LOOP_TYPES)
    rows = []
    for name in types:
        rs = root_system_of_type(name)
        for loop in geodesic_loops(rs):
            rows.append({"type": name, "fixed": " ".join(format_root(v) for v in loop.fixed),
                         "weight": loop.weight, "length": loop.length, "expected": loop.expected_length,
                         "cycle": loop_is_cycle(rs, loop)})
            rows[-1]["ok"] = rows[-1]["cycle"] and loop.length == loop.expected_length
    return _report("loops", rows, ["type", "fixed", "weight", "length", "expected", "cycle", "ok"],
                   lambda r: f"{r['type']} loop fixing {r['fixed']} has length {r['length']}, expected {r['expected']}"
                             + ("" if r["cycle"] else " and is not a cycle"))


def _engine_row(name: str) -> Dict:
    rs = root_system_of_type(name)
    run = build_exchange_graph(root_seed(rs))
    variables = len(run.variables)
    try:
        label_variables(run, rs)
        denominators = True
    except DomainError as e:
        print(f"Warning: {name} denominators: {e}", file=sys.stderr)
        denominators = False
    complex_ok = run.closed and matches_cluster_complex(run, rs)
    positive = all(check_positivity(v) for v in run.variables.values())
    return {"type": name, "seeds": len(run.seeds), "variables": variables,
            "expected": len(rs.almost_positive_roots), "denominators": denominators,
            "complex": complex_ok, "positive": positive}


def suite_denominators(options: Dict[str, Any]) -> SuiteReport:
    types = [options["type"]] if options.get("type") else list(ENGINE_TYPES)
    rows = _parallel(_engine_row, types, options.get("verbose", False))
    for row in rows:
        row["ok"] = row["denominators"] and row["complex"] and row["variables"] == row["expected"]
    return _report("denominators", rows,
                   ["type", "seeds", "variables", "expected", "denominators", "complex", "ok"],
                   lambda r: f"{r['type']}: {r['variables']} variables for {r['expected']} roots, "
                             f"denominators {r['denominators']}, complex {r['complex']}")


def _special_row(item: Tuple[str, int]) -> Dict:
    family, n = item
    run = build_exchange_graph(special_seed(family, n))
    return {"type": f"{family}{n}", "coefficients": "special", "variables": len(run.variables),
            "ok": all(check_positivity(v) for v in run.variables.values())}


def suite_positivity(options: Dict[str, Any]) -> SuiteReport:
    verbose = options.get("verbose", False)
    rows = []
    for row in _parallel(_engine_row, list(ENGINE_TYPES), verbose):
        rows.append({"type": row["type"], "coefficients": "trivial", "variables": row["variables"],
                     "ok": row["positive"]})
    rows += _parallel(_special_row, list(SPECIAL_TYPES), verbose)
    return _report("positivity", rows, ["type", "coefficients", "variables", "ok"],
                   lambda r: f"{r['type']} with {r['coefficients']} coefficients has a negative coefficient")


def _plucker_targets(options: Dict[str, Any]) -> List[Tuple[str, int]]:
    family, n = options.get("family"), options.get("n")
    if family and n:
        return [(family, n)]
    targets = [("A", k) for k in range(1, GEOMETRIC_MAX_POLYGON - 2)]
    targets += [("B", k) for k in range(2, 5)] + [("C", k) for k in range(3, 5)] + [("D", 4)]
    if family:
        targets = [t for t in targets if t[0] == family]
    return targets


def _plucker_row(item: Tuple[str, int]) -> Dict:
    family, n = item
    report = verify_geometric_identities(family, n)
    return {"type": f"{family}{n}", "checked": report.checked, "failures": len(report.failures),
            "first": report.failures[0] if report.failures else "", "witness": str(report.witness or ""),
            "ok": report.passed}


def suite_plucker(options: Dict[str, Any]) -> SuiteReport:
    targets = _plucker_targets(options)
    for family, n in targets:
        if n < MIN_RANK.get(family, 1):
            raise InputError(f"no polygon model for {family}{n}")
    rows = _parallel(_plucker_row, targets, options.get("verbose", False))
    return _report("plucker", rows, ["type", "checked", "failures", "first", "witness", "ok"],
                   lambda r: f"{r['type']}: {r['first']} fails at {r['witness']}")


def suite_orders(options: Dict[str, Any]) -> SuiteReport:
    rows = []
    for name, expected in DIHEDRAL_ORDERS.items():
        found = dihedral_order(root_system_of_type(name))
        rows.append({"type": name, "check": "order", "root": "", "expected": expected, "found": found,
                     "ok": found == expected})
    names = [f"{f}{n}" for f in "ABCD" for n in range(1, 5)
             if n >= MIN_RANK[f]] + ["G2", "F4"]
    for name in names:
        rs = root_system_of_type(name)
        for beta in rs.almost_positive_roots:
            total = k_epsilon(rs, beta, 1) + k_epsilon(rs, beta, -1)
            rows.append({"type": name, "check": "k-counter", "root": format_root(beta), "expected": rs.h + 1,
                         "found": total, "ok": total == rs.h + 1})
    return _report("orders", rows, ["type", "check", "root", "expected", "found", "ok"],
                   lambda r: f"{r['type']} {r['check']} {r['root']}: expected {r['expected']}, found {r['found']}")


def suite_exceptional(options: Dict[str, Any]) -> SuiteReport:
    names = [name for name, _ in dynkin_corpus(options.get("max_rank", 8))]
    rows = []
    for name in sorted(set(names), key=lambda t: (t[0], int(t[1:]))):
        found = exceptional_roots(root_system_of_type(name))
        expected = EXPECTED_EXCEPTIONAL.get(name, [])
        rows.append({"type": name, "roots": ", ".join(format_root(v) for v in found),
                     "ok": sorted(found) == sorted(expected)})
    return _report("exceptional", rows, ["type", "roots", "ok"],
                   lambda r: f"{r['type']} has exceptional roots [{r['roots']}]")


def suite_coherence(options: Dict[str, Any]) -> SuiteReport:
    rows = []
    targets = [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 5)]
    targets += [("C", n) for n in range(3, 5)] + [("D", 4)]
    for family, n in targets:
        rows.append({"type": f"{family}{n}", "check": "flip graph", "ok": check_flip_coherence(family, n),
                     "detail": ""})
    for family, n in SPECIAL_TYPES:
        result = compare_with_engine(family, n)
        rows.append({"type": f"{family}{n}", "check": "engine relations", "ok": result.passed,
                     "detail": result.mismatches[0] if result.mismatches else ""})
    return _report("coherence", rows, ["type", "check", "ok", "detail"],
                   lambda r: f"{r['type']} {r['check']} fails {r['detail']}".strip())


SUITES: Dict[str, Callable[[Dict[str, Any]], SuiteReport]] = {
    "involution": suite_involution,
    "commutation": suite_commutation,
    "dynkin": suite_dynkin,
    "crown": suite_crown,
    "counts": suite_counts,
    "loops": suite_loops,
    "denominators": suite_denominators,
    "positivity": suite_positivity,
    "plucker": suite_plucker,
    "orders": suite_orders,
    "exceptional": suite_exceptional,
    "coherence": suite_coherence,
}


def run_suite(name: str, options: Optional[Dict[str, Any]] = None) -> SuiteReport:
    if name not in SUITES:
        raise InputError(f"unknown suite '{name}', expected one of {', '.join(SUITES)}")
    # each suite starts from an empty recognition cache
    clear_class_cache()
    try:
        return SUITES[name](dict(options or {}))
    finally:
        clear_class_cache()
