"""Command-line interface: gen, analyze, transform, verify, scan."""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import families
from .critical import kernel_invariants, verify_induced_and_scalar, verify_order_theorem
from .errors import CliqueRegError, EmptyEdgeSetError, HypothesisError, NotCliqueRegularError, ParseError
from .fileio import emit_graph, parse_graph
from .graph import (Graph, clique_number, clique_regular_witness, is_edge_regular, is_rca,
                    is_strongly_regular, nonadjacent_common_neighbor_bound, regular_degree)
from .report import Report
from .spectral import (clique_graph_charpoly_identity, clique_srg_classification, eigen_bounds_check,
                       is_boring, numeric_spectrum, walk_divisibility_check)
from .srg_search import (REFERENCE_TAU_RHO, SolveStats, build_tau_rho_system, enumerate_feasible_locally_linear,
                         measure_tau_rho, solve_nonneg_integer)
from .transforms import clique_graph, clique_subdivision, line_graph, rca_roundtrip, require_witness, \
    verify_incidence_identities

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_FAIL = 0, 1, 2, 3

# lattice checks work in dimension |E| + |E_S|; beyond this they are skipped
LATTICE_EDGE_LIMIT = 600
SPECTRUM_VERTEX_LIMIT = 400


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit with 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

GENERATORS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "complete": (1, families.complete_graph),
    "complete-bipartite": (2, families.complete_bipartite),
    "rook": (1, families.rook_graph),
    "triangular": (1, families.triangular_graph),
    "oa-block": (2, lambda n, m: families.block_graph(families.orthogonal_array(n, m))),
    "cycle": (1, families.cycle_graph),
    "path": (1, families.path_graph),
    "petersen": (0, families.petersen_graph),
    "gq22": (0, lambda: families.collinearity_graph(families.gq22())),
    "gq24": (0, families.gq24_graph),
    "brouwer-haemers": (0, families.brouwer_haemers_graph),
    "golay": (0, families.golay_coset_graph),
}


def cmd_gen(args: argparse.Namespace) -> int:
    arity, make = GENERATORS[args.family]
    if len(args.params) != arity:
        print(f"{args.family} takes {arity} integer parameter(s)", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(emit_graph(make(*args.params)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def clique_regular_values(g: Graph) -> list[int]:
    if g.m == 0:
        return []
    return [w for w in range(2, clique_number(g) + 1) if clique_regular_witness(g, w) is not None]


def analyze_lines(g: Graph) -> list[str]:
    out = [f"vertices: {g.n}", f"edges: {g.m}"]
    k = regular_degree(g)
    out.append(f"regular: {k if k is not None else 'no'}")
    out.append(f"components: {len(g.components())}")
    out.append(f"clique-number: {clique_number(g)}")
    omegas = clique_regular_values(g)
    out.append("clique-regular: " + (", ".join(f"omega={w}" for w in omegas) if omegas else "none"))
    erg = is_edge_regular(g) if g.m else None
    out.append("erg: " + (" ".join(map(str, erg)) if erg else "none"))
    srg = is_strongly_regular(g)
    out.append(f"srg: {srg if srg else 'none'}")
    if srg is not None and srg.r is not None:
        out.append(f"srg-eigenvalues: {srg.r}^{srg.f} {srg.s}^{srg.g}")
    rca = is_rca(g) if g.m else None
    out.append(f"rca: yes {rca}" if rca else "rca: no")
    if g.n <= SPECTRUM_VERTEX_LIMIT:
        out.append(f"spectrum: {numeric_spectrum(g)}")
    return out


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    for line in analyze_lines(g):
        print(line)
    return EXIT_OK


# ---------------------------------------------------------------------------
# transform
# ---------------------------------------------------------------------------

def cmd_transform(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if args.which == "line":
        if args.omega is not None:
            print("line takes no omega", file=sys.stderr)
            return EXIT_USAGE
        out = line_graph(g)
    else:
        if args.omega is None:
            print(f"{args.which} needs an omega value", file=sys.stderr)
            return EXIT_USAGE
        out = clique_graph(g, args.omega) if args.which == "clique" else clique_subdivision(g, args.omega)
    sys.stdout.write(emit_graph(out))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _tau_rho_reports(g: Graph, cg: Graph) -> list[Report]:
    p = is_strongly_regular(g)
    if p is None or p.lam != 1 or p.r is None:
        return []
    system = build_tau_rho_system(p)
    omega_c = p.k // 2
    seen = set()
    for v in range(cg.n):
        x = measure_tau_rho(cg, omega_c, v)
        if not system.is_satisfied(x):
            return [Report("tau-rho-system", False, f"vertex {v} violates the system: residual {system.residual(x)}")]
        seen.add(x)
    out = [Report("tau-rho-system", True, f"{len(seen)} distinct vector(s) over {cg.n} vertices")]
    ref = REFERENCE_TAU_RHO.get(p.as_tuple())
    if ref is not None:
        ok = seen == {ref}
        out.append(Report("tau-rho-reference", ok, "matches the known vector" if ok else f"measured {sorted(seen)}"))
    stats = SolveStats()
    sol = solve_nonneg_integer(system, stats)
    out.append(Report("tau-rho-solver", sol is not None, "solvable" if sol else stats.reason))
    return out


def _srg_reports(g: Graph, cg: Graph, omega: int) -> list[Report]:
    p = is_strongly_regular(g)
    if p is None or is_boring(p):
        return []
    out = []
    predicted = clique_srg_classification(p, omega)
    actual = is_strongly_regular(cg)
    if actual is None and cg.m == cg.n * (cg.n - 1) // 2:
        ok = predicted is not None and predicted.k == predicted.n - 1 == cg.n - 1
        out.append(Report("clique-srg-classification", ok, "clique graph is complete"))
    else:
        pa = predicted.as_tuple() if predicted else None
        aa = actual.as_tuple() if actual else None
        out.append(Report("clique-srg-classification", pa == aa, f"predicted {pa}, found {aa}"))
    if p.r is not None:
        out.append(walk_divisibility_check(p, omega, 20))
    return out


def verify_battery(g: Graph, omega: int, tol: float = 1e-9) -> list[Report]:
    """Every applicable check; NotCliqueRegularError when the hypothesis fails."""
    witness = require_witness(g, omega)
    cg = clique_graph(g, omega, witness)
    reports = [verify_incidence_identities(g, omega)]
    if regular_degree(g) is not None:
        reports.append(clique_graph_charpoly_identity(g, omega))
    reports.append(eigen_bounds_check(g, omega, tol))
    if is_rca(g) is not None:
        reports.append(rca_roundtrip(g))
        reports.append(nonadjacent_common_neighbor_bound(g))
    reports.extend(_srg_reports(g, cg, omega))
    reports.append(verify_order_theorem(g, omega))
    s_edges = omega * len(witness.cliques)
    if g.m + s_edges <= LATTICE_EDGE_LIMIT:
        reports.append(verify_induced_and_scalar(g, omega))
        try:
            kr = kernel_invariants(g, omega)
        except AssertionError as exc:
            reports.append(Report("kernel-bounds", False, str(exc)))
        else:
            verdict = "matches" if kr.conjecture_holds else "differs from"
            reports.append(Report("kernel-bounds", True,
                                  f"ker({kr.direction}) {kr.group}; m-n+c={kr.excess}; {verdict} (Z/{omega})^{abs(kr.excess)}"))
    else:
        reports.append(Report.skip("induced-and-scalar", f"{g.m + s_edges} edges exceed {LATTICE_EDGE_LIMIT}"))
    if omega == 3:
        reports.extend(_tau_rho_reports(g, cg))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    try:
        reports = verify_battery(g, args.omega, args.tolerance)
    except (NotCliqueRegularError, EmptyEdgeSetError):
        print(f"not {args.omega}-clique regular", file=sys.stderr)
        print(f"hypothesis: FAIL (not {args.omega}-clique regular)")
        return EXIT_HYPOTHESIS
    for r in reports:
        print(r.line())
    return EXIT_OK if all(reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def scan_lines(max_k: int, with_solver: bool = False) -> list[str]:
    out = []
    for p in enumerate_feasible_locally_linear(max_k):
        rec = f"{p.n} {p.k} {p.lam} {p.mu} {p.r} {p.f} {p.s} {p.g}"
        if with_solver:
            sol = solve_nonneg_integer(build_tau_rho_system(p, check_rank=False))
            rec += " solvable" if sol is not None else " unsolvable"
        out.append(rec)
    return out


def cmd_scan(args: argparse.Namespace) -> int:
    max_k = args.max_k if args.max_k is not None else args.k
    if max_k is None:
        print("scan needs K (positional or --max-k)", file=sys.stderr)
        return EXIT_USAGE
    lines = scan_lines(max_k, args.with_solver)
    print("n k lambda mu r f s g" + (" solver" if args.with_solver else ""))
    for line in lines:
        print(line)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquereg", description="Clique regular graphs, their clique graphs and critical groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a family member as a graph file")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="clique number, clique regularity, erg/srg/rca status")
    p.add_argument("file", help="graph file, or - for standard input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="line graph, clique graph or clique subdivision")
    p.add_argument("file")
    p.add_argument("which", choices=["line", "clique", "subdivision"])
    p.add_argument("omega", nargs="?", type=int)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="run every applicable identity for a given omega")
    p.add_argument("file")
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="feasible (n, k, 1, mu) parameter sets up to degree K")
    p.add_argument("k", nargs="?", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--with-solver", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotCliqueRegularError, EmptyEdgeSetError, HypothesisError) as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except CliqueRegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
