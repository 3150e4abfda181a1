"""Command line for metric dimension of graphs and line graphs.

Subcommands::

    line-metric mu FILE [--exact | --line]
    line-metric construct FILE --method {theorem1,spantree,tree}
    line-metric gen FAMILY D [N] [--out FILE]
    line-metric verify FILE --landmarks a,b,... [--line]
    line-metric bounds FILE
    line-metric crosscheck {de_bruijn,kautz} D N

Results go to stdout (``--json`` for the versioned certificate), diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from src.cli.certificates import (
    BoundsJson,
    CertificateJson,
    CheckJson,
    InputSummary,
    RecursionCheckJson,
    RecursionReportJson,
)
from src.cli.graph_file import GraphFormatError, ParsedGraph, format_graph_file, read_graph_file, write_graph_file
from src.constructions.in_edge_deletion import in_edge_deletion_set, line_digraph_metric_dimension
from src.constructions.line_bounds import line_bounds, spanning_tree_resolving_set
from src.constructions.trees import tree_line_metric_dimension
from src.graph.core import DiGraph, Graph
from src.graph.distances import all_pairs_distances
from src.graph.errors import (
    DisconnectedGraphError,
    GraphStructureError,
    PreconditionError,
    SizeCapExceededError,
    VerificationError,
)
from src.graph.line_graph import LineGraphMap, edge_label, line_graph
from src.graph.predicates import is_strongly_connected
from src.metric.config import SolverConfig, load_solver_config
from src.metric.resolving import ResolvingCertificate, build_certificate, is_resolving_set
from src.metric.solver import exact_metric_dimension
from src.topologies.generators import TopologyFamily, TopologySpec
from src.topologies.recursion import cross_check_recursion

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_SIZE_CAP = 4
EXIT_PRECONDITION = 5

GEN_FAMILIES = {
    "de_bruijn": TopologyFamily.DE_BRUIJN,
    "kautz": TopologyFamily.KAUTZ,
    "flowered": TopologyFamily.FLOWERED_COMPLETE,
    "flowered_complete": TopologyFamily.FLOWERED_COMPLETE,
    "complete": TopologyFamily.COMPLETE_DIGRAPH,
    "complete_digraph": TopologyFamily.COMPLETE_DIGRAPH,
}


@dataclass(frozen=True)
class Target:
    """The graph landmarks live in, with a printable label per vertex."""

    graph: Graph | DiGraph
    labels: list[str]
    lgm: LineGraphMap | None = None


def make_target(parsed: ParsedGraph, line: bool) -> Target:
    if not line:
        return Target(parsed.graph, parsed.labels)
    lgm = line_graph(parsed.graph)
    labels = [edge_label(lgm, v, parsed.labels) for v in range(lgm.line.n)]
    return Target(lgm.line, labels, lgm)


def landmark_lookup(target: Target, parsed: ParsedGraph) -> dict[str, int]:
    """Accepted spellings of every landmark label.

    Line-graph vertices answer to ``u—v`` / ``u-v`` (either order) or
    ``u→v`` / ``u->v``.
    """
    if target.lgm is None:
        return parsed.label_index()

    lookup: dict[str, int] = {}
    for v in range(target.graph.n):
        u, w = target.lgm.original_edge_endpoints[v]
        a, b = parsed.labels[u], parsed.labels[w]
        if target.lgm.directed:
            spellings = [f"{a}→{b}", f"{a}->{b}"]
        else:
            spellings = [f"{x}{sep}{y}" for x, y in ((a, b), (b, a)) for sep in ("—", "-")]
        for s in spellings:
            lookup.setdefault(s, v)
    return lookup


def _summary(g: Graph | DiGraph) -> InputSummary:
    return InputSummary(n=g.n, m=g.m, directed=g.directed)


def _check(name: str, passed: bool) -> CheckJson:
    return CheckJson(name=name, passed=bool(passed))


def _verified_certificate(
    mode: str,
    parsed: ParsedGraph,
    target: Target,
    cert: ResolvingCertificate,
    bounds: BoundsJson | None = None,
    extra_checks: Sequence[CheckJson] = (),
) -> CertificateJson:
    """Certificate JSON with the resolving and replay checks prepended."""
    if cert.landmarks:
        resolves = is_resolving_set(target.graph, cert.landmarks).resolving
    else:
        resolves = target.graph.n == 1
    replay = cert.verify(all_pairs_distances(target.graph))
    return CertificateJson(
        mode=mode,
        input_summary=_summary(parsed.graph),
        mu=cert.mu_claimed,
        landmarks=[target.labels[w] for w in cert.landmarks],
        vectors={target.labels[u]: list(vec) for u, vec in sorted(cert.vectors.items())},
        bounds=bounds,
        checks=[
            _check("resolving_set_verified", resolves),
            _check("certificate_replay", replay),
            *extra_checks,
        ],
    )


def _config(args: argparse.Namespace) -> SolverConfig:
    return load_solver_config(size_cap=args.cap, workers=args.workers)


def _emit(cert: CertificateJson | RecursionReportJson, text: str, args: argparse.Namespace) -> None:
    print(cert.to_json() if args.json else text)


def cmd_mu(args: argparse.Namespace) -> int:
    parsed = read_graph_file(args.file)
    g = parsed.graph
    target = make_target(parsed, args.line)
    cert = exact_metric_dimension(target.graph, _config(args))

    bounds = None
    extra: list[CheckJson] = []
    if args.line and g.directed and is_strongly_connected(g):
        extra.append(_check("edge_minus_vertex_formula", line_digraph_metric_dimension(g) == cert.mu_claimed))
    if args.line and not g.directed:
        report = line_bounds(g)
        if report.applicable:
            bounds = BoundsJson(lower_log=report.lower_log, upper=report.upper)
            extra.append(_check("log2_lower_bound_holds", report.lower_log <= cert.mu_claimed))
            extra.append(_check("upper_bound_holds", cert.mu_claimed <= report.upper))

    out = _verified_certificate("mu:line" if args.line else "mu:exact", parsed, target, cert, bounds, extra)
    _emit(out, out.to_text(), args)
    return EXIT_OK if out.all_passed else EXIT_VERIFICATION


def _require_kind(g: Graph | DiGraph, directed: bool, method: str) -> None:
    if g.directed != directed:
        kind = "digraph" if directed else "graph"
        raise PreconditionError(f"Method {method!r} needs a {kind} file")


def cmd_construct(args: argparse.Namespace) -> int:
    parsed = read_graph_file(args.file)
    g = parsed.graph
    target = make_target(parsed, line=True)

    bounds = None
    mu: int | None
    if args.method == "theorem1":
        _require_kind(g, True, args.method)
        landmarks = in_edge_deletion_set(g)
        mu = len(landmarks)
        extra = [_check("edge_minus_vertex_formula", len(landmarks) == g.m - g.n)]
    elif args.method == "spantree":
        _require_kind(g, False, args.method)
        landmarks = spanning_tree_resolving_set(g, config=_config(args))
        report = line_bounds(g)
        bounds = BoundsJson(lower_log=report.lower_log, upper=report.upper)
        mu = None
        extra = [_check("upper_bound_holds", len(landmarks) <= report.upper)]
    else:
        _require_kind(g, False, args.method)
        result = tree_line_metric_dimension(g)
        landmarks = result.landmarks
        mu = result.mu
        config = _config(args)
        extra = [_check("landmark_count_matches", len(landmarks) == result.mu)]
        if g.n <= config.size_cap:
            extra.append(_check("exact_tree_mu_matches", exact_metric_dimension(g, config).mu_claimed == result.mu))
            line_mu = exact_metric_dimension(target.graph, config).mu_claimed
            extra.append(_check("exact_line_mu_matches", line_mu == result.mu))
        else:
            logger.info("Tree has %d vertices, above cap %d; exact check skipped", g.n, config.size_cap)

    cert = build_certificate(all_pairs_distances(target.graph), landmarks, mu)
    out = _verified_certificate(f"construct:{args.method}", parsed, target, cert, bounds, extra)
    _emit(out, out.to_text(), args)
    return EXIT_OK if out.all_passed else EXIT_VERIFICATION


def cmd_verify(args: argparse.Namespace) -> int:
    parsed = read_graph_file(args.file)
    target = make_target(parsed, args.line)
    lookup = landmark_lookup(target, parsed)

    ids = []
    for name in (s.strip() for s in args.landmarks.split(",")):
        if not name:
            continue
        if name not in lookup:
            raise GraphFormatError(f"unknown landmark label {name!r}")
        ids.append(lookup[name])

    result = is_resolving_set(target.graph, ids)
    mode = "verify:line" if args.line else "verify:graph"
    if result.resolving:
        cert = build_certificate(all_pairs_distances(target.graph), ids)
        out = _verified_certificate(mode, parsed, target, cert)
        out.resolving = True
    else:
        u, v = result.witness
        out = CertificateJson(
            mode=mode,
            input_summary=_summary(parsed.graph),
            landmarks=[target.labels[w] for w in ids],
            checks=[_check("resolving_set_verified", False)],
            resolving=False,
            witness=[target.labels[u], target.labels[v]],
        )
    _emit(out, out.to_text(), args)
    # A non-resolving set is a valid answer, not a failure.
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    parsed = read_graph_file(args.file)
    _require_kind(parsed.graph, False, "bounds")
    report = line_bounds(parsed.graph)
    if not report.applicable:
        logger.warning("Bounds are only claimed for graphs on 5 or more vertices (n=%d)", parsed.graph.n)
    out = CertificateJson(
        mode="bounds",
        input_summary=_summary(parsed.graph),
        bounds=BoundsJson(lower_log=report.lower_log, upper=report.upper),
    )
    _emit(out, out.to_text(), args)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = TopologySpec(GEN_FAMILIES[args.family], args.d, args.n)
    g = spec.build()
    labels = spec.labels()
    if args.out:
        write_graph_file(args.out, g, labels)
        logger.info("Wrote %s(%d,%d) to %s: %d vertices, %d arcs", spec.family.value, spec.d, spec.n, args.out, g.n, g.m)
    else:
        sys.stdout.write(format_graph_file(g, labels))
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    report = cross_check_recursion(args.family, args.d, args.n, _config(args))
    out = RecursionReportJson(
        family=report.family.value,
        d=report.d,
        n=report.n,
        passed=report.passed,
        note=report.note,
        checks=[
            RecursionCheckJson(name=c.name, direct=str(c.direct), recursive=str(c.recursive), passed=c.passed)
            for c in report.checks
        ],
    )
    status = "pass" if report.passed else "FAIL"
    text = "\n".join(
        [f"{report.family.value}({report.d},{report.n}): {status}", report.to_frame().to_string(index=False), report.note]
    )
    _emit(out, text, args)
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit the JSON certificate")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--cap", type=int, default=None, help="Exact-search vertex cap (default: 22)")
    solver.add_argument("--workers", type=int, default=None, help="Solver worker processes (default: 1)")

    parser = argparse.ArgumentParser(prog="line-metric", description="Metric dimension of graphs and line graphs")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_mu = subparsers.add_parser("mu", parents=[common, solver], help="Exact metric dimension")
    p_mu.add_argument("file")
    mode = p_mu.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="Solve the graph itself (default)")
    mode.add_argument("--line", action="store_true", help="Solve its line graph")
    p_mu.set_defaults(handler=cmd_mu)

    p_con = subparsers.add_parser("construct", parents=[common, solver], help="Explicit line-graph landmark set")
    p_con.add_argument("file")
    p_con.add_argument("--method", choices=["theorem1", "spantree", "tree"], required=True)
    p_con.set_defaults(handler=cmd_construct)

    p_gen = subparsers.add_parser("gen", parents=[common], help="Write a topology as a graph file")
    p_gen.add_argument("family", choices=sorted(GEN_FAMILIES))
    p_gen.add_argument("d", type=int)
    p_gen.add_argument("n", type=int, nargs="?", default=1)
    p_gen.add_argument("--out", default=None, help="Output path (default: stdout)")
    p_gen.set_defaults(handler=cmd_gen)

    p_ver = subparsers.add_parser("verify", parents=[common], help="Check a landmark set")
    p_ver.add_argument("file")
    p_ver.add_argument("--landmarks", required=True, help="Comma-separated labels")
    p_ver.add_argument("--line", action="store_true", help="Landmarks are edges; check the line graph")
    p_ver.set_defaults(handler=cmd_verify)

    p_bnd = subparsers.add_parser("bounds", parents=[common], help="Line-graph bounds of a graph")
    p_bnd.add_argument("file")
    p_bnd.set_defaults(handler=cmd_bounds)

    p_cc = subparsers.add_parser("crosscheck", parents=[common, solver], help="Word build vs line-digraph recursion")
    p_cc.add_argument("family", choices=["de_bruijn", "kautz"])
    p_cc.add_argument("d", type=int)
    p_cc.add_argument("n", type=int)
    p_cc.set_defaults(handler=cmd_crosscheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.handler(args)
    except GraphFormatError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT
    except DisconnectedGraphError as exc:
        logger.error("%s", exc)
        return EXIT_DISCONNECTED
    except PreconditionError as exc:
        logger.error("%s", exc)
        return EXIT_PRECONDITION
    except GraphStructureError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT
    except SizeCapExceededError as exc:
        logger.error("%s", exc)
        return EXIT_SIZE_CAP
    except VerificationError as exc:
        logger.error("%s", exc)
        return EXIT_VERIFICATION
    except ValueError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
