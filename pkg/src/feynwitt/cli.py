"""Command-line front end: ``feynwitt <subcommand> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .counting import CountTable, theta_tables, witt
from .euler import TooLarge, euler_polynomial
from .geometry import BadGeometry
from .graph import EmbeddedGraph, GraphError, GraphSpec, build_graph, validate_embedding
from .generators import FAMILIES, parse_builtin
from .lie import superdimension_table
from .matrices import DEFAULT_TOL, GraphMatrices
from .oracle import oracle_count_table
from .zeta import verify_all, zeta_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    input: str  # builtin id or file path ("-" for stdin)
    builtin: bool
    max_n: int = 10
    tolerance: float = DEFAULT_TOL
    oracle: bool = False
    output_format: str = "tsv"
    validate_crossings: bool = True

    def __post_init__(self):
        if self.max_n < 1:
            raise UsageError(f"--max-n must be >= 1, got {self.max_n}")
        if not self.tolerance > 0:
            raise UsageError(f"tolerance must be > 0, got {self.tolerance}")


def _default_tolerance() -> float:
    raw = os.environ.get("FW_TOLERANCE")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"FW_TOLERANCE is not a number: {raw!r}") from None


def _config(args: argparse.Namespace) -> RunConfig:
    if args.builtin is None and args.graph is None:
        raise UsageError("give a graph with --builtin NAME or --graph FILE")
    tol = args.tolerance if args.tolerance is not None else _default_tolerance()
    return RunConfig(
        input=args.builtin if args.builtin is not None else args.graph,
        builtin=args.builtin is not None,
        max_n=getattr(args, "max_n", 10),
        tolerance=tol,
        oracle=getattr(args, "oracle", False),
        output_format=args.format,
        validate_crossings=not args.no_validate,
    )


def load_graph(cfg: RunConfig) -> EmbeddedGraph:
    if cfg.builtin:
        spec = parse_builtin(cfg.input)
    elif cfg.input == "-":
        spec = GraphSpec.loads(sys.stdin.read(), "stdin")
    else:
        try:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from exc
        spec = GraphSpec.loads(text, os.path.basename(cfg.input))
    g = build_graph(spec)
    if cfg.validate_crossings:
        report = validate_embedding(g)
        if not report.ok:
            lines = "; ".join(f"{f.code}: {f.message}" for f in report.errors())
            raise UsageError(f"drawing is not a plane embedding ({lines}); use --no-validate to skip")
    return g


# output helpers

def _tsv(out: TextIO, header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(x) for x in row) + "\n")


def _json(out: TextIO, payload: object) -> None:
    out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def _strs(values: Sequence[int]) -> list[str]:
    return [str(v) for v in values]


def _complex(z: complex) -> str:
    re_, im = float(z.real) + 0.0, float(z.imag) + 0.0  # + 0.0 folds -0.0
    return f"{re_:.12g}{im:+.12g}j"


COUNT_COLUMNS = ("N", "TrT", "TrS", "K+", "K-", "θ+", "θ-", "θ", "Ω")


def _count_rows(gm: GraphMatrices, table: CountTable) -> list[list[int]]:
    return [
        [r.n, gm.traces_T[r.n], gm.traces_S[r.n], r.k_plus, r.k_minus,
         r.theta_plus, r.theta_minus, r.theta, r.omega]
        for r in table.rows
    ]


# subcommands

def cmd_info(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    report = validate_embedding(g)
    degrees = [g.degree(v) for v in range(g.num_vertices)]
    rank = g.num_edges - g.num_vertices + 1
    fields = [
        ("name", g.name),
        ("vertices", g.num_vertices),
        ("edges", g.num_edges),
        ("oriented_edges", 2 * g.num_edges),
        ("loops", g.loop_count()),
        ("cycle_rank", rank),
        ("degrees", ",".join(map(str, degrees))),
        ("findings", len(report.findings)),
    ]
    if cfg.output_format == "json":
        payload = {k: (str(v) if isinstance(v, int) else v) for k, v in fields}
        payload["findings"] = [
            {"severity": f.severity, "code": f.code, "message": f.message} for f in report.findings
        ]
        _json(out, payload)
    else:
        _tsv(out, ("key", "value"), fields)
        for f in report.findings:
            out.write(f"# {f.severity} {f.code}: {f.message}\n")
    return EXIT_OK


def cmd_matrices(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    gm = GraphMatrices.of(g, cfg.max_n, cfg.tolerance)
    size = gm.T.shape[0]
    if cfg.output_format == "json":
        _json(out, {
            "graph": g.name,
            "T": [[str(int(x)) for x in row] for row in gm.T],
            "S": [[_complex(x) for x in row] for row in gm.S],
            "traces_T": _strs(gm.traces_T.values[: cfg.max_n]),
            "traces_S": _strs(gm.traces_S.values[: cfg.max_n]),
            "max_residual_S": f"{gm.traces_S.max_residual:.3e}",
            "det_T": _strs(gm.det_T.coeffs),
            "det_S": _strs(gm.det_S.coeffs),
        })
        return EXIT_OK
    labels = [f"e{k}" for k in range(size)]
    out.write("# T\n")
    _tsv(out, ["", *labels], [[labels[i], *(int(x) for x in gm.T[i])] for i in range(size)])
    out.write("# S\n")
    _tsv(out, ["", *labels], [[labels[i], *(_complex(x) for x in gm.S[i])] for i in range(size)])
    out.write(f"# det(1-zT) = {gm.det_T}\n# det(1-zS) = {gm.det_S}\n")
    out.write(f"# max trace residual for S: {gm.traces_S.max_residual:.3e}\n")
    return EXIT_OK


def cmd_counts(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    g = load_graph(cfg)
    gm = GraphMatrices.of(g, cfg.max_n, cfg.tolerance)
    table = theta_tables(gm.traces_T, gm.traces_S, cfg.max_n)
    status = EXIT_OK
    if cfg.oracle:
        oracle = oracle_count_table(g, cfg.max_n, cfg.tolerance)
        for n in range(1, cfg.max_n + 1):
            if oracle[n] != table[n]:
                err.write(f"oracle mismatch at N={n}: closed form {table[n]} vs oracle {oracle[n]}\n")
                status = EXIT_FAIL
    rows = _count_rows(gm, table)
    if cfg.output_format == "json":
        _json(out, {
            "graph": g.name,
            "oracle_checked": cfg.oracle,
            "rows": [dict(zip(COUNT_COLUMNS, _strs(r))) for r in rows],
        })
    else:
        _tsv(out, COUNT_COLUMNS, rows)
    return status


def cmd_euler(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    poly = euler_polynomial(g)
    if cfg.output_format == "json":
        _json(out, {"graph": g.name, "euler": _strs(poly.coeffs)})
    else:
        _tsv(out, ("k", "a(k)"), list(enumerate(poly.coeffs)))
    return EXIT_OK


def cmd_zeta(cfg: RunConfig, which: str, out: TextIO) -> int:
    g = load_graph(cfg)
    series = zeta_series(g, which, cfg.max_n, cfg.tolerance)
    coeffs = series.integer_coeffs()
    if cfg.output_format == "json":
        _json(out, {"graph": g.name, "which": which, "order": str(cfg.max_n), "coeffs": _strs(coeffs)})
    else:
        out.write(f"# {which}: {series}\n")
        _tsv(out, ("k", "coeff"), list(enumerate(coeffs)))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    report = verify_all(g, cfg.max_n, oracle=cfg.oracle, tol=cfg.tolerance)
    rows = []
    for e in report.entries:
        rows.append(("identity", e.identity, "PASS" if e.passed else "FAIL",
                     "" if e.first_mismatch is None else e.first_mismatch, e.note))
    if report.recursions is not None:
        for r in report.recursions.results:
            verdict = "PASS" if r.passed else ("FAIL" if r.kind == "identity" else "VIOLATED")
            rows.append((r.kind, r.name, verdict,
                         "" if r.first_failure is None else r.first_failure, r.detail))
    if cfg.output_format == "json":
        _json(out, {
            "graph": g.name,
            "order": str(cfg.max_n),
            "passed": report.passed,
            "entries": [
                {"kind": k, "name": n, "result": v, "first_mismatch": str(m), "note": note}
                for k, n, v, m, note in rows
            ],
        })
    else:
        out.write(f"# {g.name} order {cfg.max_n}; recursions to n = {2 * g.num_edges}\n")
        _tsv(out, ("kind", "name", "result", "first_mismatch", "note"), rows)
        out.write(f"# overall: {'PASS' if report.passed else 'FAIL'} (inequalities are advisory)\n")
    return EXIT_OK if report.passed else EXIT_FAIL


LIE_COLUMNS = ("n", "t", "t′", "t0", "t1", "dimL0", "dimL1", "θ−", "θ+", "match", "envelopingDim")


def cmd_lie_dims(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    table = superdimension_table(g, cfg.max_n, cfg.tolerance)
    gm = GraphMatrices.of(g, cfg.max_n, cfg.tolerance)
    counts = theta_tables(gm.traces_T, gm.traces_S, cfg.max_n)
    rows, all_ok = [], True
    for n in range(1, cfg.max_n + 1):
        i = n - 1
        c = counts[n]
        ok = (table.dim_l0[i], table.dim_l1[i]) == (c.theta_minus, c.theta_plus)
        all_ok = all_ok and ok
        rows.append([n, table.t[i], table.t_prime[i], table.t0[i], table.t1[i],
                     table.dim_l0[i], table.dim_l1[i], c.theta_minus, c.theta_plus,
                     "✓" if ok else "✗", table.enveloping[n]])
    if cfg.output_format == "json":
        _json(out, {
            "graph": g.name,
            "rows": [dict(zip(LIE_COLUMNS, [str(x) for x in r])) for r in rows],
        })
    else:
        _tsv(out, LIE_COLUMNS, rows)
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_witt(rank: int, max_n: int, fmt: str, out: TextIO) -> int:
    if rank < 0:
        raise UsageError(f"--rank must be >= 0, got {rank}")
    if max_n < 1:
        raise UsageError(f"--max-n must be >= 1, got {max_n}")
    rows = [(n, witt(n, rank)) for n in range(1, max_n + 1)]
    if fmt == "json":
        _json(out, {"rank": str(rank), "dims": [str(m) for _, m in rows]})
    else:
        _tsv(out, ("N", f"M(N;{rank})"), rows)
    return EXIT_OK


def cmd_generate(name: str, out: TextIO) -> int:
    spec = parse_builtin(name)
    build_graph(spec)
    out.write(spec.dumps() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    graph_opts = argparse.ArgumentParser(add_help=False)
    src = graph_opts.add_mutually_exclusive_group()
    src.add_argument("--builtin", metavar="NAME[:P,..]",
                     help=f"builtin graph, one of {', '.join(FAMILIES)} (e.g. bouquet:3)")
    src.add_argument("--graph", metavar="FILE", help="graph JSON file, or - for stdin")
    graph_opts.add_argument("--tolerance", type=float, default=None,
                            help=f"trace certification tolerance (default $FW_TOLERANCE or {DEFAULT_TOL})")
    graph_opts.add_argument("--no-validate", action="store_true",
                            help="skip the edge crossing check")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("tsv", "json"), default="tsv")
    depth = argparse.ArgumentParser(add_help=False)
    depth.add_argument("--max-n", type=int, default=10, help="largest N (default 10)")

    parser = argparse.ArgumentParser(prog="feynwitt",
                                     description="Cycle counts, zeta functions and the Feynman identity for plane graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[graph_opts, fmt], help="graph summary and drawing checks")
    sub.add_parser("matrices", parents=[graph_opts, fmt, depth], help="T, S and their determinants")
    p = sub.add_parser("counts", parents=[graph_opts, fmt, depth], help="signed walk and cycle counts")
    p.add_argument("--oracle", action="store_true", help="also count by enumeration and compare")
    sub.add_parser("euler", parents=[graph_opts, fmt], help="Euler polynomial coefficients")
    p = sub.add_parser("zeta", parents=[graph_opts, fmt, depth], help="zeta function series")
    p.add_argument("--which", choices=("ihara", "kw"), default="kw")
    p = sub.add_parser("verify", parents=[graph_opts, fmt, depth], help="check every identity")
    p.add_argument("--oracle", action="store_true", help="include the enumeration cross-check")
    sub.add_parser("lie-dims", parents=[graph_opts, fmt, depth], help="superdimension table")
    p = sub.add_parser("witt", parents=[fmt, depth], help="classical Witt dimensions M(N;R)")
    p.add_argument("--rank", type=int, required=True)
    p = sub.add_parser("generate", help="print a builtin graph as JSON")
    p.add_argument("name", metavar="NAME[:P,..]")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "generate":
            return cmd_generate(args.name, out)
        if args.command == "witt":
            return cmd_witt(args.rank, args.max_n, args.format, out)
        cfg = _config(args)
        if args.command == "info":
            return cmd_info(cfg, out)
        if args.command == "matrices":
            return cmd_matrices(cfg, out)
        if args.command == "counts":
            return cmd_counts(cfg, out, err)
        if args.command == "euler":
            return cmd_euler(cfg, out)
        if args.command == "zeta":
            return cmd_zeta(cfg, args.which, out)
        if args.command == "verify":
            return cmd_verify(cfg, out)
        if args.command == "lie-dims":
            return cmd_lie_dims(cfg, out)
    except (UsageError, GraphError, BadGeometry, TooLarge) as exc:
        err.write(f"feynwitt: error: {exc}\n")
        return EXIT_USAGE
    except ArithmeticError as exc:
        err.write(f"feynwitt: verification failed: {exc}\n")
        return EXIT_FAIL
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
