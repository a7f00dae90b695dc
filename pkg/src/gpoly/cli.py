"""Command-line interface.

Exit codes: 0 ok, 1 identity or consistency failure, 2 malformed input,
3 underdetermined reconstruction, 4 permanent dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .arith import Poly, parse_rat, to_text
from .corpus import (CHECKS, FILTERS, IdentityFailure, collision_probe, collision_report,
                     iter_corpus, scan_verify)
from .errors import DimensionTooLarge, GpolyError, MalformedDeck
from .graph import Graph, WeightedGraph, parse_graph6
from .identities import (IdentityReport, verify_det_identity, verify_det_identity_sparse,
                         verify_perm_identity, verify_perm_identity_sparse,
                         verify_sigma_identity, verify_tau_identity,
                         verify_tau_identity_weighted)
from .linalg import RatMatrix, permanent_cap_from_env, set_permanent_cap
from .polys import Kind, sigma, tau, tau_weighted
from .reconstruct import DeckBundle, Status, solve

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNDERDETERMINED, EXIT_CAP = 0, 1, 2, 3, 4

THEOREMS = ("2.1", "2.2", "2.3", "2.4", "3.1", "3.1w", "3.3", "3.4")


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    permanent_cap: int = 20
    strict_parse: bool = True
    output_format: str = "json"

    def __post_init__(self):
        if self.permanent_cap < 0:
            raise InputError("permanent cap must be >= 0")


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {arg}: {exc}") from exc


def _read_graph(arg: str) -> Graph:
    text = sys.stdin.read() if arg == "-" else arg
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise InputError("expected exactly one graph6 record")
    return parse_graph6(lines[0])


def _read_json(arg: str):
    try:
        return json.loads(_read_text(arg))
    except json.JSONDecodeError as exc:
        raise InputError(f"{arg} is not valid JSON: {exc}") from exc


def _read_weights(arg: str, g: Graph) -> WeightedGraph:
    """Weights file: JSON list of rationals in canonical edge order."""
    data = _read_json(arg)
    if not isinstance(data, list) or len(data) != g.m:
        raise InputError(f"weights file must list exactly {g.m} rationals")
    try:
        return WeightedGraph(g, tuple(parse_rat(w) for w in data))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _read_matrix(arg: str) -> RatMatrix:
    data = _read_json(arg)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix file must hold a list of rows")
    try:
        return RatMatrix([[parse_rat(x) for x in r] for r in data])
    except ValueError as exc:
        raise InputError(f"bad matrix: {exc}") from exc


def _dump(obj, compact=False, depth=0) -> str:
    """JSON with dicts and nested lists indented, scalar-only lists on one line."""
    if compact or not isinstance(obj, (dict, list)) or (
            isinstance(obj, list) and not any(isinstance(x, (dict, list)) for x in obj)):
        return json.dumps(obj, separators=(",", ":") if compact else (", ", ": "))
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(v, depth=depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    items = [inner + _dump(v, depth=depth + 1) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + pad + "]"


def _emit(cfg: CliConfig, obj, text: str, compact=False) -> None:
    print(_dump(obj, compact) if cfg.output_format == "json" else text)


def cmd_compute(args, cfg: CliConfig) -> int:
    g = _read_graph(args.graph)
    which = args.which
    if which.startswith("sigma"):
        if args.weights or args.beta is not None or args.gamma is not None:
            raise InputError("--beta/--gamma/--weights only apply to tau1/tau2")
        p = sigma(which, g)
    else:
        beta = parse_rat(args.beta if args.beta is not None else "0")
        gamma = parse_rat(args.gamma if args.gamma is not None else "1")
        permanent = which == "tau2"
        if args.weights:
            p = tau_weighted(_read_weights(args.weights, g), beta, gamma, permanent,
                             args.weighted_degrees)
        else:
            p = tau(g, beta, gamma, permanent)
    _emit(cfg, p.to_strings(), to_text(p), compact=True)
    return EXIT_OK


def cmd_deck(args, cfg: CliConfig) -> int:
    g = _read_graph(args.graph)
    bundle = DeckBundle.from_graph(g, args.kind)
    lines = [f"kind {bundle.kind.value} n={bundle.n} m={bundle.m}"]
    for e, p in zip(g.edges, bundle.edge_polys):
        lines.append(f"G-{e[0]}{e[1]}: {to_text(p)}")
    for e, p in zip(g.edges, bundle.pair_polys or ()):
        lines.append(f"G-{e[0]}-{e[1]}: {to_text(p)}")
    _emit(cfg, bundle.to_json_obj(), "\n".join(lines))
    return EXIT_OK


def _report_entry(label: str, rep: IdentityReport) -> dict:
    d = {"check": label, **rep.to_dict()}
    if not rep.holds and isinstance(rep.lhs, Poly):
        d["diff"] = (rep.lhs - rep.rhs).to_strings()
    elif not rep.holds:
        d["diff"] = str(rep.lhs - rep.rhs)
    return d


def _theorem_reports(args) -> list[tuple[str, IdentityReport]]:
    th = args.theorem
    if th.startswith("2."):
        X = _read_matrix(args.input)
        fn = {"2.1": verify_det_identity, "2.2": verify_perm_identity,
              "2.3": verify_det_identity_sparse, "2.4": verify_perm_identity_sparse}[th]
        return [(th, fn(X))]
    g = _read_graph(args.input)
    if th == "3.3":
        return [(f"3.3/{k.value}", verify_sigma_identity(g, k)) for k in (Kind.SIGMA1, Kind.SIGMA4)]
    if th == "3.4":
        return [(f"3.4/{k.value}", verify_sigma_identity(g, k)) for k in (Kind.SIGMA2, Kind.SIGMA3)]
    beta, gamma = parse_rat(args.beta), parse_rat(args.gamma)
    modes = {"det": (False,), "per": (True,), "both": (False, True)}[args.which]
    if th == "3.1":
        return [(f"3.1/{'per' if p else 'det'}", verify_tau_identity(g, beta, gamma, p))
                for p in modes]
    wg = _read_weights(args.weights, g) if args.weights else WeightedGraph.unit(g)
    return [(f"3.1w/{'per' if p else 'det'}",
             verify_tau_identity_weighted(wg, beta, gamma, p, args.weighted_degrees))
            for p in modes]


def cmd_verify(args, cfg: CliConfig) -> int:
    reports = _theorem_reports(args)
    entries = [_report_entry(label, rep) for label, rep in reports]
    ok = all(rep.holds for _, rep in reports)
    lines = []
    for e in entries:
        lines.append(f"{e['check']}: {'holds' if e['holds'] else 'FAILS'}")
        if not e["holds"]:
            lines += [f"  lhs:  {e['lhs']}", f"  rhs:  {e['rhs']}", f"  diff: {e['diff']}"]
    _emit(cfg, {"holds": ok, "reports": entries}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reconstruct(args, cfg: CliConfig) -> int:
    bundle = DeckBundle.loads(_read_text(args.deck))
    report = solve(bundle)
    obj = report.to_json_obj()
    text = "\n".join([f"status: {obj['status']}", f"poly: {to_text(report.poly)}",
                      f"free_indices: {obj['free_indices']}",
                      f"residuals: {obj['residuals']}"])
    _emit(cfg, obj, text)
    return {Status.UNIQUE: EXIT_OK, Status.UNDERDETERMINED: EXIT_UNDERDETERMINED,
            Status.INCONSISTENT: EXIT_FAIL}[report.status]


def cmd_scan(args, cfg: CliConfig) -> int:
    lines = _read_text(args.corpus).splitlines()
    errors: list = []
    records = list(iter_corpus(lines, strict=cfg.strict_parse, errors=errors))
    if args.mode == "verify":
        checks = args.checks.split(",") if args.checks else list(CHECKS)
        for c in checks:
            if c not in CHECKS:
                raise InputError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
        try:
            summary = scan_verify(records, checks, workers=args.workers)
        except IdentityFailure as exc:
            obj = {"mode": "verify", "ok": False, "graph6": exc.graph6, "line": exc.line,
                   "check": exc.check, "report": _report_entry(exc.check, exc.report)}
            _emit(cfg, obj, f"FAIL {exc.check} on {exc.graph6} (line {exc.line})")
            return EXIT_FAIL
        obj = {"mode": "verify", "ok": True, **summary, "malformed": errors}
        text = [f"graphs: {summary['graphs']}"]
        text += [f"{cid} ({CHECKS[cid][0]}): {c['pass']} pass, {c['fail']} fail"
                 for cid, c in summary["checks"].items()]
        text += [f"skipped line {e['line']}: {e['error']}" for e in errors]
        _emit(cfg, obj, "\n".join(text))
        return EXIT_OK
    graphs = [g for _, _, g in records]
    groups = collision_probe(graphs, args.kind, args.filter, workers=args.workers)
    obj = collision_report(groups, args.kind, args.filter, len(graphs))
    obj["malformed"] = errors
    text = [f"graphs: {len(graphs)}  kind: {obj['kind']}  filter: {args.filter}",
            f"groups with >= 2 members: {len(groups)}  colliding: {obj['colliding']}"]
    for grp in groups:
        tag = "separating" if grp.separating else "COLLIDING"
        text.append(f"  {grp.digest} {tag}: " + " ".join(s for s, _ in grp.members))
    _emit(cfg, obj, "\n".join(text))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--permanent-cap", type=int, default=None,
                        help="largest permanent dimension (default 20, or $GPOLY_PERMANENT_CAP)")
    common.add_argument("--lenient", action="store_true",
                        help="skip malformed corpus lines instead of failing")

    ap = argparse.ArgumentParser(prog="gpoly", description="Exact graph polynomials and decks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute one polynomial")
    p.add_argument("which", choices=("sigma1", "sigma2", "sigma3", "sigma4", "tau1", "tau2"))
    p.add_argument("graph", help="graph6 record, or - for stdin")
    p.add_argument("--beta")
    p.add_argument("--gamma")
    p.add_argument("--weights", help="JSON list of edge weights in canonical edge order")
    p.add_argument("--weighted-degrees", action="store_true",
                   help="use weighted degrees in D for weighted graphs")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("deck", parents=[common], help="emit the deck polynomials of a graph")
    p.add_argument("graph")
    p.add_argument("--kind", choices=[k.value for k in Kind], default="sigma1")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("verify", parents=[common], help="check an identity on one input")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("input", help="matrix JSON file for 2.x, graph6 record otherwise")
    p.add_argument("--beta", default="0")
    p.add_argument("--gamma", default="1")
    p.add_argument("--which", choices=("det", "per", "both"), default="both")
    p.add_argument("--weights")
    p.add_argument("--weighted-degrees", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", parents=[common], help="solve a deck file")
    p.add_argument("deck", help="deck JSON file, or - for stdin")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("scan", parents=[common], help="batch run over a graph6 corpus")
    p.add_argument("corpus")
    p.add_argument("--mode", choices=("verify", "collide"), default="verify")
    p.add_argument("--kind", choices=[k.value for k in Kind], default="sigma1")
    p.add_argument("--filter", choices=tuple(FILTERS), default="all")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cap = args.permanent_cap if args.permanent_cap is not None else permanent_cap_from_env()
        cfg = CliConfig(cap, not args.lenient, args.format)
        set_permanent_cap(cfg.permanent_cap)
        return args.func(args, cfg)
    except DimensionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, MalformedDeck, GpolyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
