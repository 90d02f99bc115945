"""Command-line front end: ``bruhat-sl2 <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .diagnostics import (
    diamond_weights, forbidden_swaps, permutation_path, sign_grid,
)
from .errors import (
    BruhatError, IntervalTooLargeError, InvariantViolation, Non132AvoidingError,
    NotBelowPiError, PermutationError,
)
from .orders import build_interval, hasse_export
from .perm import avoiding_132, avoids_132, parse_permutation
from .schubert import chain_sum, macdonald_sum, principal_specialization, schubert
from .sl2 import verify_sl2
from .sperner import certify_sperner

EXIT_OK = 0
EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_NON_132 = 65
EXIT_MEMBERSHIP = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    fmt: str
    workers: int
    max_interval: int | None
    out: str | None


def _perm_arg(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> range:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n-range {text!r}; use N or LO-HI") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad n-range {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["json", "table", "dot"], default=None)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for sweeps (default: CPU count)")
    common.add_argument("--max-interval", type=int, default=None,
                        help="element bound for interval construction")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = _Parser(prog="bruhat-sl2", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("verify-sl2", "check [E,F]=H, [H,E]=2E, [H,F]=-2F"),
                           ("sperner", "certify strong Sperner via F-power ranks")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        which = p.add_mutually_exclusive_group(required=True)
        which.add_argument("--n", type=_range_arg, help="sweep all 132-avoiding tops of size N or LO-HI")
        which.add_argument("--pi", type=_perm_arg)
        if name == "sperner":
            p.add_argument("--oracle", action="store_true",
                           help="add antichain cross-checks")

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomials and specializations")
    p.add_argument("--perm", type=_perm_arg, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--spec", action="store_true", help="coefficient sum S(1,...,1)")
    mode.add_argument("--macdonald", action="store_true", help="reduced-word formula")
    mode.add_argument("--chain-sum", type=_perm_arg, metavar="PI", help="strong chain formula under PI")
    mode.add_argument("--all-three", type=_perm_arg, metavar="PI", help="all three values; must agree")
    mode.add_argument("--poly", action="store_true", help="print the polynomial")

    p = sub.add_parser("diag", help="sign grids, permutation paths, diamonds")
    dsub = p.add_subparsers(dest="which", required=True)
    for name in ("sign-grid", "path", "diamond"):
        d = dsub.add_parser(name, parents=[common])
        d.add_argument("--pi", type=_perm_arg, required=True)
        d.add_argument("--sigma", type=_perm_arg, required=True)
        d.add_argument("--check", action="store_true", help="assert the associated lemmas")
        if name == "path":
            d.add_argument("--col", type=int, required=True)
        if name == "diamond":
            d.add_argument("--tau", type=_perm_arg, required=True)

    p = sub.add_parser("hasse", parents=[common], help="export a Hasse diagram")
    p.add_argument("--pi", type=_perm_arg, required=True)
    p.add_argument("--order", choices=["weak", "strong"], default="weak")
    return parser


def _pool_map(fn, items, workers):
    """Lazily map `fn` over `items`, yielding results in input order."""
    if workers <= 1 or len(items) <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers)))


def _require_132_avoiding(pi):
    if not avoids_132(pi):
        raise Non132AvoidingError(pi)


def _tops(args):
    if args.pi is not None:
        _require_132_avoiding(args.pi)
        return [args.pi]
    return [pi for n in args.n for pi in avoiding_132(n)]


def _sl2_job(job):
    pi, bound = job
    try:
        return verify_sl2(pi, bound).to_dict()
    except IntervalTooLargeError as exc:
        return {"pi": str(pi), "relations": {}, "violations": [], "error": str(exc)}


def _sperner_job(job):
    pi, bound, oracle = job
    return certify_sperner(pi, bound, oracle=oracle).to_dict()


def cmd_verify_sl2(args, cfg: RunConfig, emit) -> int:
    tops = _tops(args)
    counts = {"count": 0, "passed": 0, "failed": 0, "inconclusive": 0}
    for r in _pool_map(_sl2_job, [(pi, cfg.max_interval) for pi in tops], cfg.workers):
        counts["count"] += 1
        if "error" in r:
            counts["inconclusive"] += 1
        elif all(v == "pass" for v in r["relations"].values()):
            counts["passed"] += 1
        else:
            counts["failed"] += 1
        if cfg.fmt == "table":
            rel = " ".join(f"{k}={v}" for k, v in r["relations"].items()) or r["error"]
            emit(f"{r['pi']}  {rel}")
        else:
            emit(json.dumps(r))
    if cfg.fmt == "table":
        emit("  ".join(f"{k} {v}" for k, v in counts.items()))
    else:
        emit(json.dumps({"summary": counts}))
    if counts["failed"]:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE if counts["inconclusive"] else EXIT_OK


def cmd_sperner(args, cfg: RunConfig, emit) -> int:
    tops = _tops(args)
    counts = {"count": 0, "certified": 0, "refuted": 0, "inconclusive": 0, "oracle_disagreements": 0}
    jobs = [(pi, cfg.max_interval, args.oracle) for pi in tops]
    for c in _pool_map(_sperner_job, jobs, cfg.workers):
        counts["count"] += 1
        counts[c["verdict"]] += 1
        agree = c["oracle"]["agree"] if "oracle" in c else True
        counts["oracle_disagreements"] += not agree
        if cfg.fmt == "table":
            extra = ""
            if "oracle" in c:
                extra = "  oracle " + ("agree" if agree else "DISAGREE")
            emit(f"{c['pi']}  {c['verdict']}  ranks {c['rank_sizes']}{extra}")
        else:
            emit(json.dumps(c))
    if cfg.fmt == "table":
        emit("  ".join(f"{k} {v}" for k, v in counts.items()))
    else:
        emit(json.dumps({"summary": counts}))
    if counts["refuted"] or counts["oracle_disagreements"]:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE if counts["inconclusive"] else EXIT_OK


def cmd_schubert(args, cfg: RunConfig, emit) -> int:
    sigma = args.perm
    doc: dict = {"sigma": str(sigma)}
    code = EXIT_OK
    if args.poly:
        poly = schubert(sigma)
        emit(json.dumps(dict(doc, polynomial=poly.to_dict())) if cfg.fmt == "json" else str(poly))
        return code
    if args.spec:
        doc["spec"] = principal_specialization(sigma)
    elif args.macdonald:
        doc["macdonald"] = macdonald_sum(sigma)
    elif args.chain_sum is not None:
        doc["pi"] = str(args.chain_sum)
        doc["chain_sum"] = chain_sum(sigma, args.chain_sum, cfg.max_interval)
    else:
        pi = args.all_three
        doc["pi"] = str(pi)
        doc["chain_sum"] = chain_sum(sigma, pi, cfg.max_interval)
        doc["spec"] = principal_specialization(sigma)
        doc["macdonald"] = macdonald_sum(sigma)
        doc["agree"] = doc["spec"] == doc["macdonald"] == doc["chain_sum"]
        if not doc["agree"]:
            code = EXIT_REFUTED
    if cfg.fmt == "json":
        emit(json.dumps(doc))
        return code
    values = [(k, v) for k, v in doc.items() if k in ("spec", "macdonald", "chain_sum")]
    if len(values) == 1:
        emit(str(values[0][1]))
    else:
        emit(" ".join(f"{k}={v}" for k, v in values))
    return code


def cmd_diag(args, cfg: RunConfig, emit) -> int:
    pi, sigma = args.pi, args.sigma
    _require_132_avoiding(pi)
    problems: list[str] = []
    if args.which == "sign-grid":
        grid = sign_grid(sigma, pi)
        if cfg.fmt == "json":
            emit(json.dumps(dict(grid.to_dict(), nonzero=[
                {"row": i, "col": j, "sign": v} for (i, j), v in sorted(grid.nonzero().items())
            ])))
        else:
            emit(grid.render())
    elif args.which == "path":
        path = permutation_path(sigma, pi, args.col)
        if cfg.fmt == "json":
            emit(json.dumps(path.to_dict()))
        else:
            pts = " -> ".join(f"({x},{y})" for x, y in path.points)
            emit(f"points {pts or '(none)'}")
            emit(f"pivot lines x={path.pivot[0]} y={path.pivot[1]}")
            emit("quadrants " + " ".join(map(str, path.quadrants)))
        if args.check:
            problems = path.check(sign_grid(sigma, pi), forbidden_swaps(sigma, pi))
    else:
        try:
            found = diamond_weights(sigma, args.tau, pi)
        except PermutationError as exc:
            raise UsageError(str(exc)) from None
        doc = {"sigma": str(sigma), "tau": str(args.tau), "pi": str(pi), "alpha": None, "beta": None}
        if found:
            alpha, beta, up_beta, up_tau, m = found
            doc.update(alpha=str(alpha), beta=str(beta), up_weight_beta_sigma=up_beta,
                       up_weight_tau_alpha=up_tau, down_weight=m)
            if up_beta != up_tau:
                problems.append("up weights differ across the diamond")
        if cfg.fmt == "json":
            emit(json.dumps(doc))
        else:
            for k, v in doc.items():
                emit(f"{k} {v}")
    if args.check:
        for p in problems:
            emit(f"check failed: {p}")
        emit("check: FAIL" if problems else "check: pass")
    return EXIT_REFUTED if problems else EXIT_OK


def cmd_hasse(args, cfg: RunConfig, emit) -> int:
    interval = build_interval(args.pi, cfg.max_interval)
    fmt = "json" if cfg.fmt == "json" else "dot"
    emit(hasse_export(interval, args.order, fmt).rstrip("\n"))
    return EXIT_OK


COMMANDS = {
    "verify-sl2": (cmd_verify_sl2, "json"),
    "sperner": (cmd_sperner, "json"),
    "schubert": (cmd_schubert, "table"),
    "diag": (cmd_diag, "table"),
    "hasse": (cmd_hasse, "dot"),
}

_ERROR_CODES = [
    (Non132AvoidingError, EXIT_NON_132),
    (NotBelowPiError, EXIT_MEMBERSHIP),
    (IntervalTooLargeError, EXIT_INCONCLUSIVE),
    (InvariantViolation, EXIT_REFUTED),
    (UsageError, EXIT_USAGE),
    (BruhatError, EXIT_USAGE),
]


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler, default_fmt = COMMANDS[args.command]
    cfg = RunConfig(
        command=args.command,
        fmt=args.fmt or default_fmt,
        workers=args.workers if args.workers is not None else (os.cpu_count() or 1),
        max_interval=args.max_interval,
        out=args.out,
    )
    if cfg.workers < 1:
        print("bruhat-sl2: error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    stream = open(cfg.out, "w") if cfg.out else sys.stdout

    def emit(line: str) -> None:
        stream.write(line + "\n")
        stream.flush()

    try:
        return handler(args, cfg, emit)
    except (BruhatError, UsageError) as exc:
        for kind, code in _ERROR_CODES:
            if isinstance(exc, kind):
                break
        print(f"bruhat-sl2: error: {exc}", file=sys.stderr)
        return code
    finally:
        if cfg.out:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
