"""Command-line interface.

Every subcommand reads a weighted digraph from a TSV edge list given by
``--graph``. A record ``i<TAB>j<TAB>w`` sets W[i, j] = w: player ``i`` (the
row, the influenced player) puts weight ``w`` on the action of player ``j``
(the column, the influencer). Results go to stdout as JSON, or as CSV with
``--format csv``; the scan subcommands emit CSV rows ``k,alpha,value``.

Exit codes: 0 success, 2 bad input, 3 failed precondition (not irreducible,
r(alpha W) >= 1), 4 an iterative solver did not converge.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import centrality, coordination, game, matrix, spectral
from .errors import InputError, NetGamesError
from .formats import ResultDocument, parse_edge_list, parse_vector_file

SUBCOMMANDS = (
    "spectral",
    "perron",
    "primitive",
    "walks",
    "bonacich",
    "equilibrium",
    "keyness",
    "coordination",
    "consensus",
    "limit-scan",
    "blowup-scan",
)

ORIENTATION = (
    "Edge list records are SRC<TAB>DST<TAB>WEIGHT and set W[SRC, DST]: SRC is the "
    "influenced player, DST the influencer whose action SRC weighs."
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(InputError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph", required=True, type=Path, help="TSV edge list")
    common.add_argument("--alpha", type=float)
    base = common.add_mutually_exclusive_group()
    base.add_argument("--b", type=Path, help="TSV vector file for the base / standalone vector")
    base.add_argument("--b-const", type=float, help="constant base vector")
    common.add_argument("--y", type=Path, help="TSV vector file of ideal points")
    common.add_argument("--ell", type=int)
    common.add_argument("--from", dest="source")
    common.add_argument("--to", dest="target")
    common.add_argument("--method", choices=("direct", "neumann"), default="direct")
    common.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    common.add_argument("--max-iter", type=int)
    common.add_argument("--k-max", type=int, help="number of scan steps")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=spectral.DEFAULT_SEED)

    parser = _Parser(prog="netgames", description=__doc__.split("\n\n")[0], epilog=ORIENTATION)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], epilog=ORIENTATION)
    return parser


def _labelled(labels, vec):
    return {s: float(v) for s, v in zip(labels, vec)}


def _labelled_matrix(labels, m):
    return {s: _labelled(labels, row) for s, row in zip(labels, m)}


def _require(args, name, flag):
    value = getattr(args, name)
    if value is None:
        raise _UsageError(f"{args.command} requires {flag}")
    return value


def _base_vector(args, W, params):
    if args.b is not None:
        params["b"] = f"file:{args.b}"
        return parse_vector_file(args.b.read_text(encoding="utf-8"), W.node_labels())
    value = 1.0 if args.b_const is None else args.b_const
    params["b"] = f"const:{value!r}"
    return np.full(W.n, value)


def _ideal_points(args, W, params):
    path = _require(args, "y", "--y")
    params["y"] = f"file:{path}"
    return parse_vector_file(path.read_text(encoding="utf-8"), W.node_labels())


def _spectral(args, W, doc):
    pair = spectral.perron_pair(W, args.tol, args.max_iter, seed=args.seed)
    doc.values["spectral_radius"] = pair.lambda1
    doc.diagnostics.update(iterations=pair.iterations, residual=pair.residual)


def _perron(args, W, doc):
    labels = W.node_labels()
    pair = spectral.perron_pair(W, args.tol, args.max_iter, seed=args.seed)
    doc.values.update(lambda1=pair.lambda1, p=_labelled(labels, pair.p), q=_labelled(labels, pair.q))
    doc.diagnostics.update(iterations=pair.iterations, residual=pair.residual)


def _primitive(args, W, doc):
    doc.values["primitive"] = spectral.is_primitive(W)


def _walks(args, W, doc):
    ell = _require(args, "ell", "--ell")
    i = W.index_of(_require(args, "source", "--from"))
    j = W.index_of(_require(args, "target", "--to"))
    doc.parameters.update(ell=ell, **{"from": args.source, "to": args.target})
    labels = W.node_labels()
    walks = matrix.enumerate_walks(W, ell, i, j)
    doc.values["walks"] = [{"nodes": [labels[k] for k in w.nodes], "weight": weight} for w, weight in walks]
    doc.values["walk_sum"] = float(sum(weight for _, weight in walks))
    doc.values["matrix_power_entry"] = float(matrix.matrix_power(W, ell).entries[i, j])
    doc.diagnostics["count"] = len(walks)


def _bonacich(args, W, doc):
    alpha = _require(args, "alpha", "--alpha")
    b = _base_vector(args, W, doc.parameters)
    query = centrality.CentralityQuery(W, alpha, b)
    beta, diag = centrality.bonacich_with_diagnostics(query, args.method, args.tol, args.max_iter)
    doc.values["beta"] = _labelled(W.node_labels(), beta)
    doc.diagnostics.update(diag)


def _game_spec(args, W, doc):
    alpha = _require(args, "alpha", "--alpha")
    return game.GameSpec(W, alpha, _base_vector(args, W, doc.parameters))


def _equilibrium(args, W, doc):
    spec = _game_spec(args, W, doc)
    res = game.equilibrium(spec, args.method, args.tol, args.max_iter)
    doc.values.update(a=_labelled(W.node_labels(), res.a_star), aggregate=res.aggregate)
    doc.diagnostics.update(
        iterations=res.iterations,
        residual=res.residual,
        spectral_radius=spec.radius,
        condition=res.condition,
    )


def _keyness(args, W, doc):
    spec = _game_spec(args, W, doc)
    k = game.keyness(spec, args.tol)
    doc.values["k"] = _labelled(W.node_labels(), k)
    doc.diagnostics["spectral_radius"] = spec.radius


def _coordination(args, W, doc):
    alpha = _require(args, "alpha", "--alpha")
    spec = coordination.CoordinationSpec(W, alpha, _ideal_points(args, W, doc.parameters))
    labels = W.node_labels()
    V = coordination.influence_weights(spec, args.tol)
    doc.values["a"] = _labelled(labels, coordination.coordination_equilibrium(spec, args.tol))
    doc.values["influence_weights"] = _labelled_matrix(labels, V)
    doc.diagnostics["row_sum_error"] = float(np.max(np.abs(V.sum(axis=1) - 1.0)))


def _consensus(args, W, doc):
    y = _ideal_points(args, W, doc.parameters)
    q = coordination.consensus_weights(W, args.tol, seed=args.seed)
    doc.values["consensus"] = float(q @ y)
    doc.values["q"] = _labelled(W.node_labels(), q)


def _limit_scan(args, W, doc):
    k_max = args.k_max or 20
    doc.parameters["k_max"] = k_max
    pair = spectral.perron_pair(W, args.tol, args.max_iter, seed=args.seed)
    limit = spectral.rank1_limit(W, pair=pair)
    rows = []
    for k, alpha in enumerate(game.blow_up_alphas(pair.lambda1, k_max), start=1):
        R = spectral.scaled_resolvent(W, alpha, r=pair.lambda1)
        rows.append((k, alpha, float(np.max(np.abs(R - limit)))))
    doc.rows = rows
    doc.values["rows"] = [{"k": k, "alpha": a, "value": v} for k, a, v in rows]
    doc.diagnostics.update(spectral_radius=pair.lambda1, iterations=pair.iterations, residual=pair.residual)


def _blowup_scan(args, W, doc):
    k_max = args.k_max or 30
    doc.parameters["k_max"] = k_max
    b = _base_vector(args, W, doc.parameters)
    scan = game.blow_up_scan(W, b, k_max)
    doc.rows = [(k, alpha, lo) for k, (alpha, lo, _) in enumerate(scan, start=1)]
    doc.values["rows"] = [
        {"k": k, "alpha": alpha, "value": lo, "aggregate": agg} for k, (alpha, lo, agg) in enumerate(scan, start=1)
    ]


HANDLERS = {
    "spectral": _spectral,
    "perron": _perron,
    "primitive": _primitive,
    "walks": _walks,
    "bonacich": _bonacich,
    "equilibrium": _equilibrium,
    "keyness": _keyness,
    "coordination": _coordination,
    "consensus": _consensus,
    "limit-scan": _limit_scan,
    "blowup-scan": _blowup_scan,
}


def run_command(argv, stderr=None):
    """Run one subcommand; returns ``(ResultDocument or None, exit code)``.

    Errors are reported as one line on ``stderr`` and mapped to exit codes.
    """
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc = ResultDocument(args.command, output_format=args.format)
        doc.parameters.update(graph=str(args.graph), tol=args.tol, method=args.method, seed=args.seed)
        if args.alpha is not None:
            doc.parameters["alpha"] = args.alpha
        if args.max_iter is not None:
            doc.parameters["max_iter"] = args.max_iter
        W = parse_edge_list(args.graph.read_text(encoding="utf-8"))
        HANDLERS[args.command](args, W, doc)
    except NetGamesError as exc:
        print(f"netgames: {type(exc).__name__}: {exc}", file=stderr)
        return None, exc.exit_code
    except (OSError, UnicodeDecodeError) as exc:
        print(f"netgames: InputError: {exc}", file=stderr)
        return None, 2
    return doc, 0


def main(argv=None) -> int:
    doc, code = run_command(sys.argv[1:] if argv is None else argv)
    if doc is not None:
        sys.stdout.write(doc.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
