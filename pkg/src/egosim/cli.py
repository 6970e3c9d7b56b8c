"""Command line interface.

Each sub-command runs one stage of the pipeline::

    egosim signature --input karate --node 1
    egosim matrix    --input a21-signatures --output a21.csv
    egosim rank      --input edges.txt
    egosim similar   --input karate --node 28 --top 5
    egosim datasets
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__, kernels
from .datasets import SignatureSet, get_descriptor, list_datasets, load_dataset
from .errors import EgoSimError, UndefinedSignatureError, UnknownDatasetError
from .graph import read_graph
from .signature import render_signature, signature
from .similarity import matrix_from_signatures, similarity_matrix, similarity_sums, top_k_similar

MAX_PRECISION = 17


def _precision(text):
    value = int(text)
    if not 0 <= value <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be between 0 and {MAX_PRECISION}")
    return value


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def load_input(source, fmt=None):
    """Resolve ``--input``: dataset names take priority over file paths."""
    try:
        get_descriptor(source)
    except UnknownDatasetError:
        if not Path(source).exists():
            raise
        return read_graph(source, fmt)
    return load_dataset(source)


def _matrix(source, args):
    if isinstance(source, SignatureSet):
        return matrix_from_signatures(source.signatures, source.labels,
                                      threads=args.threads, backend=args.backend)
    return similarity_matrix(source, threads=args.threads, backend=args.backend)


def _emit(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_signature(args, source):
    labels = source.labels
    wanted = range(len(labels)) if args.node == "all" else [source.index_of(args.node)]

    rows, failed = [], 0
    for i in wanted:
        try:
            if isinstance(source, SignatureSet):
                rows.append((labels[i], source.signatures[i]))
            else:
                rows.append((labels[i], signature(source, i)))
        except UndefinedSignatureError as exc:
            if args.node != "all":
                raise
            print(f"egosim: {exc}", file=sys.stderr)
            failed += 1

    p = args.precision
    fmt = args.output_format or "text"
    if fmt == "json":
        doc = [{"label": lab, "degrees": list(s.degrees), "total": s.total,
                "probabilities": s.probabilities()} for lab, s in rows]
        text = json.dumps(doc) + "\n"
    elif fmt == "csv":
        width = max((s.width for _, s in rows), default=0)
        lines = ["label," + ",".join(f"p{k}" for k in range(1, width + 1))]
        lines += [f"{lab}," + render_signature(s, p, sep=",") for lab, s in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(f"{lab}: {render_signature(s, p)}\n" for lab, s in rows)
    _emit(args, text)
    return 1 if failed else 0


def cmd_matrix(args, source):
    m = _matrix(source, args)
    if (args.output_format or "csv") == "json":
        _emit(args, m.to_json() + "\n")
    else:
        _emit(args, m.to_csv(args.precision))
    return 0


def cmd_rank(args, source):
    ranking = similarity_sums(_matrix(source, args))
    p = args.precision
    summary = f"top={ranking.top} bottom={ranking.bottom}"
    fmt = args.output_format or "text"
    if fmt == "json":
        doc = {"top": ranking.top, "bottom": ranking.bottom,
               "ranking": [{"rank": r, "label": lab, "score": s}
                           for r, (lab, s) in enumerate(ranking.entries, start=1)]}
        _emit(args, json.dumps(doc) + "\n")
        print(summary, file=sys.stderr)
    elif fmt == "csv":
        _emit(args, ranking.to_csv(p))
        print(summary, file=sys.stderr)
    else:
        lines = ["rank\tlabel\tscore"]
        lines += [f"{r}\t{lab}\t{s:.{p}f}" for r, (lab, s) in enumerate(ranking.entries, start=1)]
        lines.append(f"high similarity node: {ranking.top}")
        lines.append(f"low similarity node: {ranking.bottom}")
        lines.append(summary)
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_similar(args, source):
    m = _matrix(source, args)
    best = top_k_similar(m, args.node, args.top)
    p = args.precision
    fmt = args.output_format or "text"
    if fmt == "json":
        doc = {"node": str(args.node),
               "similar": [{"label": lab, "score": s} for lab, s in best]}
        text = json.dumps(doc) + "\n"
    elif fmt == "csv":
        text = "rank,label,score\n" + "".join(
            f"{r},{lab},{s:.{p}f}\n" for r, (lab, s) in enumerate(best, start=1))
    else:
        text = "".join(f"{lab}\t{s:.{p}f}\n" for lab, s in best)
    _emit(args, text)
    return 0


def cmd_datasets(args):
    descs = list_datasets()
    if args.output_format == "json":
        _emit(args, json.dumps([asdict(d) for d in descs], indent=2) + "\n")
        return 0
    lines = [f"{'name':<16}{'nodes':>7}{'edges':>8}{'top':>6}{'bottom':>8}  bundled"]
    for d in descs:
        edges = "-" if d.edge_count is None else d.edge_count
        lines.append(f"{d.name:<16}{d.node_count:>7}{edges:>8}{d.expected_top or '-':>6}"
                     f"{d.expected_bottom or '-':>8}  {'yes' if d.bundled else 'no'}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True,
                        help="dataset name or path to an edge list")
    common.add_argument("--format", choices=["edgelist", "csv"],
                        help="input file format (default: from extension)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--output-format", choices=["text", "csv", "json"])
    common.add_argument("--precision", type=_precision, default=2,
                        help="decimal places for printed values (default 2)")
    common.add_argument("--threads", type=_nonneg, default=0,
                        help="worker cap for the matrix kernel, 0 = auto")
    common.add_argument("--backend", choices=kernels.available_backends(),
                        help=f"matrix kernel (default {kernels.DEFAULT_BACKEND})")

    parser = argparse.ArgumentParser(prog="egosim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signature", parents=[common], help="print degree signatures")
    p.add_argument("--node", default="all", help="node label, or 'all' (default)")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("matrix", parents=[common], help="pairwise similarity matrix")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("rank", parents=[common], help="rank nodes by total similarity")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("similar", parents=[common], help="most similar nodes to one node")
    p.add_argument("--node", required=True)
    p.add_argument("--top", "-k", type=_positive, default=5, help="how many to list")
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("datasets", help="list known datasets")
    p.add_argument("--output", "-o")
    p.add_argument("--output-format", choices=["text", "json"])
    p.set_defaults(func=None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="egosim: %(message)s", stream=sys.stderr)
    try:
        if args.command == "datasets":
            return cmd_datasets(args)
        source = load_input(args.input, args.format)
        return args.func(args, source)
    except (EgoSimError, OSError, ValueError) as exc:
        print(f"egosim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
