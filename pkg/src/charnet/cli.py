"""``charnet`` command line.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report
from .community import METHODS
from .graph import GraphError
from .ingest import IngestError, slice_graph
from .metrics import ConvergenceError
from .report import RunConfig

EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which we reserve for data errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", required=True, metavar="DIR", help="directory of sSSeEE.txt files")
    common.add_argument("--slices", metavar="FILE", help="slice definitions (name = episodes)")
    common.add_argument("--slice", action="append", metavar="NAME", help="AE, sS, sSeE, sA-sB or a named slice")
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--sep", default="\t", help="field separator in episode files (default: tab)")
    common.add_argument("--format", default="csv")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")

    p = _Parser(prog="charnet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", parents=[common], help="N, |E|, diameter, clique number, clustering")
    s.add_argument("--clustering", choices=("transitivity", "local"), default="transitivity")

    s = sub.add_parser("centrality", parents=[common], help="per-vertex centrality")
    s.add_argument("--measure", required=True, choices=report.MEASURES)
    s.add_argument("--normalized", action="store_true")
    s.add_argument("--subject", action="append", help="restrict to these characters; 'friends' adds the six")
    s.add_argument("--closeness", choices=("inverse-mean", "conventional"), default="inverse-mean")

    s = sub.add_parser("pairs", parents=[common], help="interaction counts between pairs")
    s.add_argument("--pair", action="append", metavar="A,B")
    s.add_argument("--per-season", action="store_true")

    s = sub.add_parser("communities", parents=[common], help="run one detection method")
    s.add_argument("--method", required=True, choices=METHODS)
    s.add_argument("--walk-length", type=int, default=4)
    s.add_argument("--partition-dir", metavar="DIR", help="persist partitions here")

    s = sub.add_parser("compare", parents=[common], help="pairwise partition similarity")
    s.add_argument("--method", action="append", choices=METHODS)
    s.add_argument("--metric", choices=("nmi", "ari"), default="nmi")
    s.add_argument("--nmi-normalization", choices=("arithmetic", "max", "sqrt"), default="arithmetic")
    s.add_argument("--walk-length", type=int, default=4)
    s.add_argument("--partition-dir", metavar="DIR")

    s = sub.add_parser("export", parents=[common], help="write the slice graph as dot, graphml or edge-csv")
    s.add_argument("--method", choices=METHODS, help="colour vertices by this method's partition")
    s.add_argument("--walk-length", type=int, default=4)
    return p


def _one_slice(args: argparse.Namespace) -> str:
    if not args.slice or len(args.slice) != 1:
        raise UsageError(f"{args.command} takes exactly one --slice")
    return args.slice[0]


def run(args: argparse.Namespace) -> str:
    config = RunConfig(
        corpus=str(args.corpus),
        slices=args.slices,
        seed=args.seed,
        sep=args.sep,
        format=args.format,
        walk_length=getattr(args, "walk_length", 4),
        normalized=getattr(args, "normalized", False),
        closeness=getattr(args, "closeness", "inverse-mean"),
        clustering=getattr(args, "clustering", "transitivity"),
        nmi_normalization=getattr(args, "nmi_normalization", "arithmetic"),
    )
    report_formats = ("csv", "json")
    if args.command == "export":
        if args.format not in report.EXPORTERS:
            raise UsageError(f"export format must be one of {', '.join(report.EXPORTERS)}")
    elif args.format not in report_formats:
        raise UsageError(f"report format must be csv or json, not {args.format!r}")

    corpus = config.load()
    h = corpus.content_hash()
    cmd = args.command
    if cmd == "stats":
        if not args.slice:
            raise UsageError("stats needs at least one --slice (or 'standard')")
        rows = report.cmd_stats(corpus, args.slice, config)
    elif cmd == "centrality":
        subjects = None
        if args.subject:
            subjects = []
            for s in args.subject:
                subjects.extend(report.FRIENDS if s == "friends" else [s])
        rows = report.cmd_centrality(corpus, _one_slice(args), args.measure, subjects, config)
    elif cmd == "pairs":
        pairs = None
        if args.pair:
            pairs = []
            for item in args.pair:
                a, sep, b = item.partition(",")
                if not sep or not a.strip() or not b.strip():
                    raise UsageError(f"--pair expects A,B not {item!r}")
                pairs.append((a.strip(), b.strip()))
        rows = report.cmd_pairs(corpus, _one_slice(args), pairs, args.per_season)
    elif cmd == "communities":
        _p, rows = report.cmd_communities(corpus, _one_slice(args), args.method, config, args.partition_dir)
    elif cmd == "compare":
        if not args.method or len(args.method) < 2:
            raise UsageError("compare needs at least two --method")
        rows = report.cmd_compare(corpus, _one_slice(args), args.method, args.metric, config, args.partition_dir)
    else:
        g = slice_graph(corpus, _one_slice(args))
        part = None
        if args.method:
            from .community import detect

            part = detect(g, args.method, config.seed, config.walk_length, config.tol)
        return report.cmd_export(g, args.format, None, part)
    return report.render(rows, config, h, args.format)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = run(args)
    except UsageError as e:
        print(f"charnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as e:
        print(f"charnet: did not converge: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as e:
        # IngestError and GraphError are ValueErrors; unknown names/measures land here too
        code = EXIT_DATA if isinstance(e, (IngestError, GraphError)) else EXIT_USAGE
        print(f"charnet: error: {e}", file=sys.stderr)
        return code
    except OSError as e:
        print(f"charnet: error: {e}", file=sys.stderr)
        return EXIT_DATA
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"charnet: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_DATA
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
