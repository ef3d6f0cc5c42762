"""``semdisco`` command line: query, annotate, classify, reason, export, serve."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import BinaryIO, Sequence

from .annotator import annotations_to_json
from .app import Engine
from .classifier import MODES, NLU_ONTOLOGY, TweetRecord, aggregate, classify_tweet, emit_report
from .config import AppConfig
from .errors import ConfigError, FixtureMissError, NluResponseError, NluTransportError, RdfSyntaxError, SemdiscoError
from .rdf.ntriples import serialize_ntriples
from .sparql import QUERY_ERRORS, to_sparql_json

EXIT_OK, EXIT_PARTIAL, EXIT_USAGE, EXIT_FIXTURE_MISS, EXIT_INCONSISTENT, EXIT_STARTUP = range(6)

log = logging.getLogger("semdisco")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 already; keep the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON config file (nested or dotted keys)")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="override one config key; repeatable")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="semdisco", description="Ontology-backed domain discovery for short social texts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("query", parents=[common], help="run a SPARQL SELECT over the loaded graph")
    q.add_argument("query", help="query text, or @path to read it from a file")

    a = sub.add_parser("annotate", parents=[common], help="annotate a JSONL tweet file")
    a.add_argument("tweets", type=Path)

    c = sub.add_parser("classify", parents=[common], help="per-user domain report for a JSONL tweet file")
    c.add_argument("tweets", type=Path)
    c.add_argument("--mode", choices=MODES, default=NLU_ONTOLOGY)
    c.add_argument("--format", choices=("json", "csv"), default="json")

    sub.add_parser("reason", parents=[common], help="consistency report for the loaded ontology")

    e = sub.add_parser("export", parents=[common], help="write the enriched, materialized graph as N-Triples")
    e.add_argument("out", type=Path)

    s = sub.add_parser("serve", parents=[common], help="serve GET /sparql over HTTP")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8080)
    return parser


def _read_jsonl(path: Path):
    """Yield ``(line_number, record | None, error | None)`` for non-blank lines."""
    with path.open("rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            if not raw.strip():
                continue
            try:
                yield lineno, TweetRecord.from_dict(json.loads(raw)), None
            except (json.JSONDecodeError, UnicodeDecodeError, KeyError, ValueError) as exc:
                yield lineno, None, f"{type(exc).__name__}: {exc}"


def _write(out: BinaryIO, data: bytes) -> None:
    out.write(data)
    out.flush()


def cmd_query(engine: Engine, args, out: BinaryIO) -> int:
    text = args.query
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        result = engine.query(text)
    except QUERY_ERRORS as exc:
        print(f"semdisco: query error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(out, to_sparql_json(result))
    return EXIT_OK


def cmd_annotate(engine: Engine, args, out: BinaryIO) -> int:
    failed = False
    for lineno, tweet, error in _read_jsonl(args.tweets):
        if tweet is None:
            failed = True
            line = json.dumps({"line": lineno, "error": error}, ensure_ascii=False)
        else:
            anns, inferred = engine.annotate(tweet.text)
            line = annotations_to_json(tweet.id, anns, inferred)
        _write(out, (line + "\n").encode("utf-8"))
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_classify(engine: Engine, args, out: BinaryIO) -> int:
    cfg = engine.config
    provider = engine.nlu_provider()
    classified = []
    failed = False
    for lineno, tweet, error in _read_jsonl(args.tweets):
        if tweet is None:
            failed = True
            print(f"semdisco: line {lineno}: {error}", file=sys.stderr)
            continue
        try:
            nlu = provider.analyze(tweet.text)
        except FixtureMissError as exc:
            print(f"semdisco: tweet {tweet.id}: {exc}", file=sys.stderr)
            return EXIT_FIXTURE_MISS
        anns = engine.annotate(tweet.text)[0] if args.mode == NLU_ONTOLOGY else None
        domains = classify_tweet(tweet, nlu, anns, cfg.ontology_domain, cfg.threshold, cfg.count_relations)
        classified.append((tweet, domains))
    _write(out, emit_report(aggregate(classified, args.mode), args.format))
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_reason(engine: Engine, args, out: BinaryIO) -> int:
    report = engine.consistency()
    _write(out, report.to_json())
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def cmd_export(engine: Engine, args, out: BinaryIO) -> int:
    args.out.write_bytes(serialize_ntriples(engine.materialized))
    return EXIT_OK


def cmd_serve(engine: Engine, args, out: BinaryIO) -> int:
    from .server import SparqlServer

    try:
        server = SparqlServer(engine.query_graph, args.host, args.port)
    except OSError as exc:
        print(f"semdisco: cannot listen on {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_STARTUP
    print(f"serving SPARQL on http://{args.host}:{server.port}/sparql", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


COMMANDS = {
    "query": cmd_query,
    "annotate": cmd_annotate,
    "classify": cmd_classify,
    "reason": cmd_reason,
    "export": cmd_export,
    "serve": cmd_serve,
}


def main(argv: Sequence[str] | None = None, stdout: BinaryIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    out = stdout if stdout is not None else sys.stdout.buffer
    try:
        config = AppConfig.load(args.config, args.overrides)
    except ConfigError as exc:
        print(f"semdisco: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        engine = Engine.from_config(config)
    except (RdfSyntaxError, SemdiscoError) as exc:
        print(f"semdisco: cannot load data: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](engine, args, out)
    except FileNotFoundError as exc:
        print(f"semdisco: {exc.filename}: file not found", file=sys.stderr)
        return EXIT_USAGE
    except (NluTransportError, NluResponseError) as exc:
        print(f"semdisco: NLU error: {exc}", file=sys.stderr)
        return EXIT_STARTUP
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
