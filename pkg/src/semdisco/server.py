"""Read-only SPARQL endpoint over a fixed graph snapshot."""

from __future__ import annotations

import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .rdf.graph import Graph
from .sparql import MEDIA_TYPE, QUERY_ERRORS, evaluate, parse_query, to_sparql_json

log = logging.getLogger(__name__)


def run_query(graph: Graph, text: str) -> bytes:
    return to_sparql_json(evaluate(graph, parse_query(text)))


def make_handler(graph: Graph) -> type[BaseHTTPRequestHandler]:
    class Handler(BaseHTTPRequestHandler):
        server_version = "semdisco"
        protocol_version = "HTTP/1.1"

        def _send(self, status: int, body: bytes, content_type: str) -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _text(self, status: int, message: str) -> None:
            self._send(status, (message + "\n").encode("utf-8"), "text/plain; charset=utf-8")

        def do_GET(self) -> None:  # noqa: N802
            url = urlsplit(self.path)
            if url.path == "/health":
                self._text(200, "ok")
                return
            if url.path != "/sparql":
                self._text(404, f"no such resource: {url.path}")
                return
            params = parse_qs(url.query, keep_blank_values=True)
            texts = params.get("query")
            if not texts or not texts[0].strip():
                self._text(400, "missing 'query' parameter")
                return
            try:
                body = run_query(graph, texts[0])
            except QUERY_ERRORS as exc:
                self._text(400, f"query error: {exc}")
                return
            self._send(200, body, MEDIA_TYPE)

        def do_POST(self) -> None:  # noqa: N802
            self._text(405, "only GET is supported")

        def log_message(self, format: str, *args) -> None:  # noqa: A002
            log.info("%s - %s", self.address_string(), format % args)

    return Handler


class SparqlServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, graph: Graph, host: str = "127.0.0.1", port: int = 8080):
        self.graph = graph
        super().__init__((host, port), make_handler(graph))

    @property
    def port(self) -> int:
        return self.server_address[1]

    def start_background(self) -> threading.Thread:
        thread = threading.Thread(target=self.serve_forever, daemon=True)
        thread.start()
        return thread
