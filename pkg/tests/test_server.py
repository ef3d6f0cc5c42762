from __future__ import annotations

import urllib.error
import urllib.parse
import urllib.request

import pytest

from semdisco.server import SparqlServer
from semdisco.sparql import MEDIA_TYPE


@pytest.fixture(scope="module")
def server(engine):
    srv = SparqlServer(engine.query_graph, port=0)
    srv.start_background()
    yield f"http://127.0.0.1:{srv.port}"
    srv.shutdown()
    srv.server_close()


def get(url: str):
    try:
        with urllib.request.urlopen(url, timeout=10) as resp:
            return resp.status, resp.headers.get("Content-Type"), resp.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.headers.get("Content-Type"), exc.read()


def test_health(server):
    assert get(server + "/health")[::2] == (200, b"ok\n")


def test_missing_query_param(server):
    status, ctype, _ = get(server + "/sparql")
    assert status == 400 and ctype.startswith("text/plain")


def test_syntax_error_is_400(server):
    status, _, body = get(server + "/sparql?" + urllib.parse.urlencode({"query": "SELECT * WHERE {"}))
    assert status == 400 and b"query error" in body


def test_unknown_path(server):
    assert get(server + "/nope")[0] == 404


def test_results_media_type(server):
    status, ctype, _ = get(server + "/sparql?" + urllib.parse.urlencode({"query": "SELECT * WHERE { ?s ?p ?o } LIMIT 1"}))
    assert status == 200 and ctype == MEDIA_TYPE
