from __future__ import annotations

import csv
import io
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import KANIS_TWEET, OVERINGTON_TWEET
from semdisco.annotator import Annotation
from semdisco.classifier import (
    TweetRecord,
    aggregate,
    classify_tweet,
    emit_report,
    nlu_domains,
    read_report,
)
from semdisco.errors import ReportFormatError
from semdisco.nlu import FixtureProvider, NluResult
from semdisco.rdf import POL


def tweet(tid="1", user="u", text="x"):
    return TweetRecord(tid, user, text)


def test_nlu_domains_first_segment():
    assert nlu_domains(NluResult(categories=("/travel/tourist destinations/australia and new zealand",))) == {"travel"}
    assert nlu_domains(NluResult(categories=("/society/work/unions", "/family and parenting"))) == \
        {"society", "family and parenting"}
    assert nlu_domains(NluResult()) == set()


@pytest.fixture(scope="module")
def fixtures(data_dir):
    return FixtureProvider.load(data_dir / "nlu_fixtures.json")


def test_kanis_tweet_classification(engine, fixtures):
    anns = engine.annotate(KANIS_TWEET)[0]
    assert len(anns) == 3
    assert classify_tweet(tweet(text=KANIS_TWEET), fixtures.analyze(KANIS_TWEET), anns) == {"travel", "politics"}


def test_overington_tweet_classification(engine, fixtures):
    anns = engine.annotate(OVERINGTON_TWEET)[0]
    assert classify_tweet(tweet(text=OVERINGTON_TWEET), fixtures.analyze(OVERINGTON_TWEET), anns) == \
        {"society", "family and parenting", "politics"}


def test_unknown_fallback():
    assert classify_tweet(tweet(), NluResult(), []) == {"unknown"}


def test_threshold_and_relation_counting():
    rel = Annotation(0, 4, "Vote", POL.voteFor, "relation")
    party = Annotation(5, 10, "Labor", POL.labour, "individual", POL.PoliticalParty)
    assert "politics" in classify_tweet(tweet(), NluResult(), [rel, party], threshold=2)
    assert "politics" not in classify_tweet(tweet(), NluResult(), [rel, party], threshold=2, count_relations=False)
    with pytest.raises(ValueError):
        classify_tweet(tweet(), NluResult(), [], threshold=0)


def test_tweet_record_validation():
    with pytest.raises(ValueError):
        TweetRecord("", "u", "t")
    assert TweetRecord.from_dict({"id": 5, "user": "u", "text": "t"}).id == "5"


def test_aggregate_hand_count():
    rows = [(tweet("1"), {"politics"}), (tweet("2"), {"politics"}), (tweet("3"), {"travel", "politics"})]
    report = aggregate(rows)
    assert report.users["u"].counts == [("politics", 3), ("travel", 1)]
    assert report.users["u"].total == 3


def test_empty_report():
    report = aggregate([])
    assert report.users == {} and report.tweets == {}
    assert emit_report(report, "csv") == b"user,domain,count,total\n"


def test_json_round_trip_and_determinism():
    rows = [(tweet("1", "a"), {"politics", "travel"}), (tweet("2", "a"), {"travel"})]
    data = emit_report(aggregate(rows), "json")
    assert read_report(data) == aggregate(rows)
    assert emit_report(aggregate(rows), "json") == data
    assert emit_report(aggregate(list(reversed(rows))), "csv") == emit_report(aggregate(rows), "csv")


def test_csv_rows_follow_report_order():
    rows = [(tweet("1", "b"), {"z"}), (tweet("2", "a"), {"y", "x"}), (tweet("3", "a"), {"x"})]
    lines = list(csv.reader(io.StringIO(emit_report(aggregate(rows), "csv").decode())))
    assert lines == [["user", "domain", "count", "total"], ["a", "x", "2", "2"], ["a", "y", "1", "2"],
                     ["b", "z", "1", "1"]]


def test_unsupported_format():
    with pytest.raises(ReportFormatError):
        emit_report(aggregate([]), "xml")


DOMAINS = st.sets(st.sampled_from(["politics", "travel", "sports", "society"]), min_size=1, max_size=3)


@given(st.lists(st.tuples(st.sampled_from(["a", "b", "c"]), DOMAINS), max_size=20), st.randoms())
def test_aggregate_permutation_invariant(items, rnd):
    rows = [(tweet(str(i), user), ds) for i, (user, ds) in enumerate(items)]
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    assert aggregate(rows) == aggregate(shuffled)
    for user, entry in aggregate(rows).users.items():
        assert sum(n for _, n in entry.counts) >= entry.total
        assert all(d == d.lower() for d, _ in entry.counts)


def test_ontology_layer_only_adds(engine, fixtures, data_dir):
    records = [TweetRecord.from_dict(json.loads(line))
               for line in (data_dir / "tweets.jsonl").read_text().splitlines()]
    rng = random.Random(0)
    for rec in records:
        nlu = fixtures.analyze(rec.text)
        anns = engine.annotate(rec.text)[0]
        base = classify_tweet(rec, nlu, None)
        fused = classify_tweet(rec, nlu, anns, threshold=rng.randint(1, 3))
        assert base - {"unknown"} <= fused
        assert classify_tweet(rec, nlu, anns) == classify_tweet(rec, nlu, anns)
