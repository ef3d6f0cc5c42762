from __future__ import annotations

import json

import pytest

from semdisco.config import DATA_DIR, AppConfig, flatten
from semdisco.errors import ConfigError


def test_defaults_point_at_bundled_data():
    cfg = AppConfig.load()
    assert cfg.ontology_path == DATA_DIR / "politics.ttl"
    assert cfg.nlu_mode == "fixture" and cfg.threshold == 1 and cfg.count_relations is True


def test_flatten_nested_and_dotted():
    assert flatten({"nlu": {"mode": "live"}, "classifier.threshold": 2}) == {"nlu.mode": "live", "classifier.threshold": 2}


def test_file_and_overrides(tmp_path):
    (tmp_path / "ont.ttl").write_text("")
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"ontology": {"path": "ont.ttl", "domain": "Politics"}, "classifier.threshold": 2}))
    cfg = AppConfig.load(path, ["classifier.count_relations=false", "classifier.threshold=3"])
    assert cfg.ontology_path == tmp_path / "ont.ttl"
    assert cfg.threshold == 3 and cfg.count_relations is False


@pytest.mark.parametrize("override", [
    "nlu.mode=offline", "classifier.threshold=0", "classifier.threshold=two", "unknown.key=1",
    "ontology.path=/does/not/exist.ttl", "nlu.mode=live", "noequals",
])
def test_invalid_settings(override):
    with pytest.raises(ConfigError):
        AppConfig.load(overrides=[override])


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        AppConfig.load(tmp_path / "nope.json")
