import os

import pytest
from pydantic import ValidationError

from psyquiver.config import LOCAL_CORPUS_DIR, Config, SearchBounds, configs


def test_defaults_point_at_the_bundled_corpus():
    assert os.path.exists(os.path.join(configs.corpus_dir, "corpus.yaml"))
    assert os.path.isdir(LOCAL_CORPUS_DIR)
    assert configs.bounds.max_endo_carrier >= 8


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("PSYQUIVER_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("PSYQUIVER_PERTURB_MAX_MOVES", "3")
    monkeypatch.setenv("PSYQUIVER_CORPUS_DIR", str(tmp_path))
    settings = Config()
    assert settings.log_level == "DEBUG"
    assert settings.perturb_max_moves == 3
    assert settings.corpus_dir == str(tmp_path)


def test_bounds_are_positive():
    assert SearchBounds(max_endo_carrier=4).max_endo_carrier == 4
    with pytest.raises(ValidationError):
        SearchBounds(max_endo_carrier=0)
