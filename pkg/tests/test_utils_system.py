import os

import pytest

import gammaflow.utils.system as system
from gammaflow.core.constants import CACHE_DIR_ENV, DEFAULT_CACHE_DIR

def test_number_of_cpus():
    assert system.get_number_of_cpus() >= 1

def test_cache_dir_argument_wins(monkeypatch):
    monkeypatch.setenv(CACHE_DIR_ENV, '/from/env')
    assert system.get_cache_dir('/explicit') == '/explicit'

def test_cache_dir_from_env(monkeypatch):
    monkeypatch.setenv(CACHE_DIR_ENV, '  /from/env ')
    assert system.get_cache_dir() == '/from/env'

def test_cache_dir_default(monkeypatch, tmp_path):
    monkeypatch.setenv(CACHE_DIR_ENV, '   ')
    monkeypatch.chdir(tmp_path)
    assert system.get_cache_dir() == os.path.join(os.getcwd(), DEFAULT_CACHE_DIR)

    monkeypatch.delenv(CACHE_DIR_ENV)
    assert system.get_cache_dir() == os.path.join(os.getcwd(), DEFAULT_CACHE_DIR)

if __name__ == "__main__":
    pytest.main([__file__])
