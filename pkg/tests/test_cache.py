"""Tests for the JSON-lines spectral cache."""

import logging

from qspectra.models.cache import CacheRecord, SpectralCache


def test_missing_file_is_an_empty_cache(cache_path):
    cache = SpectralCache(cache_path)
    assert len(cache) == 0
    assert cache.get("C~") is None


def test_records_persist_across_instances(cache_path):
    cache = SpectralCache(cache_path)
    cache.put(CacheRecord(graph6="C~", char_poly=[48, -148, 152, -69, 14, -1], slee=425.5))
    cache.put(CacheRecord(graph6="C~", char_poly=[0], slee=0.0))
    assert "C~" in cache

    reloaded = SpectralCache(cache_path)
    assert len(reloaded) == 1
    assert reloaded.get("C~").slee == 425.5
    with open(cache_path, encoding="utf-8") as handle:
        assert len(handle.readlines()) == 1


def test_big_coefficients_round_trip(cache_path):
    big = 3 ** 50
    SpectralCache(cache_path).put(CacheRecord(graph6="A_", char_poly=[big, -1], slee=1.0))
    with open(cache_path, encoding="utf-8") as handle:
        assert f'"{big}"' in handle.read()
    assert SpectralCache(cache_path).get("A_").char_poly == [big, -1]


def test_malformed_lines_are_skipped(cache_path, caplog):
    with open(cache_path, "w", encoding="utf-8") as handle:
        handle.write('{"graph6": "A_", "char_poly": [0, -2, 1], "slee": 8.38}\n')
        handle.write("not json\n")
        handle.write('{"graph6": "B"}\n')
        handle.write("\n")
    with caplog.at_level(logging.WARNING, logger="qspectra.models.cache"):
        cache = SpectralCache(cache_path)
    assert len(cache) == 1
    assert sum("Skipping malformed cache line" in r.message for r in caplog.records) == 2
