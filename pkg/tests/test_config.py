#!/usr/bin/env python3
"""
Unit tests for configuration loading, metrics and structured logging.
"""

import json
import logging

import pytest

from src.config.loader import load_config, parse_tolerances, validate_config
from src.config.models import Config, Tolerances
from src.main import main
from src.observability.logger import StructuredLogger
from src.observability.metrics import COUNTERS, Metrics


class TestTolerances:
    def test_single_value(self):
        tol = parse_tolerances("1e-6")
        assert tol.unitary == 1e-6 and tol.psd == 1e-6
        assert tol.rank == Tolerances().rank

    def test_named_values(self):
        tol = parse_tolerances("psd=1e-7, rank=1e-5")
        assert tol.psd == 1e-7
        assert tol.rank == 1e-5
        assert tol.unitary == Tolerances().unitary

    def test_empty_keeps_base(self):
        base = Tolerances(rank=1e-4)
        assert parse_tolerances("  ", base) is base

    @pytest.mark.parametrize("raw", ["-1", "0", "psd=0", "speed=1e-3"])
    def test_rejected(self, raw):
        with pytest.raises(ValueError):
            parse_tolerances(raw)


class TestLoadConfig:
    def test_defaults(self):
        config = load_config({})
        assert config.seed is None
        assert config.tolerances == Tolerances()
        assert config.log_level == "warning"

    def test_environment(self):
        config = load_config({"COVPOVM_TOL": "rank=1e-6", "COVPOVM_SEED": "42", "COVPOVM_LOG_LEVEL": "debug"})
        assert config.tolerances.rank == 1e-6
        assert config.seed == 42
        assert config.log_level == "debug"

    def test_file_then_environment(self, tmp_path):
        path = tmp_path / "covpovm.json"
        path.write_text(json.dumps({"output_digits": 8, "seed": 3, "tolerances": {"psd": 1e-7}}))
        config = load_config({"COVPOVM_CONFIG": str(path), "COVPOVM_SEED": "5"})
        assert config.output_digits == 8
        assert config.tolerances.psd == 1e-7
        assert config.seed == 5

    def test_bad_log_level(self):
        with pytest.raises(ValueError):
            load_config({"COVPOVM_LOG_LEVEL": "chatty"})

    def test_validate_config(self):
        with pytest.raises(ValueError):
            validate_config(Config(output_digits=0))
        with pytest.raises(ValueError):
            validate_config(Config(seed=-1))

    def test_main_rejects_bad_configuration(self, monkeypatch):
        monkeypatch.setenv("COVPOVM_TOL", "nonsense=1")
        assert main(["fixture", "z2-std"]) == 1


class TestMetrics:
    def test_counters(self):
        m = Metrics()
        m.increment_kernels_built()
        m.increment_rank1_certificates(3)
        snap = m.snapshot()
        assert snap["kernels_built_total"] == 1
        assert snap["rank1_certificates_total"] == 3
        assert set(snap) == set(COUNTERS)
        m.reset()
        assert all(v == 0 for v in m.snapshot().values())


class TestStructuredLogger:
    def test_emits_json(self, caplog):
        log = StructuredLogger("covpovm.test")
        with caplog.at_level(logging.INFO, logger="covpovm.test"):
            log.info("command finished", command="extremal", exit_code=0)
        payload = json.loads(caplog.records[-1].getMessage())
        assert payload["message"] == "command finished"
        assert payload["command"] == "extremal"
        assert payload["level"] == "INFO"
        assert payload["timestamp"].endswith("+00:00")
