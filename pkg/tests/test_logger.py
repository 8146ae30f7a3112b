import logging

import pytest

from dualcheeger.exceptions import ConfigError
from dualcheeger.utils.logger import resolve_level, setup_logger, stage_timer

def test_resolve_level_names_and_numbers():
    assert resolve_level('debug') == logging.DEBUG
    assert resolve_level(' Info ') == logging.INFO
    assert resolve_level(logging.ERROR) == logging.ERROR

def test_resolve_level_from_environment(monkeypatch):
    monkeypatch.setenv('DUALCHEEGER_LOG_LEVEL', 'ERROR')
    assert resolve_level(None) == logging.ERROR
    monkeypatch.delenv('DUALCHEEGER_LOG_LEVEL')
    assert resolve_level(None) == logging.WARNING

def test_unknown_level():
    with pytest.raises(ConfigError):
        resolve_level('chatty')

def test_setup_logger_replaces_handlers(tmp_path):
    log_file = tmp_path / 'logs' / 'run.log'
    first = setup_logger('dualcheeger.test', level='INFO', log_file=str(log_file))
    second = setup_logger('dualcheeger.test', level='INFO', log_file=str(log_file))
    assert first is second
    assert len(second.handlers) == 2
    second.info('enumerated 81 pairs')
    for handler in second.handlers:
        handler.flush()
    assert 'enumerated 81 pairs' in log_file.read_text()
    for handler in second.handlers[:]:
        handler.close()
        second.removeHandler(handler)

def test_bad_environment_level_falls_back(monkeypatch):
    monkeypatch.setenv('DUALCHEEGER_LOG_LEVEL', 'chatty')
    assert setup_logger('dualcheeger.test.fallback').level == logging.WARNING

def test_stage_timer_records_even_on_error():
    timings = {}
    with stage_timer(timings, 'parse'):
        pass
    with pytest.raises(ValueError):
        with stage_timer(timings, 'analysis'):
            raise ValueError('boom')
    assert list(timings) == ['parse', 'analysis']
    assert all(seconds >= 0 for seconds in timings.values())
