import logging

import numpy as np
import pytest

from cbe.errors import ResourceBudgetExceeded
from cbe.utils.hashing import config_fingerprint, consistent_hash
from cbe.utils.resources import Timer, check_memory_budget, memory_cap_mb, timing


def test_timer():
    timer = Timer()
    sum(range(10 ** 5))
    assert timer.elapsed() >= 0.0 and timer.cpu() >= 0.0
    assert set(timer.as_dict()) == {'wall_clock_s', 'cpu_s'}
    assert 'wall-clock' in str(timer)


def test_timing_logs(caplog):
    with caplog.at_level(logging.DEBUG):
        with timing('Sum', level=logging.DEBUG) as timer:
            sum(range(100))
    assert isinstance(timer, Timer)
    assert [r.getMessage().split(':')[0] for r in caplog.records] == ['Sum...', 'Sum']


def test_memory_budget(monkeypatch):
    monkeypatch.delenv('CBE_MEM_CAP_MB', raising=False)
    assert memory_cap_mb() is None and memory_cap_mb(64.0) == 64.0
    check_memory_budget(10 ** 12)
    with pytest.raises(ResourceBudgetExceeded) as error:
        check_memory_budget(10 ** 9, cap_mb=1.0, what='test array')
    assert error.value.cap_mb == 1.0
    monkeypatch.setenv('CBE_MEM_CAP_MB', '1')
    with pytest.raises(ResourceBudgetExceeded):
        check_memory_budget(10 ** 9)


def test_hashes():
    assert consistent_hash(['a', 1, 2.5, True]) == consistent_hash(['a', 1, 2.5, True])
    assert consistent_hash(['a', 1]) != consistent_hash(['a1'])
    assert consistent_hash([np.int64(3), np.float64(0.5)]) == consistent_hash([3, 0.5])
    assert config_fingerprint({'a': '1', 'b': '2'}) == config_fingerprint({'b': '2', 'a': '1'})
    assert len(config_fingerprint({'a': '1'})) >= 16
