#!/usr/bin/env python3
"""
Tests for order-preserving concurrent evaluation and JSON-lines batches.
"""

import threading
import time

import pytest

import testkit
from src.batch import ordered_map, run_batch_lines


def _slow_square(n):
    # later items finish first
    time.sleep(0.002 * (20 - n))
    return n * n


def test_serial_map():
    assert list(ordered_map(lambda x: x + 1, [1, 2, 3], workers=1)) == [2, 3, 4]
    assert list(ordered_map(lambda x: x, [], workers=4)) == []


def test_parallel_map_keeps_input_order():
    items = list(range(20))
    assert list(ordered_map(_slow_square, items, workers=6)) == [n * n for n in items]


def test_parallel_map_uses_several_threads():
    seen = set()
    lock = threading.Lock()

    def record(n):
        with lock:
            seen.add(threading.get_ident())
        time.sleep(0.01)
        return n

    assert list(ordered_map(record, range(12), workers=4)) == list(range(12))
    assert len(seen) > 1


def test_failure_is_raised_in_its_slot():
    def explode_on_three(n):
        if n == 3:
            raise ValueError("three")
        return n

    results = []
    with pytest.raises(ValueError, match="three"):
        for value in ordered_map(explode_on_three, range(8), workers=3):
            results.append(value)
    assert results == [0, 1, 2]


class _Interrupted(BaseException):
    pass


def test_base_exception_in_a_worker_does_not_hang():
    def interrupt_on_two(n):
        if n == 2:
            raise _Interrupted()
        return n

    started = time.time()
    results = []
    with pytest.raises(_Interrupted):
        for value in ordered_map(interrupt_on_two, range(6), workers=2):
            results.append(value)
    assert results == [0, 1]
    assert time.time() - started < 10


def test_batch_lines_skip_blanks_and_report_errors():
    def evaluate(query):
        if query.get("bad"):
            raise ValueError("bad query")
        return {"echo": query["n"]}

    lines = ['{"n": 1}', "", '{"bad": true}', "[1, 2]", "{oops", '{"n": 6}']
    out = list(run_batch_lines(lines, evaluate, workers=3))
    assert out[0] == {"echo": 1}
    assert out[1] == {"line": 3, "error": "bad query"}
    assert out[2] == {"line": 4, "error": "each line must hold a JSON object"}
    assert out[3]["line"] == 5 and "error" in out[3]
    assert out[4] == {"echo": 6}
    assert len(out) == 5


def main():
    testkit.main(globals())


if __name__ == "__main__":
    main()
