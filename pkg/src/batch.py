"""
Order-preserving concurrent evaluation.

Worker threads pull (index, item) pairs from a task queue and post (index, result) pairs
to a result queue; the caller receives results strictly in input order. Batch mode and
sharded oracle sweeps both run on this.
"""

import json
import logging
import queue
import threading
import traceback
from typing import Any, Callable, Dict, Iterable, Iterator, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)

_DONE = object()


class _Failure:
    def __init__(self, error: BaseException):
        self.error = error


def _worker(fn, tasks: queue.Queue, results: queue.Queue, stop_event: threading.Event):
    while not stop_event.is_set():
        try:
            item = tasks.get(timeout=1.0)
        except queue.Empty:
            continue
        if item is _DONE:
            tasks.task_done()
            break
        index, payload = item
        try:
            results.put((index, fn(payload)))
        except BaseException as e:
            logger.debug(f"Task {index} raised: {e!r}")
            results.put((index, _Failure(e)))
        finally:
            tasks.task_done()


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    stop_event: Optional[threading.Event] = None,
) -> Iterator[R]:
    """
    Apply fn to every item on a pool of threads, yielding results in input order.

    An exception raised by fn is re-raised when its slot comes up.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield fn(item)
        return

    stop_event = stop_event or threading.Event()
    tasks: queue.Queue = queue.Queue()
    results: queue.Queue = queue.Queue()
    for index, item in enumerate(items):
        tasks.put((index, item))
    threads = []
    for _ in range(min(workers, len(items))):
        tasks.put(_DONE)
        thread = threading.Thread(target=_worker, args=(fn, tasks, results, stop_event), daemon=True)
        threads.append(thread)
        thread.start()
    logger.debug(f"Started {len(threads)} worker threads for {len(items)} tasks")

    pending: Dict[int, Any] = {}
    next_index = 0
    try:
        while next_index < len(items):
            if next_index in pending:
                value = pending.pop(next_index)
                next_index += 1
                if isinstance(value, _Failure):
                    raise value.error
                yield value
                continue
            try:
                index, value = results.get(timeout=1.0)
            except queue.Empty:
                if not any(thread.is_alive() for thread in threads) and results.empty():
                    raise RuntimeError(f"worker threads exited before task {next_index} finished")
                continue
            pending[index] = value
    finally:
        stop_event.set()
        for thread in threads:
            thread.join(timeout=2.0)


def run_batch_lines(
    lines: Iterable[str],
    evaluate: Callable[[Dict[str, Any]], Dict[str, Any]],
    workers: int = 1,
) -> Iterator[Dict[str, Any]]:
    """
    Evaluate one JSON query object per line.

    Blank lines are skipped; a line that fails to parse or evaluate yields
    {"line": n, "error": message} in its slot and the batch carries on.
    """
    numbered = [(n, line) for n, line in enumerate(lines, start=1) if line.strip()]

    def handle(entry):
        n, line = entry
        try:
            query = json.loads(line)
            if not isinstance(query, dict):
                raise ValueError("each line must hold a JSON object")
            return evaluate(query)
        except Exception as e:
            logger.error(f"Batch line {n} failed: {e}")
            logger.debug(traceback.format_exc())
            return {"line": n, "error": str(e)}

    yield from ordered_map(handle, numbered, workers)
