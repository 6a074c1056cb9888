"""Wall-clock timing helpers for scripts and reports."""
import contextlib
import logging
import time
from typing import Optional


@contextlib.contextmanager
def timing(msg: str):
    logging.info("Started %s", msg)
    tic = time.perf_counter()
    yield
    toc = time.perf_counter()
    logging.info("Finished %s in %.3f seconds", msg, toc - tic)


class Timer:
    """Like timing(), but also stores the elapsed seconds in a report."""

    def __init__(self, msg: str, report=None, key: Optional[str] = None):
        self.msg = msg
        self.report = report
        self.key = key if key is not None else "time_" + msg.replace(" ", "_")
        self.elapsed = None

    def __enter__(self):
        logging.info("Started %s", self.msg)
        self.tic = time.perf_counter()
        return self

    def __exit__(self, typ, value, traceback):
        self.elapsed = time.perf_counter() - self.tic
        logging.info("Finished %s in %.3f seconds", self.msg, self.elapsed)
        if self.report is not None:
            self.report.add(self.key, f"{self.elapsed:.3f}")
