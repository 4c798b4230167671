import contextlib
import logging
import os
import sys
import threading


log_globals = threading.local()


def setup_logs(config=None):

    level = logging.WARNING
    if config and config.LOG_LEVEL:
        level = config.LOG_LEVEL
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    root = logging.getLogger()
    root.setLevel(level)

    # Clear existing handlers.
    root.handlers[:] = []

    injector = ContextInjector()
    formatter = logging.Formatter('%(asctime)s %(levelname)-8s pid:%(pid)d %(meta_str)s %(name)s - %(message)s')

    def add_handler(handler):
        handler.addFilter(injector)
        handler.setFormatter(formatter)
        root.addHandler(handler)

    # Console logging.
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    add_handler(handler)

    # File logging.
    if config and config.LOG_FILE:
        handler = logging.FileHandler(config.LOG_FILE)
        handler.setLevel(level)
        add_handler(handler)


@contextlib.contextmanager
def log_context(**meta):
    """Add ``meta`` to every record logged from this thread within the block."""
    old = getattr(log_globals, 'meta', None)
    log_globals.meta = dict(old or {}, **meta)
    try:
        yield
    finally:
        log_globals.meta = old


class ContextInjector(logging.Filter):

    def filter(self, record):
        record.pid = os.getpid() # Would love to cache this, but we can't.
        record.__dict__.update(log_globals.__dict__)

        meta = getattr(record, 'meta', None) or {}
        record.meta_str = ' '.join('%s:%s' % x for x in sorted(meta.items()))
        return True
