"""
Logging utilities: a process-wide level, short dotted logger names and
stdout/stderr split by severity.
"""
import logging as _logging
import re
import sys as _sys
import traceback as _traceback
from logging import DEBUG
from logging import ERROR
from logging import FATAL
from logging import INFO
from logging import WARN

# settings
_log_level = INFO

_name2level = {
    'FATAL': FATAL,
    'F': FATAL,

    'ERROR': ERROR,
    'ERR': ERROR,
    'E': ERROR,

    'WARNING': WARN,
    'WARN': WARN,
    'W': WARN,

    'INFO': INFO,
    'I': INFO,

    'DEBUG': DEBUG,
    'D': DEBUG,
}

_log_format = '%(asctime)s %(levelname).1s %(sname)s.%(filename)s %(lineno)d - %(message)s'
_date_format = '%m-%d %H:%M:%S'

# number of log_every_n calls per (file, line) call site
_call_counts = {}


def _simple_name(name):
    """'proxnorm.certificates.potentials' -> 'proxnorm.c'"""
    parts = name.split('.')
    if name.endswith('@') or len(parts) <= 1:
        return name
    return '.'.join([parts[0]] + [p[0] for p in parts[1:-1]])


class ProxnormLogFormatter(_logging.Formatter):
    """Adds `sname` to records and renders an exception passed as the message with its traceback."""

    def formatMessage(self, record):
        record.sname = _simple_name(record.name)

        if isinstance(record.msg, Exception):
            ex = record.msg
            lines = _traceback.format_exception(type(ex), ex, ex.__traceback__)
            record.message = lines[-1] + ''.join(lines[:-1])

        return super(ProxnormLogFormatter, self).formatMessage(record)


def _handler(stream, accept):
    handler = _logging.StreamHandler(stream)
    handler.setFormatter(ProxnormLogFormatter(_log_format, _date_format))
    handler.addFilter(accept)
    return handler


class ProxnormLogger(_logging.Logger):
    FATAL = FATAL
    ERROR = ERROR
    INFO = INFO
    DEBUG = DEBUG
    WARN = WARN

    def __init__(self, name, level=_log_level) -> None:
        super(ProxnormLogger, self).__init__(name, level)

        self.propagate = False
        if not self.handlers:
            self.addHandler(_handler(_sys.stdout, lambda rec: rec.levelno < WARN))
            self.addHandler(_handler(_sys.stderr, lambda rec: rec.levelno >= WARN))

    def getEffectiveLevel(self):
        return _log_level

    def isEnabledFor(self, level):
        return level >= _log_level

    def log_every_n(self, level, msg, n, *args):
        """
        Log 'msg % args' on the 1st, (n+1)st, (2n+1)st... call from the same line.
        Not threadsafe.
        """
        caller = _sys._getframe(1)
        site = (caller.f_code.co_filename, caller.f_lineno)
        count = _call_counts.get(site, 0)
        _call_counts[site] = count + 1
        if count % n == 0:
            self.log(level, msg, *args, stacklevel=2)

    def is_debug_enabled(self):
        return self.isEnabledFor(DEBUG)

    def is_info_enabled(self):
        return self.isEnabledFor(INFO)

    def is_warning_enabled(self):
        return self.isEnabledFor(WARN)


def get_logger(name):
    original_logger_class = _logging.getLoggerClass()
    _logging.setLoggerClass(ProxnormLogger)
    logger = _logging.getLogger(name)
    _logging.setLoggerClass(original_logger_class)

    return logger


def set_level(v):
    """Sets the threshold for what messages will be logged, for all proxnorm loggers."""
    global _log_level

    _log_level = to_level(v)


def to_level(v):
    """Level from an int, a name such as 'info' or 'W', or a digit string; None keeps the current level."""
    if v is None:
        return _log_level
    if isinstance(v, int):
        return v
    if v.upper() in _name2level:
        return _name2level[v.upper()]
    if re.match(r'^\d+$', v):
        return int(v)
    raise ValueError(f'Unrecognized log level {v}.')
