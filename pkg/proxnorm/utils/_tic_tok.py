import inspect
import time
from collections import defaultdict
from functools import partial

from proxnorm.conf import configure, Configurable, String, Bool
from . import logging

_LOG_LEVEL = 'info'
_VALUE_LEN_LIMIT = 10
_COLLECTION_LIMIT = 5

_TIC_TOC_TAG = 'tic_toc_'
_TIC_TOC_NAME_PREFIX = '[tic-toc]'
_TIC_TOC_NAME_SUFFIX = '@'

_stat_call_counter = defaultdict(int)
_stat_second_counter = defaultdict(float)


@configure()
class TicTocCfg(Configurable):
    enabled = Bool(True, config=True,
                   help='time decorated calls or pass them through untouched')
    level = String(_LOG_LEVEL, config=True,
                   help='tic-toc log-level')
    details = Bool(False, config=True,
                   help='log the bound arguments of every timed call')


def tic_toc(log_level=None, name=None, details=None):
    if log_level is None:
        log_level = TicTocCfg.level
    if details is None:
        details = TicTocCfg.details

    return partial(_tic_toc_decorate, logging.to_level(log_level), name, details)


def _tic_toc_decorate(log_level, name, details, fn):
    assert callable(fn)

    if not TicTocCfg.enabled or hasattr(fn, _TIC_TOC_TAG):
        return fn

    if name is None:
        logger_name = f'{_TIC_TOC_NAME_PREFIX}{fn.__module__}.{fn.__qualname__}{_TIC_TOC_NAME_SUFFIX}'
    else:
        logger_name = name

    logger = logging.get_logger(logger_name)

    fn_sig = inspect.signature(fn) if details else None

    def tic_toc_call(*args, **kwargs):
        tic = time.perf_counter()
        r = fn(*args, **kwargs)
        elapsed = time.perf_counter() - tic

        if logger.isEnabledFor(log_level):
            msg = f'elapsed {elapsed:.3f} seconds'
            if details and (len(args) > 0 or len(kwargs) > 0):
                ba = fn_sig.bind(*args, **kwargs)
                args_ = [f'<{k}>' if k == 'self' else f'{k}={_format_value(v)}'
                         for k, v in ba.arguments.items()]
                msg += f', details:\t{", ".join(args_)}'
            logger.log(log_level, msg, stacklevel=2)

        _stat_call_counter[logger_name] += 1
        _stat_second_counter[logger_name] += elapsed

        return r

    tic_toc_call.__name__ = fn.__name__
    tic_toc_call.__doc__ = fn.__doc__
    tic_toc_call.__wrapped__ = fn
    setattr(tic_toc_call, _TIC_TOC_TAG, True)

    return tic_toc_call


def _format_value(v):
    if v is None or isinstance(v, (int, float, bool)):
        r = v
    elif isinstance(v, str):
        r = v if len(v) <= _VALUE_LEN_LIMIT else f'{v[:_VALUE_LEN_LIMIT]}...[len={len(v)}]'
    elif hasattr(v, 'shape'):
        r = f'{type(v).__name__}[shape={getattr(v, "shape")}]'
    elif hasattr(v, '__len__'):
        r = f'{type(v).__name__}[len={len(v)}]'
    else:
        r = f'{type(v).__name__}'

    return r


def report():
    r = {}
    for k, count in _stat_call_counter.items():
        seconds = _stat_second_counter[k]
        name = k[len(_TIC_TOC_NAME_PREFIX):] if k.startswith(_TIC_TOC_NAME_PREFIX) else k
        name = name[:-len(_TIC_TOC_NAME_SUFFIX)] if name.endswith(_TIC_TOC_NAME_SUFFIX) else name
        r[name] = (count, seconds, seconds / count)

    return r


def report_as_dataframe():
    import pandas as pd

    rows = [(name, count, total, average) for name, (count, total, average) in report().items()]
    return pd.DataFrame(rows, columns=['name', 'count', 'total_second', 'average_second'])
