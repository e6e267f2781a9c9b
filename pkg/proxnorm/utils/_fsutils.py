# -*- coding:utf-8 -*-
"""
Output storage on top of fsspec. Relative paths resolve under the output root.
"""

import json
import os
import posixpath

import fsspec

from proxnorm.conf import Configurable, configure, Unicode
from . import logging
from .const import ENV_OUTPUT_ROOT

logger = logging.get_logger(__name__)


@configure()
class StorageCfg(Configurable):
    kind = Unicode('file',
                   help='storage kind (fsspec protocol).'
                   ).tag(config=True)
    root = Unicode(os.environ.get(ENV_OUTPUT_ROOT, ''),
                   help=f'output root path, "{ENV_OUTPUT_ROOT}" env var when set, '
                        'current directory if empty.'
                   ).tag(config=True)
    options = Unicode('',
                      help='storage options, json string. see fsspec for more details.'
                      ).tag(config=True)


class OutputStorage(object):
    def __init__(self, kind='file', root=None, options=None):
        super(OutputStorage, self).__init__()

        if options is None or len(options) == 0:
            parsed = {}
        else:
            try:
                parsed = json.loads(options)
            except json.JSONDecodeError as e:
                raise ValueError(f'Failed to parse storage options as json: {options}') from e
            if not isinstance(parsed, dict):
                raise ValueError(f'Storage options should be a json dictionary: {options}')

        self.kind = kind
        self.fs = fsspec.filesystem(kind, skip_instance_cache=True, **parsed)
        self.is_local = type(self.fs).__name__.lower().find('local') >= 0

        if root is None or len(root) == 0:
            root = os.getcwd() if self.is_local else '/tmp'
        if self.is_local:
            root = os.path.abspath(os.path.expanduser(root))
        self.root = root

    def to_path(self, path):
        assert path

        if self.is_local:
            path = os.path.expanduser(path)
            return path if os.path.isabs(path) else os.path.join(self.root, path)
        else:
            return path if path.startswith(self.root) else posixpath.join(self.root, path.lstrip('/'))

    def makedirs(self, path):
        self.fs.makedirs(self.to_path(path), exist_ok=True)

    def exists(self, path):
        return self.fs.exists(self.to_path(path))

    def open(self, path, mode='r', **kwargs):
        full_path = self.to_path(path)
        if mode.startswith('w'):
            parent = posixpath.dirname(full_path) if not self.is_local else os.path.dirname(full_path)
            if parent:
                self.fs.makedirs(parent, exist_ok=True)
        return self.fs.open(full_path, mode, **kwargs)

    def write_text(self, path, text):
        with self.open(path, 'w', newline='') as f:
            f.write(text)
        if logger.is_debug_enabled():
            logger.debug(f'wrote {self.to_path(path)}')

    def read_text(self, path):
        with self.open(path, 'r') as f:
            return f.read()


def get_storage(kind=None, root=None, options=None):
    return OutputStorage(kind if kind else StorageCfg.kind,
                         root if root is not None else StorageCfg.root,
                         options if options is not None else StorageCfg.options)
