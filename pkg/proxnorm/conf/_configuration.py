import glob
import os
import sys

from traitlets import Unicode, List
from traitlets.config import Application, Configurable

ENV_CONF_DIR = 'PROXNORM_CONF_DIR'


class Configuration(Application):
    config_dir = Unicode(os.environ.get(ENV_CONF_DIR, './conf'),
                         help='directory of *.py config files, loaded in name order'
                         ).tag(config=True)

    loaded_files = List(help='config files loaded at import')

    aliases = {
        'config-dir': 'Configuration.config_dir',
    }

    def __init__(self, **kwargs):
        super(Configuration, self).__init__(**kwargs)

        # only `--config-dir=...`, the rest of argv belongs to the caller
        prefixes = tuple(f'--{k}=' for k in self.aliases.keys())
        super(Configuration, self).initialize([a for a in sys.argv if a.startswith(prefixes)])

        for f in self.config_files():
            self.load_config_file(f)
            self.loaded_files.append(f)

    def config_files(self):
        if len(self.config_dir) == 0:
            return []
        config_dir = os.path.abspath(os.path.expanduser(self.config_dir))
        return sorted(glob.glob(f'{config_dir}/*.py', recursive=False))


_conf = Configuration()
_configured = []


def configure():
    """
    Annotation utility to configure one configurable class,
    the decorated name binds to its singleton instance.
    """

    def wrapper(c):
        assert issubclass(c, Configurable)
        o = c(parent=_conf)

        if c not in _conf.classes:
            _conf.classes += [c]
        _configured.append(o)

        return o

    return wrapper


def snapshot(*configurables):
    """
    Current trait values of configured objects keyed by class name, plus the loaded config files.
    """
    if len(configurables) == 0:
        configurables = _configured

    result = {}
    for o in configurables:
        traits = o.traits(config=True)
        result[type(o).__name__] = {k: getattr(o, k) for k in sorted(traits.keys())}
    result['config_files'] = list(_conf.loaded_files)
    return result
