from traitlets import Unicode, Unicode as String, Bool, Int, Float

from ._configuration import Configurable, configure, snapshot
