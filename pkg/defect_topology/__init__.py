__author__ = 'defect-topology developers'

from ._version import __version__

from . import intlin
from . import semidirect
from . import spherical
from . import homotopy
from . import classifier

from .exceptions import DefectTopologyError
from .classifier import classify, textures
