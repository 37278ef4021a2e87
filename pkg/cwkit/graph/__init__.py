from .graph import *
from .graph_io import *
from .isomorphism import *
