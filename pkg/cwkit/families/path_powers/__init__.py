from .j_graph import *
from .path_power_gen import *
from .power_graph import *
from .z_graph import *
