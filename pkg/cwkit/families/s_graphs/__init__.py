from .s_gen import *
from .s_graph import *
from .s_plus_graph import *
