from .family import *
from .m_graphs import *
from .path_powers import *
from .s_graphs import *
