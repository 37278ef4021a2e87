from .f_graph import *
from .gem import *
from .m2_graph import *
from .m_gen import *
from .m_graph import *
