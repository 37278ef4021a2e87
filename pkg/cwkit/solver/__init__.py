from .clique import *
from .exact import *
from .linear import *
from .naive import *
from .result import *
