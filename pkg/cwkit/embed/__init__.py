from .check import *
from .embedding_io import *
from .phi import *
from .search import *
