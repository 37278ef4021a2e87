from .eager import *
from .search import *
