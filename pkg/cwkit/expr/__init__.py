from .ast import *
from .certificate import *
from .evaluate import *
from .parser import *
