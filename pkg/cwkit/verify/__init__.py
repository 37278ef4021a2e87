from .claim import *
from .runner import *
