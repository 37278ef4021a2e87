from .bubble import *
