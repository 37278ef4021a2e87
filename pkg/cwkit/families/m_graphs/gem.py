from ..family import BaseFamily
from .m_gen import *

class_name = "Gem"


class Gem(BaseFamily):
    """The gem, the square of the path on five vertices."""

    path_power_k = 2

    def __init__(self):
        self._initialize_family_params({}, {})

    def _validate(self):
        pass

    def _build(self):
        return make_gem(), None
