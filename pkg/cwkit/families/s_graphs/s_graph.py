from ..family import BaseFamily
from .s_gen import *

class_name = "SGraph"


class SGraph(BaseFamily):
    """S_k: a k-path power on (k-1)(k+1)+2 vertices with two pendant paths of length two.

    :param k: defaults to 2
    :type k: int, optional
    """

    def __init__(self, k=2):
        self._initialize_family_params({"k": k}, {"k": 2})

    def _validate(self):
        self._require(self.params["k"] >= 2, "k must be at least 2")

    def _build(self):
        return make_S(self.params["k"]), None
