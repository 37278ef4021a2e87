from ..family import BaseFamily
from .path_power_gen import *

class_name = "PathPower"


class PathPower(BaseFamily):
    """The k-path power on n vertices x_1, ..., x_n.

    :param k: the power, defaults to 2
    :type k: int, optional
    :param n: number of vertices, defaults to 5
    :type n: int, optional
    """

    def __init__(self, k=2, n=5):
        self._initialize_family_params({"k": k, "n": n}, {"k": 2, "n": 5})

    def _validate(self):
        self._require(self.params["k"] >= 1, "k must be at least 1")
        self._require(self.params["n"] >= 1, "n must be at least 1")

    @property
    def path_power_k(self):
        return self.params["k"]

    def _build(self):
        graph, _ = path_power(self.params["k"], self.params["n"])
        return graph, None
