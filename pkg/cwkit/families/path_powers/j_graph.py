from ..family import BaseFamily
from .path_power_gen import *

class_name = "JGraph"


class JGraph(BaseFamily):
    """J_k, the k-path power on (2k-1)(k+1)+1 vertices. Its distinguished vertex is z_g with
    g = (k-1)(k+1); the graphs of interest are J_k - z_g.

    :param k: defaults to 3
    :type k: int, optional
    """

    def __init__(self, k=3):
        self._initialize_family_params({"k": k}, {"k": 3})

    def _validate(self):
        self._require(self.params["k"] >= 2, "k must be at least 2")

    @property
    def path_power_k(self):
        return self.params["k"]

    def _build(self):
        return make_J(self.params["k"])
