from ..family import BaseFamily
from .path_power_gen import *

class_name = "ZGraph"


class ZGraph(BaseFamily):
    """Z_k, the k-path power on k(k+1)+2 vertices.

    :param k: defaults to 2
    :type k: int, optional
    """

    def __init__(self, k=2):
        self._initialize_family_params({"k": k}, {"k": 2})

    def _validate(self):
        self._require(self.params["k"] >= 0, "k must be non-negative")

    @property
    def path_power_k(self):
        # Z_0 is edgeless and has no bubble model with rows
        return self.params["k"] or None

    def _build(self):
        return make_Z(self.params["k"]), None
