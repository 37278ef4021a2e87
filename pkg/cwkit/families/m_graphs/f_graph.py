from ..family import BaseFamily
from .m_gen import *

class_name = "FGraph"


class FGraph(BaseFamily):
    """F_k, the k-path power on k^2 vertices; the halves of M_{k,1,l}.

    :param k: defaults to 3
    :type k: int, optional
    """

    def __init__(self, k=3):
        self._initialize_family_params({"k": k}, {"k": 3})

    def _validate(self):
        self._require(self.params["k"] >= 3, "k must be at least 3")

    @property
    def path_power_k(self):
        return self.params["k"]

    def _build(self):
        return make_F(self.params["k"]), None
