from ..family import BaseFamily
from .m_gen import *

class_name = "MGraph"


class MGraph(BaseFamily):
    """M_{k,1,l}: two copies of F_k joined at their last vertices through an induced path
    with l inner vertices.

    :param k: defaults to 3
    :type k: int, optional
    :param l: number of connector vertices, defaults to 0
    :type l: int, optional
    """

    def __init__(self, k=3, l=0):
        self._initialize_family_params({"k": k, "l": l}, {"k": 3, "l": 0})

    def _validate(self):
        self._require(self.params["k"] >= 3, "k must be at least 3")
        self._require(self.params["l"] >= 0, "l must be non-negative")

    def _build(self):
        return make_M(self.params["k"], self.params["l"]), None
