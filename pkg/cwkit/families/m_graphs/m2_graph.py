from ..family import BaseFamily
from .m_gen import *

class_name = "M2Graph"


class M2Graph(BaseFamily):
    """M^+_2 and M^-_2, the two gem-based graphs of linear clique-width 4.

    :param sign: "+" for the gems joined by the edge x_5 x'_5, "-" for the disjoint union,
        defaults to "-"
    :type sign: str, optional
    """

    def __init__(self, sign="-"):
        self._initialize_family_params({"sign": sign}, {"sign": "-"})

    def _validate(self):
        self._require(self.params["sign"] in M2_SIGNS, f"sign must be in {M2_SIGNS}")

    def _build(self):
        return make_M2(self.params["sign"]), None
