from ..family import BaseFamily
from .s_gen import *

class_name = "SPlusGraph"


class SPlusGraph(BaseFamily):
    """S^+_k: S_k with an extra vertex w^+ attached according to one of the cases a-d.
    The distinguished vertex is w^+.

    :param k: defaults to 3
    :type k: int, optional
    :param case: one of "a", "b", "c", "d", defaults to "c"
    :type case: str, optional
    """

    def __init__(self, k=3, case="c"):
        self._initialize_family_params({"k": k, "case": case}, {"k": 3, "case": "c"})

    def _validate(self):
        self._require(self.params["k"] >= 3, "k must be at least 3")
        self._require(
            self.params["case"] in S_PLUS_CASES, f"case must be in {S_PLUS_CASES}"
        )

    def _build(self):
        return make_S_plus(self.params["k"], self.params["case"])
