from functools import partial

from ....embed import embedding_defects, reversal_isomorphism
from ....exceptions import BudgetExceeded
from ....families import make_S_plus
from ....graph import Embedding, is_isomorphic
from ...claim import BaseClaim, InstanceOutcome

class_name = "IsoPairs"

PAIRS = (("a", "b"), ("c", "d"))


def _check_pair(name, k, first, second, budget):
    source, _ = make_S_plus(k, first)
    target, _ = make_S_plus(k, second)
    flip = Embedding(source, target, reversal_isomorphism(k, first))
    defects = embedding_defects(flip)
    if defects:
        return InstanceOutcome(name, "refuted", "; ".join(defects), {name: flip})
    try:
        same = is_isomorphic(source, target)
    except BudgetExceeded as e:
        return InstanceOutcome(name, "unknown", str(e), {name: flip})
    if not same:
        return InstanceOutcome(
            name, "refuted", "isomorphism test disagrees", {name: flip}
        )
    return InstanceOutcome(
        name, "verified", "layout reversal is an isomorphism", {name: flip}
    )


class IsoPairs(BaseClaim):
    """S^+_k in case a is isomorphic to case b, and case c to case d.

    The witness is the layout reversal v_i -> v_(n-i+1), w_1 <-> w_4, w_2 <-> w_3; it is checked
    directly and confirmed by the isomorphism test.

    :param k: values of k >= 3, defaults to [3]
    :type k: List[int], optional
    """

    def __init__(self, claim_id="iso-pairs", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [3]}
        )

    def _instances(self):
        for k in self._values("k"):
            for first, second in PAIRS:
                name = f"S+_{k}.{first}~{second}"
                yield name, partial(_check_pair, name, k, first, second)
