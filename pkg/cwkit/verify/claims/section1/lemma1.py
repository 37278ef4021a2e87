from functools import partial

from ....families import make_J
from ....graph import delete_vertex
from ...claim import BaseClaim, prove_lcwd_at_most, prove_lcwd_exact_at_most

class_name = "Lemma1"


class Lemma1(BaseClaim):
    """lcwd(J_k - z_g) <= k + 1.

    For k = 2 the linear clique-width of J_2 - z_3 is computed exactly; for larger k a checked
    linear (k+1)-expression is searched.

    :param k: values of k >= 2, defaults to [2, 3]
    :type k: List[int], optional
    """

    def __init__(self, claim_id="lemma1", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [2, 3]}
        )

    def _instances(self):
        for k in self._values("k"):
            graph, g = make_J(k)
            host, _ = delete_vertex(graph, g)
            name = f"J_{k}-z_{g}"
            if k == 2:
                yield name, partial(prove_lcwd_exact_at_most, name, host, k + 1)
            else:
                yield name, partial(prove_lcwd_at_most, name, host, k + 1)
