from functools import partial

from ....embed import embedding_defects, phi_S, phi_s_range
from ....families import S_PLUS_CASES, make_S_plus
from ....graph import delete_vertex
from ...claim import BaseClaim, InstanceOutcome, prove_lcwd_at_most

class_name = "Lemma4"

# the only parameters in range for which the explicit map does not exist
UNAVAILABLE = {(3, 5)}


def _check_phi(name, k, t, case, budget):
    embedding = phi_S(k, t, case)
    if not embedding:
        if (k, t) in UNAVAILABLE:
            return _certificate_instead(name, k, t, case, budget)
        return InstanceOutcome(name, "refuted", f"map unavailable: {embedding.reason}")
    if (k, t) in UNAVAILABLE:
        return InstanceOutcome(
            name, "refuted", "expected no explicit map", {name: embedding}
        )
    defects = embedding_defects(embedding)
    if defects:
        return InstanceOutcome(name, "refuted", "; ".join(defects), {name: embedding})
    return InstanceOutcome(name, "verified", "", {name: embedding})


def _certificate_instead(name, k, t, case, budget):
    graph, _ = make_S_plus(k, case)
    guest, _ = delete_vertex(graph, t)
    outcome = prove_lcwd_at_most(name, guest, k + 1, budget)
    outcome.note = f"no explicit map; {outcome.note}"
    return outcome


class Lemma4(BaseClaim):
    """lcwd(S^+_k - v_t) <= k + 1 for t up to ((k-1)(k+1)+1)/2 + 1, in all four cases.

    Each instance is the explicit embedding into J_k - z_g, except for k = 3, t = 5, where w_1
    would fall off the layout; there a linear 4-expression is searched instead.

    :param k: values of k >= 3, defaults to [3]
    :type k: List[int], optional
    """

    def __init__(self, claim_id="lemma4", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [3]}
        )

    def _instances(self):
        for k in self._values("k"):
            for t in range(1, phi_s_range(k) + 1):
                for case in S_PLUS_CASES:
                    name = f"S+_{k}{case}-v_{t}"
                    yield name, partial(_check_phi, name, k, t, case)
