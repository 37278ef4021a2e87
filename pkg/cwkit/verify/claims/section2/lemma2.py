from functools import partial

from ....embed import embedding_defects, phi_Z, phi_Z_reduced, phi_z_range
from ....families import j_hole, j_order, z_order
from ...claim import BaseClaim, InstanceOutcome

class_name = "Lemma2"


def _check_phi(name, k, t, budget, reduced=False):
    embedding = phi_Z_reduced(k, t) if reduced else phi_Z(k, t)
    defects = embedding_defects(embedding)
    evidence = {name: embedding}
    if defects:
        return InstanceOutcome(name, "refuted", "; ".join(defects), evidence)
    # every target is a vertex of J_k other than z_g; host ids skip z_g
    g = j_hole(k)
    targets = [x if x < g else x + 1 for x in embedding.mapping.values()]
    if not all(1 <= x <= j_order(k) and x != g for x in targets):
        return InstanceOutcome(name, "refuted", "target outside J_k - z_g", evidence)
    return InstanceOutcome(name, "verified", "", evidence)


class Lemma2(BaseClaim):
    """Every Z_k - v_t embeds into J_k - z_g through v_i -> z_(g-t+i).

    The explicit map is checked for every t up to the reversal bound k(k+1)/2 + 1, and a
    seeded sample of the larger t is checked through the reversal as well.

    :param k: values of k >= 2, defaults to [3, 4]
    :type k: List[int], optional
    :param samples: reflected instances checked per k, defaults to 2
    :type samples: int, optional
    """

    def __init__(self, claim_id="lemma2", k=None, samples=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id,
            {"k": k, "samples": samples, "budget": budget, "seed": seed},
            {"k": [3, 4], "samples": 2},
        )

    def _instances(self):
        for k in self._values("k"):
            bound = phi_z_range(k)
            for t in range(1, bound + 1):
                name = f"Z_{k}-v_{t}"
                yield name, partial(_check_phi, name, k, t)

            n = z_order(k)
            reflected = list(range(max(bound, n - bound) + 1, n + 1))
            size = min(self.params["samples"], len(reflected))
            sampled = self.rng.choice(reflected, size=size, replace=False)
            for t in sorted(int(t) for t in sampled):
                name = f"Z_{k}-v_{t}.reflected"
                yield name, partial(_check_phi, name, k, t, reduced=True)
