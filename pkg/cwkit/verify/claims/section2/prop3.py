from functools import partial

from ....expr import check_certificate
from ....families import make_Z, z_order
from ....graph import delete_vertex
from ....synth import eager_expression
from ...claim import (
    BaseClaim,
    InstanceOutcome,
    prove_lcwd_at_most,
    prove_lcwd_exact_at_most,
)

class_name = "Prop3"

# the ordering v8, v7, v6, v5, v3, v2, v1 of Z_2 - v_4, as ids after the deletion
Z2_MINUS_V4_ORDERING = [7, 6, 5, 4, 3, 2, 1]


def _check_z2_minus_v4(name, budget):
    graph, _ = delete_vertex(make_Z(2), 4)
    expr = eager_expression(graph, Z2_MINUS_V4_ORDERING)
    check = check_certificate(expr, graph, 3, linear=True)
    status = "verified" if check else "refuted"
    evidence = {name: graph, f"{name}.cert": expr}
    return InstanceOutcome(name, status, check.reason, evidence)


class Prop3(BaseClaim):
    """Every proper induced subgraph of Z_k has linear clique-width at most k + 1.

    It suffices to delete one vertex. Z_k - v_t and Z_k - v_(n-t+1) are isomorphic through the
    layout reversal, so t runs over the first half of the layout and a seeded sample of the
    second half is checked directly. Up to k = 2 the widths are computed exactly; Z_2 - v_4
    is also checked with the eager expression of the ordering v8, v7, v6, v5, v3, v2, v1.

    :param k: values of k >= 0, defaults to [0, 1, 2]
    :type k: List[int], optional
    :param samples: mirrored instances checked per k, defaults to 1
    :type samples: int, optional
    """

    def __init__(self, claim_id="prop3", k=None, samples=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id,
            {"k": k, "samples": samples, "budget": budget, "seed": seed},
            {"k": [0, 1, 2], "samples": 1},
        )

    def _instances(self):
        for k in self._values("k"):
            n = z_order(k)
            half = (n + 1) // 2
            mirrored = list(range(half + 1, n + 1))
            size = min(self.params["samples"], len(mirrored))
            sampled = self.rng.choice(mirrored, size=size, replace=False)
            chosen = sorted(int(t) for t in sampled)
            for t in list(range(1, half + 1)) + chosen:
                graph, _ = delete_vertex(make_Z(k), t)
                name = f"Z_{k}-v_{t}"
                if k <= 2:
                    yield name, partial(prove_lcwd_exact_at_most, name, graph, k + 1)
                else:
                    yield name, partial(prove_lcwd_at_most, name, graph, k + 1)
            if k == 2:
                name = "Z_2-v_4.ordering"
                yield name, partial(_check_z2_minus_v4, name)
