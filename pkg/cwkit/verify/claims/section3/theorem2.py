from functools import partial

from ....families import make_S, make_S_plus
from ...claim import (
    BaseClaim,
    InstanceOutcome,
    prove_cwd_above,
    prove_cwd_at_most,
    prove_lcwd_above,
)

class_name = "Theorem2"

STATEMENTS = ("thm2.1", "thm2.2", "thm2.3")

# largest k at which the exact searches are attempted at all
ATTEMPTED_K = 3


def _out_of_scale(name, budget):
    return InstanceOutcome(
        name,
        "out-of-desk-scale",
        f"exact search not attempted beyond k = {ATTEMPTED_K}",
    )


class Theorem2(BaseClaim):
    """The clique-width bounds on S_k and S^+_k:

    * thm2.1: cwd(S^+_k) >= k + 2 for k >= 3 (cases a and c; b and d are isomorphic to them)

    * thm2.2: cwd(S_k) <= k + 1 < lcwd(S_k) for k >= 3

    * thm2.3: cwd(S_2) >= 4

    :param k: values of k, defaults to [3] (ignored by thm2.3)
    :type k: List[int], optional
    """

    def __init__(self, claim_id="thm2.3", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [3]}
        )
        if claim_id not in STATEMENTS:
            raise ValueError(f"claim_id must be one of {STATEMENTS}, got {claim_id!r}")

    def _instances(self):
        if self.claim_id == "thm2.3":
            yield "S_2", partial(prove_cwd_above, "S_2", make_S(2), 3)
            return

        for k in self._values("k"):
            if k > ATTEMPTED_K:
                yield f"k={k}", partial(_out_of_scale, f"k={k}")
                continue
            if self.claim_id == "thm2.1":
                for case in ("a", "c"):
                    name = f"S+_{k}{case}"
                    graph, _ = make_S_plus(k, case)
                    yield name, partial(prove_cwd_above, name, graph, k + 1)
            else:
                graph = make_S(k)
                name = f"S_{k}"
                yield f"{name}.cwd", partial(
                    prove_cwd_at_most, f"{name}.cwd", graph, k + 1
                )
                yield f"{name}.lcwd", partial(
                    prove_lcwd_above, f"{name}.lcwd", graph, k + 1
                )
