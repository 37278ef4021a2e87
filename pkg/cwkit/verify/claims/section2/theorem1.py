from functools import partial

from ....families import make_Z
from ...claim import BaseClaim, InstanceOutcome, prove_cwd_above

class_name = "Theorem1"

# largest k whose lower bound the subset dynamic programming reproduces at desk scale
DESK_K = 2


def _out_of_scale(name, note, budget):
    return InstanceOutcome(name, "out-of-desk-scale", note)


class Theorem1(BaseClaim):
    """cwd(Z_k) >= k + 2, as an exhausted search for a (k+1)-expression.

    Z_0 is two isolated vertices, of clique-width 1 under the usual convention, so k = 0 is
    reported but not decided.

    :param k: values of k >= 0, defaults to [1, 2]
    :type k: List[int], optional
    """

    def __init__(self, claim_id="thm1", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [1, 2]}
        )

    def _instances(self):
        for k in self._values("k"):
            name = f"Z_{k}"
            if k == 0:
                yield name, partial(
                    _out_of_scale, name, "convention for k = 0 unresolved"
                )
            elif k > DESK_K:
                yield name, partial(
                    _out_of_scale,
                    name,
                    f"lower bound not reproduced beyond k = {DESK_K}",
                )
            else:
                yield name, partial(prove_cwd_above, name, make_Z(k), k + 1)
