from functools import partial

from ....families import M2_SIGNS, make_M2
from ...claim import BaseClaim, prove_lcwd_above

class_name = "Theorem3"


class Theorem3(BaseClaim):
    """lcwd(M^+_2) >= 4 and lcwd(M^-_2) >= 4, by exhausted searches at width 3."""

    def __init__(self, claim_id="thm3", budget=None, seed=None):
        self._initialize_claim_params(claim_id, {"budget": budget, "seed": seed}, {})

    def _instances(self):
        for sign in M2_SIGNS:
            name = f"M2{sign}"
            yield name, partial(prove_lcwd_above, name, make_M2(sign), 3)
