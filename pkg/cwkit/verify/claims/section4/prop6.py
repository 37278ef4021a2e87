from functools import partial

from ....families import M2_SIGNS, make_M, make_M2
from ....graph import delete_vertex
from ...claim import (
    BaseClaim,
    prove_lcwd_above,
    prove_lcwd_at_most,
    prove_lcwd_exact_at_most,
)

class_name = "Prop6"

STATEMENTS = ("prop6.1", "prop6.2")


def _halves(k, l):
    """Vertices of M_{k,1,l} up to the swap of the two copies of F_k, and the rest."""
    n = k * k
    kept = list(range(1, n + 1)) + [2 * n + i for i in range(1, (l + 1) // 2 + 1)]
    mirrored = list(range(n + 1, 2 * n + 1)) + [
        2 * n + i for i in range((l + 1) // 2 + 1, l + 1)
    ]
    return kept, mirrored


class Prop6(BaseClaim):
    """Minimality of the M graphs:

    * prop6.1: every proper induced subgraph of M^+_2 and M^-_2 has linear clique-width at
      most 3, computed exactly for each one-vertex deletion

    * prop6.2: every proper induced subgraph of M_{k,1,l} has linear clique-width at most
      k + 1; for l = 0 the search for lcwd(M_{k,1,0}) > k + 1 is attempted as well

    For prop6.2 the swap of the two copies of F_k reduces the deletions to one copy and the
    first half of the connector; a seeded sample of the other half is checked directly.

    :param k: values of k >= 3, defaults to [3]
    :type k: List[int], optional
    :param l: connector lengths, defaults to [0]
    :type l: List[int], optional
    :param samples: mirrored deletions checked per (k, l), defaults to 1
    :type samples: int, optional
    """

    def __init__(
        self, claim_id="prop6.1", k=None, l=None, samples=None, budget=None, seed=None
    ):
        self._initialize_claim_params(
            claim_id,
            {"k": k, "l": l, "samples": samples, "budget": budget, "seed": seed},
            {"k": [3], "l": [0], "samples": 1},
        )
        if claim_id not in STATEMENTS:
            raise ValueError(f"claim_id must be one of {STATEMENTS}, got {claim_id!r}")

    def _instances(self):
        if self.claim_id == "prop6.1":
            for sign in M2_SIGNS:
                graph = make_M2(sign)
                for v in graph.vertices():
                    minus, _ = delete_vertex(graph, v)
                    name = f"M2{sign}-{graph.label(v)}"
                    yield name, partial(prove_lcwd_exact_at_most, name, minus, 3)
            return

        for k in self._values("k"):
            for l in self._values("l"):
                graph = make_M(k, l)
                kept, mirrored = _halves(k, l)
                size = min(self.params["samples"], len(mirrored))
                chosen = sorted(
                    int(v) for v in self.rng.choice(mirrored, size=size, replace=False)
                )
                for v in kept + chosen:
                    minus, _ = delete_vertex(graph, v)
                    name = f"M_{k},1,{l}-{graph.label(v)}"
                    yield name, partial(prove_lcwd_at_most, name, minus, k + 1)
                if l == 0:
                    name = f"M_{k},1,0"
                    yield name, partial(prove_lcwd_above, name, graph, k + 1)
