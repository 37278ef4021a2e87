import itertools
from functools import partial

import pandas as pd

from ....families import make_gem
from ....graph import Graph, delete_vertex, disjoint_union
from ....solver import lcwd_decide
from ...claim import BaseClaim, InstanceOutcome

class_name = "M2PlusVariants"

# the cross edge x_5 x'_5 that make_M2("+") uses
CHOSEN_EDGE = (5, 10)


def _variant(cross):
    both = disjoint_union(make_gem(), make_gem())
    return Graph.from_edges(both.n, both.edges() + [cross], both.names)


def _survey(name, budget):
    rows = []
    for u, v in itertools.product(range(1, 6), range(6, 11)):
        graph = _variant((u, v))
        above = lcwd_decide(graph, 3, budget).answer
        deletions = [
            lcwd_decide(delete_vertex(graph, x)[0], 3, budget).answer
            for x in graph.vertices()
        ]
        if "unknown" in deletions:
            minimal = "unknown"
        else:
            minimal = "yes" if all(answer == "yes" for answer in deletions) else "no"
        rows.append(
            {
                "edge": f"{graph.label(u)}-{graph.label(v)}",
                "u": u,
                "v": v,
                "lcwd_above_3": {"no": "yes", "yes": "no"}.get(above, "unknown"),
                "deletions_at_most_3": minimal,
            }
        )
    table = pd.DataFrame(rows)
    table["oracle"] = (table["lcwd_above_3"] == "yes") & (
        table["deletions_at_most_3"] == "yes"
    )

    passing = table[table["oracle"]]["edge"].tolist()
    is_chosen = (table["u"] == CHOSEN_EDGE[0]) & (table["v"] == CHOSEN_EDGE[1])
    chosen = table[is_chosen].iloc[0]
    listed = ", ".join(passing) or "none"
    note = f"{len(passing)} of {len(table)} variants pass: {listed}"
    if chosen["oracle"]:
        status = "verified"
    elif "unknown" in (chosen["lcwd_above_3"], chosen["deletions_at_most_3"]):
        status = "unknown"
    else:
        status = "refuted"
    evidence = {"variants": table, "M2+": _variant(CHOSEN_EDGE)}
    return InstanceOutcome(name, status, note, evidence)


class M2PlusVariants(BaseClaim):
    """Checks every graph made of two gems and one cross edge against the two facts M^+_2
    must satisfy: linear clique-width above 3, and at most 3 after any one-vertex deletion.

    The table of all 25 variants is written as ``variants.tsv``; the claim is verified when
    the cross edge x_5 x'_5 of :func:`cwkit.families.make_M2` passes.
    """

    def __init__(self, claim_id="m2plus-variants", budget=None, seed=None):
        self._initialize_claim_params(claim_id, {"budget": budget, "seed": seed}, {})

    def _instances(self):
        yield "variants", partial(_survey, "variants")
