from functools import partial

from ....embed import find_embedding
from ....exceptions import BudgetExceeded
from ....families import make_J, make_S, make_S_plus
from ....graph import (
    Graph,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_isomorphic,
)
from ...claim import (
    BaseClaim,
    InstanceOutcome,
    prove_cwd_at_most,
    prove_lcwd_at_most,
    prove_lcwd_exact_at_most,
)

class_name = "Prop5"

STATEMENTS = ("prop5.1", "prop5.2", "prop5.3", "prop5.disjoint", "prop5.neg-remark")


def _check_disjoint(name, graph, budget):
    w3, w4 = graph.id_of("w_3"), graph.id_of("w_4")
    minus, translation = delete_vertex(graph, w3)
    kept = [v for v in graph.vertices() if v not in (w3, w4)]
    rest, _ = induced_subgraph(graph, kept)
    union = disjoint_union(rest, Graph.from_edges(1, [], ["w_4"]))
    evidence = {name: minus}
    if minus.degree(translation[w4]) != 0:
        return InstanceOutcome(name, "refuted", "w_4 is not isolated", evidence)
    try:
        same = is_isomorphic(minus, union)
    except BudgetExceeded as e:
        return InstanceOutcome(name, "unknown", str(e), evidence)
    if not same:
        return InstanceOutcome(
            name, "refuted", "not the stated disjoint union", evidence
        )
    return InstanceOutcome(name, "verified", "", evidence)


def _check_no_embedding(name, k, budget):
    graph, _ = make_S_plus(k, "a")
    guest, _ = delete_vertex(graph, graph.id_of("w_4"))
    host_full, g = make_J(k)
    host, _ = delete_vertex(host_full, g)
    search = find_embedding(guest, host, budget)
    evidence = {f"{name}.guest": guest, f"{name}.host": host}
    note = f"{search.nodes} nodes"
    if search.embedding is not None:
        evidence[name] = search.embedding
        return InstanceOutcome(name, "refuted", f"embedding found, {note}", evidence)
    if search.exhausted:
        return InstanceOutcome(name, "verified", f"exhausted, {note}", evidence)
    return InstanceOutcome(name, "unknown", f"budget exhausted, {note}", evidence)


class Prop5(BaseClaim):
    """Minimality statements for S_k and S^+_k:

    * prop5.1: every proper induced subgraph of S^+_k (case c) has clique-width at most k + 1

    * prop5.2: every proper induced subgraph of S_k has linear clique-width at most k + 1

    * prop5.3: every proper induced subgraph of S_2 has linear clique-width at most 3

    * prop5.disjoint: deleting w_3 leaves w_4 isolated next to the rest of the graph (S_2,
      and S^+_k in the cases a and c, where w^+ sits at the w_1 end)

    * prop5.neg-remark: with case a, S^+_k - w_4 is not an induced subgraph of J_k - z_g

    One-vertex deletions suffice; S^+_k - w^+ = S_k needs a non-linear expression and goes
    through the clique-width search, every other deletion through a linear certificate.

    :param k: values of k, defaults to [3] (ignored by prop5.3)
    :type k: List[int], optional
    """

    def __init__(self, claim_id="prop5.3", k=None, budget=None, seed=None):
        self._initialize_claim_params(
            claim_id, {"k": k, "budget": budget, "seed": seed}, {"k": [3]}
        )
        if claim_id not in STATEMENTS:
            raise ValueError(f"claim_id must be one of {STATEMENTS}, got {claim_id!r}")

    def _instances(self):
        if self.claim_id == "prop5.3":
            graph = make_S(2)
            for v in graph.vertices():
                minus, _ = delete_vertex(graph, v)
                name = f"S_2-{graph.label(v)}"
                yield name, partial(prove_lcwd_exact_at_most, name, minus, 3)
            return

        for k in self._values("k"):
            if self.claim_id == "prop5.1":
                graph, w_plus = make_S_plus(k, "c")
                for v in graph.vertices():
                    minus, _ = delete_vertex(graph, v)
                    name = f"S+_{k}c-{graph.label(v)}"
                    prove = prove_cwd_at_most if v == w_plus else prove_lcwd_at_most
                    yield name, partial(prove, name, minus, k + 1)
            elif self.claim_id == "prop5.2":
                graph = make_S(k)
                for v in graph.vertices():
                    minus, _ = delete_vertex(graph, v)
                    name = f"S_{k}-{graph.label(v)}"
                    yield name, partial(prove_lcwd_at_most, name, minus, k + 1)
            elif self.claim_id == "prop5.disjoint":
                if k == 2:
                    yield "S_2-w_3", partial(_check_disjoint, "S_2-w_3", make_S(2))
                    continue
                # in cases b and d w^+ is a neighbour of w_4
                for case in ("a", "c"):
                    name = f"S+_{k}{case}-w_3"
                    yield name, partial(_check_disjoint, name, make_S_plus(k, case)[0])
            else:
                name = f"S+_{k}a-w_4"
                yield name, partial(_check_no_embedding, name, k)
