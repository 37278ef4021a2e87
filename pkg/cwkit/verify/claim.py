"""
claim.py
====================================
The core module of cwkit.verify: a claim turns one statement about the graph families into
a list of machine-checkable instances, runs them, and aggregates the outcome.
"""

import logging
import os
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..constants import DEFAULT_BUDGET_SECONDS, DEFAULT_SEED
from ..embed import save_embedding
from ..exceptions import InvalidParameterError
from ..expr import CwExpr, save_expression
from ..graph import Embedding, Graph, save_graph
from ..solver import cwd_decide, lcwd_decide, lcwd_exact
from ..synth import search_certificate
from ..utils import Budget

__all__ = [
    "STATUSES",
    "ClaimCheck",
    "InstanceOutcome",
    "BaseClaim",
    "prove_lcwd_at_most",
    "prove_lcwd_above",
    "prove_cwd_at_most",
    "prove_cwd_above",
    "prove_lcwd_exact_at_most",
]

logger = logging.getLogger(__name__)

# worst first: the aggregate status of a claim is the worst status of its instances
STATUSES = ("refuted", "unknown", "out-of-desk-scale", "verified")


@dataclass
class InstanceOutcome:
    """Status of one instance plus the objects that back it up.

    `evidence` maps a file stem to a Graph, CwExpr, Embedding or DataFrame; stems get the
    extensions ``.graph``, ``.expr``, ``.emb.json`` and ``.tsv``.
    """

    name: str
    status: str
    note: str = ""
    evidence: Dict[str, object] = field(default_factory=dict)
    seconds: float = 0.0


@dataclass
class ClaimCheck:
    """Aggregated result of one claim.

    :param claim: claim id, e.g. "lemma2"
    :type claim: str
    :param params: parameters the claim ran with
    :type params: Dict
    :param status: one of STATUSES
    :type status: str
    :param seconds: total wall-clock time
    :type seconds: float
    :param evidence: directory holding the evidence files, None when nothing was written
    :type evidence: str, optional
    """

    claim: str
    params: Dict
    status: str
    seconds: float = 0.0
    evidence: Optional[str] = None
    instances: List[InstanceOutcome] = field(default_factory=list)

    @property
    def notes(self):
        return [f"{item.name}: {item.note}" for item in self.instances if item.note]

    def params_text(self):
        return ",".join(f"{key}={value}" for key, value in sorted(self.params.items()))


def _aggregate(outcomes):
    if not outcomes:
        return "unknown"
    return min((item.status for item in outcomes), key=STATUSES.index)


class BaseClaim:
    """This class is a base class for all claims. It should not be instantiated directly.
    Instead, instantiate a child class specific to a group of statements, for example
    `Lemma2` for the embeddings of Z_k - v_t or `Theorem2` for the three bounds on S_k and
    S^+_k; :func:`cwkit.get_claim` does this by claim id.

    The child class should implement the following methods:

    * __init__, which calls _initialize_claim_params()

    * _instances, yielding (name, callable) pairs; the callable receives a Budget and
      returns an InstanceOutcome

    Every instance gets its own budget of ``params["budget"]`` seconds.
    """

    def __init__(self, claim_id, **kwargs):
        self._initialize_claim_params(claim_id, kwargs, {})

    def _initialize_claim_params(self, claim_id, params, default_params):
        """Overrides `default_params` with the entries of `params`.

        IF YOU ARE IMPLEMENTING A NEW CLAIM, YOU SHOULD NOT NEED TO OVERRIDE THIS METHOD.

        :param claim_id: the id the claim was requested under
        :type claim_id: str
        :param params: parameters given by the caller; None values keep the default
        :type params: Dict
        :param default_params: claim-specific parameters with their defaults
        :type default_params: Dict
        :raises InvalidParameterError: on unknown parameters
        """
        self.claim_id = claim_id
        self.params = {"budget": DEFAULT_BUDGET_SECONDS, "seed": DEFAULT_SEED}
        self.params.update(default_params)

        if params is None:
            params = dict()

        unknown = set(params) - set(self.params)
        if unknown:
            raise InvalidParameterError(
                f"claim {claim_id} got unknown parameters {sorted(unknown)}, "
                f"expected some of {sorted(self.params)}"
            )
        for key in self.params.keys():
            if key in params and params[key] is not None:
                self.params[key] = params[key]

    def _values(self, key):
        """A parameter as a list; claims accept a single k as well as several."""
        value = self.params[key]
        return list(value) if isinstance(value, (list, tuple, range)) else [value]

    def _instances(self):
        raise NotImplementedError

    def run(self, out=None, show_progress=False):
        """Runs every instance of the claim and aggregates their statuses.

        :param out: evidence root directory; files go to ``<out>/<claim id>/``
        :type out: str, optional
        :param show_progress: show a tqdm progress bar over the instances
        :type show_progress: bool, optional
        :rtype: ClaimCheck
        """
        # claims run in parallel threads; each samples from its own generator
        self.rng = np.random.default_rng(self.params["seed"])
        start = time.monotonic()
        directory = None if out is None else os.path.join(out, self.claim_id)
        if directory is not None:
            os.makedirs(directory, exist_ok=True)

        outcomes = []
        instances = list(self._instances())
        pbar = tqdm(instances, disable=not show_progress)
        for name, check in pbar:
            pbar.set_description(f"{self.claim_id} {name}")
            began = time.monotonic()
            outcome = check(Budget(seconds=self.params["budget"]))
            outcome.seconds = time.monotonic() - began
            summary = f"{self.claim_id} {name}: {outcome.status} {outcome.note}"
            logger.info(summary.rstrip())
            if directory is not None:
                self._write_evidence(directory, outcome)
            outcomes.append(outcome)

        return ClaimCheck(
            claim=self.claim_id,
            params=self._public_params(),
            status=_aggregate(outcomes),
            seconds=time.monotonic() - start,
            evidence=directory,
            instances=outcomes,
        )

    def _public_params(self):
        return {key: value for key, value in self.params.items() if key != "seed"}

    def _write_evidence(self, directory, outcome):
        for stem, item in outcome.evidence.items():
            path = os.path.join(directory, stem)
            if isinstance(item, CwExpr):
                save_expression(item, f"{path}.expr")
            elif isinstance(item, Embedding):
                save_embedding(item, f"{path}.emb.json")
            elif isinstance(item, Graph):
                save_graph(item, f"{path}.graph")
            elif isinstance(item, pd.DataFrame):
                item.to_csv(f"{path}.tsv", sep="\t", index=False)
            else:
                raise TypeError(f"cannot store evidence of type {type(item).__name__}")

    def __str__(self):
        return f"{type(self).__name__}({self.claim_id}, {self._public_params()})"


def prove_lcwd_at_most(name, graph, w, budget):
    """Establish lcwd(graph) <= w: eager ordering search first, the exact search second.

    :rtype: InstanceOutcome
    """
    search = search_certificate(graph, w, budget.split(0.5))
    if search.found:
        return InstanceOutcome(
            name,
            "verified",
            f"linear {w}-expression via ordering search",
            {name: graph, f"{name}.cert": search.expression},
        )
    decision = lcwd_decide(graph, w, budget)
    if decision.answer == "yes":
        return InstanceOutcome(
            name,
            "verified",
            f"linear {w}-expression via exact search",
            {name: graph, f"{name}.cert": decision.certificate},
        )
    if decision.answer == "no":
        return InstanceOutcome(name, "refuted", f"exhausted: lcwd > {w}", {name: graph})
    return InstanceOutcome(name, "unknown", "budget exhausted", {name: graph})


def prove_lcwd_above(name, graph, w, budget):
    """Establish lcwd(graph) > w with an exhausted exact search.

    :rtype: InstanceOutcome
    """
    decision = lcwd_decide(graph, w, budget)
    if decision.answer == "no":
        return InstanceOutcome(
            name,
            "verified",
            f"exhausted after {decision.stats.nodes} nodes",
            {name: graph},
        )
    if decision.answer == "yes":
        return InstanceOutcome(
            name,
            "refuted",
            f"found a linear {w}-expression",
            {name: graph, f"{name}.cert": decision.certificate},
        )
    return InstanceOutcome(name, "unknown", "budget exhausted", {name: graph})


def prove_cwd_at_most(name, graph, w, budget):
    """Establish cwd(graph) <= w with a checked certificate.

    :rtype: InstanceOutcome
    """
    decision = cwd_decide(graph, w, budget)
    if decision.answer == "yes":
        return InstanceOutcome(
            name,
            "verified",
            f"{w}-expression found",
            {name: graph, f"{name}.cert": decision.certificate},
        )
    if decision.answer == "no":
        return InstanceOutcome(name, "refuted", f"exhausted: cwd > {w}", {name: graph})
    return InstanceOutcome(name, "unknown", "budget exhausted", {name: graph})


def prove_cwd_above(name, graph, w, budget):
    """Establish cwd(graph) > w with an exhausted subset dynamic programming.

    :rtype: InstanceOutcome
    """
    decision = cwd_decide(graph, w, budget)
    if decision.answer == "no":
        return InstanceOutcome(
            name,
            "verified",
            f"exhausted after {decision.stats.nodes} nodes",
            {name: graph},
        )
    if decision.answer == "yes":
        return InstanceOutcome(
            name,
            "refuted",
            f"found a {w}-expression",
            {name: graph, f"{name}.cert": decision.certificate},
        )
    return InstanceOutcome(name, "unknown", "budget exhausted", {name: graph})


def prove_lcwd_exact_at_most(name, graph, w, budget):
    """Compute lcwd(graph) exactly and compare it with w.

    :rtype: InstanceOutcome
    """
    result = lcwd_exact(graph, budget)
    evidence = {name: graph, f"{name}.cert": result.certificate}
    if result.upper <= w:
        return InstanceOutcome(name, "verified", f"lcwd {result.describe()}", evidence)
    if result.lower > w:
        return InstanceOutcome(name, "refuted", f"lcwd {result.describe()}", evidence)
    return InstanceOutcome(name, "unknown", f"lcwd {result.describe()}", evidence)
