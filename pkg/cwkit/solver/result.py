"""
result.py
====================================
Outcome types shared by the exact solvers.
"""

from dataclasses import dataclass, field
from typing import List, Optional

__all__ = ["SearchStats", "Decision", "WidthResult", "ANSWERS", "KINDS"]

ANSWERS = ("yes", "no", "unknown")
KINDS = ("exact", "lower-bound", "upper-bound", "unknown")


@dataclass
class SearchStats:
    """Effort spent by one search.

    :param nodes: expanded search nodes
    :type nodes: int
    :param seconds: wall-clock time
    :type seconds: float
    :param exhausted: whether the search space was fully explored
    :type exhausted: bool
    """

    nodes: int = 0
    seconds: float = 0.0
    exhausted: bool = False

    def add(self, other):
        return SearchStats(
            self.nodes + other.nodes,
            self.seconds + other.seconds,
            self.exhausted and other.exhausted,
        )


@dataclass
class Decision:
    """Answer of a decision procedure "width <= w?".

    "yes" always carries a checked certificate; "no" is only given after an exhausted search;
    everything else is "unknown".
    """

    answer: str
    w: int
    certificate: Optional[object] = None
    stats: SearchStats = field(default_factory=SearchStats)
    ordering: Optional[List[int]] = None

    def __post_init__(self):
        if self.answer not in ANSWERS:
            raise ValueError(f"answer must be one of {ANSWERS}, got {self.answer!r}")
        if self.answer == "yes" and self.certificate is None:
            raise ValueError("a yes answer needs a certificate")

    @property
    def verified(self):
        return self.answer != "unknown"

    def __bool__(self):
        return self.answer == "yes"


@dataclass
class WidthResult:
    """Tightest verified bracket ``lower <= width <= upper`` found for a graph.

    `value` is the exact width for kind "exact", and the verified upper bound otherwise.
    """

    kind: str
    value: int
    lower: int
    upper: int
    certificate: Optional[object] = None
    stats: SearchStats = field(default_factory=SearchStats)
    decisions: List[Decision] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")

    @property
    def exact(self):
        return self.kind == "exact"

    def describe(self):
        if self.exact:
            return f"= {self.value}"
        return f"in [{self.lower}, {self.upper}]"
