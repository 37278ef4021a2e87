"""
phi.py
====================================
The explicit embeddings of Z_k - v_t and S^+_k - v_t into J_k - z_g, and the layout reversal
that reduces every t to the first half of the layout.

With g = (k-1)(k+1) the core vertex v_i goes to z_(g-t+i), so the deleted v_t would land on
the deleted z_g. Host ids are those of J_k - z_g: z_j keeps id j for j < g and gets j - 1 after.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..exceptions import InvalidParameterError
from ..families import (
    S_PLUS_CASES,
    j_hole,
    j_order,
    make_J,
    make_S_plus,
    make_Z,
    s_core_order,
    z_order,
)
from ..graph import Embedding, delete_vertex
from .check import embedding_defects

__all__ = [
    "PhiMap",
    "EmbeddingUnavailable",
    "phi_z_range",
    "phi_s_range",
    "phi_Z",
    "phi_S",
    "reverse_instance",
    "reversal_isomorphism",
    "phi_Z_reduced",
    "phi_S_reduced",
]

logger = logging.getLogger(__name__)

_REVERSED_CASE = {"a": "b", "b": "a", "c": "d", "d": "c"}


@dataclass(frozen=True)
class PhiMap(Embedding):
    """An explicit map into J_k - z_g together with the parameters it was built from.

    :param k: the k of the families involved
    :type k: int
    :param t: index of the deleted core vertex v_t
    :type t: int
    :param case: the S^+_k case, None for Z_k
    :type case: str, optional
    """

    k: int = 0
    t: int = 0
    case: Optional[str] = None

    @property
    def assignments(self):
        """guest name -> host name, e.g. ``{"v_2": "z_9", ...}``."""
        return dict(self.describe())


@dataclass(frozen=True)
class EmbeddingUnavailable:
    """The explicit map does not exist for these parameters. Always falsy."""

    k: int
    t: int
    case: Optional[str]
    reason: str

    def __bool__(self):
        return False


def _host(k):
    graph, g = make_J(k)
    host, translation = delete_vertex(graph, g)
    return host, translation, g


def phi_z_range(k):
    """Largest t for which phi_Z(k, t) is defined: min(g, k(k+1)/2 + 1)."""
    return min(j_hole(k), k * (k + 1) // 2 + 1)


def phi_s_range(k):
    """Largest t for which phi_S(k, t, case) is requested: ((k-1)(k+1)+1)/2 + 1."""
    return ((k - 1) * (k + 1) + 1) // 2 + 1


def phi_Z(k, t):
    """The map v_i -> z_(g-t+i) embedding Z_k - v_t into J_k - z_g.

    :param k: k >= 2
    :type k: int
    :param t: 1 <= t <= phi_z_range(k)
    :type t: int
    :raises InvalidParameterError: outside that range
    :rtype: PhiMap
    """
    if k < 2 or not 1 <= t <= phi_z_range(k):
        raise InvalidParameterError(
            f"phi_Z needs k >= 2 and 1 <= t <= {phi_z_range(max(k, 2))}, "
            f"got k={k}, t={t}; "
            "reduce t with reverse_instance first"
        )
    host, translation, g = _host(k)
    guest, guest_ids = delete_vertex(make_Z(k), t)
    mapping = {
        guest_ids[i]: translation[g - t + i] for i in range(1, z_order(k) + 1) if i != t
    }
    return PhiMap(guest, host, mapping, k=k, t=t)


def phi_S(k, t, case):
    """Explicit embedding of S^+_k - v_t into J_k - z_g.

    The core goes to z_(g-t+1), ..., the pendant paths to z_(g-t-k), z_(g-t-k+1) (w_1, w_2)
    and z_(g-t+n+k), z_(g-t+n+k+1) (w_3, w_4). w^+ goes to whichever of z_(g-t-1), z_(g-t)
    (cases a, c) or z_(g-t+n+1), z_(g-t+n+2) (cases b, d) has exactly its neighbourhood,
    the first of the two when both do.

    :param k: k >= 3
    :type k: int
    :param t: 1 <= t <= phi_s_range(k)
    :type t: int
    :param case: "a", "b", "c" or "d"
    :type case: str
    :raises InvalidParameterError: on parameters outside those ranges
    :raises ValueError: if no w^+ candidate fits
    :return: the map, or EmbeddingUnavailable when w_1 would fall off the layout start
        (only k = 3, t = 5 in range)
    :rtype: Union[PhiMap, EmbeddingUnavailable]
    """
    if k < 3 or case not in S_PLUS_CASES or not 1 <= t <= phi_s_range(k):
        raise InvalidParameterError(
            f"phi_S needs k >= 3, case in {S_PLUS_CASES} and 1 <= t <= "
            f"{phi_s_range(max(k, 3))}, got k={k}, t={t}, case={case!r}"
        )
    g = j_hole(k)
    if g - t + 1 < k + 2:
        logger.debug(f"phi_S({k}, {t}, {case}) unavailable")
        return EmbeddingUnavailable(
            k, t, case, f"w_1 would go to z_{g - t - k}, before the start of the layout"
        )

    host, translation, g = _host(k)
    graph, w_plus = make_S_plus(k, case)
    guest, guest_ids = delete_vertex(graph, t)
    n = s_core_order(k)

    targets = {i: g - t + i for i in range(1, n + 1) if i != t}
    targets[n + 1] = g - t - k
    targets[n + 2] = g - t - k + 1
    targets[n + 3] = g - t + n + k
    targets[n + 4] = g - t + n + k + 1
    mapping = {guest_ids[i]: translation[j] for i, j in targets.items()}

    near = [g - t - 1, g - t] if case in ("a", "c") else [g - t + n + 1, g - t + n + 2]
    fitting = []
    for j in near:
        if not 1 <= j <= j_order(k) or j == g:
            continue
        trial = dict(mapping)
        trial[guest_ids[w_plus]] = translation[j]
        candidate = PhiMap(guest, host, trial, k=k, t=t, case=case)
        if not embedding_defects(candidate):
            fitting.append(candidate)
    if not fitting:
        raise ValueError(
            f"phi_S({k}, {t}, {case}): none of the w^+ candidates "
            f"{[f'z_{j}' for j in near]} fits"
        )
    # both can fit; the earlier layout position wins
    return fitting[0]


def reverse_instance(k, t, case=None):
    """Reflect an instance through the layout reversal v_i -> v_(n-i+1).

    For Z_k (no case) n = k(k+1)+2; for S^+_k n = (k-1)(k+1)+2, and the reversal also swaps
    w_1 with w_4, w_2 with w_3 and the cases a with b, c with d.

    :return: the reflected (t, case)
    :rtype: Tuple[int, Optional[str]]
    """
    if case is None:
        return z_order(k) - t + 1, None
    if case not in S_PLUS_CASES:
        raise InvalidParameterError(f"case must be one of {S_PLUS_CASES}, got {case!r}")
    return s_core_order(k) - t + 1, _REVERSED_CASE[case]


def reversal_isomorphism(k, case=None):
    """Ids of Z_k (or S^+_k of `case`) -> ids of the reversed graph (Z_k, or the swapped case).

    :rtype: Dict[int, int]
    """
    n = z_order(k) if case is None else s_core_order(k)
    mapping = {i: n - i + 1 for i in range(1, n + 1)}
    if case is not None:
        pendants = {n + 1: n + 4, n + 2: n + 3, n + 3: n + 2, n + 4: n + 1}
        mapping.update(pendants)
        mapping[n + 5] = n + 5
    return mapping


def _through_reversal(k, t, case, reduced):
    # guest of `reduced` is the reversed graph minus v_t'; pull it back to the original minus v_t
    original = make_Z(k) if case is None else make_S_plus(k, case)[0]
    guest, guest_ids = delete_vertex(original, t)
    flip = reversal_isomorphism(k, case)
    reduced_ids = {
        old: new
        for old, new in zip(
            sorted(set(flip.values()) - {flip[t]}), range(1, reduced.guest.n + 1)
        )
    }
    mapping = {guest_ids[v]: reduced.mapping[reduced_ids[flip[v]]] for v in guest_ids}
    return PhiMap(guest, reduced.host, mapping, k=k, t=t, case=case)


def phi_Z_reduced(k, t):
    """phi_Z for every 1 <= t <= n, reflecting t into the first half of the layout first."""
    if 1 <= t <= phi_z_range(k):
        return phi_Z(k, t)
    if not 1 <= t <= z_order(k):
        raise InvalidParameterError(f"t must be in 1..{z_order(k)}, got {t}")
    reflected, _ = reverse_instance(k, t)
    return _through_reversal(k, t, None, phi_Z(k, reflected))


def phi_S_reduced(k, t, case):
    """phi_S for every 1 <= t <= n, reflecting (t, case) into the lemma's range first."""
    if 1 <= t <= phi_s_range(k):
        return phi_S(k, t, case)
    if not 1 <= t <= s_core_order(k):
        raise InvalidParameterError(f"t must be in 1..{s_core_order(k)}, got {t}")
    reflected, mirrored = reverse_instance(k, t, case)
    reduced = phi_S(k, reflected, mirrored)
    if not reduced:
        return EmbeddingUnavailable(k, t, case, reduced.reason)
    return _through_reversal(k, t, case, reduced)
