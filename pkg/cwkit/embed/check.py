"""
check.py
====================================
Verification of induced-subgraph embeddings.
"""

from ..utils import iter_bits

__all__ = ["check_embedding", "embedding_defects"]


def embedding_defects(embedding):
    """Everything that keeps `embedding` from being an induced embedding.

    :param embedding: the embedding to inspect
    :type embedding: Embedding
    :return: human-readable defects, empty when the embedding is valid
    :rtype: List[str]
    """
    guest, host, mapping = embedding.guest, embedding.host, embedding.mapping
    if set(mapping) != set(guest.vertices()):
        return [f"map covers {sorted(mapping)}, expected guest ids 1..{guest.n}"]
    outside = [u for u, x in mapping.items() if not 1 <= x <= host.n]
    if outside:
        return [f"guest vertices {outside} leave the host id range 1..{host.n}"]
    if len(set(mapping.values())) != len(mapping):
        return ["map is not injective"]

    image = 0
    for x in mapping.values():
        image |= 1 << (x - 1)

    defects = []
    for u in guest.vertices():
        expected = 0
        for a in iter_bits(guest.adjacency[u - 1]):
            expected |= 1 << (mapping[a + 1] - 1)
        actual = host.adjacency[mapping[u] - 1] & image
        if actual != expected:
            defects.append(
                f"{guest.label(u)} -> {host.label(mapping[u])} breaks "
                f"{bin(actual ^ expected).count('1')} adjacencies"
            )
    return defects


def check_embedding(embedding):
    """Whether `embedding` is injective and preserves both edges and non-edges.

    :param embedding: the embedding to check
    :type embedding: Embedding
    :rtype: bool
    """
    return not embedding_defects(embedding)
