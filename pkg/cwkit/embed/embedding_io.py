"""
embedding_io.py
====================================
JSON form of embeddings, self-contained so that evidence files can be re-checked alone.
"""

import json

from ..graph import Embedding, read_graph, write_graph

__all__ = ["write_embedding", "read_embedding", "save_embedding", "load_embedding"]


def write_embedding(embedding):
    """JSON text holding both graphs, the id map and the same map by vertex labels.

    :param embedding: the embedding
    :type embedding: Embedding
    :rtype: str
    """
    document = {
        "guest": write_graph(embedding.guest),
        "host": write_graph(embedding.host),
        "map": [[u, embedding.mapping[u]] for u in sorted(embedding.mapping)],
        "labels": [list(pair) for pair in embedding.describe()],
    }
    return json.dumps(document, indent=2) + "\n"


def read_embedding(text):
    """Inverse of :func:`write_embedding`; the `labels` entry is informative only.

    :raises GraphFormatError: if one of the embedded graphs is malformed
    :raises KeyError: if an entry is missing
    :rtype: Embedding
    """
    document = json.loads(text)
    return Embedding(
        read_graph(document["guest"]),
        read_graph(document["host"]),
        {int(u): int(x) for u, x in document["map"]},
    )


def save_embedding(embedding, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_embedding(embedding))


def load_embedding(path):
    with open(path, encoding="utf-8") as f:
        return read_embedding(f.read())
