"""Dynamic planar embeddings.

Maintains a combinatorial planar embedding of a fully dynamic multigraph
with edge insertion/deletion, vertex split/join, articulation and
separation flips, linkable corner-pair queries and one-flip-linkable
suggestions, backed by coordinated primal/dual slim-path top trees over a
shared extended Euler tour.  A brute-force oracle provides ground truth
for differential verification.
"""

__all__ = ["DynamicEmbedding", "FlipSuggestion", "LinkableAnswer", "NaiveEmbedding"]


def __getattr__(name):
    if name in ("DynamicEmbedding", "FlipSuggestion", "LinkableAnswer"):
        from . import engine
        return getattr(engine, name)
    if name == "NaiveEmbedding":
        from .oracle import NaiveEmbedding
        return NaiveEmbedding
    raise AttributeError(name)
