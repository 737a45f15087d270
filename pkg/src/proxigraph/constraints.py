"""Constraint sets: the minimum subsets of input edges that must be forced."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ConstraintSet:
    """A subset of the input edge set, tagged with the graph family it
    reconstructs (cmst, gabriel, or beta with its parameter)."""

    edges: tuple
    family: str
    beta: object = None

    @classmethod
    def of(cls, edges, family, beta=None):
        norm = tuple(sorted((a, b) if a < b else (b, a) for a, b in edges))
        return cls(norm, family, beta)

    def __contains__(self, e):
        a, b = e
        return ((a, b) if a < b else (b, a)) in set(self.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def edge_indices(self, graph):
        """Positions of the constraint edges in the graph's input edge list."""
        pos = {e: i for i, e in enumerate(graph.edges)}
        return [pos[e] for e in self.edges]
