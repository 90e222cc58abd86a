"""Finite posets given by a boolean order matrix, with lattice operations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset on ``elements`` with ``leq`` as a boolean matrix."""

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def covers(self) -> list[tuple[int, int]]:
        size = len(self.elements)
        out = []
        for a in range(size):
            above = [b for b in range(size) if b != a and self.leq[a][b]]
            for b in above:
                if not any(c != b and self.leq[c][b] for c in above):
                    out.append((a, b))
        return out

    def _bound(self, a: int, b: int, upper: bool) -> Optional[int]:
        size = len(self.elements)
        if upper:
            common = [c for c in range(size) if self.leq[a][c] and self.leq[b][c]]
            best = [c for c in common if all(self.leq[c][x] for x in common)]
        else:
            common = [c for c in range(size) if self.leq[c][a] and self.leq[c][b]]
            best = [c for c in common if all(self.leq[x][c] for x in common)]
        return best[0] if len(best) == 1 else None

    def join(self, a: int, b: int) -> Optional[int]:
        return self._bound(a, b, upper=True)

    def meet(self, a: int, b: int) -> Optional[int]:
        return self._bound(a, b, upper=False)

    @cached_property
    def _down_sizes(self) -> tuple[int, ...]:
        size = len(self.elements)
        return tuple(sum(self.leq[x][a] for x in range(size)) for a in range(size))

    @cached_property
    def _up_sizes(self) -> tuple[int, ...]:
        size = len(self.elements)
        return tuple(sum(self.leq[a][x] for x in range(size)) for a in range(size))

    @cached_property
    def meet_table(self):
        """Meets of all pairs, valid once the poset is known to be a lattice: the common lower bound with the largest down-set."""
        return self._bound_table(np.asarray(self.leq, dtype=bool), self._down_sizes)

    @cached_property
    def join_table(self):
        return self._bound_table(np.asarray(self.leq, dtype=bool).T, self._up_sizes)

    @staticmethod
    def _bound_table(below, sizes):
        # below[c, a]: c lies under a
        size = len(sizes)
        weight = np.asarray(sizes)[:, None]
        table = np.empty((size, size), dtype=int)
        for a in range(size):
            common = below[:, a][:, None] & below
            table[a] = np.argmax(np.where(common, weight, -1), axis=0)
        return table

    def is_lattice(self) -> bool:
        """Every pair has a least common upper bound and a greatest common lower bound."""
        if not self.elements:
            return True
        leq = np.asarray(self.leq, dtype=bool)
        for order, table in ((leq, self.join_table), (leq.T, self.meet_table)):
            size = len(order)
            for a in range(size):
                common = order[a][None, :] & order  # common[b, x]: x bounds both a and b
                best = table[a]
                if not common[np.arange(size), best].all():
                    return False
                # the candidate must lie under every common bound
                if (common & ~order[best]).any():
                    return False
        return True

    def to_networkx(self):
        import networkx as nx

        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        graph.add_edges_from(self.covers())
        return graph


def closure(size: int, pairs) -> tuple[tuple[bool, ...], ...]:
    reach = [[a == b for b in range(size)] for a in range(size)]
    for a, b in pairs:
        reach[a][b] = True
    for k in range(size):
        for a in range(size):
            if reach[a][k]:
                row_k = reach[k]
                row_a = reach[a]
                for b in range(size):
                    if row_k[b]:
                        row_a[b] = True
    return tuple(tuple(r) for r in reach)
