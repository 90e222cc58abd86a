"""The bottom-to-top sweep shared by permutation and ordered-partition insertion.

Dots are read level by level.  Walls hang below every value with two children
until that value is swept, and rise above every value with two parents once it
is swept.  The region between two consecutive walls always carries exactly one
pending strand.  A node collects every strand it can see from below and emits
one strand into each region it can see above.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import Decoration


@dataclass
class SweptNode:
    block: tuple[int, ...]
    level: int
    children: list = field(default_factory=list)  # node indices or None
    parents: list = field(default_factory=list)


def _group(part: Sequence[int], walls: list[int]) -> list[tuple[int, ...]]:
    """Split a level into nodes: consecutive dots merge unless a wall lies between."""
    dots = sorted(part)
    nodes = [[dots[0]]]
    for x in dots[1:]:
        prev = nodes[-1][-1]
        k = bisect_left(walls, prev + 1)
        if k < len(walls) and walls[k] < x:
            nodes.append([x])
        else:
            nodes[-1].append(x)
    return [tuple(block) for block in nodes]


def sweep(decoration: Decoration, parts: Sequence[Sequence[int]]) -> list[SweptNode]:
    """Run the sweep on an ordered partition of ``[n]`` (parts from bottom to top).

    Returns the nodes in creation order with slot contents given as node
    indices (``None`` marks a stub).
    """
    walls = list(decoration.down_labels)
    # a strand is (source node index or None, parent slot of the source)
    strands: list[tuple[Optional[int], int]] = [(None, 0)] * (len(walls) + 1)
    nodes: list[SweptNode] = []

    for level, part in enumerate(parts, start=1):
        blocks = _group(part, walls)
        placed = []
        for block in blocks:
            lo_value, hi_value = block[0], block[-1]
            lo = bisect_left(walls, lo_value)  # region left of / containing the first dot
            hi = bisect_left(walls, hi_value)
            if hi < len(walls) and walls[hi] == hi_value:
                hi += 1  # a wall at the last dot: take the region to its right
            placed.append((block, lo, hi))
        # apply right to left so region indices of earlier nodes stay valid
        for block, lo, hi in reversed(placed):
            index = len(nodes)
            node = SweptNode(block=block, level=level)
            for src, slot in strands[lo : hi + 1]:
                node.children.append(src)
                if src is not None:
                    nodes[src].parents[slot] = index
            assert walls[lo:hi] == [x for x in block if decoration.down(x)]
            ups = [x for x in block if decoration.up(x)]
            node.parents = [None] * (len(ups) + 1)
            nodes.append(node)
            walls[lo:hi] = ups
            strands[lo : hi + 1] = [(index, k) for k in range(len(ups) + 1)]
    return nodes
