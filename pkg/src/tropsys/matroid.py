"""Intersection of a linear matroid with a partition matroid.

Ground set: vectors tagged with a group label.  A set is independent in the
linear matroid when its vectors are linearly independent, and in the partition
matroid when it uses each group at most ``capacity`` times (here always 1).
The maximum common independent set is grown by shortest augmenting paths in
the exchange graph (Edmonds; see Schrijver, Combinatorial Optimization, ch. 41).
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Hashable, Sequence

from .linear import Echelon, rank

__all__ = ["max_common_independent", "brute_force_transversal"]


def _echelon(vectors, dim, members) -> Echelon | None:
    ech = Echelon(dim)
    for i in members:
        ech = ech.add(vectors[i])
        if ech is None:
            return None
    return ech


def max_common_independent(vectors: Sequence[Sequence], groups: Sequence[Hashable],
                           dim: int) -> list[int]:
    """Indices of a maximum set of linearly independent vectors, one per group.

    Deterministic: ties are resolved by element index.
    """
    m = len(vectors)
    if len(groups) != m:
        raise ValueError("vectors and groups differ in length")
    current: list[int] = []
    while True:
        in_set = set(current)
        used = {groups[i] for i in current}
        base = _echelon(vectors, dim, current)
        outside = [x for x in range(m) if x not in in_set]
        sources = {x for x in outside if base.add(vectors[x]) is not None}
        sinks = {x for x in outside if groups[x] not in used}
        if not sources or not sinks:
            return sorted(current)
        # exchange graph
        adj: dict[int, list[int]] = {v: [] for v in range(m)}
        for y in current:
            rest = _echelon(vectors, dim, [i for i in current if i != y])
            for x in outside:
                if rest.add(vectors[x]) is not None:
                    adj[y].append(x)  # I - y + x independent in the linear matroid
                if groups[x] == groups[y] or groups[x] not in used:
                    adj[x].append(y)  # I - y + x independent in the partition matroid
        prev: dict[int, int | None] = {}
        queue = deque()
        for s in sorted(sources):
            prev[s] = None
            queue.append(s)
        end = None
        while queue:
            v = queue.popleft()
            if v in sinks:
                end = v
                break
            for w in adj[v]:
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        if end is None:
            return sorted(current)
        path = []
        v: int | None = end
        while v is not None:
            path.append(v)
            v = prev[v]
        for v in path:
            if v in in_set:
                in_set.remove(v)
            else:
                in_set.add(v)
        current = sorted(in_set)


def brute_force_transversal(options: Sequence[Sequence[Sequence]], dim: int,
                            need: int | None = None):
    """Pick one vector from every group so that the picks span rank ``need``.

    ``options[g]`` lists the candidate vectors of group ``g``.  Returns the tuple
    of chosen positions (first in lexicographic order) or ``None``.
    """
    if need is None:
        need = dim
    if any(len(opts) == 0 for opts in options):
        return None
    for choice in product(*(range(len(opts)) for opts in options)):
        if rank([options[g][c] for g, c in enumerate(choice)]) >= need:
            return choice
    return None
