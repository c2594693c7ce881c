"""Maximum bipartite matching and Hall-condition certificates.

Matching uses plain augmenting paths (Kuhn's algorithm). Left vertices are
tried in increasing order and neighbor lists are scanned in increasing
right index, so the result is a function of the input alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError


@dataclass(frozen=True)
class BipartiteGraph:
    left_n: int
    right_n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.left_n < 0 or self.right_n < 0:
            raise InputError("side sizes must be non-negative")
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        for x, y in edges:
            if not (0 <= x < self.left_n and 0 <= y < self.right_n):
                raise InputError(f"bipartite edge ({x}, {y}) out of range")
        if len(set(edges)) != len(edges):
            raise InputError("duplicate bipartite edge")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def left_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.left_n)]
        for x, y in self.edges:
            adj[x].append(y)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighborhood(self, left: set[int] | frozenset[int]) -> set[int]:
        """Union of the right-neighbors of ``left``."""
        out: set[int] = set()
        for x in left:
            out.update(self.left_adjacency[x])
        return out


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    saturates_left: bool

    def __len__(self) -> int:
        return len(self.pairs)


def _solve(b: BipartiteGraph) -> tuple[list[int], list[int]]:
    adj = b.left_adjacency
    match_left = [-1] * b.left_n
    match_right = [-1] * b.right_n

    def augment(x: int, seen: list[bool]) -> bool:
        # Iterative DFS; recursion depth could reach left_n otherwise.
        stack = [(x, 0)]
        path: list[tuple[int, int]] = []
        while stack:
            u, i = stack[-1]
            nbrs = adj[u]
            while i < len(nbrs) and seen[nbrs[i]]:
                i += 1
            if i == len(nbrs):
                stack.pop()
                if path:
                    path.pop()
                continue
            y = nbrs[i]
            stack[-1] = (u, i + 1)
            seen[y] = True
            path.append((u, y))
            if match_right[y] == -1:
                for pu, py in path:
                    match_left[pu] = py
                    match_right[py] = pu
                return True
            stack.append((match_right[y], 0))
        return False

    for x in range(b.left_n):
        augment(x, [False] * b.right_n)
    return match_left, match_right


def max_matching(b: BipartiteGraph) -> Matching:
    match_left, _ = _solve(b)
    pairs = tuple((x, y) for x, y in enumerate(match_left) if y != -1)
    return Matching(pairs, len(pairs) == b.left_n)


def hall_violator(b: BipartiteGraph) -> frozenset[int] | None:
    """Return ``S`` with ``|S| > |N(S)|`` if no matching saturates the left side, else None.

    ``S`` is the set of left vertices reachable by alternating paths from
    the lowest-index unmatched left vertex; every right vertex reached is
    matched, so ``|N(S)| = |S| - 1``.
    """
    match_left, match_right = _solve(b)
    free = [x for x, y in enumerate(match_left) if y == -1]
    if not free:
        return None
    adj = b.left_adjacency
    reached_left = {free[0]}
    queue = deque([free[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            z = match_right[y]
            if z != -1 and z not in reached_left:
                reached_left.add(z)
                queue.append(z)
    return frozenset(reached_left)
