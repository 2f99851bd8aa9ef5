"""
Union-find over board sites, carrying a region bitmask per group.

Licensed under the Apache License, Version 2.0
"""
from typing import List, Sequence


class UnionFind:
    """
    Disjoint sets of sites with union by rank and path compression.

    Each root holds the OR of the region masks of its members, so the regions a
    group touches are known without walking the group.
    """

    __slots__ = ("parent", "rank", "mask")

    def __init__(self, size: int = 0):
        self.parent: List[int] = list(range(size))
        self.rank: List[int] = [0] * size
        self.mask: List[int] = [0] * size

    def copy(self) -> "UnionFind":
        other = UnionFind.__new__(UnionFind)
        other.parent = self.parent[:]
        other.rank = self.rank[:]
        other.mask = self.mask[:]
        return other

    def find(self, i: int) -> int:
        root = i
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def add(self, i: int, mask: int = 0) -> None:
        """Make `i` a singleton group touching the regions of `mask`."""
        self.parent[i] = i
        self.rank[i] = 0
        self.mask[i] = mask

    def union(self, i: int, j: int) -> bool:
        root_i = self.find(i)
        root_j = self.find(j)
        if root_i == root_j:
            return False
        if self.rank[root_i] < self.rank[root_j]:
            root_i, root_j = root_j, root_i
        self.parent[root_j] = root_i
        self.mask[root_i] |= self.mask[root_j]
        if self.rank[root_i] == self.rank[root_j]:
            self.rank[root_i] += 1
        return True

    def group_mask(self, i: int) -> int:
        return self.mask[self.find(i)]

    def connected(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def groups(self, members: Sequence[int]) -> List[List[int]]:
        """Partition `members` by group, groups ordered by their smallest member."""
        found = {}
        for site in sorted(members):
            found.setdefault(self.find(site), []).append(site)
        return list(found.values())
