"""The black/white tree spanning one angular sector of the pentagrid/heptagrid.

Nodes are numbered from the root, level by level, left to right.  Black nodes
have two sons, white nodes three, by the rules B -> B*W and W -> B W* W where
the star marks the son reached through the father's neighbour-4 side.  The
root (node 1) is white.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .numeration import Basis

BLACK = "black"
WHITE = "white"

ROOT = "root"
LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"
INTERIOR = "interior"


@dataclass(frozen=True)
class NodeInfo:
    index: int
    status: str
    father: int  # 0 for the root (its father is the central tile)
    sigma4: int  # index of the neighbour-4 (starred) son
    level: int
    rank: int  # position within the level, 0 = leftmost


class _Tree:
    """Lazily grown level-by-level table of the sector tree."""

    def __init__(self):
        # 1-based arrays; slot 0 is a sentinel.
        self._status = [None, WHITE]
        self._father = [0, 0]
        self._sigma4 = [0, 0]
        self._level_first = [1]  # index of the first node of each level
        self._levels_built = 0  # levels whose sons are fully generated
        self._basis = Basis(5, 4, 16)  # level sizes, for bounds without nodes
        self._prefix = [1]  # _prefix[l] = index of the first node of level l

    def _grow_level(self) -> None:
        l = self._levels_built
        first = self._level_first[l]
        last = len(self._status) - 1
        self._level_first.append(len(self._status))
        for nu in range(first, last + 1):
            if self._status[nu] == BLACK:
                sons = (BLACK, WHITE)
                star = 0
            else:
                sons = (BLACK, WHITE, WHITE)
                star = 1
            self._sigma4[nu] = len(self._status) + star
            for s in sons:
                self._status.append(s)
                self._father.append(nu)
                self._sigma4.append(0)
        self._levels_built += 1

    def ensure_node(self, nu: int) -> None:
        # sigma4(nu) requires nu's own level to be expanded one step further.
        while len(self._status) <= nu or self._sigma4[nu] == 0:
            self._grow_level()

    def level_size(self, l: int) -> int:
        return self._basis.term(l)

    def level_first(self, l: int) -> int:
        # Cached prefix sums of the basis terms; no node materialization.
        pre = self._prefix
        while len(pre) <= l:
            pre.append(pre[-1] + self._basis.term(len(pre) - 1))
        return pre[l]

    def info(self, nu: int) -> NodeInfo:
        if nu < 1:
            raise ValueError("tree nodes are numbered from 1 (0 is the central tile)")
        self.ensure_node(nu)
        # Locate the level by walking the built prefix (levels are few).
        l = 0
        while self._level_first[l + 1] <= nu:
            l += 1
        return NodeInfo(
            index=nu,
            status=self._status[nu],
            father=self._father[nu],
            sigma4=self._sigma4[nu],
            level=l,
            rank=nu - self._level_first[l],
        )


_TREE = _Tree()


def node_info(nu: int) -> NodeInfo:
    """Status, father, neighbour-4 son, level and rank of node nu >= 1."""
    return _TREE.info(nu)


def status(nu: int) -> str:
    _TREE.ensure_node(nu)
    return _TREE._status[nu]


def father(nu: int) -> int:
    _TREE.ensure_node(nu)
    return _TREE._father[nu]


def sigma4(nu: int) -> int:
    _TREE.ensure_node(nu)
    return _TREE._sigma4[nu]


def level_bounds(l: int) -> tuple[int, int]:
    """(first, last) node indices of level l: first = 1 + sum(u_i, i<l)."""
    if l < 0:
        raise ValueError("level must be >= 0")
    first = _TREE.level_first(l)
    return first, first + _TREE.level_size(l) - 1


def level_of(nu: int) -> int:
    if nu < 1:
        raise ValueError("tree nodes are numbered from 1")
    pre = _TREE._prefix
    while pre[-1] <= nu:
        _TREE.level_first(len(pre))
    return bisect_right(pre, nu) - 1


def branch_class(nu: int) -> str:
    """root | leftmost | rightmost | interior, per position in the level."""
    if nu == 1:
        return ROOT
    l = level_of(nu)
    pre = _TREE._prefix
    if nu == pre[l]:
        return LEFTMOST
    if nu == pre[l + 1] - 1:
        return RIGHTMOST
    return INTERIOR


def level_sizes_from_tree(max_level: int) -> list[int]:
    """Level sizes obtained by actually expanding the tree (for cross-checks)."""
    _TREE.ensure_node(level_bounds(max_level)[1])
    lf = _TREE._level_first
    return [lf[l + 1] - lf[l] for l in range(max_level + 1)]
