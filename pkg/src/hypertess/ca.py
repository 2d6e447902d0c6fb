"""Synchronous cellular automata on bounded trigrid regions.

Every triangle has exactly three neighbours, ordered by local side index, so
rules are triples (or totals) over a small state alphabet.  Cells outside the
region read a fixed boundary state.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .tiling import CENTRAL, TileCoord, Tiling
from .trigrid import TriCoord, Trigrid
from . import fibtree

MAX_LEVEL = 6
MAX_SUBDIV = 4

BOUNDARY = -1  # neighbour index marking a read of the boundary state


@dataclass
class Region:
    """All depth-n triangles over the central tile and sector tiles of level <= L.

    Cell order is the enumeration order (tiles in coordinate order, digit
    strings lexicographic), stable across runs.
    """

    p: int
    q: int
    level: int
    subdiv: int
    cells: list = field(default_factory=list)
    index: dict = field(default_factory=dict)
    neighbor_idx: list = field(default_factory=list)


def build_region(p: int, q: int, level: int, subdiv: int) -> Region:
    if level > MAX_LEVEL or level < 0:
        raise ValueError(f"tile level bound must be in [0..{MAX_LEVEL}]")
    if not 1 <= subdiv <= MAX_SUBDIV:
        raise ValueError(f"subdivision depth must be in [1..{MAX_SUBDIV}]")
    tiling = Tiling(p, q)
    tg = Trigrid(tiling)
    # level counts rings of tiles: 0 = central only, 1 adds the sector roots
    # (tree level 0), and so on.
    tiles = [CENTRAL]
    if level >= 1:
        last = fibtree.level_bounds(level - 1)[1]
        tiles += [TileCoord(s, n) for s in range(1, tiling.max + 1)
                  for n in range(1, last + 1)]
    cells: list[TriCoord] = []
    for tile in tiles:
        frontier = tg.children(tile)
        for _ in range(subdiv - 1):
            frontier = [c for t in frontier for c in tg.children(t)]
        cells.extend(frontier)
    region = Region(p=p, q=q, level=level, subdiv=subdiv, cells=cells,
                    index={c: i for i, c in enumerate(cells)})
    for c in cells:
        region.neighbor_idx.append(tuple(
            region.index.get(n, BOUNDARY) for n in tg.tri_neighbors(c)))
    return region


@dataclass
class Rule:
    """Transition rule over states 0..alphabet-1.

    Either a table over (own, n1, n2, n3) or a totalistic map over
    (own, n1+n2+n3); unspecified entries keep the cell's state.
    """

    alphabet: int
    boundary: int = 0
    table: dict = field(default_factory=dict)
    totalistic: dict = field(default_factory=dict)

    def apply(self, own: int, triple: tuple[int, int, int]) -> int:
        hit = self.table.get((own,) + tuple(triple))
        if hit is not None:
            return hit
        hit = self.totalistic.get((own, sum(triple)))
        if hit is not None:
            return hit
        return own

    def check_state(self, s: int) -> int:
        if not 0 <= s < self.alphabet:
            raise ValueError(f"state {s} outside alphabet 0..{self.alphabet - 1}")
        return s


def parse_rule(text: str) -> Rule:
    """Line-oriented rule format.

    header:   alphabet K
              boundary S
    sections: `totalistic` then lines `own sum -> next`
              `table` then lines `own n1 n2 n3 -> next`
    Blank lines and '#' comments are skipped.
    """
    alphabet = None
    boundary = 0
    mode = None
    table = {}
    totalistic = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0].lower()
        if head == "alphabet":
            alphabet = int(words[1])
        elif head == "boundary":
            boundary = int(words[1])
        elif head == "totalistic":
            mode = "totalistic"
        elif head == "table":
            mode = "table"
        else:
            if mode is None or "->" not in words:
                raise ValueError(f"rule line {ln}: expected a section header first")
            arrow = words.index("->")
            lhs = [int(w) for w in words[:arrow]]
            rhs = int(words[arrow + 1])
            if mode == "totalistic":
                if len(lhs) != 2:
                    raise ValueError(f"rule line {ln}: totalistic lines are 'own sum -> next'")
                totalistic[(lhs[0], lhs[1])] = rhs
            else:
                if len(lhs) != 4:
                    raise ValueError(f"rule line {ln}: table lines are 'own n1 n2 n3 -> next'")
                table[tuple(lhs)] = rhs
    if alphabet is None or alphabet < 1:
        raise ValueError("rule file must declare 'alphabet K' with K >= 1")
    rule = Rule(alphabet=alphabet, boundary=boundary, table=table, totalistic=totalistic)
    rule.check_state(boundary)
    for key, val in list(table.items()) + list(totalistic.items()):
        for s in (key[0], val):
            rule.check_state(s)
    return rule


def step(region: Region, rule: Rule, state: list[int]) -> list[int]:
    """One synchronous update; outside reads yield the rule's boundary state."""
    if len(state) != len(region.cells):
        raise ValueError("state length does not match the region")
    bnd = rule.boundary
    out = []
    for i, nbrs in enumerate(region.neighbor_idx):
        triple = tuple(state[j] if j != BOUNDARY else bnd for j in nbrs)
        out.append(rule.check_state(rule.apply(state[i], triple)))
    return out


def frame_hash(state: list[int]) -> str:
    """64-bit content hash of a frame, stable across processes."""
    h = hashlib.blake2b(digest_size=8)
    h.update(b"\x00".join(str(s).encode() for s in state))
    return h.hexdigest()


def run(region: Region, rule: Rule, state: list[int], k: int):
    """k synchronous steps; returns (trajectory, frame hashes) incl. frame 0."""
    if k < 0:
        raise ValueError("step count must be >= 0")
    for s in state:
        rule.check_state(s)
    traj = [list(state)]
    hashes = [frame_hash(state)]
    for _ in range(k):
        state = step(region, rule, state)
        traj.append(state)
        hashes.append(frame_hash(state))
    return traj, hashes
