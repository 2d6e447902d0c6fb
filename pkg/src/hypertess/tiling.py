"""Tile coordinates and the neighbour algebra for the heptagrid and pentagrid.

A tile is Central or (sector, nu) with nu the BFS index in the sector tree.
Side 1 of a non-central tile is the side shared with its father; sides grow
counter-clockwise.  Side tau of the central tile leads to sector tau, and the
central tile's side 1 faces the positive x-axis of the disc model.

The heptagrid rows implement the published v(tau, nu) table; the pentagrid
rows were read off the geometric oracle once and are frozen here (the
regression test re-derives them from disc geometry).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fibtree
from .fibtree import BLACK, INTERIOR, LEFTMOST, RIGHTMOST, ROOT
from .numeration import check_pq

SUPPORTED = {(7, 3), (5, 4)}


@dataclass(frozen=True, order=True)
class TileCoord:
    """Central (sector 0) or a sector tile (sector in 1..max, nu >= 1)."""

    sector: int = 0
    nu: int = 0

    @property
    def is_central(self) -> bool:
        return self.sector == 0

    def __str__(self):
        return "0" if self.is_central else f"{self.sector}:{self.nu}"


CENTRAL = TileCoord()


class Tiling:
    """Neighbour algebra of a supported {p,q} (heptagrid {7,3}, pentagrid {5,4})."""

    def __init__(self, p: int, q: int):
        check_pq(p, q)
        if (p, q) not in SUPPORTED:
            raise ValueError(
                f"neighbour tables exist for {{7,3}} and {{5,4}} only, not {{{p},{q}}}")
        self.p = p
        self.q = q
        self.max = p  # sectors around the central tile
        if p == 7:
            self._rows = _HEPTA_ROWS
            self._left_cross = (2, 3)  # leftmost-branch sides landing in sector-1
            self._right_cross = (6, 7)
            self._root_minus = (2,)
            self._root_plus = (6, 7)
        else:
            self._rows = _PENTA_ROWS
            self._left_cross = (2,)
            self._right_cross = (5,)
            self._root_minus = ()
            self._root_plus = (5,)

    # -- sector arithmetic ------------------------------------------------

    def wrap(self, sigma: int, step: int) -> int:
        """sigma (+/-) 1 with wrap-around over [1..max]."""
        return (sigma - 1 + step) % self.max + 1

    def side_wrap(self, tau: int, step: int) -> int:
        """tau (+/-) 1 over side indices [1..p]."""
        return (tau - 1 + step) % self.p + 1

    # -- parsing / formatting ---------------------------------------------

    def parse_coord(self, text: str) -> TileCoord:
        text = text.strip()
        if text == "0":
            return CENTRAL
        try:
            sec_s, nu_s = text.split(":")
            sector, nu = int(sec_s), int(nu_s)
        except ValueError:
            raise ValueError(f"bad tile coordinate {text!r}: expected '0' or 'sector:nu'")
        return self.validate(TileCoord(sector, nu))

    def format_coord(self, c: TileCoord) -> str:
        return str(c)

    def validate(self, c: TileCoord) -> TileCoord:
        if c.is_central:
            if c.nu:
                raise ValueError("central tile has no tree index")
            return c
        if not 1 <= c.sector <= self.max:
            raise ValueError(f"sector {c.sector} out of [1..{self.max}]")
        if c.nu < 1:
            raise ValueError(f"tree index {c.nu} out of range (>= 1)")
        return c

    # -- neighbour function v ------------------------------------------------

    def neighbor(self, c: TileCoord, tau: int) -> TileCoord:
        """The tile sharing side tau of c."""
        if not 1 <= tau <= self.p:
            raise ValueError(f"side {tau} out of [1..{self.p}]")
        if c.is_central:
            return TileCoord(tau, 1)
        nu = c.nu
        cls = fibtree.branch_class(nu)
        row = self._rows[cls if cls in (ROOT, LEFTMOST, RIGHTMOST) else fibtree.status(nu)]
        kind, delta = row[tau - 1]
        if kind == "central":
            return CENTRAL
        if kind == "f":
            n = fibtree.father(nu) + delta
        elif kind == "nu":
            n = nu + delta
        else:  # "s4"
            n = fibtree.sigma4(nu) + delta
        sector = c.sector
        if cls == LEFTMOST and tau in self._left_cross:
            sector = self.wrap(sector, -1)
        elif cls == RIGHTMOST and tau in self._right_cross:
            sector = self.wrap(sector, +1)
        elif cls == ROOT:
            if tau in self._root_minus:
                sector = self.wrap(sector, -1)
            elif tau in self._root_plus:
                sector = self.wrap(sector, +1)
        return TileCoord(sector, n)

    def all_neighbors(self, c: TileCoord) -> list[TileCoord]:
        return [self.neighbor(c, tau) for tau in range(1, self.p + 1)]

    # -- side correspondence t ---------------------------------------------

    def side_in_neighbor(self, c: TileCoord, tau: int) -> int:
        """Number, inside the neighbour, of the side shared through side tau of c."""
        if not 1 <= tau <= self.p:
            raise ValueError(f"side {tau} out of [1..{self.p}]")
        if c.is_central:
            return 1  # each neighbour sees the central tile as its father
        nu = c.nu
        if tau == 1:
            if nu == 1:
                return c.sector  # the central tile numbers its own sides
            f = fibtree.father(nu)
            if fibtree.status(nu) == BLACK:
                # a black node is always its father's first son
                return self._first_son_side(fibtree.status(f))
            return self._star_side if nu == fibtree.sigma4(f) else self._last_son_side
        me = fibtree.status(nu)
        if self.p == 7:
            if me == BLACK:
                return _HEPTA_T_BLACK[tau]
            if tau == 7:
                n = self.neighbor(c, 7)
                return 2 if fibtree.status(n.nu) != BLACK else 3
            return _HEPTA_T_WHITE[tau]
        if tau == 2:
            return 5 if me == BLACK else 1
        return _PENTA_T_TAIL[tau]

    def _first_son_side(self, father_status: str) -> int:
        if self.p == 7:
            return 3 if father_status == "white" else 4
        return 2 if father_status == "white" else 3

    @property
    def _star_side(self) -> int:
        return 4 if self.p == 7 else 3

    @property
    def _last_son_side(self) -> int:
        return 5 if self.p == 7 else 4

    # -- sons ---------------------------------------------------------------

    def son_sides(self, c: TileCoord) -> dict[int, TileCoord]:
        """side -> son tile, for walking father chains geometrically."""
        if c.is_central:
            return {tau: TileCoord(tau, 1) for tau in range(1, self.p + 1)}
        nu = c.nu
        s4 = fibtree.sigma4(nu)
        if fibtree.status(nu) == BLACK:
            sons = [s4, s4 + 1]
            first = 4 if self.p == 7 else 3
        else:
            sons = [s4 - 1, s4, s4 + 1]
            first = 3 if self.p == 7 else 2
        return {first + i: TileCoord(c.sector, s) for i, s in enumerate(sons)}


# Heptagrid v(tau, nu) rows, sides 1..7.  Entries are (base, offset) with base
# f = father(nu), nu itself, or s4 = sigma4(nu).
_HEPTA_ROWS = {
    BLACK: [("f", 0), ("f", -1), ("nu", -1), ("s4", 0), ("s4", 1), ("s4", 2), ("nu", 1)],
    LEFTMOST: [("f", 0), ("nu", -1), ("s4", -1), ("s4", 0), ("s4", 1), ("s4", 2), ("nu", 1)],
    "white": [("f", 0), ("nu", -1), ("s4", -1), ("s4", 0), ("s4", 1), ("s4", 2), ("nu", 1)],
    RIGHTMOST: [("f", 0), ("nu", -1), ("s4", -1), ("s4", 0), ("s4", 1), ("nu", 1), ("f", 1)],
    ROOT: [("central", 0), ("nu", 0), ("s4", -1), ("s4", 0), ("s4", 1), ("nu", 1), ("nu", 0)],
}

# Pentagrid rows, sides 1..5 (oracle-derived, frozen).
_PENTA_ROWS = {
    BLACK: [("f", 0), ("f", -1), ("s4", 0), ("s4", 1), ("s4", 2)],
    LEFTMOST: [("f", 0), ("nu", -1), ("s4", 0), ("s4", 1), ("s4", 2)],
    "white": [("f", 0), ("s4", -1), ("s4", 0), ("s4", 1), ("s4", 2)],
    RIGHTMOST: [("f", 0), ("s4", -1), ("s4", 0), ("s4", 1), ("nu", 1)],
    ROOT: [("central", 0), ("s4", -1), ("s4", 0), ("s4", 1), ("nu", 1)],
}

# Shared-side numbers seen from the neighbour (sides 2..7; side 1 is ranked).
_HEPTA_T_BLACK = {2: 6, 3: 7, 4: 1, 5: 1, 6: 2, 7: 2}
_HEPTA_T_WHITE = {2: 7, 3: 1, 4: 1, 5: 1, 6: 2}
_PENTA_T_TAIL = {3: 1, 4: 1, 5: 2}
