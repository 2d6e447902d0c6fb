"""Coordinates and linear-time neighbour computation for n-trigrids.

An n-triangle over a {p,q} tiling is addressed by its tile plus a digit
string [a1, a2, ..., an]: a1 in 1..p picks the 1-triangle fanned on side a1
of the polygon, every later digit in 0..3 picks a subdivision child (corner
children 0,1,2 sit at the like-numbered vertex, child 3 is the medial
triangle).

Neighbours are computed in one top-down pass: a frame holding the neighbour
coordinates of the current triangle is seeded at depth 1 and folded once per
digit, so the whole computation is linear in the coordinate length.  On top
of the published fold rules the frame carries, per neighbour, the numbering
its own vertex scheme gives to the two shared vertices; the child indices
appearing in the folds are read from that correspondence.  (With the seed
correspondence the folds reduce exactly to the published table rows; deeper
down the correspondence drifts, and folding with the frozen level-1 indices
would disagree with the mesh from depth 3 on.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .tiling import CENTRAL, TileCoord, Tiling


@dataclass(frozen=True, order=True)
class TriCoord:
    tile: TileCoord
    digits: tuple

    @property
    def depth(self) -> int:
        return len(self.digits)

    def __str__(self):
        return f"{self.tile}/{'.'.join(str(d) for d in self.digits)}"

    def child(self, d: int) -> "TriCoord":
        return TriCoord(self.tile, self.digits + (d,))


@dataclass(frozen=True)
class _Frame:
    """Neighbour triple of the current triangle plus vertex correspondences.

    neighbors[k] shares the current triangle's side k.  corr[k] = (x, y)
    gives the neighbour's numbering of the current triangle's vertices i and
    j, where (i, j) are the two non-k vertex numbers in increasing order.
    """

    neighbors: tuple
    corr: tuple


# After a medial step every neighbour is a sibling whose shared-vertex
# numbering coincides with ours.
_IDENTITY_CORR = ((1, 2), (0, 2), (0, 1))


class Trigrid:
    """n-trigrid navigation over a supported base tiling."""

    def __init__(self, tiling: Tiling):
        self.tiling = tiling
        self.p = tiling.p

    # -- coordinate plumbing -------------------------------------------------

    def validate(self, t: TriCoord) -> TriCoord:
        self.tiling.validate(t.tile)
        if t.depth < 1:
            raise ValueError("triangle coordinates need at least one digit")
        if not 1 <= t.digits[0] <= self.p:
            raise ValueError(f"first digit {t.digits[0]} out of [1..{self.p}]")
        for d in t.digits[1:]:
            if not 0 <= d <= 3:
                raise ValueError(f"subdivision digit {d} out of [0..3]")
        return t

    def parse(self, text: str) -> TriCoord:
        text = text.strip()
        try:
            tile_s, digit_s = text.split("/")
            digits = tuple(int(d) for d in digit_s.split("."))
        except ValueError:
            raise ValueError(f"bad triangle coordinate {text!r}: expected 'tile/a1.a2...'")
        tile = self.tiling.parse_coord(tile_s)
        return self.validate(TriCoord(tile, digits))

    def format(self, t: TriCoord) -> str:
        return str(t)

    # -- containment algebra ---------------------------------------------

    def children(self, t: TriCoord | TileCoord):
        """The four subdivision children, or the p 1-triangles of a tile."""
        if isinstance(t, TileCoord):
            return [TriCoord(t, (tau,)) for tau in range(1, self.p + 1)]
        return [t.child(d) for d in range(4)]

    def parent(self, t: TriCoord):
        """The containing (n-1)-triangle, or the tile for a 1-triangle."""
        if t.depth == 1:
            return t.tile
        return TriCoord(t.tile, t.digits[:-1])

    def orientation(self, t: TriCoord) -> int:
        """+1 if vertex numbers run counter-clockwise, -1 otherwise.

        Depth-1 triangles are +1 by construction; corner children flip,
        the medial child preserves.
        """
        self.validate(t)
        sign = 1
        for d in t.digits[1:]:
            if d != 3:
                sign = -sign
        return sign

    # -- the linear neighbour algorithm ------------------------------------

    def _seed(self, t: TriCoord) -> _Frame:
        """Depth-1 frame: the three 1-triangles around side tau of the polygon."""
        tile, tau = t.tile, t.digits[0]
        sw = self.tiling.side_wrap
        u = TriCoord(tile, (sw(tau, +1),))
        v = TriCoord(tile, (sw(tau, -1),))
        q_tile = self.tiling.neighbor(tile, tau)
        w = TriCoord(q_tile, (self.tiling.side_in_neighbor(tile, tau),))
        # U shares our vertex 1 (numbered 0 in U) and the center (2 in both);
        # V shares our vertex 0 (1 in V) and the center; W lies across the
        # polygon edge, which it traverses the opposite way: our 0 is its 1,
        # our 1 its 0.
        return _Frame(neighbors=(u, v, w), corr=((0, 2), (1, 2), (1, 0)))

    @staticmethod
    def _fold(frame: _Frame, z: TriCoord, c: int) -> _Frame:
        """Frame of child c of the triangle z whose frame is given."""
        if c == 3:
            return _Frame(neighbors=(z.child(0), z.child(1), z.child(2)),
                          corr=_IDENTITY_CORR)
        beta, gamma = [k for k in (0, 1, 2) if k != c]
        nb, ng = frame.neighbors[beta], frame.neighbors[gamma]
        # corr components at our vertex c, and at the other shared vertex.
        def split(k, other):
            i, j = [v for v in (0, 1, 2) if v != k]
            x, y = frame.corr[k]
            return (x, y) if other == j else (y, x)  # (at c, at other)
        at_c_g, at_other_g = split(gamma, beta)   # N_gamma holds vertices c, beta
        at_c_b, at_other_b = split(beta, gamma)   # N_beta holds vertices c, gamma
        new_beta = ng.child(at_c_g)               # across our side beta
        new_gamma = nb.child(at_c_b)              # across our side gamma
        # Shared-edge numbers inside the old neighbours give the midpoint
        # numbers inside their corner children.
        e_g = 3 - at_c_g - at_other_g
        e_b = 3 - at_c_b - at_other_b
        neighbors = [None, None, None]
        corr = [None, None, None]
        neighbors[c] = z.child(3)
        corr[c] = (beta, gamma)
        neighbors[beta] = new_beta
        corr[beta] = (at_c_g, e_g) if c < gamma else (e_g, at_c_g)
        neighbors[gamma] = new_gamma
        corr[gamma] = (at_c_b, e_b) if c < beta else (e_b, at_c_b)
        return _Frame(neighbors=tuple(neighbors), corr=tuple(corr))

    def tri_neighbors_counted(self, t: TriCoord):
        """((N1, N2, N3), steps): neighbours across sides 0, 1, 2 and the
        number of seed/fold steps taken (exactly the coordinate depth)."""
        self.validate(t)
        steps = 1
        frame = self._seed(t)
        z = TriCoord(t.tile, t.digits[:1])
        for c in t.digits[1:]:
            frame = self._fold(frame, z, c)
            z = z.child(c)
            steps += 1
        return frame.neighbors, steps

    def tri_neighbors(self, t: TriCoord):
        """Neighbours 1, 2, 3 of t (sharing its sides 0, 1, 2)."""
        return self.tri_neighbors_counted(t)[0]
