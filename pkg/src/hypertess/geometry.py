"""Poincare-disc oracle: reflection BFS, geodesic subdivision, adjacency.

Everything here is independent of the combinatorial neighbour tables: tilings
are built by reflecting polygons in their sides, triangle meshes by geodesic
midpoint subdivision, and adjacency is read off shared edges.  The navigation
modules are validated against this machinery.

Points are complex numbers strictly inside the unit disc.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

from . import fibtree
from .numeration import check_pq
from .tiling import CENTRAL, TileCoord, Tiling

# Tolerances: centers dedup at 1e-6, edge endpoints match at 1e-9.  The disc
# crowds exponentially, so generation depth stays <= 6 to keep separations
# above tolerance.
CENTER_TOL = 1e-6
EDGE_TOL = 1e-9
MOTION_TOL = 1e-9


# ---------------------------------------------------------------------------
# Motions of the disc
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Motion:
    """Disc automorphism z -> (a w + b) / (conj(b) w + conj(a)), w = z or conj(z).

    |a|^2 - |b|^2 is kept at 1; `flip` marks orientation-reversing motions
    (compositions with complex conjugation, i.e. reflections).
    """

    a: complex = 1.0 + 0j
    b: complex = 0j
    flip: bool = False

    def __call__(self, z: complex) -> complex:
        w = z.conjugate() if self.flip else z
        return (self.a * w + self.b) / (self.b.conjugate() * w + self.a.conjugate())

    def compose(self, other: "Motion") -> "Motion":
        """self after other (apply `other` first)."""
        a1, b1 = self.a, self.b
        if self.flip:
            a2, b2 = other.a.conjugate(), other.b.conjugate()
        else:
            a2, b2 = other.a, other.b
        a = a1 * a2 + b1 * b2.conjugate()
        b = a1 * b2 + b1 * a2.conjugate()
        norm = math.sqrt(abs(abs(a) ** 2 - abs(b) ** 2))
        return Motion(a / norm, b / norm, self.flip ^ other.flip)

    def inverse(self) -> "Motion":
        a, b = self.a, self.b
        if not self.flip:
            return Motion(a.conjugate(), -b, False)
        return Motion(a, -b.conjugate(), True)


def transport(a: complex) -> Motion:
    """The motion sending a to the origin: z -> (z - a)/(1 - conj(a) z)."""
    norm = math.sqrt(1 - abs(a) ** 2)
    return Motion((1 / norm) + 0j, -a / norm, False)


def rotation(theta: float) -> Motion:
    return Motion(cmath.exp(0.5j * theta), 0j, False)


def hdist(z: complex, w: complex) -> float:
    """Hyperbolic distance in the disc."""
    return 2.0 * math.atanh(abs((z - w) / (1 - w.conjugate() * z)))


def hmid(z: complex, w: complex) -> complex:
    """Geodesic midpoint of z and w."""
    t = transport(z)
    u = t(w)
    r = abs(u)
    if r < 1e-300:
        return z
    m = u / r * math.tanh(0.5 * math.atanh(r))
    return t.inverse()(m)


def geodesic_circle(z1: complex, z2: complex):
    """Center and radius of the circle orthogonal to the unit circle through
    z1, z2, or None if the geodesic is a diameter."""
    x1, y1 = z1.real, z1.imag
    x2, y2 = z2.real, z2.imag
    det = 2.0 * (x1 * y2 - x2 * y1)
    if abs(det) < 1e-13 * max(1.0, abs(z1), abs(z2)):
        return None
    r1 = abs(z1) ** 2 + 1.0
    r2 = abs(z2) ** 2 + 1.0
    cx = (r1 * y2 - r2 * y1) / det
    cy = (r2 * x1 - r1 * x2) / det
    c = complex(cx, cy)
    return c, math.sqrt(abs(c) ** 2 - 1.0)


def reflection(z1: complex, z2: complex) -> Motion:
    """Reflection in the geodesic through z1 and z2."""
    circ = geodesic_circle(z1, z2)
    if circ is None:
        theta = cmath.phase(z2 - z1)
        return Motion(cmath.exp(1j * theta), 0j, True)
    c, r = circ
    # Inversion z -> (c conj(z) + r^2 - |c|^2) / (conj(z) - conj(c)), scaled
    # to determinant 1 using |c|^2 - r^2 = 1.
    s = 1j * r
    return Motion(c / s, -1.0 / s, True)


# ---------------------------------------------------------------------------
# Placed cells
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlacedPolygon:
    """A p-gon in the disc; vertices counter-clockwise, side j = (v[j-1], v[j % p])."""

    vertices: tuple
    center: complex
    generation: int = 0
    coord: TileCoord | None = None

    @property
    def p(self) -> int:
        return len(self.vertices)

    def side(self, j: int) -> tuple[complex, complex]:
        return self.vertices[j - 1], self.vertices[j % self.p]


@dataclass(frozen=True)
class PlacedTriangle:
    """A triangle with vertices listed by their subdivision numbers 0, 1, 2."""

    vertices: tuple
    coord: object = None  # TriCoord back-reference

    def side(self, k: int) -> tuple[complex, complex]:
        # side k is opposite vertex k
        return self.vertices[(k + 1) % 3], self.vertices[(k + 2) % 3]


def central_polygon(p: int, q: int) -> PlacedPolygon:
    """Regular p-gon centered at the origin, side 1 facing the positive x-axis.

    The interior angle must be 2 pi / q, which pins the circumradius R at
    cosh R = cot(pi/p) cot(pi/q); vertices sit at Euclidean radius tanh(R/2).
    (The apothem rho satisfies the companion relation
    cosh rho = cos(pi/q) / sin(pi/p).)
    """
    check_pq(p, q)
    ch = 1.0 / (math.tan(math.pi / p) * math.tan(math.pi / q))
    rv = math.tanh(0.5 * math.acosh(ch))
    verts = tuple(rv * cmath.exp(1j * (2.0 * math.pi * k / p - math.pi / p))
                  for k in range(p))
    return PlacedPolygon(vertices=verts, center=0j, generation=0, coord=CENTRAL)


def reflect_polygon(poly: PlacedPolygon, j: int, generation: int | None = None) -> PlacedPolygon:
    """Image of `poly` in its side j, renumbered so its side 1 is the shared side.

    Reflection reverses orientation, so the image vertex list is reversed to
    stay counter-clockwise; the shared side is traversed in the opposite
    sense by the new polygon.
    """
    a, b = poly.side(j)
    mot = reflection(a, b)
    imgs = [mot(v) for v in poly.vertices]
    center = mot(poly.center)
    p = poly.p
    rev = imgs[::-1]
    # poly.vertices[j-1] = a maps to itself; in the reversed list it sits at
    # p-j.  The new side 1 must run b -> a, so vertex 0 is b at index p-j-1
    # (mod p) of the reversed list... locate b's image index directly:
    ib = (j % p)          # index of b in poly.vertices (and in imgs)
    start = (p - 1 - ib) % p  # index of (image of) b in the reversed list
    verts = tuple(rev[(start + k) % p] for k in range(p))
    gen = poly.generation + 1 if generation is None else generation
    return PlacedPolygon(vertices=verts, center=center, generation=gen, coord=None)


# ---------------------------------------------------------------------------
# Point registry (tolerant dedup / matching)
# ---------------------------------------------------------------------------

class PointIndex:
    """Snap nearby points (within `tol`) to a shared integer id."""

    def __init__(self, tol: float):
        self.tol = tol
        self._cells: dict[tuple[int, int], list[tuple[complex, int]]] = {}
        self._points: list[complex] = []

    def key(self, z: complex) -> int:
        cx, cy = round(z.real / self.tol), round(z.imag / self.tol)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for w, idx in self._cells.get((cx + dx, cy + dy), ()):
                    if abs(w - z) <= self.tol:
                        return idx
        idx = len(self._points)
        self._points.append(z)
        self._cells.setdefault((cx, cy), []).append((z, idx))
        return idx

    def find(self, z: complex) -> int | None:
        cx, cy = round(z.real / self.tol), round(z.imag / self.tol)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for w, idx in self._cells.get((cx + dx, cy + dy), ()):
                    if abs(w - z) <= self.tol:
                        return idx
        return None

    def point(self, idx: int) -> complex:
        return self._points[idx]

    def __len__(self):
        return len(self._points)


# ---------------------------------------------------------------------------
# Reflection BFS
# ---------------------------------------------------------------------------

@dataclass
class OracleTiling:
    """Tiles generated by reflections, with shared-edge adjacency."""

    p: int
    q: int
    depth: int
    polygons: list = field(default_factory=list)
    adjacency: set = field(default_factory=set)  # frozensets of polygon indices

    def neighbors_of(self, i: int) -> set[int]:
        out = set()
        for pair in self.adjacency:
            if i in pair:
                out |= pair - {i}
        return out


def generate(p: int, q: int, depth: int) -> OracleTiling:
    """Reflection BFS to `depth` generations; adjacency from shared edges."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    start = central_polygon(p, q)
    centers = PointIndex(CENTER_TOL)
    polys = [start]
    centers.key(start.center)
    frontier = [0]
    for gen in range(1, depth + 1):
        nxt = []
        for i in frontier:
            poly = polys[i]
            for j in range(1, p + 1):
                img = reflect_polygon(poly, j, generation=gen)
                before = len(centers)
                idx = centers.key(img.center)
                if idx == before:  # unseen center
                    polys.append(img)
                    nxt.append(idx)
        frontier = nxt
    tiling = OracleTiling(p=p, q=q, depth=depth, polygons=polys)
    tiling.adjacency = edge_adjacency(polys)
    return tiling


def edge_adjacency(cells) -> set:
    """Pairs of cell indices sharing a full edge (endpoint match at EDGE_TOL)."""
    pts = PointIndex(EDGE_TOL)
    owners: dict[tuple[int, int], list[int]] = {}
    for i, cell in enumerate(cells):
        vs = cell.vertices
        n = len(vs)
        ids = [pts.key(v) for v in vs]
        for k in range(n):
            a, b = ids[k], ids[(k + 1) % n]
            owners.setdefault((min(a, b), max(a, b)), []).append(i)
    adj = set()
    for edge, cs in owners.items():
        for x in range(len(cs)):
            for y in range(x + 1, len(cs)):
                adj.add(frozenset((cs[x], cs[y])))
    return adj


# ---------------------------------------------------------------------------
# Coordinate-directed placement
# ---------------------------------------------------------------------------

def father_chain(tiling: Tiling, c: TileCoord) -> list[TileCoord]:
    """Central, root, ..., c."""
    chain = [c]
    while not chain[-1].is_central:
        cur = chain[-1]
        f = fibtree.father(cur.nu)
        chain.append(CENTRAL if f == 0 else TileCoord(cur.sector, f))
    return chain[::-1]


def place(tiling: Tiling, c: TileCoord) -> PlacedPolygon:
    """Walk side reflections along the father chain of c."""
    tiling.validate(c)
    poly = central_polygon(tiling.p, tiling.q)
    chain = father_chain(tiling, c)
    for child in chain[1:]:
        side = tiling.side_in_neighbor(child, 1)
        poly = reflect_polygon(poly, side)
    gen = 0 if c.is_central else 1 + fibtree.level_of(c.nu)
    return replace(poly, coord=c, generation=gen)


def tri_vertices_level1(poly: PlacedPolygon, tau: int) -> tuple:
    """Vertices (numbered 0,1,2) of the 1-triangle on side tau of a polygon.

    0 and 1 are the side's ends in counter-clockwise order, 2 the center.
    """
    a, b = poly.side(tau)
    return (a, b, poly.center)


def tri_children(verts: tuple) -> list[tuple]:
    """The four subdivision triangles, each with vertices listed by number."""
    t0, t1, t2 = verts
    m0 = hmid(t1, t2)
    m1 = hmid(t0, t2)
    m2 = hmid(t0, t1)
    return [
        (t0, m1, m2),  # corner child 0
        (m0, t1, m2),  # corner child 1
        (m0, m1, t2),  # corner child 2
        (m0, m1, m2),  # central child 3
    ]


def place_tri(tiling: Tiling, t) -> PlacedTriangle:
    """Geometric realization of a TriCoord by recursive midpoint subdivision."""
    poly = place(tiling, t.tile)
    verts = tri_vertices_level1(poly, t.digits[0])
    for d in t.digits[1:]:
        verts = tri_children(verts)[d]
    return PlacedTriangle(vertices=verts, coord=t)


def subdivide_all(polys, n: int, coords=None):
    """All depth-n triangles over the given polygons.

    If `coords` (parallel list of TileCoords) is given, triangles carry
    TriCoord back-references.
    """
    from .trigrid import TriCoord
    tris = []
    for i, poly in enumerate(polys):
        tile = coords[i] if coords is not None else None
        for tau in range(1, poly.p + 1):
            stack = [(tri_vertices_level1(poly, tau), (tau,))]
            for _ in range(n - 1):
                stack = [(child, digs + (d,))
                         for verts, digs in stack
                         for d, child in enumerate(tri_children(verts))]
            for verts, digs in stack:
                coord = TriCoord(tile, digs) if tile is not None else None
                tris.append(PlacedTriangle(vertices=verts, coord=coord))
    return tris


# ---------------------------------------------------------------------------
# Oracle comparisons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    kind: str
    where: str
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


def coordinate_ball(tiling: Tiling, max_level: int) -> list[TileCoord]:
    """Central plus every sector tile of tree level <= max_level."""
    if max_level < 0:
        return [CENTRAL]
    last = fibtree.level_bounds(max_level)[1]
    return [CENTRAL] + [TileCoord(s, n)
                        for s in range(1, tiling.max + 1)
                        for n in range(1, last + 1)]


def match_by_center(placed, oracle: OracleTiling) -> dict[int, int] | None:
    """placed index -> oracle polygon index, matching centers at CENTER_TOL."""
    idx = PointIndex(CENTER_TOL)
    lookup = {}
    for j, poly in enumerate(oracle.polygons):
        lookup[idx.key(poly.center)] = j
    out = {}
    for i, poly in enumerate(placed):
        k = idx.find(poly.center)
        if k is None or k not in lookup:
            return None
        out[i] = lookup[k]
    return out


def tile_adjacency_report(tiling: Tiling, max_level: int) -> list[Mismatch]:
    """Compare table adjacency against geometric adjacency on a ball.

    The ball holds every tile of tree level <= max_level; the oracle tiling is
    generated one generation further so that boundary comparisons stay fair.
    """
    mismatches: list[Mismatch] = []
    coords = coordinate_ball(tiling, max_level)
    oracle = generate(tiling.p, tiling.q, max_level + 1)
    placed = [place(tiling, c) for c in coords]
    matching = match_by_center(placed, oracle)
    if matching is None:
        return [Mismatch("placement", "ball", "a placed tile has no oracle twin")]
    if len(set(matching.values())) != len(matching):
        return [Mismatch("placement", "ball", "two coordinates map to one oracle tile")]
    by_oracle = {j: coords[i] for i, j in matching.items()}
    in_ball = {c: i for i, c in enumerate(coords)}
    # computed -> geometric
    for i, c in enumerate(coords):
        for tau in range(1, tiling.p + 1):
            n = tiling.neighbor(c, tau)
            if n not in in_ball:
                continue
            pair = frozenset((matching[i], matching[in_ball[n]]))
            if pair not in oracle.adjacency:
                mismatches.append(Mismatch(
                    "computed-not-geometric", f"{c} side {tau}",
                    f"table says {n}, tiles do not share an edge"))
    # geometric -> computed
    neigh = {c: set(tiling.all_neighbors(c)) for c in coords}
    for pair in oracle.adjacency:
        a, b = tuple(pair)
        if a in by_oracle and b in by_oracle:
            ca, cb = by_oracle[a], by_oracle[b]
            if cb not in neigh[ca] or ca not in neigh[cb]:
                mismatches.append(Mismatch(
                    "geometric-not-computed", f"{ca} | {cb}",
                    "tiles share an edge the tables miss"))
    return mismatches


def trigrid_adjacency_report(tiling: Tiling, max_level: int, subdiv: int) -> list[Mismatch]:
    """Compare tri_neighbors against shared-edge adjacency of the subdivided mesh."""
    from .trigrid import Trigrid
    mismatches: list[Mismatch] = []
    coords = coordinate_ball(tiling, max_level)
    placed = [place(tiling, c) for c in coords]
    tris = subdivide_all(placed, subdiv, coords=coords)
    index = {t.coord: i for i, t in enumerate(tris)}
    adj = edge_adjacency(tris)
    tg = Trigrid(tiling)
    computed = {}
    for t in tris:
        computed[t.coord] = tg.tri_neighbors(t.coord)
    for t in tris:
        i = index[t.coord]
        for n in computed[t.coord]:
            if n not in index:
                continue
            if frozenset((i, index[n])) not in adj:
                mismatches.append(Mismatch(
                    "computed-not-geometric", str(t.coord),
                    f"claims {n} adjacent, mesh disagrees"))
    for pair in adj:
        i, j = tuple(pair)
        ti, tj = tris[i].coord, tris[j].coord
        if tj not in computed[ti] or ti not in computed[tj]:
            mismatches.append(Mismatch(
                "geometric-not-computed", f"{ti} | {tj}",
                "mesh edge the neighbour algebra misses"))
    return mismatches


def adjacency_report(p: int, q: int, depth: int, subdiv: int = 0) -> list[Mismatch]:
    """Oracle comparator: empty iff coordinates and geometry agree on the region.

    `depth` counts reflection generations, as in generate(): the compared ball
    holds every tile of tree level <= depth - 1.  `subdiv` > 0 switches to the
    triangle mesh of that subdivision depth over the same ball.
    """
    tiling = Tiling(p, q)
    if subdiv <= 0:
        return tile_adjacency_report(tiling, depth - 1)
    return trigrid_adjacency_report(tiling, depth - 1, subdiv)


# ---------------------------------------------------------------------------
# Vertex census
# ---------------------------------------------------------------------------

def interior_vertex_degrees(cells) -> dict[int, int]:
    """vertex id -> number of incident cells, for interior vertices only.

    A vertex is interior when every edge at it is shared by exactly two of
    the given cells (its fan is closed).
    """
    pts = PointIndex(EDGE_TOL)
    edge_count: dict[tuple[int, int], int] = {}
    at_vertex: dict[int, set[int]] = {}
    edges_at: dict[int, set[tuple[int, int]]] = {}
    for i, cell in enumerate(cells):
        ids = [pts.key(v) for v in cell.vertices]
        n = len(ids)
        for k in range(n):
            a, b = ids[k], ids[(k + 1) % n]
            e = (min(a, b), max(a, b))
            edge_count[e] = edge_count.get(e, 0) + 1
            for v in (a, b):
                edges_at.setdefault(v, set()).add(e)
        for v in ids:
            at_vertex.setdefault(v, set()).add(i)
    out = {}
    for v, cs in at_vertex.items():
        if all(edge_count[e] == 2 for e in edges_at[v]):
            out[v] = len(cs)
    return out


# ---------------------------------------------------------------------------
# Pentagrid derivation (wedge labelling)
# ---------------------------------------------------------------------------
#
# For q = 4 the angular sectors are exact: the sector of side tau is the
# quadrant at the summit vertex delimited by the geodesics supporting sides
# tau and tau+1 of the central tile (those lines are mirrors of the tiling).
# A tile belongs to sector tau iff its center lies beyond the side-tau mirror
# but not beyond the side-(tau+1) mirror.  This labels every generated tile
# with (sector, nu) without consulting the frozen neighbour tables, which the
# regression test then re-derives.

def pentagrid_oracle_labels(depth: int):
    """(oracle tiling, {polygon index -> TileCoord}) for {5,4}, by wedges."""
    import cmath
    oracle = generate(5, 4, depth)
    central = oracle.polygons[0]
    p = 5
    mirrors = []
    for k in range(1, p + 1):
        a, b = central.side(k)
        c, r = geodesic_circle(a, b)
        mirrors.append((c, r))

    def beyond(z: complex, k: int) -> bool:  # k in 0..p-1 for side k+1
        c, r = mirrors[k]
        return abs(z - c) < r

    labels = {0: CENTRAL}
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, poly in enumerate(oracle.polygons[1:], 1):
        z = poly.center
        sector = None
        for k in range(p):
            if beyond(z, k) and not beyond(z, (k + 1) % p):
                sector = k + 1
                break
        if sector is None:
            raise AssertionError(f"wedge test failed for tile at {z}")
        level = poly.generation - 1
        buckets.setdefault((sector, level), []).append(i)
    for (sector, level), idxs in buckets.items():
        expected = fibtree.level_bounds(level)
        if len(idxs) != expected[1] - expected[0] + 1:
            raise AssertionError(
                f"sector {sector} level {level}: {len(idxs)} tiles, "
                f"expected {expected[1] - expected[0] + 1}")
        ref = cmath.exp(-2j * math.pi * (sector - 1) / p)
        idxs.sort(key=lambda i: cmath.phase(oracle.polygons[i].center * ref))
        first = expected[0]
        for rank, i in enumerate(idxs):
            labels[i] = TileCoord(sector, first + rank)
    return oracle, labels


def pentagrid_observed_neighbors(depth: int = 5):
    """{(tile, side) -> (neighbour tile, side in neighbour)} read off the disc.

    Covers every labelled tile of tree level <= depth - 2, whose neighbours
    all lie inside the generated region.  Side 1 is identified as the edge
    shared with the (tree-)father; the rest follow counter-clockwise.
    """
    oracle, labels = pentagrid_oracle_labels(depth)
    polys = oracle.polygons
    coords = {c: i for i, c in labels.items()}
    pts = PointIndex(EDGE_TOL)
    edge_owner: dict[tuple[int, int], list[int]] = {}
    edge_ids = []  # per polygon: list of p edge keys in vertex order
    for i, poly in enumerate(polys):
        ids = [pts.key(v) for v in poly.vertices]
        keys = []
        for k in range(poly.p):
            a, b = ids[k], ids[(k + 1) % poly.p]
            key = (min(a, b), max(a, b))
            keys.append(key)
            edge_owner.setdefault(key, []).append(i)
        edge_ids.append(keys)

    def sides_ccw(i: int, father_idx: int):
        """side number (1-based) -> edge key, anchored at the father edge."""
        keys = edge_ids[i]
        shared = set(keys) & set(edge_ids[father_idx])
        if len(shared) != 1:
            raise AssertionError("father edge not unique")
        start = keys.index(next(iter(shared)))
        return {1 + k: keys[(start + k) % len(keys)] for k in range(len(keys))}

    observed = {}
    side_maps = {}
    for i, c in labels.items():
        if c.is_central:
            side_maps[i] = {1 + k: edge_ids[i][k] for k in range(5)}
            continue
        f = fibtree.father(c.nu)
        father_coord = CENTRAL if f == 0 else TileCoord(c.sector, f)
        side_maps[i] = sides_ccw(i, coords[father_coord])
    for i, c in labels.items():
        from_level = 0 if c.is_central else fibtree.level_of(c.nu) + 1
        if from_level > depth - 1:
            continue
        for tau, key in side_maps[i].items():
            owners = [j for j in edge_owner[key] if j != i]
            if len(owners) != 1:
                continue
            j = owners[0]
            back = next(t for t, k2 in side_maps[j].items() if k2 == key)
            observed[(c, tau)] = (labels[j], back)
    return observed
