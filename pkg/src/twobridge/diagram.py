"""Planar diagrams of lattice polygons and two independent determinants.

``project`` maps a lattice polygon along a rational near-vertical
direction onto a plane, using exact integer/rational arithmetic for
every incidence test, so a non-generic direction is detected rather
than mis-resolved.  From the resulting 4-valent planar diagram the
link determinant is computed two unrelated ways:

* ``goeritz_determinant`` builds the Goeritz matrix of a checkerboard
  coloring and takes an integer determinant (fraction-free elimination);
* ``kauffman_determinant`` brute-forces the 2^n bracket state sum at
  the specialization where the loop weight vanishes, summing
  Gaussian-integer units over single-loop states.

Agreement of the two on every small diagram is part of the test gate;
``verify_knot_type`` compares the Goeritz value against the
continued-fraction numerator of the intended notation.
"""

from __future__ import annotations

import functools
import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .conway import ConwayNotation, continued_fraction
from .errors import (
    ConstructionError,
    DegenerateDirectionError,
    DisconnectedDiagramError,
    TooManyCrossingsError,
)
from .lattice import LatticePolygon

__all__ = [
    "Crossing",
    "KnotDiagram",
    "KnotTypeReport",
    "project",
    "goeritz_determinant",
    "kauffman_determinant",
    "verify_knot_type",
    "direction_schedule",
    "gauss_code",
]


@dataclass(frozen=True)
class Crossing:
    """One transverse double point of the projected polygon."""

    point: tuple[Fraction, Fraction]
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    over_dir: tuple[int, int]
    under_dir: tuple[int, int]
    sign: int


@dataclass(frozen=True)
class KnotDiagram:
    """4-valent planar diagram with faces and a checkerboard coloring.

    ``ends`` lists, per crossing, the four incident arc-ends sorted
    counterclockwise as tuples ``(direction, arc, endflag, is_over)``;
    ``endflag`` 0 marks an arc leaving the crossing, 1 an arc arriving.
    ``corner_face[(crossing, i)]`` is the face in the sector between
    sorted ends i and i+1.
    """

    crossings: tuple[Crossing, ...]
    n_arcs: int
    arc_component: tuple[int, ...]
    ends: tuple
    faces: tuple
    face_colors: tuple[int, ...]
    corner_face: dict = field(repr=False)
    events_by_component: tuple
    free_loops: int
    n_components: int
    direction: tuple[int, int, int]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def is_connected(self) -> bool:
        if self.n_crossings == 0:
            return self.n_components == 1
        if self.free_loops:
            return False
        parent = list(range(self.n_components))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x in self.crossings:
            a = find(self.arc_component[x.over_in])
            b = find(self.arc_component[x.under_in])
            if a != b:
                parent[a] = b
        return len({find(i) for i in range(self.n_components)}) == 1


# ---------------------------------------------------------------------------
# projection


def _normalize_direction(direction) -> tuple[int, int, int]:
    dx, dy, dz = (Fraction(v) for v in direction)
    if dz <= 0:
        raise DegenerateDirectionError("projection direction needs dz > 0")
    a, b = dx / dz, dy / dz
    scale = math.lcm(a.denominator, b.denominator)
    p, q = int(a * scale), int(b * scale)
    if (p, q) == (0, 0):
        raise DegenerateDirectionError("exact z-projection collapses z-edges")
    return p, q, scale


def _on_segment(p, a, b) -> bool:
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    if cross != 0:
        return False
    dot = (p[0] - a[0]) * (p[0] - b[0]) + (p[1] - a[1]) * (p[1] - b[1])
    return dot <= 0


def _collinear_overlap(a1, b1, a2, b2) -> bool:
    axis = 0 if a1[0] != b1[0] else 1
    lo1, hi1 = sorted((a1[axis], b1[axis]))
    lo2, hi2 = sorted((a2[axis], b2[axis]))
    return not (hi1 < lo2 or hi2 < lo1)


def _ccw_cmp(a, b) -> int:
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cr = a[0] * b[1] - a[1] * b[0]
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def project(polygon: LatticePolygon, direction) -> KnotDiagram:
    """Project along ``direction`` (rational components, dz > 0) onto z = 0.

    Raises :class:`DegenerateDirectionError` whenever the image has a
    coincident vertex pair, a vertex on a foreign edge, an overlapping
    collinear pair, or a triple point; callers retry with the next
    perturbed direction from :func:`direction_schedule`.
    """
    p, q, scale = _normalize_direction(direction)
    comps = polygon.components

    images = [[(scale * x - p * z, scale * y - q * z) for x, y, z in comp]
              for comp in comps]

    seen = set()
    for imgs in images:
        for img in imgs:
            if img in seen:
                raise DegenerateDirectionError(f"coincident vertex images at {img}")
            seen.add(img)

    edges = []  # (comp, index, img_a, img_b, z_a, z_b)
    for ci, comp in enumerate(comps):
        n = len(comp)
        for i in range(n):
            edges.append((ci, i, images[ci][i], images[ci][(i + 1) % n],
                          comp[i][2], comp[(i + 1) % n][2]))

    for ci, ei, a, b, _, _ in edges:
        n = len(comps[ci])
        for cj, imgs in enumerate(images):
            for vi, img in enumerate(imgs):
                if cj == ci and vi in (ei, (ei + 1) % n):
                    continue
                if _on_segment(img, a, b):
                    raise DegenerateDirectionError(
                        f"vertex image {img} lies on an edge image")

    crossings_raw = []
    point_owner = {}
    m = len(edges)
    for i in range(m):
        ci, ei, a1, b1, za1, zb1 = edges[i]
        d1 = (b1[0] - a1[0], b1[1] - a1[1])
        minx1, maxx1 = min(a1[0], b1[0]), max(a1[0], b1[0])
        miny1, maxy1 = min(a1[1], b1[1]), max(a1[1], b1[1])
        for j in range(i + 1, m):
            cj, ej, a2, b2, za2, zb2 = edges[j]
            if ci == cj:
                n = len(comps[ci])
                if ej == (ei + 1) % n or ei == (ej + 1) % n:
                    continue
            if min(a2[0], b2[0]) > maxx1 or max(a2[0], b2[0]) < minx1:
                continue
            if min(a2[1], b2[1]) > maxy1 or max(a2[1], b2[1]) < miny1:
                continue
            d2 = (b2[0] - a2[0], b2[1] - a2[1])
            denom = d1[0] * d2[1] - d1[1] * d2[0]
            o1 = d1[0] * (a2[1] - a1[1]) - d1[1] * (a2[0] - a1[0])
            o2 = d1[0] * (b2[1] - a1[1]) - d1[1] * (b2[0] - a1[0])
            if denom == 0:
                if o1 == 0 and _collinear_overlap(a1, b1, a2, b2):
                    raise DegenerateDirectionError("collinear overlapping edge images")
                continue
            o3 = d2[0] * (a1[1] - a2[1]) - d2[1] * (a1[0] - a2[0])
            o4 = d2[0] * (b1[1] - a2[1]) - d2[1] * (b1[0] - a2[0])
            if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
                # touches at endpoints were already rejected as
                # vertex-on-edge; remaining zeros are extension touches
                continue
            if (o1 > 0) == (o2 > 0) or (o3 > 0) == (o4 > 0):
                continue
            s = Fraction(o3, o3 - o4)  # parameter along edge i
            t = Fraction(o1, o1 - o2)  # parameter along edge j
            pt = (a1[0] + s * d1[0], a1[1] + s * d1[1])
            if pt in point_owner:
                raise DegenerateDirectionError(f"triple point at {pt}")
            point_owner[pt] = (i, j)
            depth1 = za1 + s * (zb1 - za1)
            depth2 = za2 + t * (zb2 - za2)
            if depth1 == depth2:
                raise ConstructionError("distinct strands share a projection fiber")
            crossings_raw.append((i, s, j, t, pt, depth1 > depth2))

    events_per_comp: list[list] = [[] for _ in comps]
    for cid, (i, s, j, t, pt, first_over) in enumerate(crossings_raw):
        events_per_comp[edges[i][0]].append((edges[i][1], s, cid, first_over))
        events_per_comp[edges[j][0]].append((edges[j][1], t, cid, not first_over))

    arc_component: list[int] = []
    events_by_component = []
    passage = {}
    free_loops = 0
    arc_counter = 0
    for ci, events in enumerate(events_per_comp):
        if not events:
            free_loops += 1
            events_by_component.append(())
            continue
        events.sort(key=lambda e: (e[0], e[1]))
        k = len(events)
        base = arc_counter
        n = len(comps[ci])
        for idx, (ei, s, cid, is_over) in enumerate(events):
            a = images[ci][ei]
            b = images[ci][(ei + 1) % n]
            strand_dir = (b[0] - a[0], b[1] - a[1])
            passage[(cid, is_over)] = (base + (idx - 1) % k, base + idx, strand_dir)
        arc_counter += k
        arc_component.extend([ci] * k)
        events_by_component.append(tuple((cid, is_over) for _, _, cid, is_over in events))

    crossings = []
    for cid, (_, _, _, _, pt, _) in enumerate(crossings_raw):
        oin, oout, odir = passage[(cid, True)]
        uin, uout, udir = passage[(cid, False)]
        sgn = 1 if odir[0] * udir[1] - odir[1] * udir[0] > 0 else -1
        crossings.append(Crossing(pt, oin, oout, uin, uout, odir, udir, sgn))

    ends, faces, colors, corner_face = _build_faces(crossings)

    return KnotDiagram(
        crossings=tuple(crossings),
        n_arcs=arc_counter,
        arc_component=tuple(arc_component),
        ends=ends,
        faces=faces,
        face_colors=colors,
        corner_face=corner_face,
        events_by_component=tuple(events_by_component),
        free_loops=free_loops,
        n_components=len(comps),
        direction=(p, q, scale),
    )


def _build_faces(crossings):
    """Rotation system, face tracing and checkerboard coloring."""
    ends = []
    end_pos = {}
    for v, x in enumerate(crossings):
        raw = [
            ((-x.over_dir[0], -x.over_dir[1]), x.over_in, 1, True),
            (x.over_dir, x.over_out, 0, True),
            ((-x.under_dir[0], -x.under_dir[1]), x.under_in, 1, False),
            (x.under_dir, x.under_out, 0, False),
        ]
        raw.sort(key=functools.cmp_to_key(lambda a, b: _ccw_cmp(a[0], b[0])))
        ends.append(tuple(raw))
        for i, (_, arc, endflag, _) in enumerate(raw):
            end_pos[(arc, endflag)] = (v, i)

    corner_face = {}
    faces = []
    halfarc_face = {}
    for v0 in range(len(crossings)):
        for i0 in range(4):
            if (v0, i0) in corner_face:
                continue
            fid = len(faces)
            corners = []
            v, i = v0, i0
            while (v, i) not in corner_face:
                corner_face[(v, i)] = fid
                corners.append((v, i))
                _, arc, endflag, _ = ends[v][(i + 1) % 4]
                halfarc_face[(arc, endflag)] = fid
                v, i = end_pos[(arc, 1 - endflag)]
            faces.append(tuple(corners))

    adjacency = [[] for _ in faces]
    sides: dict[int, list[int]] = {}
    for (arc, _), fid in halfarc_face.items():
        sides.setdefault(arc, []).append(fid)
    for pair in sides.values():
        if len(pair) != 2:
            raise ConstructionError("arc without exactly two face sides")
        adjacency[pair[0]].append(pair[1])
        adjacency[pair[1]].append(pair[0])

    colors = [-1] * len(faces)
    for start in range(len(faces)):
        if colors[start] != -1:
            continue
        colors[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adjacency[f]:
                if colors[g] == -1:
                    colors[g] = 1 - colors[f]
                    stack.append(g)
                elif colors[g] == colors[f]:
                    raise ConstructionError("checkerboard coloring conflict")

    return ends, tuple(faces), tuple(colors), corner_face


# ---------------------------------------------------------------------------
# determinants


def _bareiss_abs_det(matrix: list[list[int]]) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return abs(m[n - 1][n - 1])


def goeritz_determinant(diagram: KnotDiagram, shaded_color: int = 0,
                        removed_index: int = 0) -> int:
    """|det| of the Goeritz matrix over one checkerboard color class.

    ``shaded_color`` picks the color class and ``removed_index`` the
    deleted row/column; the result is independent of both choices.  A
    crossing has type +1 exactly when the corners swept counterclockwise
    from each over-strand end are the shaded ones.
    """
    if not diagram.is_connected():
        raise DisconnectedDiagramError("diagram has a split component")
    n = diagram.n_crossings
    if n == 0:
        return 1
    if len(diagram.faces) != n + 2:
        raise ConstructionError("face count violates the Euler relation")
    shaded = [f for f in range(len(diagram.faces))
              if diagram.face_colors[f] == shaded_color]
    index = {f: i for i, f in enumerate(shaded)}
    g = [[0] * len(shaded) for _ in shaded]
    for v in range(n):
        corner_faces = [diagram.corner_face[(v, i)] for i in range(4)]
        corner_colors = [diagram.face_colors[f] for f in corner_faces]
        if corner_colors[0] == corner_colors[1] or corner_colors[0] != corner_colors[2]:
            raise ConstructionError("corners fail to alternate colors")
        base = 0 if corner_colors[0] == shaded_color else 1
        fa, fb = corner_faces[base], corner_faces[base + 2]
        eta = 1 if diagram.ends[v][base][3] else -1
        if fa != fb:
            g[index[fa]][index[fb]] -= eta
            g[index[fb]][index[fa]] -= eta
    for i in range(len(shaded)):
        g[i][i] = -sum(g[i][j] for j in range(len(shaded)) if j != i)
    if not 0 <= removed_index < len(shaded):
        raise ValueError("removed_index outside the shaded face range")
    reduced = [[g[i][j] for j in range(len(shaded)) if j != removed_index]
               for i in range(len(shaded)) if i != removed_index]
    return _bareiss_abs_det(reduced)


def kauffman_determinant(diagram: KnotDiagram, cap: int = 12) -> int:
    """Determinant via the full 2^n bracket state sum.

    At the specialization where a disjoint loop contributes a factor of
    zero, only single-loop states survive, each worth a fourth root of
    unity; the modulus of the Gaussian-integer total is the determinant.
    Exponential in the crossing count, hence the ``cap``.
    """
    n = diagram.n_crossings
    if n > cap:
        raise TooManyCrossingsError(f"{n} crossings exceeds state-sum cap {cap}")
    if n == 0:
        return 1 if diagram.n_components == 1 else 0

    pairings = []
    for v in range(n):
        e = diagram.ends[v]
        k = next(i for i in range(4) if e[i][3])  # rotate so slot 0 is an over-end
        arcs = [e[(k + i) % 4][1] for i in range(4)]
        pairings.append((
            ((arcs[0], arcs[1]), (arcs[2], arcs[3])),
            ((arcs[1], arcs[2]), (arcs[3], arcs[0])),
        ))

    n_arcs = diagram.n_arcs
    unit = ((1, 0), (0, -1), (-1, 0), (0, 1))  # i**(-b) for b mod 4
    re_total = im_total = 0
    parent = list(range(n_arcs))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for state in range(1 << n):
        for a in range(n_arcs):
            parent[a] = a
        loops = n_arcs
        b_count = 0
        for v in range(n):
            use_b = (state >> v) & 1
            b_count += use_b
            for x, y in pairings[v][use_b]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        if loops + diagram.free_loops == 1:
            dr, di = unit[b_count % 4]
            re_total += dr
            im_total += di

    square = re_total * re_total + im_total * im_total
    root = math.isqrt(square)
    if root * root != square:
        raise ConstructionError("state sum modulus is not an integer")
    return root


# ---------------------------------------------------------------------------
# verification driver


def direction_schedule(polygon: LatticePolygon, count: int = 16):
    """Deterministic perturbed near-z directions, seeded by the polygon."""
    digest = hashlib.sha256(repr(polygon.components).encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    return [(Fraction(rng.randrange(3, 256), 1024),
             Fraction(rng.randrange(3, 256), 1024), 1) for _ in range(count)]


@dataclass(frozen=True)
class KnotTypeReport:
    """Determinant comparison between a polygon and a Conway notation.

    The determinant is an incomplete invariant, so a pass is necessary
    but not sufficient evidence that the polygon realizes the notation.
    """

    passed: bool
    determinant: int
    expected: int
    attempts: int
    direction: tuple[int, int, int]
    note: str = "determinant match is a necessary, not sufficient, check"


def verify_knot_type(polygon: LatticePolygon, cn: ConwayNotation,
                     max_attempts: int = 16) -> KnotTypeReport:
    """Project along perturbed directions and compare determinants."""
    expected = continued_fraction(cn).numerator
    last_error = None
    for attempt, direction in enumerate(direction_schedule(polygon, max_attempts), 1):
        try:
            diag = project(polygon, direction)
        except DegenerateDirectionError as exc:
            last_error = exc
            continue
        det = goeritz_determinant(diag)
        return KnotTypeReport(
            passed=(det == expected),
            determinant=det,
            expected=expected,
            attempts=attempt,
            direction=diag.direction,
        )
    raise DegenerateDirectionError(
        f"no generic direction found in {max_attempts} attempts: {last_error}")


def gauss_code(diagram: KnotDiagram) -> str:
    """Signed Gauss code, one component per '|'-separated block."""
    blocks = []
    for events in diagram.events_by_component:
        parts = [f"{'O' if is_over else 'U'}{cid + 1}"
                 f"{'+' if diagram.crossings[cid].sign > 0 else '-'}"
                 for cid, is_over in events]
        blocks.append(" ".join(parts) if parts else "(free loop)")
    return " | ".join(blocks)
