"""Membership tests for the two quiver classes, with certificates.

Two classes are recognized:

* the hole-free class (line-type mutation class): connected, simple,
  hole-free, every vertex's neighborhood splits into two cliques of sizes
  r + k = z + 2 with r, k <= m+2, and every triangle's cyclic color sum lies
  in {m-1, 2m+1};
* the cycle-type class: the same local structure organized around a unique
  (l,h)-central cycle, with boundary cliques on the central arrows and
  hole-free peripheral components hanging off peripheral vertices.

`check_Qmpq` evaluates the seven defining conditions in order and, on
success, returns a full certificate: the central cycle, the boundary clique
for every central arrow, the peripheral vertices with their component sizes
and p/q tags, and the derived parameters p = l - h + x_p, q = h + x_q.
Reversing the traversal swaps the roles of the two tags and hence (p, q);
membership in a named class is therefore tested against both orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .quiver import ColoredQuiver, path_color

__all__ = [
    "CentralCycle",
    "CliqueSplit",
    "BoundaryClique",
    "PeripheralVertex",
    "ClassCertificate",
    "MembershipVerdict",
    "QmnVerdict",
    "CentralCycleAmbiguity",
    "is_m_admissible_triangle",
    "triangle_color_relation",
    "find_holes",
    "detect_central_cycle",
    "vertex_clique_split",
    "check_Qmn",
    "check_Qmpq",
    "find_almost_extremal_clique",
]


class CentralCycleAmbiguity(Exception):
    """Several central-cycle candidates; uniqueness is part of membership."""

    def __init__(self, candidates):
        self.candidates = candidates
        super().__init__(
            f"{len(candidates)} central-cycle candidates: "
            + ", ".join(str(sorted(c)) for c in candidates))


@dataclass(frozen=True)
class CentralCycle:
    """(l,h)-central cycle: traversing ``vertices`` cyclically, the arrow
    colors sum to h*m.  The reverse traversal is (l, l-h)-central."""

    vertices: tuple[int, ...]
    l: int
    h: int

    def arrow_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % self.l]) for i in range(self.l)]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class CliqueSplit:
    vertex: int
    c_r: frozenset[int]
    b_k: frozenset[int]
    z: int
    delta_l2: int


@dataclass(frozen=True)
class BoundaryClique:
    index: int                      # which central arrow, 0-based
    arrow: tuple[int, int]          # (a_i, a_{i+1}) in traversal order
    vertices: frozenset[int]


@dataclass(frozen=True)
class PeripheralVertex:
    vertex: int
    clique_index: int
    triangle: tuple[int, int, int]  # (a_i, a_{i+1}, w)
    tag: str                        # 'p' (triangle sum m-1) or 'q' (2m+1)
    component: frozenset[int]
    n_w: int


@dataclass(frozen=True)
class ClassCertificate:
    central: CentralCycle
    boundary: tuple[BoundaryClique, ...]
    peripheral: tuple[PeripheralVertex, ...]
    x_p: int
    x_q: int
    p: int
    q: int

    @property
    def parameters(self) -> tuple[int, int]:
        return (self.p, self.q)

    @property
    def reversed_parameters(self) -> tuple[int, int]:
        return (self.q, self.p)

    def matches(self, p: int, q: int) -> bool:
        return (self.p, self.q) == (p, q) or (self.q, self.p) == (p, q)

    def peripheral_of(self, w: int) -> PeripheralVertex:
        for pv in self.peripheral:
            if pv.vertex == w:
                return pv
        raise KeyError(f"{w} is not a peripheral vertex")

    @property
    def w_p(self) -> frozenset[int]:
        return frozenset(pv.vertex for pv in self.peripheral if pv.tag == "p")

    @property
    def w_q(self) -> frozenset[int]:
        return frozenset(pv.vertex for pv in self.peripheral if pv.tag == "q")


@dataclass
class MembershipVerdict:
    ok: bool
    failed_condition: str | None = None
    detail: str = ""
    certificate: ClassCertificate | None = None
    certificates: tuple[ClassCertificate, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def matches(self, p: int, q: int) -> bool:
        return self.ok and any(c.matches(p, q) for c in self.certificates)


@dataclass
class QmnVerdict:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


# -- small structural helpers -------------------------------------------------


def _adjacent(q: ColoredQuiver, u: int, v: int) -> bool:
    return v in q.adjacency()[u]


def _is_clique(q: ColoredQuiver, verts) -> bool:
    vs = list(verts)
    return all(_adjacent(q, a, b) for a, b in combinations(vs, 2))


def _connected(q: ColoredQuiver) -> bool:
    if q.n == 1:
        return True
    adj = q.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == q.n


def _is_simple(q: ColoredQuiver) -> bool:
    return all(cnt == 1 for cnt in q.arrows.values())


def triangles(q: ColoredQuiver) -> list[tuple[int, int, int]]:
    """All 3-cliques of the underlying graph, as sorted vertex triples."""
    out = []
    adj = q.adjacency()
    for x, y, z in combinations(range(q.n), 3):
        if y in adj[x] and z in adj[x] and z in adj[y]:
            out.append((x, y, z))
    return out


def triangle_sum(q: ColoredQuiver, x: int, y: int, z: int) -> int:
    """Cyclic color sum of the triangle traversed as (x y z)."""
    return q.color(x, y) + q.color(y, z) + q.color(z, x)


def is_m_admissible_triangle(q: ColoredQuiver, x: int, y: int, z: int) -> bool:
    """True iff the cyclic color sum lies in {m-1, 2m+1}.  The reverse
    orientation yields the other member of the pair (the sums add to 3m),
    so the verdict does not depend on the orientation chosen."""
    for a, b in ((x, y), (y, z), (z, x)):
        if not _adjacent(q, a, b):
            raise ValueError(f"{x},{y},{z} is not a triangle: {a},{b} not adjacent")
    return triangle_sum(q, x, y, z) in (q.m - 1, 2 * q.m + 1)


def triangle_color_relation(q: ColoredQuiver, v: int, v1: int, v2: int) -> str:
    """Which of the two admissibility branches holds at the triangle.

    Returns 'first' when color(v,v1) < color(v,v2) and
    color(v1,v2) == color(v,v2) - color(v,v1) - 1; 'second' when
    color(v,v2) < color(v,v1) and color(v1,v2) == color(v,v2) - color(v,v1)
    + m + 1; and 'neither' otherwise (admissibility violated).
    """
    for a, b in ((v, v1), (v, v2), (v1, v2)):
        if not _adjacent(q, a, b):
            raise ValueError(f"{v},{v1},{v2} is not a triangle")
    c1 = q.color(v, v1)
    c2 = q.color(v, v2)
    c12 = q.color(v1, v2)
    if c1 < c2 and c12 == c2 - c1 - 1:
        return "first"
    if c2 < c1 and c12 == c2 - c1 + q.m + 1:
        return "second"
    return "neither"


def find_holes(q: ColoredQuiver) -> list[tuple[int, ...]]:
    """Induced (chordless) cycles of length >= 4 in the underlying graph.

    A vertex subset is a hole iff its induced graph is connected and
    2-regular.  Each hole is reported once, as a traversal starting at its
    least vertex and moving toward that vertex's smaller cycle neighbor.
    """
    adj = q.adjacency()
    holes = []
    for size in range(4, q.n + 1):
        for subset in combinations(range(q.n), size):
            inset = set(subset)
            degs = {v: len(adj[v] & inset) for v in subset}
            if any(d != 2 for d in degs.values()):
                continue
            # 2-regular; connected iff a single cycle covers all of it
            start = subset[0]
            nxt = min(adj[start] & inset)
            cycle = [start, nxt]
            while True:
                options = adj[cycle[-1]] & inset - {cycle[-2]}
                step = options.pop()
                if step == start:
                    break
                cycle.append(step)
            if len(cycle) == size:
                holes.append(tuple(cycle))
    return holes


def _canonical_cycle(q: ColoredQuiver, cycle_vertices: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to the least vertex and orient toward its smaller neighbor."""
    vs = list(cycle_vertices)
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


# -- central cycles ------------------------------------------------------------


def _central_candidates(q: ColoredQuiver) -> list[CentralCycle]:
    """The three disjoint shapes: a double-arrow pair (l=2), a triangle with
    cyclic sum in {m, 2m} (the one permitted non-admissible triangle), or a
    hole whose traversal sum is h*m with 0 < h < l."""
    m = q.m
    found: dict[frozenset[int], CentralCycle] = {}

    for i in range(q.n):
        for j in range(i + 1, q.n):
            cols = q.pair_colors(i, j)
            if len(cols) == 1 and next(iter(cols.values())) == 2:
                key = frozenset((i, j))
                found.setdefault(key, CentralCycle((i, j), 2, 1))

    for x, y, z in triangles(q):
        if any(cnt != 1 for pair in ((x, y), (y, z), (z, x))
               for cnt in q.pair_colors(*pair).values()):
            continue  # triangles over multiple arrows are not pure cycles
        s = triangle_sum(q, x, y, z)
        if s in (m, 2 * m):
            h = s // m
            verts = _canonical_cycle(q, (x, y, z))
            if path_color(q, verts + (verts[0],)) % m:
                continue
            found.setdefault(frozenset(verts),
                             CentralCycle(verts, 3, path_color(q, verts + (verts[0],)) // m))

    for hole in find_holes(q):
        verts = _canonical_cycle(q, hole)
        s = path_color(q, verts + (verts[0],))
        if s % m == 0 and 0 < s // m < len(verts):
            found.setdefault(frozenset(verts),
                             CentralCycle(verts, len(verts), s // m))

    return [found[k] for k in sorted(found, key=sorted)]


def detect_central_cycle(q: ColoredQuiver) -> CentralCycle | None:
    """The unique central-cycle candidate, None if there is none.

    Raises :class:`CentralCycleAmbiguity` when several distinct vertex sets
    qualify; the class definition demands uniqueness, so ambiguity is a hard
    membership failure for callers.
    """
    candidates = _central_candidates(q)
    if not candidates:
        return None
    if len(candidates) > 1:
        raise CentralCycleAmbiguity([c.vertex_set() for c in candidates])
    return candidates[0]


# -- clique splits -------------------------------------------------------------


def _cliques_through(q: ColoredQuiver, v: int, max_size: int) -> list[tuple[int, ...]]:
    """Every clique containing v with at most max_size vertices, sorted by
    decreasing size then lexicographically (the reporting order)."""
    adj = q.adjacency()
    nbrs = sorted(adj[v])
    out: list[tuple[int, ...]] = []

    def extend(current: list[int], candidates: list[int]):
        out.append(tuple(current))
        if len(current) >= max_size:
            return
        for idx, u in enumerate(candidates):
            extend(current + [u], [w for w in candidates[idx + 1:] if w in adj[u]])

    extend([v], nbrs)
    return sorted(out, key=lambda c: (-len(c), c))


def vertex_clique_split(q: ColoredQuiver, v: int,
                        central: CentralCycle | None = None) -> CliqueSplit | None:
    """Split v's neighborhood into two cliques C_r and B_k through v.

    Requires r, k <= m+2 and z = r + k - 2 - delta, where delta = 1 is
    admitted only when the central cycle is the double-arrow pair (the two
    cliques then share the second central vertex).  No arrows may run
    between C \\ B and B \\ C, except the central arrow of a length-3
    central cycle when v is its third vertex.  Returns the first valid
    split in canonical order, or None (a violation at v).
    """
    adj = q.adjacency()
    nbrs = adj[v]
    z = len(nbrs)
    if z == 0:
        return CliqueSplit(v, frozenset((v,)), frozenset((v,)), 0, 0)
    max_size = q.m + 2
    central_set = central.vertex_set() if central is not None else frozenset()
    allow_delta = central is not None and central.l == 2
    cliques = _cliques_through(q, v, max_size)

    def cross_ok(c_set: frozenset, b_set: frozenset) -> bool:
        for u in c_set - b_set:
            for w in b_set - c_set:
                if _adjacent(q, u, w):
                    if central is not None and central.l == 3 \
                            and {u, v, w} == set(central_set):
                        continue  # the central arrow of the Delta_3 cycle
                    return False
        return True

    for delta in (0, 1) if allow_delta else (0,):
        for c in cliques:
            c_set = frozenset(c)
            rest = nbrs - c_set
            if delta == 0:
                b_candidates = [rest | {v}]
            else:
                b_candidates = [rest | {v, x} for x in sorted(c_set - {v})]
            for b_set in b_candidates:
                if len(b_set) > max_size or not _is_clique(q, b_set):
                    continue
                if len(c_set) + len(b_set) - 2 - delta != z:
                    continue
                if cross_ok(c_set, frozenset(b_set)):
                    return CliqueSplit(v, c_set, frozenset(b_set), z, delta)
    return None


# -- the hole-free class --------------------------------------------------------


def check_Qmn(q: ColoredQuiver) -> QmnVerdict:
    """Membership in the hole-free class: connected, simple, no holes,
    clique splits with z = r + k - 2 at every vertex, all triangles
    admissible.  Collects one diagnostic per violated condition."""
    failures = []
    if not _connected(q):
        failures.append("not connected")
    if not _is_simple(q):
        failures.append("not simple (a multiplicity exceeds 1)")
    holes = find_holes(q)
    if holes:
        failures.append(f"holes present: {holes}")
    if not failures:
        for v in range(q.n):
            if vertex_clique_split(q, v, central=None) is None:
                failures.append(f"no clique split at vertex {v}")
        for x, y, z in triangles(q):
            if not is_m_admissible_triangle(q, x, y, z):
                failures.append(
                    f"triangle ({x},{y},{z}) not admissible: sum {triangle_sum(q, x, y, z)}")
    return QmnVerdict(not failures, failures)


# -- the cycle class ------------------------------------------------------------


def _boundary_cliques_l2(q: ColoredQuiver, central: CentralCycle):
    """Maximal cliques over the central double-arrow edge, at most two of
    them; each central arrow direction gets one (falling back to the bare
    pair when only one bigger clique exists)."""
    a1, a2 = central.vertices
    adj = q.adjacency()
    common = sorted(adj[a1] & adj[a2])
    base = frozenset((a1, a2))
    if not common:
        return [base]
    comps: list[set[int]] = []
    maximal = []
    for size in range(len(common), 0, -1):
        for sub in combinations(common, size):
            if _is_clique(q, set(sub) | base):
                if not any(set(sub) <= s for s in comps):
                    comps.append(set(sub))
                    maximal.append(frozenset(sub) | base)
    return maximal


def _component_split(q: ColoredQuiver, removed_pairs: set[frozenset[int]]):
    """Connected components after deleting the arrows of the given vertex
    pairs; returns (components, per-component remaining arrow dict)."""
    adj = {v: set() for v in range(q.n)}
    for (i, j, _c) in q.arrows:
        if frozenset((i, j)) not in removed_pairs:
            adj[i].add(j)
            adj[j].add(i)
    seen: set[int] = set()
    comps = []
    for v in range(q.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _extract_component(q: ColoredQuiver, comp: frozenset[int],
                       removed_pairs: set[frozenset[int]]) -> ColoredQuiver:
    verts = sorted(comp)
    index = {v: i for i, v in enumerate(verts)}
    arrows = {(index[i], index[j], c): cnt
              for (i, j, c), cnt in q.arrows.items()
              if i in index and j in index and frozenset((i, j)) not in removed_pairs}
    return ColoredQuiver(q.m, len(verts), arrows, [q.name_of(v) for v in verts])


def check_Qmpq(q: ColoredQuiver) -> MembershipVerdict:
    """Evaluate the seven conditions of the cycle class in order.

    On success the verdict carries every valid certificate orientation
    (reversing the central traversal swaps (p, q)); on failure it names the
    first violated condition with a witness.
    """
    m = q.m

    def fail(cond, detail):
        return MembershipVerdict(False, cond, detail)

    if not _connected(q):
        return fail("connected", "quiver is not connected")

    # (a) unique central cycle
    try:
        central = detect_central_cycle(q)
    except CentralCycleAmbiguity as exc:
        return fail("a", str(exc))
    if central is None:
        return fail("a", "no central cycle candidate")
    l, h = central.l, central.h
    central_set = central.vertex_set()

    # (b) multiplicity discipline
    if l == 2:
        a1, a2 = central.vertices
        for (i, j, _c), cnt in sorted(q.arrows.items()):
            if {i, j} == {a1, a2}:
                if cnt != 2:
                    return fail("b", f"central pair multiplicity {cnt} != 2 at ({i},{j})")
            elif cnt > 1:
                return fail("b", f"multiple arrows outside the central pair at ({i},{j})")
    else:
        if not _is_simple(q):
            return fail("b", "quiver is not simple")

    # (c) hole policy
    holes = find_holes(q)
    if l >= 4:
        allowed = {central_set}
        extra = [hh for hh in holes if frozenset(hh) not in allowed]
        if extra:
            return fail("c", f"holes beyond the central cycle: {extra}")
        if not any(frozenset(hh) == central_set for hh in holes):
            return fail("c", "central cycle is not an induced cycle")
    else:
        if holes:
            return fail("c", f"holes present: {holes}")

    # (d) clique split at every vertex
    for v in range(q.n):
        if vertex_clique_split(q, v, central) is None:
            return fail("d", f"no clique split at vertex {v}")

    # (e) boundary cliques, one per central arrow
    arrow_pairs = central.arrow_pairs()
    if l == 2:
        maximal = _boundary_cliques_l2(q, central)
        if len(maximal) > 2:
            return fail("e", f"{len(maximal)} maximal cliques over the central pair")
        for cq in maximal:
            if len(cq) > m + 2:
                return fail("e", f"boundary clique {sorted(cq)} exceeds size {m + 2}")
        base = frozenset(central.vertices)
        if len(maximal) == 2:
            assignments = [(maximal[0], maximal[1]), (maximal[1], maximal[0])]
        elif maximal and maximal[0] != base:
            assignments = [(maximal[0], base), (base, maximal[0])]
        else:
            assignments = [(base, base)]
        boundary_options = [
            (BoundaryClique(0, arrow_pairs[0], d1), BoundaryClique(1, arrow_pairs[1], d2))
            for d1, d2 in assignments
        ]
    else:
        adj = q.adjacency()
        boundary = []
        for idx, (ai, aj) in enumerate(arrow_pairs):
            common = (adj[ai] & adj[aj]) - central_set
            dset = frozenset(common | {ai, aj})
            if not _is_clique(q, dset):
                return fail("e", f"no unique clique on central arrow ({ai},{aj}): "
                                 f"common neighborhood {sorted(common)} is not a clique")
            if len(dset) > m + 2:
                return fail("e", f"boundary clique {sorted(dset)} exceeds size {m + 2}")
            boundary.append(BoundaryClique(idx, (ai, aj), dset))
        boundary_options = [tuple(boundary)]

    # (f) all triangles admissible except the central triangle itself
    for x, y, z in triangles(q):
        if l == 3 and {x, y, z} == set(central_set):
            continue
        if not is_m_admissible_triangle(q, x, y, z):
            return fail("f", f"triangle ({x},{y},{z}) not admissible: "
                             f"sum {triangle_sum(q, x, y, z)}")

    # (g) peripheral decomposition
    removed_pairs: set[frozenset[int]] = set()
    for bc in boundary_options[0]:
        for u, w in combinations(sorted(bc.vertices), 2):
            removed_pairs.add(frozenset((u, w)))
    for ai, aj in arrow_pairs:
        removed_pairs.add(frozenset((ai, aj)))

    peripheral_sets = [frozenset(bc.vertices - central_set) for bc in boundary_options[0]]
    all_peripheral = frozenset().union(*peripheral_sets) if peripheral_sets else frozenset()
    for w in sorted(all_peripheral):
        if sum(1 for s in peripheral_sets if w in s) != 1:
            return fail("g", f"peripheral vertex {w} lies in more than one boundary clique")

    comps = _component_split(q, removed_pairs)
    comp_of: dict[int, frozenset[int]] = {}
    for comp in comps:
        peri = sorted(set(comp) & all_peripheral)
        if not peri:
            if len(comp) > 1 or next(iter(comp)) not in central_set:
                return fail("g", f"stray component {sorted(comp)} with no peripheral vertex")
            continue
        if len(peri) > 1:
            return fail("g", f"component {sorted(comp)} holds several peripheral "
                             f"vertices {peri}")
        if set(comp) & central_set:
            return fail("g", f"component {sorted(comp)} mixes central and "
                             f"peripheral vertices")
        sub = _extract_component(q, comp, removed_pairs)
        sub_verdict = check_Qmn(sub)
        if not sub_verdict:
            return fail("g", f"component {sorted(comp)} is not in the hole-free "
                             f"class: {sub_verdict.failures}")
        comp_of[peri[0]] = comp

    certificates = []
    for boundary in boundary_options:
        peripheral = []
        ok = True
        x_p = x_q = 0
        for bc in boundary:
            ai, aj = bc.arrow
            for w in sorted(bc.vertices - central_set):
                s = triangle_sum(q, ai, aj, w)
                if s == m - 1:
                    tag = "p"
                elif s == 2 * m + 1:
                    tag = "q"
                else:
                    ok = False
                    break
                comp = comp_of[w]
                n_w = len(comp)
                peripheral.append(PeripheralVertex(w, bc.index, (ai, aj, w), tag, comp, n_w))
                if tag == "p":
                    x_p += n_w
                else:
                    x_q += n_w
            if not ok:
                break
        if not ok:
            continue
        p = l - h + x_p
        qq = h + x_q
        certificates.append(ClassCertificate(
            central, boundary, tuple(sorted(peripheral, key=lambda pv: pv.vertex)),
            x_p, x_q, p, qq))

    if not certificates:
        return fail("g", "no boundary-clique orientation yields consistent "
                         "peripheral tags")

    primary = certificates[0]
    if primary.p + primary.q != q.n:
        return fail("g", f"parameters ({primary.p},{primary.q}) do not sum to "
                         f"the vertex count {q.n}")

    if len(certificates) == 1 and central.l >= 3:
        certificates.append(_reverse_certificate(q, certificates[0]))

    return MembershipVerdict(True, None, "", primary, tuple(certificates))


def _reverse_certificate(q: ColoredQuiver, cert: ClassCertificate) -> ClassCertificate:
    """The certificate for the reverse traversal: h -> l-h, tags swap,
    (p, q) -> (q, p)."""
    central = cert.central
    rev_vertices = (central.vertices[0],) + tuple(reversed(central.vertices[1:]))
    rev = CentralCycle(rev_vertices, central.l, central.l - central.h)
    pair_index = {(vj, vi): idx
                  for idx, (vi, vj) in enumerate(CentralCycle(rev_vertices, central.l, 0)
                                                 .arrow_pairs())}
    boundary = tuple(
        BoundaryClique(pair_index[bc.arrow], (bc.arrow[1], bc.arrow[0]), bc.vertices)
        for bc in cert.boundary)
    boundary = tuple(sorted(boundary, key=lambda bc: bc.index))
    peripheral = tuple(
        PeripheralVertex(pv.vertex,
                         pair_index[(pv.triangle[0], pv.triangle[1])],
                         (pv.triangle[1], pv.triangle[0], pv.vertex),
                         "q" if pv.tag == "p" else "p",
                         pv.component, pv.n_w)
        for pv in cert.peripheral)
    return ClassCertificate(rev, boundary, peripheral,
                            cert.x_q, cert.x_p, cert.q, cert.p)


# -- almost extremal cliques -----------------------------------------------------


def _is_line_component(q: ColoredQuiver, comp: frozenset[int],
                       removed_pairs: set[frozenset[int]]) -> bool:
    """Is the component a line quiver (underlying graph a path, possibly a
    single vertex) once the given pairs' arrows are deleted?"""
    deg = {v: 0 for v in comp}
    edges = set()
    for (i, j, _c) in q.arrows:
        if i in comp and j in comp and frozenset((i, j)) not in removed_pairs:
            edges.add(frozenset((i, j)))
    for e in edges:
        for v in e:
            deg[v] += 1
    if len(edges) != len(comp) - 1:
        return False
    return all(d <= 2 for d in deg.values())


def find_almost_extremal_clique(q: ColoredQuiver,
                                scope=None) -> frozenset[int] | None:
    """A clique of >= 3 vertices inside scope whose arrow removal leaves some
    connected component that is a line quiver; None if there is none."""
    scope = frozenset(range(q.n)) if scope is None else frozenset(scope)
    adj = q.adjacency()
    cliques = []
    for x, y, z in triangles(q):
        if {x, y, z} <= scope:
            cliques.append((x, y, z))
    seen = set()
    candidates = []
    for tri in cliques:
        stack = [frozenset(tri)]
        while stack:
            cl = stack.pop()
            if cl in seen:
                continue
            seen.add(cl)
            candidates.append(cl)
            for v in sorted(scope - cl):
                if all(v in adj[u] for u in cl):
                    stack.append(cl | {v})
    for cl in sorted(candidates, key=lambda c: (len(c), sorted(c))):
        removed = {frozenset((u, w)) for u, w in combinations(sorted(cl), 2)}
        comps = _component_split(q, removed)
        for comp in comps:
            if _is_line_component(q, comp, removed):
                return cl
    return None
