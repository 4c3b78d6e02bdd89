"""Core m-colored quiver type and colored mutation.

An m-colored quiver is a directed multigraph on vertices 0..n-1 whose arrows
carry colors in {0, ..., m}, subject to three structural invariants: no loops,
monochromaticity (between an ordered pair of vertices all arrows share one
color) and skew-symmetry (q_ij^(c) == q_ji^(m-c)).

Mutation at a vertex is implemented twice, on purpose:

* :func:`mutate_steps` walks the three-step procedure (compose through
  color-0 arrows, cancel to monochromatic, shift incident colors by +-1
  modulo m+1);
* :func:`mutate_formula` evaluates the closed per-entry formula.

The two are cross-checked against each other in the test suite and, when
``QMUT_DEBUG_CROSSCHECK=1`` is set, on every call of :func:`mutate`.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Iterable, Mapping, Sequence

import networkx as nx

__all__ = [
    "ColoredQuiver",
    "MutationSequence",
    "InvalidQuiverError",
    "NotInvertibleError",
    "validate",
    "mutate_steps",
    "mutate_formula",
    "mutate",
    "mutate_seq",
    "inverse_mutate",
    "underlying_graph",
    "zero_colored_part",
    "path_color",
    "build_A_tilde",
    "build_line_quiver",
]

# A mutation sequence is an ordered list of vertex indices; repetitions mean
# repeated application of the mutation at that vertex.
MutationSequence = Sequence[int]


class InvalidQuiverError(ValueError):
    """Raised when an operation requires a structurally valid quiver."""


class NotInvertibleError(RuntimeError):
    """Power iteration mu_v^m failed to invert mu_v (quiver outside the
    classes where the mutation has order m+1)."""


ArrowSpec = tuple  # (i, j, c) or (i, j, c, count)


class ColoredQuiver:
    """Immutable m-colored quiver.

    Arrows are a multiset: ``arrows[(i, j, c)]`` is the number of arrows
    i -> j of color c.  Vertex identity is positional (0..n-1);
    ``vertex_names`` are display-only and ignored by equality.
    """

    __slots__ = ("m", "n", "arrows", "vertex_names", "_hash", "_adj")

    def __init__(self, m: int, n: int, arrows: Iterable[ArrowSpec] | Mapping = (),
                 vertex_names: Sequence[str] | None = None):
        if m < 1:
            raise ValueError(f"color modulus m must be >= 1, got {m}")
        if n < 1:
            raise ValueError(f"vertex count n must be >= 1, got {n}")
        amap: dict[tuple[int, int, int], int] = {}
        if isinstance(arrows, Mapping):
            items = [(k[0], k[1], k[2], v) for k, v in arrows.items()]
        else:
            items = [a if len(a) == 4 else (a[0], a[1], a[2], 1) for a in arrows]
        for i, j, c, cnt in items:
            if cnt < 0:
                raise ValueError(f"negative multiplicity for arrow ({i},{j},{c})")
            if cnt:
                key = (int(i), int(j), int(c))
                amap[key] = amap.get(key, 0) + int(cnt)
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "arrows", amap)
        object.__setattr__(self, "vertex_names",
                           tuple(vertex_names) if vertex_names is not None else None)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_adj", None)

    # -- value semantics ---------------------------------------------------

    def __setattr__(self, name, value):
        raise AttributeError("ColoredQuiver is immutable")

    def __eq__(self, other):
        if not isinstance(other, ColoredQuiver):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.arrows == other.arrows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash",
                               hash((self.m, self.n, frozenset(self.arrows.items()))))
        return self._hash

    def __repr__(self):
        return f"ColoredQuiver(m={self.m}, n={self.n}, arrows={sorted(self.arrows.items())})"

    # -- accessors ----------------------------------------------------------

    def count(self, i: int, j: int, c: int) -> int:
        """Multiplicity q_ij^(c); 0 for absent entries."""
        return self.arrows.get((i, j, c), 0)

    def pair_colors(self, i: int, j: int) -> dict[int, int]:
        """Colors (with counts) of the arrows i -> j."""
        return {c: cnt for (a, b, c), cnt in self.arrows.items() if a == i and b == j}

    def color(self, i: int, j: int) -> int:
        """The color of the (unique, by monochromaticity) arrow i -> j."""
        cols = self.pair_colors(i, j)
        if len(cols) != 1:
            raise InvalidQuiverError(f"no unique arrow {i} -> {j} (colors {sorted(cols)})")
        return next(iter(cols))

    def adjacency(self) -> dict[int, set[int]]:
        """Underlying-graph neighborhoods (cached; arrows in either direction)."""
        if self._adj is None:
            adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
            for (i, j, _c) in self.arrows:
                adj[i].add(j)
                adj[j].add(i)
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def neighbors(self, v: int) -> set[int]:
        return set(self.adjacency()[v])

    def name_of(self, v: int) -> str:
        if self.vertex_names is not None:
            return self.vertex_names[v]
        return str(v)

    def relabel(self, perm: Sequence[int]) -> "ColoredQuiver":
        """Apply the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        arrows = {(perm[i], perm[j], c): cnt for (i, j, c), cnt in self.arrows.items()}
        names = None
        if self.vertex_names is not None:
            names = [""] * self.n
            for v, name in enumerate(self.vertex_names):
                names[perm[v]] = name
        return ColoredQuiver(self.m, self.n, arrows, names)

    def induced(self, vertices: Iterable[int]) -> "ColoredQuiver":
        """Induced subquiver, with vertices relabelled 0..k-1 in sorted order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        arrows = {(index[i], index[j], c): cnt
                  for (i, j, c), cnt in self.arrows.items()
                  if i in index and j in index}
        names = [self.name_of(v) for v in verts]
        return ColoredQuiver(self.m, len(verts), arrows, names)


# -- validation --------------------------------------------------------------


def validate(q: ColoredQuiver) -> list[str]:
    """Return every violated structural invariant (empty list == valid).

    Diagnostics name the offending (i, j, c) triple; this never raises.
    """
    problems = []
    m = q.m
    by_pair: dict[tuple[int, int], dict[int, int]] = {}
    for (i, j, c), cnt in sorted(q.arrows.items()):
        if not (0 <= i < q.n and 0 <= j < q.n):
            problems.append(f"arrow ({i},{j},{c}) has a vertex outside 0..{q.n - 1}")
            continue
        if i == j:
            problems.append(f"loop at vertex {i}: ({i},{j},{c})")
        if not (0 <= c <= m):
            problems.append(f"color out of range at ({i},{j},{c}): colors lie in 0..{m}")
        by_pair.setdefault((i, j), {})[c] = cnt
    for (i, j), cols in sorted(by_pair.items()):
        if len(cols) > 1:
            c = min(cols)
            problems.append(
                f"not monochromatic at pair ({i},{j},{c}): colors {sorted(cols)} all present")
    for (i, j), cols in sorted(by_pair.items()):
        for c, cnt in sorted(cols.items()):
            if 0 <= c <= m and q.count(j, i, m - c) != cnt:
                problems.append(
                    f"skew-symmetry broken at ({i},{j},{c}): "
                    f"q=({cnt}) but reverse ({j},{i},{m - c}) has q={q.count(j, i, m - c)}")
    return problems


def _require_valid(q: ColoredQuiver) -> None:
    problems = validate(q)
    if problems:
        raise InvalidQuiverError("; ".join(problems))


def _require_vertex(q: ColoredQuiver, j: int) -> None:
    if not (0 <= j < q.n):
        raise IndexError(f"vertex {j} out of range 0..{q.n - 1}")


# -- mutation ----------------------------------------------------------------


def _cancel_to_monochromatic(totals: dict[int, int]) -> dict[int, int]:
    """Mutual cancellation between all colors of one ordered pair.

    Arrows of distinct colors annihilate one another in equal numbers; the
    survivor count of a color is its count minus everything else, floored at
    zero.  At most one color can survive, so the pair ends monochromatic.
    """
    if len(totals) <= 1:
        return dict(totals)
    grand = sum(totals.values())
    out = {}
    for c, cnt in totals.items():
        keep = cnt - (grand - cnt)
        if keep > 0:
            out[c] = keep
    return out


def mutate_steps(q: ColoredQuiver, j: int) -> ColoredQuiver:
    """Colored mutation at vertex j via the three-step procedure.

    Step 1: for every composable pair i -(c)-> j -(0)-> k with i != k, add
    q_ij^(c) * q_jk^(0) arrows i -> k of color c together with their skew
    partners k -> i of color m-c.  Step 2: restore monochromaticity by mutual
    cancellation between colors of each ordered pair.  Step 3: add one to the
    color of every arrow arriving at j and subtract one from every arrow
    leaving j, modulo m+1.
    """
    _require_valid(q)
    _require_vertex(q, j)
    m = q.m
    M = m + 1

    into_j = [(i, c, cnt) for (i, jj, c), cnt in q.arrows.items() if jj == j]
    out_zero = [(k, cnt) for (jj, k, c), cnt in q.arrows.items() if jj == j and c == 0]

    adds: Counter = Counter()
    for i, c, a in into_j:
        for k, b in out_zero:
            if i == k:
                continue
            adds[(i, k, c)] += a * b
            adds[(k, i, m - c)] += a * b

    touched = {(i, k) for (i, k, _c) in adds}
    new: dict[tuple[int, int, int], int] = {}
    for (i, k, c), cnt in q.arrows.items():
        if i == j or k == j or (i, k) in touched:
            continue
        new[(i, k, c)] = cnt
    for (i, k) in touched:
        totals: Counter = Counter()
        for c in range(M):
            existing = q.count(i, k, c)
            if existing:
                totals[c] += existing
        for (a, b, c), cnt in adds.items():
            if (a, b) == (i, k):
                totals[c] += cnt
        for c, cnt in _cancel_to_monochromatic(totals).items():
            new[(i, k, c)] = cnt
    for (i, k, c), cnt in q.arrows.items():
        if k == j:
            new[(i, k, (c + 1) % M)] = cnt
        elif i == j:
            new[(i, k, (c - 1) % M)] = cnt

    return ColoredQuiver(m, q.n, new, q.vertex_names)


def mutate_formula(q: ColoredQuiver, j: int) -> ColoredQuiver:
    """Colored mutation at vertex j via the closed per-entry formula.

    With color indices read modulo m+1,

        q'_ik^(c) = q_ik^(c-1)                          if k == j,
        q'_ik^(c) = q_ik^(c+1)                          if i == j,
        q'_ik^(c) = max(0, T_c - sum_{t != c} T_t)      otherwise,

    where T_t = q_ik^(t) + q_ij^(t) q_jk^(0) + q_ij^(m) q_jk^(t) counts the
    color-t arrows present after composition through j (the existing ones
    plus direct compositions plus skew partners of reverse compositions);
    the max(0, ...) branch is the cancellation to a monochromatic pair.
    """
    _require_valid(q)
    _require_vertex(q, j)
    m = q.m
    M = m + 1

    new: dict[tuple[int, int, int], int] = {}
    for i in range(q.n):
        for k in range(q.n):
            if i == k:
                continue
            if k == j or i == j:
                for c in range(M):
                    old = q.count(i, k, (c - 1) % M if k == j else (c + 1) % M)
                    if old:
                        new[(i, k, c)] = old
                continue
            qij = q.pair_colors(i, j)
            qjk = q.pair_colors(j, k)
            if not qij and not qjk and not q.pair_colors(i, k):
                continue
            jk0 = qjk.get(0, 0)
            ijm = qij.get(m, 0)
            T = [q.count(i, k, t) + qij.get(t, 0) * jk0 + ijm * qjk.get(t, 0)
                 for t in range(M)]
            grand = sum(T)
            for c in range(M):
                val = T[c] - (grand - T[c])
                if val > 0:
                    new[(i, k, c)] = val

    return ColoredQuiver(m, q.n, new, q.vertex_names)


_CROSSCHECK_ENV = "QMUT_DEBUG_CROSSCHECK"


def mutate(q: ColoredQuiver, j: int, crosscheck: bool | None = None) -> ColoredQuiver:
    """Colored mutation mu_j.  Delegates to :func:`mutate_formula`.

    With ``crosscheck`` (or ``QMUT_DEBUG_CROSSCHECK=1``) the three-step
    procedure is run as well and any disagreement raises: the two
    implementations are meant to be interchangeable, so a mismatch signals a
    bug, never an expected condition.
    """
    result = mutate_formula(q, j)
    if crosscheck is None:
        crosscheck = os.environ.get(_CROSSCHECK_ENV, "") == "1"
    if crosscheck:
        stepped = mutate_steps(q, j)
        if stepped != result:
            raise AssertionError(
                f"mutation implementations disagree at vertex {j}: "
                f"formula={sorted(result.arrows.items())} "
                f"steps={sorted(stepped.arrows.items())}")
    return result


def mutate_seq(q: ColoredQuiver, steps: MutationSequence,
               crosscheck: bool | None = None) -> ColoredQuiver:
    """Left-to-right fold of :func:`mutate`; the empty sequence is identity."""
    for v in steps:
        _require_vertex(q, v)
    out = q
    for v in steps:
        out = mutate(out, v, crosscheck=crosscheck)
    return out


def inverse_mutate(q: ColoredQuiver, j: int) -> ColoredQuiver:
    """Invert mu_j by power iteration: mu_j^m, then verify mu_j undoes it.

    On the studied classes mu_j has order m+1, so mu_j^m is the inverse; the
    verification is kept because that order is not proven for arbitrary valid
    quivers.
    """
    candidate = q
    for _ in range(q.m):
        candidate = mutate(candidate, j)
    if mutate(candidate, j) != q:
        raise NotInvertibleError(
            f"mu_{j} is not invertible by power iteration on this quiver")
    return candidate


# -- derived views -------------------------------------------------------------


def underlying_graph(q: ColoredQuiver) -> nx.Graph:
    """Simple undirected graph: one edge per skew pair, multiplicity discarded."""
    g = nx.Graph()
    g.add_nodes_from(range(q.n))
    g.add_edges_from((i, j) for (i, j, _c) in q.arrows)
    return g


def zero_colored_part(q: ColoredQuiver) -> nx.MultiDiGraph:
    """The plain digraph of color-0 arrows, multiplicities kept as parallel
    edges; skew partners of nonzero color are dropped."""
    d = nx.MultiDiGraph()
    d.add_nodes_from(range(q.n))
    for (i, j, c), cnt in sorted(q.arrows.items()):
        if c == 0:
            for _ in range(cnt):
                d.add_edge(i, j)
    return d


def path_color(q: ColoredQuiver, path: Sequence[int]) -> int:
    """Sum of the arrow colors along the directed path (plain integer, not
    reduced modulo m+1; centrality tests need the actual sum)."""
    total = 0
    for a, b in zip(path, path[1:]):
        total += q.color(a, b)
    return total


# -- builders -----------------------------------------------------------------


def build_A_tilde(p: int, qq: int, m: int) -> ColoredQuiver:
    """The seed quiver: a (p+q)-cycle with p color-0 arrows traversed one way
    and q color-0 arrows the other (their skew partners carry color m).

    Traversing 0 -> 1 -> ... -> n-1 -> 0 the colors read 0 (p times) then m
    (q times), so the full traversal has color sum q*m.  For p == q == 1 the
    construction degenerates to the double-arrow pair on two vertices.
    """
    if p < 1 or qq < 1 or m < 1:
        raise ValueError("build_A_tilde requires p, q, m >= 1")
    n = p + qq
    arrows: Counter = Counter()
    for i in range(p):
        arrows[(i, (i + 1) % n, 0)] += 1
        arrows[((i + 1) % n, i, m)] += 1
    for i in range(qq):
        u = (p + i + 1) % n
        v = p + i
        arrows[(u, v, 0)] += 1
        arrows[(v, u, m)] += 1
    return ColoredQuiver(m, n, arrows)


def build_line_quiver(colors: Sequence[int], m: int) -> ColoredQuiver:
    """Line quiver on len(colors)+1 vertices: arrow i -> i+1 with the i-th
    color, plus skew partners."""
    for c in colors:
        if not (0 <= c <= m):
            raise ValueError(f"color {c} outside 0..{m}")
    arrows = []
    for i, c in enumerate(colors):
        arrows.append((i, i + 1, c))
        arrows.append((i + 1, i, m - c))
    return ColoredQuiver(m, len(colors) + 1, arrows)
