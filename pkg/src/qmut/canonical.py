"""Relabeling-invariant canonical forms for colored quivers.

The canonical form is the lexicographically least sorted arrow list
(i, j, color, count) over all vertex relabelings.  Computing it exhaustively
is factorial, so labelings are pruned by iterated partition refinement on
per-vertex invariants (out/in color profiles, then neighborhood cell
multisets) with backtracking over the surviving cells.  At desk scale
(n <= 16 or so) this is fast and, unlike a hash, the resulting digest is
injective by construction: distinct canonical arrow lists give distinct
digests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .quiver import ColoredQuiver

__all__ = ["CanonicalForm", "canonical_form", "are_isomorphic", "digest",
           "isomorphism_oracle"]


@dataclass(frozen=True)
class CanonicalForm:
    m: int
    n: int
    canonical_arrows: tuple[tuple[int, int, int, int], ...]
    digest: str
    # the witness permutation (old vertex -> canonical label); relabeling a
    # quiver changes the witness but not the form, so it is excluded from
    # equality and hashing
    labeling: tuple[int, ...] = ()

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return (self.m, self.n, self.canonical_arrows) == \
            (other.m, other.n, other.canonical_arrows)

    def __hash__(self):
        return hash((self.m, self.n, self.canonical_arrows))


def _initial_colors(q: ColoredQuiver) -> list[tuple]:
    """Per-vertex invariant: sorted multisets of (color, count) out and in."""
    out: list[list] = [[] for _ in range(q.n)]
    inn: list[list] = [[] for _ in range(q.n)]
    for (i, j, c), cnt in q.arrows.items():
        out[i].append((c, cnt))
        inn[j].append((c, cnt))
    return [(tuple(sorted(out[v])), tuple(sorted(inn[v]))) for v in range(q.n)]


def _refine(q: ColoredQuiver, colors: list) -> list[int]:
    """Iterate 1-WL style refinement until the vertex partition stabilizes.

    Returns an integer cell id per vertex; ids are ordered by the cells'
    invariant history, so they are themselves relabeling-invariant.
    """
    ids = _canon_ids(colors)
    while True:
        signature = []
        for v in range(q.n):
            profile = sorted(
                (ids[j], c, cnt, 0) for (i, j, c), cnt in q.arrows.items() if i == v
            ) + sorted(
                (ids[i], c, cnt, 1) for (i, j, c), cnt in q.arrows.items() if j == v
            )
            signature.append((ids[v], tuple(profile)))
        new_ids = _canon_ids(signature)
        if new_ids == ids:
            return ids
        ids = new_ids


def _canon_ids(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _arrow_key(q: ColoredQuiver, label: list[int]) -> tuple:
    return tuple(sorted((label[i], label[j], c, cnt)
                        for (i, j, c), cnt in q.arrows.items()))


def _search(q: ColoredQuiver, ids: list[int], best: list):
    """Individualization-refinement backtracking over non-singleton cells."""
    cells: dict[int, list[int]] = {}
    for v, cid in enumerate(ids):
        cells.setdefault(cid, []).append(v)
    target = None
    for cid in sorted(cells):
        if len(cells[cid]) > 1:
            target = cid
            break
    if target is None:
        # discrete partition: cell ids are a full labeling
        key = _arrow_key(q, ids)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = list(ids)
        return
    for v in cells[target]:
        forced = [(ids[u], u == v) for u in range(q.n)]
        _search(q, _refine(q, forced), best)


def canonical_form(q: ColoredQuiver) -> CanonicalForm:
    """Canonical form invariant under every vertex relabeling.

    The representative is minimal in the lexicographic order on sorted
    (i, j, color, count) lists, which makes equality of forms a complete
    isomorphism test.
    """
    ids = _refine(q, _initial_colors(q))
    best: list = [None, None]
    _search(q, ids, best)
    arrows = tuple(best[0])
    return CanonicalForm(q.m, q.n, arrows, _encode(q.m, q.n, arrows),
                         tuple(best[1]))


def _encode(m: int, n: int, arrows: tuple) -> str:
    """Injective textual digest of a canonical arrow list (no hashing)."""
    body = ";".join(f"{i},{j},{c},{cnt}" for (i, j, c, cnt) in arrows)
    return f"m{m}n{n}:{body}"


def digest(q: ColoredQuiver) -> str:
    return canonical_form(q).digest


def are_isomorphic(q1: ColoredQuiver, q2: ColoredQuiver) -> bool:
    """True iff some vertex bijection carries one multiplicity tensor onto
    the other; quivers with different m or n are simply not isomorphic."""
    if q1.m != q2.m or q1.n != q2.n:
        return False
    if len(q1.arrows) != len(q2.arrows):
        return False
    return canonical_form(q1) == canonical_form(q2)


def isomorphism_oracle(q1: ColoredQuiver, q2: ColoredQuiver) -> bool:
    """Exhaustive-permutation isomorphism test; the independent check the
    canonical form is validated against (n <= 8 keeps 8! tractable)."""
    if q1.m != q2.m or q1.n != q2.n:
        return False
    if q1.n > 8:
        raise ValueError("oracle is restricted to n <= 8")
    target = q2.arrows
    for perm in permutations(range(q1.n)):
        if all(target.get((perm[i], perm[j], c), 0) == cnt
               for (i, j, c), cnt in q1.arrows.items()) \
                and len(target) == len(q1.arrows):
            return True
    return False
