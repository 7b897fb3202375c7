"""Combinatorial polygons and disk triangulations.

A combinatorial polygon is just a cyclic sequence of colored corners; a
triangulation is a set of vertex-id triples that glue into a topological
disk whose boundary is the polygon.  This module validates the disk
structure, finds tricolor triangles, builds good (tricolor-free) diagonal
dissections from contraction traces, enumerates all diagonal triangulations
of an n-gon, and runs the exhaustive tricolor check for a boundary word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import BoundExceeded, NotADisk, TheoremViolation, TooSmall
from .words import ContractionTrace, CyclicWord, decide_contractible


@dataclass(frozen=True)
class ColoredPolygon:
    """Cyclic sequence of corner colors, at least 3 corners."""

    corner_colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.corner_colors) < 3:
            raise TooSmall("a combinatorial polygon needs at least 3 corners")
        object.__setattr__(self, "corner_colors", tuple(self.corner_colors))

    @classmethod
    def from_word(cls, w: CyclicWord) -> "ColoredPolygon":
        return cls(tuple(w.letters))

    def word(self) -> CyclicWord:
        return CyclicWord(self.corner_colors)

    def __len__(self) -> int:
        return len(self.corner_colors)


class Triangulation:
    """An abstract simplicial triangulation of a disk.

    vertex_colors maps vertex id -> color label, triangles is a set of
    unordered id triples, corners is the boundary cycle.  The constructor
    checks only local shape (3 distinct ids per triangle); run validate_disk
    for the full topological contract.
    """

    __slots__ = ("vertex_colors", "triangles", "corners")

    def __init__(
        self,
        vertex_colors: Mapping[int, str],
        triangles: Iterable[Iterable[int]],
        corners: Sequence[int],
    ):
        tris = set()
        for t in triangles:
            tt = frozenset(t)
            if len(tt) != 3 or not all(isinstance(v, int) for v in tt):
                raise ValueError(f"triangle {sorted(tt)!r} is not 3 distinct vertex ids")
            tris.add(tt)
        object.__setattr__(self, "vertex_colors", dict(vertex_colors))
        object.__setattr__(self, "triangles", frozenset(tris))
        object.__setattr__(self, "corners", tuple(corners))

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __repr__(self) -> str:
        return f"Triangulation({len(self.vertex_colors)} vertices, {len(self.triangles)} triangles)"

    def sorted_triangles(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(t)) for t in self.triangles)


def _edge_faces(T: Triangulation) -> dict[frozenset, list[frozenset]]:
    out: dict[frozenset, list[frozenset]] = {}
    for tri in T.triangles:
        a, b, c = sorted(tri)
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
            out.setdefault(e, []).append(tri)
    return out


def _cyclic_variants(seq: tuple) -> set[tuple]:
    n = len(seq)
    out = set()
    for s in (seq, tuple(reversed(seq))):
        for k in range(n):
            out.add(s[k:] + s[:k])
    return out


def disk_errors(T: Triangulation) -> list[str]:
    """All violations of the disk contract, one message per condition."""
    errors: list[str] = []
    used = {v for tri in T.triangles for v in tri}
    if not T.triangles:
        return ["triangulation has no triangles"]
    for v in sorted(used):
        if v not in T.vertex_colors:
            errors.append(f"vertex {v} has no color")
    for v in sorted(T.vertex_colors):
        if v not in used:
            errors.append(f"vertex {v} lies in no triangle")

    edge_faces = _edge_faces(T)
    for e, faces in sorted(edge_faces.items(), key=lambda kv: sorted(kv[0])):
        if len(faces) > 2:
            names = ", ".join(str(sorted(f)) for f in faces)
            errors.append(f"edge {sorted(e)} lies in {len(faces)} triangles: {names}")
    if errors:
        return errors  # topology below assumes a sane edge complex

    # boundary edges must chain into one closed cycle
    boundary = [e for e, faces in edge_faces.items() if len(faces) == 1]
    nbr: dict[int, list[int]] = {}
    for e in boundary:
        a, b = sorted(e)
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    bad_deg = [v for v, ns in nbr.items() if len(ns) != 2]
    if not boundary:
        errors.append("no boundary edges: not a disk with boundary")
    elif bad_deg:
        errors.append(f"boundary vertex {bad_deg[0]} touches {len(nbr[bad_deg[0]])} boundary edges")
    else:
        cycle = [min(nbr)]
        prev = None
        while True:
            ns = nbr[cycle[-1]]
            nxt = ns[0] if ns[0] != prev else ns[1]
            if nxt == cycle[0]:
                break
            prev = cycle[-1]
            cycle.append(nxt)
            if len(cycle) > len(boundary):
                break
        if len(cycle) != len(boundary):
            errors.append("boundary edges form more than one cycle")
        elif tuple(T.corners) not in _cyclic_variants(tuple(cycle)):
            errors.append(f"boundary cycle {cycle} does not match corners {list(T.corners)}")

    # the face-adjacency graph (shared edges) must be connected
    tris = list(T.triangles)
    index = {t: i for i, t in enumerate(tris)}
    seen = {0}
    todo = [tris[0]]
    while todo:
        tri = todo.pop()
        a, b, c = sorted(tri)
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
            for other in edge_faces[e]:
                if index[other] not in seen:
                    seen.add(index[other])
                    todo.append(other)
    if len(seen) != len(tris):
        stray = tris[next(i for i in range(len(tris)) if i not in seen)]
        errors.append(f"triangle {sorted(stray)} is disconnected from the rest")

    V, E, F = len(used), len(edge_faces), len(T.triangles)
    if V - E + F != 1:
        errors.append(f"Euler characteristic V-E+F = {V}-{E}+{F} = {V - E + F}, expected 1")

    # each vertex's incident triangles must form a single fan:
    # closed (cycle) for interior vertices, open (path) for boundary ones
    boundary_vertices = {v for e in boundary for v in e}
    for v in sorted(used):
        link: dict[int, list[int]] = {}
        cnt = 0
        for tri in T.triangles:
            if v in tri:
                a, b = sorted(tri - {v})
                link.setdefault(a, []).append(b)
                link.setdefault(b, []).append(a)
                cnt += 1
        degs = sorted(len(ns) for ns in link.values())
        ends = [u for u, ns in link.items() if len(ns) == 1]
        # connectivity of the link graph
        stack = [next(iter(link))]
        seen_l = set(stack)
        while stack:
            u = stack.pop()
            for x in link[u]:
                if x not in seen_l:
                    seen_l.add(x)
                    stack.append(x)
        connected = len(seen_l) == len(link)
        if v in boundary_vertices:
            ok = connected and len(ends) == 2 and all(d <= 2 for d in degs) and cnt == len(link) - 1
            kind = "open"
        else:
            ok = connected and not ends and all(d == 2 for d in degs) and cnt == len(link)
            kind = "closed"
        if not ok:
            errors.append(f"triangles around vertex {v} do not form one {kind} fan")
    return errors


def validate_disk(T: Triangulation) -> None:
    """Raise NotADisk (with every violation) unless T triangulates a disk."""
    errors = disk_errors(T)
    if errors:
        raise NotADisk(errors)


def boundary_word_of(T: Triangulation) -> CyclicWord:
    return CyclicWord(tuple(T.vertex_colors[v] for v in T.corners))


def find_tricolor(T: Triangulation) -> frozenset | None:
    """Some triangle with three pairwise distinct vertex colors, or None."""
    for tri in sorted(T.triangles, key=sorted):
        if len({T.vertex_colors[v] for v in tri}) == 3:
            return tri
    return None


class ExternalTriangle(NamedTuple):
    indices: tuple[int, int, int]  # consecutive corner positions
    good: bool                     # two of the three colors coincide


def external_triangles(G: ColoredPolygon) -> list[ExternalTriangle]:
    """All n consecutive corner triples, flagged good when colors repeat."""
    n = len(G)
    cols = G.corner_colors
    out = []
    for i in range(n):
        trip = ((i - 1) % n, i, (i + 1) % n)
        cs = {cols[trip[0]], cols[trip[1]], cols[trip[2]]}
        out.append(ExternalTriangle(trip, len(cs) < 3))
    return out


def remove_external(G: ColoredPolygon, i: int) -> ColoredPolygon:
    """Delete corner i, joining its neighbors by an edge."""
    n = len(G)
    if n == 3:
        raise TooSmall("cannot remove a corner from a triangle")
    i %= n
    return ColoredPolygon(G.corner_colors[:i] + G.corner_colors[i + 1 :])


def good_dissection(G: ColoredPolygon) -> Triangulation | None:
    """A diagonal triangulation of G into good triangles, if one exists.

    Replays the decider's contraction trace: every deletion step (left,
    deleted, right) contributes the external triangle on those corners, and
    the final step closes the polygon.  Returns None when the boundary word
    is not contractible.
    """
    ok, trace = decide_contractible(G.word())
    if not ok:
        return None
    assert isinstance(trace, ContractionTrace)
    tris = [frozenset((s.left, s.deleted, s.right)) for s in trace.steps]
    n = len(G)
    T = Triangulation(
        {i: c for i, c in enumerate(G.corner_colors)},
        tris,
        tuple(range(n)),
    )
    assert len(T.triangles) == n - 2
    return T


def enumerate_diagonal_triangulations(n: int) -> Iterator[tuple[tuple[int, int, int], ...]]:
    """Every diagonal triangulation of the n-gon (corners 0..n-1), once each.

    Yields shapes: tuples of ascending (i, k, j) corner triples.  The count
    is the (n-2)nd Catalan number.  Bounded to n <= 14.
    """
    if not 3 <= n <= 14:
        raise BoundExceeded(f"diagonal enumeration supports 3 <= n <= 14, got {n}")

    def gen(i: int, j: int) -> Iterator[tuple]:
        # triangulations of the fan i..j using base edge (i, j)
        if j - i < 2:
            yield ()
            return
        for k in range(i + 1, j):
            for left in gen(i, k):
                for right in gen(k, j):
                    yield left + ((i, k, j),) + right

    yield from gen(0, n - 1)


@dataclass
class SpernerReport:
    """Outcome of the exhaustive tricolor check for one boundary word."""

    word: CyclicWord
    contractible: bool
    triangulations_examined: int
    tricolor_free_count: int
    tricolor_free_example: tuple[tuple[int, int, int], ...] | None
    star_tricolor: dict[str, bool]  # interior color -> star contains a tricolor triangle


def _shape_is_tricolor_free(shape, cols) -> bool:
    for i, k, j in shape:
        if cols[i] != cols[k] and cols[k] != cols[j] and cols[i] != cols[j]:
            return False
    return True


def sperner_check(w: CyclicWord) -> SpernerReport:
    """Brute-force the tricolor property over all diagonal triangulations.

    Counts triangulations of the |w|-gon colored by w that avoid tricolor
    triangles, asserts that at least one exists exactly when w is
    contractible, and checks every one-interior-vertex star coloring for a
    tricolor triangle (mandatory when w is not contractible).  Raises
    TheoremViolation if any of that fails — which would mean a bug, since
    both facts are theorems.
    """
    n = len(w)
    if n > 12:
        raise BoundExceeded(f"sperner check supports words up to length 12, got {n}")
    if n < 3:
        raise BoundExceeded("sperner check needs a word of length at least 3")
    cols = w.letters
    contractible, _ = decide_contractible(w)

    examined = 0
    free_count = 0
    example = None
    for shape in enumerate_diagonal_triangulations(n):
        examined += 1
        if _shape_is_tricolor_free(shape, cols):
            free_count += 1
            if example is None:
                example = shape

    if (free_count > 0) != contractible:
        raise TheoremViolation(
            f"word {w}: contractible={contractible} but {free_count} tricolor-free "
            f"diagonal triangulations found among {examined}"
        )

    star: dict[str, bool] = {}
    for center in sorted(set(cols)):
        has = any(
            cols[i] != cols[(i + 1) % n]
            and center != cols[i]
            and center != cols[(i + 1) % n]
            for i in range(n)
        )
        star[center] = has
        if not contractible and not has:
            raise TheoremViolation(
                f"word {w} is not contractible but the star with center color "
                f"{center} has no tricolor triangle"
            )

    return SpernerReport(w, contractible, examined, free_count, example, star)


# --- triangulation JSON ------------------------------------------------------

def triangulation_to_json(T: Triangulation) -> str:
    payload = {
        "colors": {str(v): T.vertex_colors[v] for v in sorted(T.vertex_colors)},
        "triangles": T.sorted_triangles(),
        "corners": list(T.corners),
    }
    return json.dumps(payload)


def triangulation_from_json(text: str) -> Triangulation:
    data = json.loads(text)
    colors = {int(k): v for k, v in data["colors"].items()}
    return Triangulation(colors, [tuple(t) for t in data["triangles"]], tuple(data["corners"]))
