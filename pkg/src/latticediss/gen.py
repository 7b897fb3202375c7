"""Instance generators: random convex polygons, word realizations, fuzz
dissections.

Everything is deterministic per seed (random.Random, whose core generator is
stable across platforms).  The default coordinate bound comes from the
LATTICEDISS_BOUND environment variable, falling back to 50.
"""

from __future__ import annotations

import math
import os
import random

from .dissect import Dissection, split_with_point
from .errors import GenerationFailed
from .geometry import (
    ConvexLatticePolygon,
    Color,
    LatticePoint,
    LatticeTriangle,
    angle_key,
    boundary_word,
    orient,
    validate_convex,
)
from .words import CyclicWord

DEFAULT_BOUND = 50


def default_bound() -> int:
    return int(os.environ.get("LATTICEDISS_BOUND", DEFAULT_BOUND))


def _center_shift(vals: list[int]) -> int:
    return -((min(vals) + max(vals)) // 2)


def _direction_count(k: int) -> int:
    return sum(
        1
        for x in range(-k, k + 1)
        for y in range(-k, k + 1)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1
    )


def random_convex_polygon(
    n: int, coord_bound: int | None = None, seed: int = 0, max_tries: int = 800
) -> ConvexLatticePolygon:
    """A strictly convex lattice n-gon with |coordinates| <= coord_bound.

    Edge-vector method: sample n integer vectors summing to zero with
    pairwise distinct directions and sort them by angle; the prefix sums are
    then automatically in strictly convex position.
    """
    if n < 3:
        raise ValueError(f"polygons need n >= 3 vertices, got {n}")
    bound = coord_bound if coord_bound is not None else default_bound()
    rng = random.Random(seed)
    # radius must offer at least n distinct directions, and should scale
    # with the coordinate budget so polygons do not degenerate
    k = 1
    while k < 8 and _direction_count(k) < n:
        k += 1
    k = max(k, (3 * bound) // (2 * n))
    def direction(v: LatticePoint) -> tuple[int, int]:
        g = math.gcd(v.x, v.y)
        return (v.x // g, v.y // g)

    for _ in range(max_tries):
        vecs: list[LatticePoint] = []
        dirs: set[tuple[int, int]] = set()
        for _ in range(n - 1):
            # a few inner draws to dodge direction collisions
            for _ in range(24):
                v = LatticePoint(rng.randint(-k, k), rng.randint(-k, k))
                if v != (0, 0) and direction(v) not in dirs:
                    vecs.append(v)
                    dirs.add(direction(v))
                    break
            else:
                break
        if len(vecs) != n - 1:
            continue
        last = LatticePoint(-sum(v.x for v in vecs), -sum(v.y for v in vecs))
        if last == (0, 0) or direction(last) in dirs:
            continue
        vecs.append(last)
        vecs.sort(key=angle_key)
        xs, ys = [0], [0]
        for v in vecs[:-1]:
            xs.append(xs[-1] + v.x)
            ys.append(ys[-1] + v.y)
        dx, dy = _center_shift(xs), _center_shift(ys)
        pts = [LatticePoint(x + dx, y + dy) for x, y in zip(xs, ys)]
        if any(abs(p.x) > bound or abs(p.y) > bound for p in pts):
            continue
        return validate_convex(pts)
    raise GenerationFailed(
        f"no convex {n}-gon within bound {bound} after {max_tries} tries (seed {seed})"
    )


_PARITY = {c.tag: c.value for c in Color}


def realize_word(
    w: CyclicWord, coord_bound: int | None = None, node_budget: int = 400_000
) -> ConvexLatticePolygon | None:
    """A strictly convex lattice polygon whose boundary word equals w, or None.

    Iterative-deepening search over angle-sorted edge vectors whose parities
    are pinned by consecutive letter colors; partial sums are pruned by reach
    and by the parity the remaining edges are forced to contribute.  None
    when the word uses letters outside A-D or the bounded search fails.
    """
    n = len(w)
    if n < 3:
        raise ValueError("realizable words need at least 3 letters")
    bound = coord_bound if coord_bound is not None else default_bound()
    letters = w.letters
    if any(l not in _PARITY for l in letters):
        return None
    par = [_PARITY[l] for l in letters]
    deltas = [((par[(i + 1) % n][0] - par[i][0]) % 2,
               (par[(i + 1) % n][1] - par[i][1]) % 2) for i in range(n)]
    # parity that the edges from slot i onward must contribute, mod 2
    suffix = [(0, 0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = ((suffix[i + 1][0] + deltas[i][0]) % 2,
                     (suffix[i + 1][1] + deltas[i][1]) % 2)

    max_radius = max(2, min(8, bound))
    for radius in range(2, max_radius + 1):
        pool = [
            LatticePoint(x, y)
            for x in range(-radius, radius + 1)
            for y in range(-radius, radius + 1)
            if (x, y) != (0, 0)
        ]
        pool.sort(key=lambda v: (angle_key(v), max(abs(v.x), abs(v.y))))
        # group equal directions so the search can force strictly increasing angles
        klass = [0] * len(pool)
        for i in range(1, len(pool)):
            same = not (angle_key(pool[i - 1]) < angle_key(pool[i]))
            klass[i] = klass[i - 1] if same else klass[i - 1] + 1
        parities = [(v.x % 2, v.y % 2) for v in pool]

        budget = node_budget
        chosen: list[LatticePoint] = []

        def dfs(slot: int, start: int, last_klass: int, sx: int, sy: int) -> bool:
            nonlocal budget
            budget -= 1
            if budget <= 0:
                return False
            if slot == n:
                return sx == 0 and sy == 0
            if (sx % 2, sy % 2) != suffix[slot]:
                return False
            reach = radius * (n - slot)
            if abs(sx) > reach or abs(sy) > reach:
                return False
            want = deltas[slot]
            for idx in range(start, len(pool)):
                if slot and klass[idx] == last_klass:
                    continue
                if parities[idx] != want:
                    continue
                v = pool[idx]
                chosen.append(v)
                if dfs(slot + 1, idx + 1, klass[idx], sx + v.x, sy + v.y):
                    return True
                chosen.pop()
                if budget <= 0:
                    return False
            return False

        if dfs(0, 0, -1, 0, 0):
            xs, ys = [0], [0]
            for v in chosen[:-1]:
                xs.append(xs[-1] + v.x)
                ys.append(ys[-1] + v.y)
            # even translation keeps every parity color; also pin vertex 0
            # to the color of the first letter
            dx = _center_shift(xs)
            dy = _center_shift(ys)
            dx += (par[0][0] - dx) % 2
            dy += (par[0][1] - dy) % 2
            pts = [LatticePoint(x + dx, y + dy) for x, y in zip(xs, ys)]
            if any(abs(p.x) > bound or abs(p.y) > bound for p in pts):
                continue
            P = validate_convex(pts)
            assert boundary_word(P) == w
            return P
    return None


def _lattice_points_inside(t: LatticeTriangle) -> list[LatticePoint]:
    """Lattice points in the closed triangle, excluding its vertices."""
    xs = [v.x for v in t]
    ys = [v.y for v in t]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = LatticePoint(x, y)
            if p in t:
                continue
            if (orient(t.v0, t.v1, p) >= 0 and orient(t.v1, t.v2, p) >= 0
                    and orient(t.v2, t.v0, p) >= 0):
                out.append(p)
    return out


def random_dissection(P: ConvexLatticePolygon, depth: int = 0, seed: int = 0) -> Dissection:
    """A valid dissection of P: fan triangulation plus `depth` random splits.

    Splits happen at random lattice points interior to a triangle or to one
    of its edges, so T-vertex configurations arise naturally.
    """
    rng = random.Random(seed)
    vs = P.vertices
    tris = [LatticeTriangle(vs[0], vs[i], vs[i + 1]) for i in range(1, len(vs) - 1)]
    for _ in range(depth):
        order = list(range(len(tris)))
        rng.shuffle(order)
        for ti in order:
            candidates = _lattice_points_inside(tris[ti])
            if candidates:
                x = rng.choice(candidates)
                tris[ti : ti + 1] = split_with_point(tris[ti], x)
                break
        else:
            break  # every triangle is lattice-point free; nothing to split
    return Dissection(tuple(tris))
