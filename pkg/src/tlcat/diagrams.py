"""Crossingless Temperley-Lieb diagrams as noncrossing matchings.

A diagram from n bottom points to m top points is a perfect matching of
the n+m boundary points of a rectangle. Points are labeled cyclically:
0..n-1 left to right along the bottom, then n..n+m-1 right to left along
the top. With that labeling, planarity is exactly the condition that no
two chords interleave, so the invariant is checkable without geometry.

Composition glues diagrams vertically, traces strands with a union-find,
and reports the number of closed loops that were swallowed.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

Pair = tuple[int, int]

# Guard for enumerate_basis: C(10) = 16796 diagrams on 20 points is the
# largest basis materialized by default; callers may raise the bound.
MAX_ENUM_POINTS = 20


class BoundaryMismatchError(ValueError):
    """Two objects were combined along boundaries that do not agree."""


class Matching:
    """A single crossingless diagram in TL(n_bottom, n_top).

    pairs holds each chord as an ordered (low, high) label pair, sorted;
    that tuple is the canonical form. Instances are immutable and hashable.
    """

    __slots__ = ("n_bottom", "n_top", "pairs", "_hash")

    def __init__(self, n_bottom: int, n_top: int, pairs: Iterable[Pair], *,
                 _validate: bool = True):
        pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        object.__setattr__(self, "n_bottom", n_bottom)
        object.__setattr__(self, "n_top", n_top)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_hash", hash((n_bottom, n_top, pairs)))
        if _validate:
            self._check()

    def _check(self) -> None:
        n, m = self.n_bottom, self.n_top
        if n < 0 or m < 0:
            raise ValueError("negative boundary count")
        total = n + m
        if total % 2:
            raise ValueError(f"odd number of boundary points: {n}+{m}")
        seen = [False] * total
        for a, b in self.pairs:
            for x in (a, b):
                if not 0 <= x < total:
                    raise ValueError(f"point {x} outside 0..{total - 1}")
                if seen[x]:
                    raise ValueError(f"point {x} used twice")
                seen[x] = True
            if a == b:
                raise ValueError(f"point {a} paired with itself")
        if len(self.pairs) * 2 != total:
            raise ValueError("not a perfect matching")
        ps = self.pairs
        for i, (a, b) in enumerate(ps):
            for c, d in ps[i + 1:]:
                if c >= b:
                    break
                if a < c < b < d:
                    raise ValueError(f"chords ({a},{b}) and ({c},{d}) cross")

    def __setattr__(self, name, value):
        raise AttributeError("Matching is immutable")

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return (self.n_bottom == other.n_bottom and self.n_top == other.n_top
                and self.pairs == other.pairs)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.n_bottom, self.n_top, self.pairs)

    # Labels run right to left along the top, so position p from the left
    # (0-based) carries label n_bottom + n_top - 1 - p, and vice versa.
    def top_label(self, position: int) -> int:
        return self.n_bottom + self.n_top - 1 - position

    def top_position(self, label: int) -> int:
        return self.n_bottom + self.n_top - 1 - label

    def __str__(self):
        return "".join(f"({a} {b})" for a, b in self.pairs) or "()"

    def __repr__(self):
        return f"Matching({self.n_bottom}, {self.n_top}, {list(self.pairs)!r})"

    def to_json_dict(self) -> dict:
        return {
            "bottom": self.n_bottom,
            "top": self.n_top,
            "pairs": [[a, b] for a, b in self.pairs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Matching":
        return cls(int(data["bottom"]), int(data["top"]),
                   [(int(a), int(b)) for a, b in data["pairs"]])


def identity(n: int) -> Matching:
    """The identity diagram of TL(n, n): n vertical strands."""
    if n < 0:
        raise ValueError("strand count must be nonnegative")
    return Matching(n, n, [(i, 2 * n - 1 - i) for i in range(n)], _validate=False)


def elementary(n: int, i: int) -> Matching:
    """The generator e_i of TL(n, n): cap and cup at positions i, i+1 (1-based i)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"elementary index must satisfy 1 <= i <= {n - 1}, got {i}")
    pairs = [(i - 1, i), (2 * n - 1 - i, 2 * n - i)]
    for j in range(n):
        if j not in (i - 1, i):
            pairs.append((j, 2 * n - 1 - j))
    return Matching(n, n, pairs, _validate=False)


@functools.lru_cache(maxsize=1 << 18)
def compose(a: Matching, b: Matching) -> tuple[Matching, int]:
    """Stack b on top of a, gluing a's top boundary to b's bottom boundary.

    Returns the induced matching on the outer boundary together with the
    number of closed loops swallowed by the gluing.
    """
    if a.n_top != b.n_bottom:
        raise BoundaryMismatchError(
            f"cannot glue top of TL({a.n_bottom},{a.n_top}) "
            f"to bottom of TL({b.n_bottom},{b.n_top})")
    n, k, l = a.n_bottom, a.n_top, b.n_top
    # Nodes: result bottom 0..n-1, interface n..n+k-1 (by position),
    # result top n+k..n+k+l-1 (by position).
    parent = list(range(n + k + l))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for x, y in a.pairs:
        nx = x if x < n else n + a.top_position(x)
        ny = y if y < n else n + a.top_position(y)
        parent[find(nx)] = find(ny)
    for x, y in b.pairs:
        nx = n + x if x < k else n + k + b.top_position(x)
        ny = n + y if y < k else n + k + b.top_position(y)
        parent[find(nx)] = find(ny)

    boundary_by_root: dict[int, list[int]] = {}
    for i in range(n):
        boundary_by_root.setdefault(find(i), []).append(i)
    for j in range(l):
        boundary_by_root.setdefault(find(n + k + j), []).append(n + l - 1 - j)
    loops = 0
    for j in range(k):
        root = find(n + j)
        if root not in boundary_by_root:
            loops += 1
            boundary_by_root[root] = []
    pairs = [tuple(v) for v in boundary_by_root.values() if v]
    return Matching(n, l, pairs, _validate=False), loops


def tensor(a: Matching, b: Matching) -> Matching:
    """Place b to the right of a; through-degrees add."""
    na, ma = a.n_bottom, a.n_top
    nb, mb = b.n_bottom, b.n_top
    n, m = na + nb, ma + mb

    def map_a(x: int) -> int:
        if x < na:
            return x
        return n + m - 1 - a.top_position(x)

    def map_b(x: int) -> int:
        if x < nb:
            return na + x
        return n + m - 1 - (ma + b.top_position(x))

    pairs = [(map_a(x), map_a(y)) for x, y in a.pairs]
    pairs += [(map_b(x), map_b(y)) for x, y in b.pairs]
    return Matching(n, m, pairs, _validate=False)


def reflect(a: Matching) -> Matching:
    """Flip the diagram upside down, swapping bottom and top."""
    n, m = a.n_bottom, a.n_top

    def map_pt(x: int) -> int:
        if x < n:
            return m + n - 1 - x  # bottom position x becomes top position x
        return a.top_position(x)  # top position p becomes bottom position p

    return Matching(m, n, [(map_pt(x), map_pt(y)) for x, y in a.pairs],
                    _validate=False)


def through_degree(a: Matching) -> int:
    """Number of chords joining the bottom boundary to the top boundary.

    Equals the minimal l over factorizations of a through TL(., l).
    """
    n = a.n_bottom
    return sum(1 for x, y in a.pairs if x < n <= y)


def enumerate_basis(n: int, m: int, *, max_points: int = MAX_ENUM_POINTS) -> list[Matching]:
    """All crossingless diagrams in TL(n, m), in a deterministic order.

    The count is the Catalan number C((n+m)/2); generation walks the
    balanced-arc recursion on the cyclic boundary order, so completeness
    follows from the standard bijection with balanced parentheses.
    """
    if n < 0 or m < 0:
        raise ValueError("negative boundary count")
    if (n + m) % 2:
        raise ValueError(f"TL({n},{m}) is empty: odd boundary {n}+{m}")
    if n + m > max_points:
        raise ValueError(f"{n}+{m} boundary points exceed the bound {max_points}")
    out = [Matching(n, m, pairs, _validate=False)
           for pairs in _noncrossing(tuple(range(n + m)))]
    out.sort()
    return out


def _noncrossing(points: tuple[int, ...]) -> Iterator[tuple[Pair, ...]]:
    if not points:
        yield ()
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        arc = (first, points[idx])
        for inner in _noncrossing(points[1:idx]):
            for outer in _noncrossing(points[idx + 1:]):
                yield (arc,) + inner + outer


# ---------------------------------------------------------------------------
# ASCII rendering
# ---------------------------------------------------------------------------

_COL_STEP = 4


def ascii_art(m: Matching) -> str:
    """Plain-text picture of a diagram: cups, caps, and through strands."""
    n, k = m.n_bottom, m.n_top
    if n == 0 and k == 0:
        return "(empty diagram)"

    top_arcs, bottom_arcs, through = [], [], []
    for a, b in m.pairs:
        if b < n:
            bottom_arcs.append((a, b))
        elif a >= n:
            p, q = sorted((m.top_position(a), m.top_position(b)))
            top_arcs.append((p, q))
        else:
            through.append((a, m.top_position(b)))

    def depth(arc, arcs):
        return sum(1 for c, d in arcs if c < arc[0] and arc[1] < d)

    ht = 1 + max((depth(a, top_arcs) for a in top_arcs), default=-1)
    hb = 1 + max((depth(a, bottom_arcs) for a in bottom_arcs), default=-1)
    # One middle row per jogging strand; right-movers jog top-down left to
    # right and left-movers right to left, which keeps their runs disjoint.
    jogs = sorted([s for s in through if s[0] < s[1]])
    jogs += sorted([s for s in through if s[0] > s[1]], reverse=True)
    hm = max(len(jogs), 1) if through else 0
    height = ht + hm + hb
    width = _COL_STEP * (max(n, k) - 1) + 1
    col = lambda p: _COL_STEP * p
    grid = [[" "] * width for _ in range(height)]

    for (i, j) in top_arcs:
        row = ht - 1 - depth((i, j), top_arcs)
        for r in range(row):
            grid[r][col(i)] = grid[r][col(j)] = "|"
        grid[row][col(i)] = "\\"
        grid[row][col(j)] = "/"
        for c in range(col(i) + 1, col(j)):
            grid[row][c] = "_"
    for (i, j) in bottom_arcs:
        row = ht + hm + depth((i, j), bottom_arcs)
        grid[row][col(i)] = "/"
        grid[row][col(j)] = "\\"
        for c in range(col(i) + 1, col(j)):
            grid[row][c] = "-"
        for r in range(row + 1, height):
            grid[r][col(i)] = grid[r][col(j)] = "|"

    jog_row = {s: ht + r for r, s in enumerate(jogs)}
    for (b, t) in through:
        for r in range(ht):
            grid[r][col(t)] = "|"
        if b == t:
            for r in range(ht, height):
                grid[r][col(b)] = "|"
            continue
        jr = jog_row[(b, t)]
        for r in range(ht, jr):
            grid[r][col(t)] = "|"
        lo, hi = sorted((col(b), col(t)))
        grid[jr][lo] = grid[jr][hi] = "+"
        for c in range(lo + 1, hi):
            grid[jr][c] = "-"
        for r in range(jr + 1, height):
            grid[r][col(b)] = "|"

    ruler = lambda count: "".join(
        str((p + 1) % 10).ljust(_COL_STEP) for p in range(count)).rstrip()
    lines = []
    if k:
        lines.append(ruler(k))
    lines.extend("".join(row).rstrip() for row in grid)
    if n:
        lines.append(ruler(n))
    return "\n".join(lines)
