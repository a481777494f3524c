"""Finite posets, the augmented poset P-hat and its chain combinatorics.

Elements are opaque strings.  The augmented poset adjoins a global minimum
``"-inf"`` and a global maximum ``"inf"``; internally every vertex of P-hat is
addressed by an index with ``-inf`` at 0, the base elements at ``1..m`` in
input order, and ``inf`` at ``m + 1``.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    GuardExceededError,
    InvalidPosetError,
    NotComparableError,
    PreconditionError,
)

BOTTOM = "-inf"
TOP = "inf"
RESERVED = frozenset({BOTTOM, TOP})
NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")

DEFAULT_GUARD = 20
DEFAULT_MAX_PATHS = 200_000


def size_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    return int(os.environ.get("HIBICX_GUARD", DEFAULT_GUARD))


def _reachability(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Bitmask ``reach[i]`` of all j with a directed path i -> j (i excluded)."""
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    order = _kahn(n, succ, indeg)
    reach = [0] * n
    for i in reversed(order):
        m = 0
        for j in succ[i]:
            m |= (1 << j) | reach[j]
        reach[i] = m
    return reach


def _kahn(n: int, succ: Sequence[Sequence[int]], indeg: list[int]) -> list[int]:
    # smallest-index-first keeps the order deterministic
    import heapq

    indeg = list(indeg)
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        raise InvalidPosetError("order relation contains a cycle")
    return order


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its cover relation.

    ``covers`` holds pairs ``(a, b)`` meaning ``a`` is covered by ``b``.  Use
    :meth:`from_relations` to build one from arbitrary (possibly redundant)
    order relations.
    """

    elements: tuple[str, ...]
    covers: frozenset[tuple[str, str]]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise InvalidPosetError("element identifiers must be unique")
        for e in self.elements:
            if e in RESERVED:
                raise InvalidPosetError(f"element name {e!r} is reserved")
            if not NAME_RE.match(e):
                raise InvalidPosetError(f"invalid element name {e!r}")
        idx = {e: i for i, e in enumerate(self.elements)}
        for a, b in self.covers:
            if a not in idx or b not in idx:
                raise InvalidPosetError(f"cover ({a}, {b}) uses an undeclared element")
            if a == b:
                raise InvalidPosetError(f"reflexive cover ({a}, {a})")
        reach = _reachability(len(self.elements), ((idx[a], idx[b]) for a, b in self.covers))
        for a, b in self.covers:
            i, j = idx[a], idx[b]
            # irredundant: no c with a < c < b
            mid = reach[i] & ~(1 << j)
            k = 0
            while mid:
                if mid & 1 and (reach[k] >> j) & 1:
                    raise InvalidPosetError(f"({a}, {b}) is not a cover relation")
                mid >>= 1
                k += 1

    @classmethod
    def from_relations(
        cls,
        elements: Sequence[str],
        relations: Iterable[tuple[str, str]],
        name: str = "",
    ) -> "Poset":
        """Build a poset from order relations ``a < b`` by transitive reduction."""
        elements = tuple(elements)
        idx = {e: i for i, e in enumerate(elements)}
        if len(idx) != len(elements):
            raise InvalidPosetError("element identifiers must be unique")
        edges = set()
        for a, b in relations:
            if a not in idx or b not in idx:
                bad = a if a not in idx else b
                raise InvalidPosetError(f"relation uses undeclared element {bad!r}")
            if a == b:
                raise InvalidPosetError(f"relation {a} < {a} is not strict")
            edges.add((idx[a], idx[b]))
        reach = _reachability(len(elements), edges)
        covers = set()
        for i, j in edges:
            if any((reach[i] >> k) & 1 and (reach[k] >> j) & 1 for k in range(len(elements))):
                continue
            covers.add((elements[i], elements[j]))
        return cls(elements, frozenset(covers), name)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _strictly_above(self) -> list[int]:
        idx = self._index
        return _reachability(len(self.elements), ((idx[a], idx[b]) for a, b in self.covers))

    def less(self, a: str, b: str) -> bool:
        return bool((self._strictly_above[self._index[a]] >> self._index[b]) & 1)

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b)

    def sorted_covers(self) -> list[tuple[str, str]]:
        idx = self._index
        return sorted(self.covers, key=lambda c: (idx[c[0]], idx[c[1]]))

    def maximal_chains(self) -> Iterator[tuple[str, ...]]:
        """All maximal chains, bottom to top (exponential; small posets only)."""
        up: dict[str, list[str]] = {e: [] for e in self.elements}
        has_lower = set()
        for a, b in self.sorted_covers():
            up[a].append(b)
            has_lower.add(b)

        def walk(chain):
            nxt = up[chain[-1]]
            if not nxt:
                yield tuple(chain)
                return
            for b in nxt:
                chain.append(b)
                yield from walk(chain)
                chain.pop()

        for e in self.elements:
            if e not in has_lower:
                yield from walk([e])


@dataclass(frozen=True)
class Path:
    """A path in the Hasse diagram of P-hat, without repeated vertices."""

    vertices: tuple[str, ...]
    kind: str  # "upwards", "downwards" or "mixed"

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class HatPoset:
    """P with ``-inf`` and ``inf`` adjoined, plus precomputed chain tables.

    Distances count cover steps.  ``dist`` is the shortest saturated chain,
    ``longest`` the longest one; both are ``None`` for incomparable pairs.
    """

    base: Poset
    vertices: tuple[str, ...]
    covers_hat: tuple[tuple[int, int], ...]
    up: tuple[tuple[int, ...], ...]
    down: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]
    dist_table: tuple[tuple[int | None, ...], ...]
    longest_table: tuple[tuple[int | None, ...], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def idx(self, v: str | int) -> int:
        if isinstance(v, int):
            return v
        try:
            return self.index[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def leq(self, u: str | int, v: str | int) -> bool:
        return self.dist_table[self.idx(u)][self.idx(v)] is not None

    @cached_property
    def disp_table(self) -> tuple[tuple[int | None, ...], ...]:
        d = self.dist_table
        t = self.top
        return tuple(
            tuple(
                None if d[i][j] is None else d[i][j] + d[j][t] - d[i][t]
                for j in range(len(self))
            )
            for i in range(len(self))
        )

    @cached_property
    def height(self) -> int:
        """``dist(-inf, inf)``: the length of a shortest maximal chain of P-hat."""
        return self.dist_table[0][self.top]

    @cached_property
    def dist_to_top(self) -> tuple[int, ...]:
        return tuple(self.dist_table[i][self.top] for i in range(len(self)))

    @cached_property
    def longest_to_top(self) -> tuple[int, ...]:
        return tuple(self.longest_table[i][self.top] for i in range(len(self)))

    @cached_property
    def min_mask(self) -> int:
        d, t, h = self.dist_table, self.top, self.height
        m = 0
        for v in range(len(self)):
            if d[0][v] + d[v][t] == h:
                m |= 1 << v
        return m

    def in_min(self, v: int) -> bool:
        return bool((self.min_mask >> v) & 1)

    def exponent_map(self, values: dict[str, int]):
        """Build an :class:`~hibicx.hibi.ExponentMap` from a name -> exponent dict.

        Missing vertices default to 0; ``inf`` must be absent or 0.
        """
        from .hibi import ExponentMap

        vals = [0] * len(self)
        for k, x in values.items():
            vals[self.idx(k)] = int(x)
        if vals[self.top] != 0:
            raise PreconditionError("exponent at inf must be 0")
        return ExponentMap(tuple(vals))


def build_hat(p: Poset, guard: int | None = None) -> HatPoset:
    """Adjoin ``-inf``/``inf`` to ``p`` and fill the distance tables."""
    g = size_guard(guard)
    if len(p) > g:
        raise GuardExceededError(f"poset has {len(p)} elements; guard is {g}")
    m = len(p)
    vertices = (BOTTOM,) + p.elements + (TOP,)
    n = m + 2
    pidx = p._index
    covers = set((pidx[a] + 1, pidx[b] + 1) for a, b in p.covers)
    has_lower = {b for _, b in covers}
    has_upper = {a for a, _ in covers}
    for v in range(1, m + 1):
        if v not in has_lower:
            covers.add((0, v))
        if v not in has_upper:
            covers.add((v, n - 1))
    if m == 0:
        covers.add((0, n - 1))
    covers_hat = tuple(sorted(covers))
    up = [[] for _ in range(n)]
    down = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in covers_hat:
        up[a].append(b)
        down[b].append(a)
        indeg[b] += 1
    order = _kahn(n, up, indeg)

    inf_ = None
    dist = [[inf_] * n for _ in range(n)]
    longest = [[inf_] * n for _ in range(n)]
    pos = {v: k for k, v in enumerate(order)}
    for s in range(n):
        dist[s][s] = 0
        longest[s][s] = 0
        for v in order[pos[s]:]:
            if dist[s][v] is None:
                continue
            for w in up[v]:
                dv = dist[s][v] + 1
                if dist[s][w] is None or dv < dist[s][w]:
                    dist[s][w] = dv
                lv = longest[s][v] + 1
                if longest[s][w] is None or lv > longest[s][w]:
                    longest[s][w] = lv
    return HatPoset(
        base=p,
        vertices=vertices,
        covers_hat=covers_hat,
        up=tuple(tuple(x) for x in up),
        down=tuple(tuple(x) for x in down),
        order=tuple(order),
        dist_table=tuple(tuple(r) for r in dist),
        longest_table=tuple(tuple(r) for r in longest),
    )


def dist(h: HatPoset, u: str | int, v: str | int) -> int:
    d = h.dist_table[h.idx(u)][h.idx(v)]
    if d is None:
        raise NotComparableError(f"{u!r} is not below {v!r}")
    return d


def disp(h: HatPoset, u: str | int, v: str | int) -> int:
    d = h.disp_table[h.idx(u)][h.idx(v)]
    if d is None:
        raise NotComparableError(f"{u!r} is not below {v!r}")
    return d


def is_pure(p: Poset | HatPoset) -> bool:
    """True iff all maximal chains of P have the same number of elements."""
    h = p if isinstance(p, HatPoset) else build_hat(p, guard=max(len(p), size_guard()))
    return h.dist_table[0][h.top] == h.longest_table[0][h.top]


def min_subset(h: HatPoset) -> frozenset[str]:
    """Vertices of P-hat lying on some shortest chain from -inf to inf."""
    return frozenset(h.vertices[v] for v in range(len(h)) if h.in_min(v))


def nonmin_subset(h: HatPoset) -> frozenset[str]:
    return frozenset(h.vertices[v] for v in range(len(h)) if not h.in_min(v))


def top_nodes(h: HatPoset) -> frozenset[str]:
    return frozenset(h.vertices[v] for v in range(1, h.top) if len(h.down[v]) >= 2)


def bottom_nodes(h: HatPoset) -> frozenset[str]:
    return frozenset(h.vertices[v] for v in range(1, h.top) if len(h.up[v]) >= 2)


def starting_points(h: HatPoset) -> frozenset[str]:
    out = set()
    for v in range(1, h.top):
        if h.in_min(v):
            continue
        below = h.down[v]
        if (
            len(below) >= 2
            or any(h.in_min(w) for w in below)
            or any(0 < w < h.top and len(h.up[w]) >= 2 for w in below)
        ):
            out.add(h.vertices[v])
    return frozenset(out)


def path_kind(h: HatPoset, vertices: Sequence[str | int]) -> str:
    """Classify a vertex sequence; raises if it is not a path."""
    idx = [h.idx(v) for v in vertices]
    if len(set(idx)) != len(idx):
        raise PreconditionError("paths may not repeat vertices")
    steps = set()
    for a, b in zip(idx, idx[1:]):
        if b in h.up[a]:
            steps.add(1)
        elif b in h.down[a]:
            steps.add(-1)
        else:
            raise PreconditionError(
                f"{h.vertices[a]} and {h.vertices[b]} are not related by a cover"
            )
    if steps == {-1}:
        return "downwards"
    if steps == {1, -1}:
        return "mixed"
    return "upwards"


def make_path(h: HatPoset, vertices: Sequence[str | int]) -> Path:
    names = tuple(h.vertices[h.idx(v)] for v in vertices)
    return Path(names, path_kind(h, names))


def upward_runs(h: HatPoset, idx: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal upward runs of an index path as (start position, end position)."""
    runs = []
    i = 0
    while i < len(idx) - 1:
        if idx[i + 1] in h.up[idx[i]]:
            j = i
            while j < len(idx) - 1 and idx[j + 1] in h.up[idx[j]]:
                j += 1
            runs.append((i, j))
            i = j
        else:
            i += 1
    return runs


def extremal_paths(
    h: HatPoset, longest: bool = False, max_paths: int = DEFAULT_MAX_PATHS
) -> list[tuple[int, ...]]:
    """All simple -inf -> inf paths whose maximal upward runs are extremal chains.

    With ``longest=False`` every upward run must be a shortest chain between its
    endpoints, otherwise a longest one.  Purely upward paths are included.
    Results are index tuples in lexicographic order.
    """
    table = h.longest_table if longest else h.dist_table
    top = h.top
    out: list[tuple[int, ...]] = []
    path = [0]
    used = 1

    # state: position where the current upward run started (None when the last
    # step went down)
    def walk(run_start: int | None) -> None:
        nonlocal used
        v = path[-1]
        if v == top:
            out.append(tuple(path))
            if len(out) > max_paths:
                raise GuardExceededError(f"more than {max_paths} paths in the Hasse diagram")
            return
        for w in h.up[v]:
            if (used >> w) & 1:
                continue
            start = run_start if run_start is not None else len(path) - 1
            if table[path[start]][w] != len(path) - start:
                continue
            path.append(w)
            used |= 1 << w
            walk(start)
            used &= ~(1 << w)
            path.pop()
        for w in h.down[v]:
            if (used >> w) & 1 or w == 0:
                continue
            path.append(w)
            used |= 1 << w
            walk(None)
            used &= ~(1 << w)
            path.pop()

    walk(None)
    out.sort()
    return out


def _mlen_idx(h: HatPoset, idx: Sequence[int]) -> int:
    s = 0
    for a, b in zip(idx, idx[1:]):
        s += 1 if b in h.up[a] else -1
    return s


def upward_minimal_mixed_paths(
    h: HatPoset, max_paths: int = DEFAULT_MAX_PATHS
) -> list[Path]:
    paths = []
    for idx in extremal_paths(h, longest=False, max_paths=max_paths):
        names = tuple(h.vertices[i] for i in idx)
        kind = path_kind(h, idx)
        if kind == "mixed":
            paths.append(Path(names, kind))
    return paths


def mlen(h: HatPoset, pth: Path, u: str, v: str) -> int:
    """Mixed length along ``pth`` from ``u`` to ``v`` (up steps minus down steps)."""
    try:
        i = pth.vertices.index(u)
        j = pth.vertices.index(v)
    except ValueError:
        raise PreconditionError(f"{u!r} or {v!r} is not on the path") from None
    if i > j:
        raise PreconditionError(f"{u!r} does not come before {v!r} on the path")
    return _mlen_idx(h, [h.idx(x) for x in pth.vertices[i : j + 1]])


def _upward_runs_in(h: HatPoset, mask: int) -> list[tuple[int, ...]]:
    """Inextendable upward paths (saturated chains) inside the vertex set ``mask``."""
    inside = lambda v: (mask >> v) & 1  # noqa: E731
    out = []

    def walk(path):
        ext = [w for w in h.up[path[-1]] if inside(w)]
        if not ext:
            out.append(tuple(path))
            return
        for w in ext:
            path.append(w)
            walk(path)
            path.pop()

    for v in range(len(h)):
        if inside(v) and not any(inside(w) for w in h.down[v]):
            walk([v])
    return out


def levelcase_witness(h: HatPoset) -> tuple[Path, int] | None:
    """An upward path (v0, ..., vk) with (v1..vk) an inextendable chain of
    P-hat_nonmin and total disparity below k, or ``None``.

    Among candidates the longest chain wins, then the smallest index tuple.
    """
    nonmin = ((1 << len(h)) - 1) & ~h.min_mask
    best = None
    for chain in _upward_runs_in(h, nonmin):
        k = len(chain)
        for v0 in h.down[chain[0]]:
            full = (v0,) + chain
            s = sum(h.disp_table[a][b] for a, b in zip(full, full[1:]))
            if s < k:
                key = (-k, full)
                if best is None or key < best[0]:
                    best = (key, full, s)
    if best is None:
        return None
    _, full, s = best
    return make_path(h, full), s
