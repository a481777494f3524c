"""Slow brute-force reference implementations used only by the tests.

None of these touch the shortest-path tables, the closure test, the degree
cap or the longest-path splitting solver of the library.
"""
from __future__ import annotations

import functools
import itertools
import random

from hibicx.poset import BOTTOM, TOP, Poset


@functools.lru_cache(maxsize=None)
def hat_covers(p: Poset) -> frozenset[tuple[str, str]]:
    """Covers of P-hat rebuilt from the order relation of P."""
    els = p.elements
    covers = set()
    for a in els:
        for b in els:
            if p.less(a, b) and not any(p.less(a, c) and p.less(c, b) for c in els):
                covers.add((a, b))
    for a in els:
        if not any(p.less(c, a) for c in els):
            covers.add((BOTTOM, a))
        if not any(p.less(a, c) for c in els):
            covers.add((a, TOP))
    if not els:
        covers.add((BOTTOM, TOP))
    return frozenset(covers)


@functools.lru_cache(maxsize=None)
def saturated_chains(p: Poset, u: str, v: str) -> list[tuple[str, ...]]:
    covers = hat_covers(p)
    up: dict[str, list[str]] = {}
    for a, b in covers:
        up.setdefault(a, []).append(b)
    out = []

    def walk(chain):
        if chain[-1] == v:
            out.append(tuple(chain))
            return
        for b in up.get(chain[-1], []):
            walk(chain + [b])

    walk([u])
    return out


def dist(p: Poset, u: str, v: str) -> int | None:
    ch = saturated_chains(p, u, v)
    return min(len(c) - 1 for c in ch) if ch else None


def longest(p: Poset, u: str, v: str) -> int | None:
    ch = saturated_chains(p, u, v)
    return max(len(c) - 1 for c in ch) if ch else None


def min_subset(p: Poset) -> set[str]:
    ch = saturated_chains(p, BOTTOM, TOP)
    m = min(len(c) for c in ch)
    return {v for c in ch if len(c) == m for v in c}


@functools.lru_cache(maxsize=None)
def ideals(p: Poset) -> list[frozenset[str]]:
    out = []
    for r in range(len(p) + 1):
        for sub in itertools.combinations(p.elements, r):
            s = set(sub)
            if all(a in s for b in s for a in p.elements if p.less(a, b)):
                out.append(frozenset(s))
    return out


def in_module(p: Poset, xi: dict[str, int], n: int) -> bool:
    return all(xi[a] >= xi[b] - n for a, b in hat_covers(p))


def divide(xi: dict[str, int], I: frozenset[str]) -> dict[str, int]:
    out = dict(xi)
    out[BOTTOM] -= 1
    for v in I:
        out[v] -= 1
    return out


def is_minimal(p: Poset, xi: dict[str, int], n: int) -> bool:
    return not any(in_module(p, divide(xi, I), n) for I in ideals(p))


def in_ring(p: Poset, xi: dict[str, int]) -> bool:
    """Subset-sum over ideal generators: is x^xi a product of x_I's?"""
    if xi[TOP] != 0:
        return False
    ids = ideals(p)

    def rec(rest: dict[str, int], start: int) -> bool:
        if rest[BOTTOM] == 0:
            return all(v == 0 for v in rest.values())
        if any(v < 0 for v in rest.values()):
            return False
        for k in range(start, len(ids)):
            nxt = divide(rest, ids[k])
            if min(nxt.values()) >= 0 and rec(nxt, k):
                return True
        return False

    return rec(dict(xi), 0)


@functools.lru_cache(maxsize=None)
def topo_hat(p: Poset) -> list[str]:
    order = [BOTTOM]
    placed = {BOTTOM}
    rest = list(p.elements)
    while rest:
        for v in rest:
            if all(a in placed for a, b in hat_covers(p) if b == v):
                order.append(v)
                placed.add(v)
                rest.remove(v)
                break
    return order + [TOP]


def module_box(p: Poset, n: int, width: int) -> list[dict[str, int]]:
    """Module elements with each coordinate within ``width`` of its floor
    ``-n * (longest or shortest chain to inf)`` (no degree cap)."""
    covers = hat_covers(p)
    if n >= 0:
        floor = {v: -n * dist(p, v, TOP) for v in (BOTTOM,) + p.elements}
    else:
        floor = {v: -n * longest(p, v, TOP) for v in (BOTTOM,) + p.elements}
    floor[TOP] = 0
    order = list(reversed(topo_hat(p)))  # from inf downwards
    out = []

    def rec(i, xi):
        if i == len(order):
            out.append(dict(xi))
            return
        v = order[i]
        for x in range(floor[v], floor[v] + width + 1):
            if all(x >= xi[b] - n for a, b in covers if a == v):
                xi[v] = x
                rec(i + 1, xi)
        xi.pop(v, None)

    rec(1, {TOP: 0})
    return out


def minimal_generators_box(p: Poset, n: int, width: int) -> set[tuple]:
    names = (BOTTOM,) + p.elements + (TOP,)
    return {
        tuple(xi[v] for v in names)
        for xi in module_box(p, n, width)
        if is_minimal(p, xi, n)
    }


def splits(p: Poset, xi: dict[str, int], e: int, q: int) -> bool:
    """Exhaustive search for xi = xi2 * q^e1 + xi1 over a coordinate box."""
    covers = hat_covers(p)
    names = [v for v in topo_hat(p)][::-1]
    L = {v: dist(p, v, TOP) for v in names}
    for e1 in range(1, e):
        n1, n2, s = q**e1 - 1, q ** (e - e1) - 1, q**e1
        box = {v: range(-L[v] * n2, (xi[v] + L[v] * n1) // s + 1) for v in names}
        box[TOP] = range(0, 1)

        def rec(i, x2):
            if i == len(names):
                return True
            v = names[i]
            for y in box[v]:
                x2[v] = y
                ok = True
                for a, b in covers:
                    if a == v or b == v:
                        if a in x2 and b in x2:
                            x1a, x1b = xi[a] - s * x2[a], xi[b] - s * x2[b]
                            if x2[a] < x2[b] - n2 or x1a < x1b - n1:
                                ok = False
                                break
                if ok and rec(i + 1, x2):
                    return True
                del x2[v]
            return False

        if rec(0, {}):
            return True
    return False


def random_poset(rng: random.Random, max_size: int = 6, density: float = 0.35) -> Poset:
    k = rng.randint(1, max_size)
    els = [f"v{i}" for i in range(1, k + 1)]
    perm = els[:]
    rng.shuffle(perm)
    rels = [
        (perm[i], perm[j])
        for i in range(k)
        for j in range(i + 1, k)
        if rng.random() < density
    ]
    return Poset.from_relations(els, rels)
