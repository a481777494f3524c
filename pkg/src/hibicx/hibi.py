"""Poset ideals, Hibi ring generators and the Hibi presentation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GuardExceededError, PreconditionError
from .poset import HatPoset, Poset, size_guard


@dataclass(frozen=True, order=True)
class ExponentMap:
    """Exponent vector of the Laurent monomial ``t^xi(-inf) * prod x_v^xi(v)``.

    ``values`` is indexed like ``HatPoset.vertices``: ``-inf`` first, ``inf``
    last (always 0).  The t-exponent ``values[0]`` is the degree.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.values and self.values[-1] != 0:
            raise PreconditionError("exponent at inf must be 0")

    @property
    def degree(self) -> int:
        return self.values[0]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __add__(self, other: "ExponentMap") -> "ExponentMap":
        return ExponentMap(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ExponentMap") -> "ExponentMap":
        return ExponentMap(tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> "ExponentMap":
        return ExponentMap(tuple(k * a for a in self.values))

    def as_dict(self, h: HatPoset) -> dict[str, int]:
        return {v: x for v, x in zip(h.vertices, self.values)}

    @classmethod
    def zero(cls, h: HatPoset) -> "ExponentMap":
        return cls((0,) * len(h))


@dataclass(frozen=True)
class PosetIdeal:
    """A down-closed subset of P, stored as a bitmask over ``Poset.elements``."""

    mask: int
    members: frozenset[str]

    def __len__(self) -> int:
        return len(self.members)

    def sort_key(self) -> tuple[int, int]:
        return (len(self.members), self.mask)

    def label(self, p: Poset) -> str:
        return "{" + ",".join(sorted(self.members)) + "}"


def _ideal(p: Poset, mask: int) -> PosetIdeal:
    return PosetIdeal(mask, frozenset(e for i, e in enumerate(p.elements) if (mask >> i) & 1))


def poset_ideals(p: Poset, guard: int | None = None) -> list[PosetIdeal]:
    """Every down-closed subset of ``p``, ordered by (size, mask)."""
    g = size_guard(guard)
    if len(p) > g:
        raise GuardExceededError(f"poset has {len(p)} elements; guard is {g}")
    idx = p._index
    below = [0] * len(p)
    for a, b in p.covers:
        below[idx[b]] |= 1 << idx[a]
    # grow ideals element by element in a linear extension
    masks = [0]
    for i in _linear_extension(p):
        masks += [m | (1 << i) for m in masks if below[i] & m == below[i]]
    return sorted((_ideal(p, m) for m in masks), key=PosetIdeal.sort_key)


def _linear_extension(p: Poset) -> list[int]:
    from .poset import _kahn

    idx = p._index
    succ = [[] for _ in p.elements]
    indeg = [0] * len(p)
    for a, b in p.covers:
        succ[idx[a]].append(idx[b])
        indeg[idx[b]] += 1
    return _kahn(len(p), succ, indeg)


def hibi_generator(h: HatPoset, ideal: PosetIdeal) -> ExponentMap:
    """Exponent map of ``x_I = t * prod_{v in I} x_v``."""
    vals = [0] * len(h)
    vals[0] = 1
    for i in range(len(h.base)):
        if (ideal.mask >> i) & 1:
            vals[i + 1] = 1
    return ExponentMap(tuple(vals))


def presentation(p: Poset) -> list[tuple[tuple[PosetIdeal, PosetIdeal], tuple[PosetIdeal, PosetIdeal]]]:
    """Hibi relations ``X_a X_b - X_{a meet b} X_{a join b}`` for incomparable a, b."""
    ideals = poset_ideals(p)
    by_mask = {I.mask: I for I in ideals}
    rels = []
    for i, a in enumerate(ideals):
        for b in ideals[i + 1 :]:
            if a.mask & b.mask in (a.mask, b.mask):
                continue
            rels.append(((a, b), (by_mask[a.mask & b.mask], by_mask[a.mask | b.mask])))
    return rels


def presentation_text(p: Poset) -> list[str]:
    def var(I: PosetIdeal) -> str:
        return "X_" + I.label(p)

    return [
        f"{var(a)}*{var(b)} - {var(c)}*{var(d)}" for (a, b), (c, d) in presentation(p)
    ]


def in_ring(h: HatPoset, xi: ExponentMap) -> bool:
    """Membership of ``x^xi`` in the Hibi ring: xi never increases along a cover."""
    v = xi.values
    return all(v[a] >= v[b] for a, b in h.covers_hat)


def ring_factorization(h: HatPoset, xi: ExponentMap) -> list[PosetIdeal] | None:
    """Ideals whose generators multiply to ``x^xi``, or ``None`` if not in R.

    Greedy peeling: repeatedly remove ``x_I`` for ``I = {v : xi(v) = xi(-inf)}``.
    """
    if not in_ring(h, xi):
        return None
    p = h.base
    vals = list(xi.values)
    out = []
    while vals[0] > 0:
        mask = 0
        for i in range(len(p)):
            if vals[i + 1] == vals[0]:
                mask |= 1 << i
                vals[i + 1] -= 1
        vals[0] -= 1
        out.append(_ideal(p, mask))
    if any(vals):
        raise AssertionError("peeling left a nonzero remainder")  # pragma: no cover
    return out


def ideal_from_members(p: Poset, members: Sequence[str]) -> PosetIdeal:
    idx = p._index
    mask = 0
    for e in members:
        mask |= 1 << idx[e]
    I = _ideal(p, mask)
    for a, b in p.covers:
        if b in I.members and a not in I.members:
            raise PreconditionError(f"{sorted(members)} is not down-closed")
    return I
