"""The divisorial modules omega^(-n) of a Hibi ring as monomial cones.

``x^xi`` lies in omega^(-n) iff ``xi(a) >= xi(b) - n`` for every cover
``a < b`` of P-hat (with ``xi(inf) = 0``).  n = 0 gives the ring itself and
n = -1 the canonical module.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import GuardExceededError, PreconditionError
from .hibi import ExponentMap, hibi_generator, poset_ideals
from .poset import (
    DEFAULT_MAX_PATHS,
    HatPoset,
    Path,
    _mlen_idx,
    extremal_paths,
    upward_minimal_mixed_paths,
)

DEFAULT_COMPUTE_GUARD = 20_000


def compute_guard() -> int:
    return int(os.environ.get("HIBICX_COMPUTE_GUARD", DEFAULT_COMPUTE_GUARD))


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    generators: tuple[ExponentMap, ...]

    @property
    def degree_spectrum(self) -> tuple[int, ...]:
        return tuple(sorted(g.degree for g in self.generators))

    @property
    def degrees(self) -> frozenset[int]:
        return frozenset(self.degree_spectrum)

    def __len__(self) -> int:
        return len(self.generators)

    def to_json(self, h: HatPoset) -> dict:
        return {
            "n": self.n,
            "count": len(self.generators),
            "degrees": list(self.degree_spectrum),
            "generators": [g.as_dict(h) for g in self.generators],
        }


@dataclass(frozen=True)
class NMap:
    """``N(v) = xi(v) + dist(v, inf) * n``: offsets from the lowest generator."""

    values: tuple[int, ...]
    n: int


def _graph(h: HatPoset):
    return h.up, h.down


def in_module(h: HatPoset, xi: ExponentMap, n: int) -> bool:
    v = xi.values
    if v[-1] != 0:
        raise PreconditionError("exponent at inf must be 0")
    return all(v[a] >= v[b] - n for a, b in h.covers_hat)


def tight_edges(h: HatPoset, xi: ExponentMap, n: int) -> list[tuple[int, int]]:
    """Covers where ``Delta = xi(a) - (xi(b) - n)`` vanishes."""
    v = xi.values
    return [(a, b) for a, b in h.covers_hat if v[a] - (v[b] - n) == 0]


def is_minimal_generator(h: HatPoset, xi: ExponentMap, n: int) -> bool:
    """True iff no ``x^xi / x_I`` (I a poset ideal, including the empty one)
    stays in omega^(-n).

    Equivalent closure test: from -inf follow every cover downwards and tight
    covers upwards; such a quotient exists exactly when inf is not reached.
    """
    if not in_module(h, xi, n):
        raise PreconditionError("xi is not in the module")
    return kernels.is_minimal(xi.values, n, h.up, h.down)


def is_minimal_generator_by_ideals(h: HatPoset, xi: ExponentMap, n: int) -> bool:
    """Direct check over all poset ideals; exponential, for cross-checking."""
    if not in_module(h, xi, n):
        raise PreconditionError("xi is not in the module")
    return not any(
        in_module(h, xi - hibi_generator(h, I), n) for I in poset_ideals(h.base)
    )


@lru_cache(maxsize=None)
def _mlen_extremes(h: HatPoset, longest: bool, max_paths: int) -> tuple[int, int]:
    paths = extremal_paths(h, longest=longest, max_paths=max_paths)
    vals = [_mlen_idx(h, q) for q in paths]
    return min(vals), max(vals)


def lower_bounds(h: HatPoset, n: int) -> list[int]:
    """Pointwise minimum of xi over omega^(-n): chains to inf force it."""
    if n >= 0:
        return [-n * d for d in h.dist_to_top]
    return [-n * d for d in h.longest_to_top]


def degree_cap(h: HatPoset, n: int, max_paths: int = DEFAULT_MAX_PATHS) -> int:
    """Largest possible t-degree of a minimal generator of omega^(-n).

    A minimal generator admits a path from -inf to inf, tight on its upward
    steps, whose upward runs are extremal chains (shortest for n > 0, longest
    for n < 0).  Summing the inequalities along it gives
    ``xi(-inf) <= -n * mlen``.
    """
    if n == 0:
        return 0
    if n > 0:
        if n > 1 and is_anticanonical_level(h):
            return -n * h.height
        lo, _ = _mlen_extremes(h, False, max_paths)
        return -n * lo
    _, hi = _mlen_extremes(h, True, max_paths)
    return -n * hi


def _upper_bounds(h: HatPoset, n: int, cap: int) -> list[int]:
    table = h.dist_table if n >= 0 else h.longest_table
    ub = [cap + n * table[0][v] for v in range(len(h))]
    ub[h.top] = 0
    return ub


def module_elements(
    h: HatPoset, n: int, degree_max: int, slack: int = 0, minimal_only: bool = False
) -> list[ExponentMap]:
    """Elements of omega^(-n) with degree <= ``degree_max``.

    Every vertex is also capped at ``slack`` above what the degree bound and
    the cover inequalities allow, so the result is finite.
    """
    lb = lower_bounds(h, n)
    ub = _upper_bounds(h, n, degree_max)
    if slack:
        ub = [u + slack for u in ub]
        ub[0] -= slack
        ub[h.top] = 0
    raw = kernels.enumerate_module(h.order, h.up, h.down, n, lb, ub, minimal_only)
    return [ExponentMap(t) for t in sorted(raw)]


def _check_compute(h: HatPoset, n: int) -> None:
    g = compute_guard()
    if abs(n) * len(h) > g:
        raise GuardExceededError(f"|n| * |P-hat| = {abs(n) * len(h)} exceeds compute guard {g}")


@lru_cache(maxsize=256)
def _min_generators(h: HatPoset, n: int) -> tuple[ExponentMap, ...]:
    cap = degree_cap(h, n)
    lb = lower_bounds(h, n)
    ub = _upper_bounds(h, n, cap)
    raw = kernels.enumerate_module(h.order, h.up, h.down, n, lb, ub, True)
    return tuple(ExponentMap(t) for t in sorted(raw))


def enumerate_min_generators(h: HatPoset, n: int) -> GeneratorSet:
    """The complete minimal monomial generating set of omega^(-n) over R."""
    _check_compute(h, n)
    return GeneratorSet(n, _min_generators(h, n))


def canonical_generators(h: HatPoset) -> GeneratorSet:
    """Minimal generators of the canonical module (degrees are positive)."""
    return enumerate_min_generators(h, -1)


@lru_cache(maxsize=None)
def is_level(h: HatPoset) -> bool:
    return len(canonical_generators(h).degrees) == 1


@lru_cache(maxsize=None)
def is_anticanonical_level(h: HatPoset) -> bool:
    return len(GeneratorSet(1, _min_generators(h, 1)).degrees) == 1


def count_generators(h: HatPoset, n_max: int) -> list[int]:
    """``[h(1), ..., h(n_max)]`` with h(n) the number of generators of omega^(-n)."""
    _check_compute(h, n_max)
    return [len(_min_generators(h, n)) for n in range(1, n_max + 1)]


def n_transform(h: HatPoset, xi: ExponentMap, n: int) -> NMap:
    return NMap(tuple(x + d * n for x, d in zip(xi.values, h.dist_to_top)), n)


def inverse_n_transform(h: HatPoset, N: NMap) -> ExponentMap:
    return ExponentMap(tuple(x - d * N.n for x, d in zip(N.values, h.dist_to_top)))


def satisfies_nmap_bounds(h: HatPoset, N: NMap) -> bool:
    """N vanishes on P-hat_min and ``0 <= N(v) <= N(w) + disp(w, v) n`` over
    every lower cover w of a non-minimal-subset vertex v."""
    vals, n = N.values, N.n
    for v in range(len(h)):
        if h.in_min(v):
            if vals[v] != 0:
                return False
            continue
        if vals[v] < 0:
            return False
        if any(vals[v] > vals[w] + h.disp_table[w][v] * n for w in h.down[v]):
            return False
    return True


def digit_partition(h: HatPoset, xi: ExponentMap, n: int) -> list[ExponentMap]:
    """Split a generator of omega^(-n) into n generators of omega^(-1).

    Each coordinate ``xi(v) = q n + r`` (0 <= r < n) becomes r parts equal to
    q + 1 followed by n - r parts equal to q.
    """
    if n < 1:
        raise PreconditionError("digit_partition needs n >= 1")
    if not in_module(h, xi, n) or not is_minimal_generator(h, xi, n):
        raise PreconditionError("xi is not a minimal generator of omega^(-n)")
    split = [divmod(x, n) for x in xi.values]
    return [
        ExponentMap(tuple(q + 1 if l <= r else q for q, r in split))
        for l in range(1, n + 1)
    ]


def is_compatible(h: HatPoset, xi: ExponentMap, n: int, pth: Path) -> bool:
    idx = [h.idx(v) for v in pth.vertices]
    vals = xi.values
    for a, b in zip(idx, idx[1:]):
        if b in h.up[a] and vals[a] != vals[b] - n:
            return False
    return True


def compatible_mixed_paths(h: HatPoset, xi: ExponentMap, n: int) -> list[Path]:
    """Upward-minimal mixed paths whose upward steps are all tight for xi."""
    if not in_module(h, xi, n):
        raise PreconditionError("xi is not in the module")
    return [q for q in upward_minimal_mixed_paths(h) if is_compatible(h, xi, n, q)]


def minimal_degree(h: HatPoset, n: int) -> int:
    """Degree of the lowest generator ``xi(v) = -dist(v, inf) n``."""
    return -h.height * n


def rigid_generator(h: HatPoset, n: int) -> ExponentMap:
    return ExponentMap(tuple(-d * n for d in h.dist_to_top))
