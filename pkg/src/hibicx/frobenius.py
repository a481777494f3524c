"""The Cartier algebra of a Hibi ring through its anticanonical symbolic powers.

Degree e of the Cartier algebra is omega^(1 - p^e), with the twisted product
``a * b = a^(p^e_b) b``.  In exponent maps: ``xi_a * p^e_b + xi_b``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .canonical import (
    count_generators,
    enumerate_min_generators,
    in_module,
    is_anticanonical_level,
    is_level,
    is_minimal_generator,
    n_transform,
)
from .errors import (
    GuardExceededError,
    InconclusiveError,
    PreconditionError,
    WitnessUnavailableError,
)
from .hibi import ExponentMap, in_ring
from .poset import (
    HatPoset,
    Path,
    is_pure,
    levelcase_witness,
    make_path,
    starting_points,
    upward_minimal_mixed_paths,
)

MAX_PRIME_POWER = 2**40


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _check_prime_power(p: int, e: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if p**e > MAX_PRIME_POWER:
        raise GuardExceededError(f"{p}^{e} exceeds 2^40")


@dataclass(frozen=True)
class TElement:
    """Homogeneous element of degree e of the Cartier algebra at prime p."""

    e: int
    p: int
    xi: ExponentMap

    @property
    def n(self) -> int:
        return self.p**self.e - 1

    def is_valid(self, h: HatPoset) -> bool:
        if self.e == 0:
            return in_ring(h, self.xi)
        return in_module(h, self.xi, self.n)


def t_multiply(a: TElement, b: TElement) -> TElement:
    if a.p != b.p:
        raise PreconditionError(f"prime mismatch: {a.p} vs {b.p}")
    return TElement(a.e + b.e, a.p, a.xi.scale(a.p**b.e) + b.xi)


def splits(
    h: HatPoset, xi: ExponentMap, e: int, p: int
) -> tuple[int, ExponentMap, ExponentMap] | None:
    """Find ``xi = xi2 * p^e1 + xi1`` with xi1 in omega^(1-p^e1), xi2 in
    omega^(1-p^e2), e1 + e2 = e, both >= 1.

    For fixed e1 the conditions on xi2 are difference constraints along the
    covers, so feasibility is a longest-path computation; the pointwise least
    xi2 is returned for the smallest feasible e1.
    """
    if e < 2:
        return None
    if not in_module(h, xi, p**e - 1):
        raise PreconditionError("xi is not in omega^(1-p^e)")
    cov_a = [a for a, _ in h.covers_hat]
    cov_b = [b for _, b in h.covers_hat]
    for e1 in range(1, e):
        q = p**e1
        res = kernels.least_split(xi.values, cov_a, cov_b, q - 1, p ** (e - e1) - 1, q)
        if res is not None:
            xi2 = ExponentMap(res)
            xi1 = xi - xi2.scale(q)
            return e1, xi1, xi2
    return None


def complexity_sequence(h: HatPoset, p: int, e_max: int) -> list[int]:
    """``[c_1, ..., c_e_max]`` for the Cartier algebra over F_p.

    c_1 counts the minimal generators of omega^(1-p); for e >= 2, c_e counts
    the minimal generators of omega^(1-p^e) that are not a product of two
    elements of positive degree.  A product of three or more factors regroups
    into two, and scalars are absorbed by R-minimality, so two-factor
    splittings over arbitrary module elements are exhaustive.
    """
    _check_prime_power(p, e_max)
    out = []
    for e in range(1, e_max + 1):
        gens = enumerate_min_generators(h, p**e - 1).generators
        if e == 1:
            out.append(len(gens))
        else:
            out.append(sum(1 for g in gens if splits(h, g, e, p) is None))
    return out


def peaks(h: HatPoset, pth: Path) -> list[str]:
    idx = [h.idx(v) for v in pth.vertices]
    return [
        pth.vertices[i]
        for i in range(1, len(idx) - 1)
        if idx[i] in h.up[idx[i - 1]] and idx[i + 1] in h.down[idx[i]]
    ]


def free_vertices(h: HatPoset) -> int:
    """Bitmask of vertices whose N-value is not forced to 0 on all generators:
    the non-minimal subset plus every peak of an upward-minimal mixed path."""
    mask = ((1 << len(h)) - 1) & ~h.min_mask
    for q in upward_minimal_mixed_paths(h):
        for v in peaks(h, q):
            mask |= 1 << h.idx(v)
    return mask


def digit_chain(h: HatPoset) -> tuple[Path, int] | None:
    """Upward path (v0, ..., vk), (v1..vk) an inextendable chain of free
    vertices, with total disparity below k.  In the anticanonical-level case
    this is the level-case witness path."""
    from .poset import _upward_runs_in

    if is_anticanonical_level(h):
        return levelcase_witness(h)
    best = None
    for chain in _upward_runs_in(h, free_vertices(h)):
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
    return make_path(h, best[1]), best[2]


def _digits(x: int, p: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _residues_increase(vals: Sequence[int], p: int, e: int) -> bool:
    for e1 in range(1, e):
        q = p**e1
        if any(vals[i] % q <= vals[i - 1] % q for i in range(1, len(vals))):
            return False
    return True


def _level_counts(h: HatPoset) -> dict[int, int]:
    """l_v: number of starting points below or equal to v."""
    S = [h.idx(v) for v in starting_points(h)]
    return {
        v: sum(1 for s in S if h.dist_table[s][v] is not None)
        for v in range(len(h))
        if not h.in_min(v)
    }


def _digit_scheme_ok(h: HatPoset, N: Sequence[int], chain: Sequence[int], p: int, e: int,
                     l: dict[int, int], S: set[int]) -> bool:
    n = p**e - 1
    on_chain = set(chain[1:])
    digs = {v: _digits(N[v], p, e + 1) for v in chain[1:]}
    k = len(chain) - 1
    for j in range(e - 1):
        if any(digs[chain[i]][j] >= digs[chain[i + 1]][j] for i in range(1, k)):
            return False
    for i in range(1, k + 1):
        v = chain[i]
        d = digs[v]
        if d[e] != 0:
            return False
        lv = l[v]
        top = d[e - 1]
        if top * 2 ** (lv + 1) < p:
            return False
        if v in S:
            if top * 2**lv > p - 2**lv:
                return False
        elif top >= digs[chain[i - 1]][e - 1]:
            return False
    for v in range(len(h)):
        if v in on_chain:
            continue
        if h.in_min(v):
            if N[v] != 0:
                return False
            continue
        lv = l[v]
        if N[v] * 2 ** (lv + 1) < n:
            return False
        if v in S:
            if N[v] * 2**lv > n:
                return False
        else:
            (w,) = h.down[v]
            if N[v] > N[w]:
                return False
    return True


@dataclass(frozen=True)
class WitnessFamily:
    p: int
    e: int
    chain: Path
    disparity_sum: int
    witnesses: tuple[ExponentMap, ...]
    scheme: str
    rejected: int = 0

    def __len__(self) -> int:
        return len(self.witnesses)


def nonsplit_witnesses(
    h: HatPoset, p: int, e: int, scheme: str = "residue", verify: bool = True
) -> WitnessFamily:
    """Minimal generators of omega^(1-p^e) built to be indecomposable.

    Along a chain v0 < v1 < ... < vk with total disparity below k, the N-values
    ``N(v) = xi(v) + dist(v, inf)(p^e - 1)`` are required to have strictly
    increasing residues modulo every p^e1, 0 < e1 < e.  With p at least every
    disparity on the chain, such an N cannot be written as
    ``N2 * p^e1 + N1`` with both parts satisfying the chain inequalities.

    ``scheme="residue"`` keeps every generator with that property.
    ``scheme="digits"`` (anticanonical-level rings only) additionally imposes
    the digit boxes scaled by 2^-l_v around starting points, which exist only
    for large p.

    In the anticanonical-level case indecomposability is guaranteed; elsewhere
    it is not, so members are checked with :func:`splits` and failures are
    dropped and counted in ``rejected`` (``verify=False`` skips the check).
    """
    _check_prime_power(p, e)
    if is_pure(h):
        raise WitnessUnavailableError("Gorenstein ring: every generator splits")
    level = is_anticanonical_level(h)
    found = digit_chain(h)
    if found is None:
        raise WitnessUnavailableError("no chain with total disparity below its length")
    chain_path, dsum = found
    chain = [h.idx(v) for v in chain_path.vertices]
    k = len(chain) - 1
    disps = [h.disp_table[a][b] for a, b in zip(chain, chain[1:])]
    if p < max(disps):
        raise WitnessUnavailableError(f"p = {p} is below a chain disparity {max(disps)}")

    S: set[int] = set()
    l: dict[int, int] = {}
    if scheme == "digits":
        if not level:
            raise WitnessUnavailableError("the digit scheme needs an anticanonical-level ring")
        S = {h.idx(v) for v in starting_points(h)}
        l = _level_counts(h)
        if p <= dsum or k > p or any(p <= 2 ** (lv + 1) for lv in l.values()):
            raise WitnessUnavailableError(
                f"p = {p} is below the thresholds of the digit construction"
            )
    elif scheme != "residue":
        raise ValueError(f"unknown scheme {scheme!r}")

    n = p**e - 1
    out = []
    rejected = 0
    for g in enumerate_min_generators(h, n).generators:
        N = n_transform(h, g, n).values
        if not _residues_increase([N[v] for v in chain[1:]], p, e):
            continue
        if scheme == "digits" and not _digit_scheme_ok(h, N, chain, p, e, l, S):
            continue
        if verify and splits(h, g, e, p) is not None:
            rejected += 1
            continue
        out.append(g)
    return WitnessFamily(p, e, chain_path, dsum, tuple(out), scheme, rejected)


def finite_difference_degree(seq: Sequence[int], max_period: int = 4, window: int = 3) -> int:
    """Degree of the (quasi-)polynomial matching ``seq`` on its tail.

    For each period T (1..max_period) every residue class is differenced until
    the trailing ``window`` entries agree; the first T for which all classes
    stabilise at a common degree wins.
    """
    seq = list(seq)
    for T in range(1, max_period + 1):
        degs = set()
        for r in range(T):
            d = _class_degree(seq[r::T], window)
            if d is None:
                break
            degs.add(d)
        else:
            if len(degs) == 1:
                return degs.pop()
    raise InconclusiveError("finite differences did not stabilise", data=seq)


def _class_degree(sub: list[int], window: int) -> int | None:
    diff = list(sub)
    d = 0
    while len(diff) >= window:
        tail = diff[-window:]
        if all(x == tail[0] for x in tail):
            return d
        diff = [b - a for a, b in zip(diff, diff[1:])]
        d += 1
    return None


def symbolic_spread_minus_one(h: HatPoset, n_max: int | None = None) -> int:
    """Growth degree of n -> #generators of omega^(-n) from finite differences."""
    if n_max is None:
        n_max = len(h) + 3
    counts = count_generators(h, n_max)
    return finite_difference_degree(counts)


@dataclass(frozen=True)
class LimitPrediction:
    """``kind`` is "minus-infinity", "exact" (theorem) or "conjectural"."""

    kind: str
    value: int | None
    nonmin_count: int
    spread_minus_one: int | None = None
    note: str = ""

    def render(self) -> str:
        if self.kind == "minus-infinity":
            return "-inf"
        if self.kind == "exact":
            return str(self.value)
        return f"conjectural({self.value})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "nonmin_count": self.nonmin_count,
            "spread_minus_one": self.spread_minus_one,
            "note": self.note,
        }


def predicted_limit_cx(h: HatPoset, n_max: int | None = None) -> LimitPrediction:
    nonmin = len(h) - bin(h.min_mask).count("1")
    if is_pure(h):
        return LimitPrediction("minus-infinity", None, nonmin, 0,
                               "Gorenstein: the Cartier algebra is finitely generated")
    if is_anticanonical_level(h):
        return LimitPrediction("exact", nonmin, nonmin, nonmin,
                               "anticanonical-level: limit equals |P-hat_nonmin|")
    sp = symbolic_spread_minus_one(h, n_max)
    return LimitPrediction(
        "conjectural", sp, nonmin, sp,
        "not anticanonical-level: sp - 1 is an upper bound for the limit; "
        "equality is open in general",
    )


@dataclass(frozen=True)
class ComplexityReport:
    p: int
    c: tuple[int, ...]
    predicted_limit: LimitPrediction
    gorenstein: bool
    level: bool
    anticanonical_level: bool
    nonmin_count: int
    spread_minus_one: int | None
    bounds: tuple[int, ...] = field(default=())

    def rows(self) -> list[tuple[int, int, float | None]]:
        out = []
        for e, ce in enumerate(self.c, start=1):
            rate = math.log(ce, self.p) / e if ce > 0 else None
            out.append((e, ce, rate))
        return out

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "c": list(self.c),
            "h_bounds": list(self.bounds),
            "log_rate": [None if r is None else round(r, 12) for _, _, r in self.rows()],
            "predicted_limit": self.predicted_limit.to_json(),
            "flags": {
                "gorenstein": self.gorenstein,
                "level": self.level,
                "anticanonical_level": self.anticanonical_level,
            },
            "nonmin_count": self.nonmin_count,
            "spread_minus_one": self.spread_minus_one,
        }


def complexity_report(h: HatPoset, p: int, e_max: int, n_max: int | None = None) -> ComplexityReport:
    c = complexity_sequence(h, p, e_max)
    pred = predicted_limit_cx(h, n_max)
    bounds = tuple(len(enumerate_min_generators(h, p**e - 1)) for e in range(1, e_max + 1))
    return ComplexityReport(
        p=p,
        c=tuple(c),
        predicted_limit=pred,
        gorenstein=is_pure(h),
        level=is_level(h),
        anticanonical_level=is_anticanonical_level(h),
        nonmin_count=pred.nonmin_count,
        spread_minus_one=pred.spread_minus_one,
        bounds=bounds,
    )


def witness_is_indecomposable(h: HatPoset, xi: ExponentMap, p: int, e: int) -> bool:
    n = p**e - 1
    return is_minimal_generator(h, xi, n) and splits(h, xi, e, p) is None


__all__ = [
    "TElement",
    "t_multiply",
    "splits",
    "complexity_sequence",
    "nonsplit_witnesses",
    "symbolic_spread_minus_one",
    "predicted_limit_cx",
    "complexity_report",
    "finite_difference_degree",
]
