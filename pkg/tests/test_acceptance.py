"""Acceptance criteria, one test per criterion (8 is split in two halves).

Each test records a one-line verdict; the lines are printed in the terminal
summary of the pytest run.
"""
import math
import random
import time

import oracles
from hibicx import build_hat, fixtures
from hibicx.canonical import (
    canonical_generators,
    compatible_mixed_paths,
    digit_partition,
    enumerate_min_generators,
    in_module,
    is_anticanonical_level,
    is_level,
    is_minimal_generator,
    lower_bounds,
    minimal_degree,
    module_elements,
)
from hibicx.frobenius import (
    TElement,
    complexity_sequence,
    nonsplit_witnesses,
    predicted_limit_cx,
    symbolic_spread_minus_one,
    t_multiply,
)
from hibicx.hibi import ExponentMap, poset_ideals, presentation
from hibicx.poset import BOTTOM, TOP, is_pure, nonmin_subset, upward_minimal_mixed_paths

VERDICTS: dict[str, str] = {}


def record(key, ok, detail, elapsed, limit):
    ok = ok and elapsed < limit
    VERDICTS[key] = f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail}; {elapsed:.2f}s of {limit}s)"
    print(VERDICTS[key])
    assert ok, VERDICTS[key]


def load(name):
    return build_hat(fixtures.load(name))


def test_criterion_1_segre_example():
    t = time.perf_counter()
    h = load("segre_3_2")
    ideals = {I.members for I in poset_ideals(h.base)}
    # a=t, b=t x3, c=t x2 x3, d=t x2, e=t x1 x2, f=t x1 x2 x3 in the listed order
    listed = {frozenset(s) for s in [(), ("v3",), ("v2", "v3"), ("v2",), ("v1", "v2"), ("v1", "v2", "v3")]}
    rels = presentation(h.base)
    ok = ideals == listed and len(rels) == 3 and not is_pure(h) and is_anticanonical_level(h)
    record("1", ok, f"{len(ideals)} ideals, {len(rels)} relations", time.perf_counter() - t, 1)


def test_criterion_2_segre_limits():
    t = time.perf_counter()
    got = {}
    for m, n in [(3, 2), (4, 2), (4, 3), (2, 2), (3, 3)]:
        pred = predicted_limit_cx(load(f"segre_{m}_{n}"))
        got[(m, n)] = pred.render()
        if m == n:
            ok = pred.kind == "minus-infinity"
        else:
            ok = pred.kind == "exact" and pred.value == m - 1
        if not ok:
            break
    record("2", ok, ", ".join(f"S_{m},{n}->{v}" for (m, n), v in got.items()), time.perf_counter() - t, 10)


def test_criterion_3_levelex1():
    t = time.perf_counter()
    h = load("levelex1")
    inv = enumerate_min_generators(h, 1).degrees
    can = canonical_generators(h).degrees
    ok = inv == {-3, -2} and can == {4} and is_level(h) and not is_anticanonical_level(h)
    record("3", ok, f"omega^(-1) {sorted(inv)}, omega {sorted(can)}", time.perf_counter() - t, 5)


def test_criterion_4_levelex2():
    t = time.perf_counter()
    h = load("levelex2")
    inv = enumerate_min_generators(h, 1).degrees
    can = canonical_generators(h).degrees
    pred = predicted_limit_cx(h)
    nonmin = len(nonmin_subset(h))
    ok = (
        inv == {-3}
        and can == {4, 5}
        and not is_level(h)
        and is_anticanonical_level(h)
        and pred.kind == "exact"
        and pred.value == nonmin
    )
    record("4", ok, f"omega^(-1) {sorted(inv)}, omega {sorted(can)}, limit {pred.value}", time.perf_counter() - t, 5)


def test_criterion_5_section5():
    t = time.perf_counter()
    h = load("section5")
    paths = upward_minimal_mixed_paths(h)
    sp = symbolic_spread_minus_one(h)
    fam = nonsplit_witnesses(h, 5, 2)
    ok = (
        [q.vertices for q in paths] == [(BOTTOM, "v5", "v4", "v3", "v2", "v1", TOP)]
        and sp == 2
        and len(fam) >= math.comb(5, 2) ** 2
    )
    record("5", ok, f"{len(paths)} mixed path, sp-1 = {sp}, {len(fam)} witnesses", time.perf_counter() - t, 60)


def test_criterion_6_growth_law():
    t = time.perf_counter()
    worst = 0.0
    details = []
    ok = True
    for name in fixtures.names():
        h = load(name)
        if not is_anticanonical_level(h):
            continue
        t0 = time.perf_counter()
        deg = symbolic_spread_minus_one(h, len(h) + 3)
        worst = max(worst, time.perf_counter() - t0)
        details.append(f"{name}:{deg}")
        ok = ok and deg == len(nonmin_subset(h))
    record("6", ok and worst < 120, " ".join(details), time.perf_counter() - t, 120 * len(details))


def test_criterion_7_gorenstein_sequences():
    t = time.perf_counter()
    ok = True
    for name in fixtures.names():
        h = load(name)
        if not is_pure(h):
            continue
        for p in (2, 3):
            ok = ok and complexity_sequence(h, p, 3) == [1, 0, 0]
    record("7", ok, "c = (1,0,0) for every Gorenstein fixture", time.perf_counter() - t, 120)


def test_criterion_8a_witnesses_do_not_split():
    t = time.perf_counter()
    h = load("segre_3_2")
    sizes = []
    ok = True
    for p in (2, 3):
        fam = nonsplit_witnesses(h, p, 2)
        sizes.append(len(fam))
        ok = ok and len(fam) > 0
        for g in fam.witnesses:
            ok = ok and not oracles.splits(h.base, g.as_dict(h), 2, p)
    record("8a", ok, f"witness families of size {sizes} all indecomposable", time.perf_counter() - t, 300)


def test_criterion_8b_growth_rate_at_p5():
    t = time.perf_counter()
    h = load("segre_3_2")
    c = complexity_sequence(h, 5, 2)
    rate = math.log(c[1], 5) / 2
    target = len(nonmin_subset(h))
    ok = abs(rate - target) <= 0.35
    record("8b", ok, f"c_2 = {c[1]}, log_5(c_2)/2 = {rate:.4f} vs {target} +- 0.35", time.perf_counter() - t, 300)


def test_criterion_9_property_suites():
    t = time.perf_counter()
    rng = random.Random(20240601)
    failures = []
    checked = 0
    for trial in range(200):
        p = oracles.random_poset(rng, 6)
        h = build_hat(p)
        d = h.dist_table
        r = range(len(h))
        for u in r:
            for v in r:
                if d[u][v] is None:
                    continue
                if h.disp_table[u][v] < 0:
                    failures.append(("disp", trial, u, v))
                for w in r:
                    if d[v][w] is not None and d[u][w] > d[u][v] + d[v][w]:
                        failures.append(("triangle", trial, u, v, w))
        gens = {n: enumerate_min_generators(h, n).generators for n in (0, 1, 2, 3)}
        for a in (1, 2):
            for b in (1, 2):
                x, y = rng.choice(gens[a]), rng.choice(gens[b])
                if not in_module(h, x + y, a + b):
                    failures.append(("additivity", trial, a, b))
        for n in (1, 2, 3):
            for g in gens[n]:
                parts = digit_partition(h, g, n)
                total = ExponentMap.zero(h)
                for part in parts:
                    total = total + part
                    if not is_minimal_generator(h, part, 1):
                        failures.append(("part-minimality", trial, n))
                if total != g:
                    failures.append(("reassembly", trial, n))
            for xi in module_elements(h, n, lower_bounds(h, n)[0] + 2, slack=1):
                if xi.degree == minimal_degree(h, n):
                    continue
                checked += 1
                if is_minimal_generator(h, xi, n) != bool(compatible_mixed_paths(h, xi, n)):
                    failures.append(("mixed-path", trial, n, xi.values))
        q = rng.choice([2, 3])
        el = []
        for _ in range(3):
            e = rng.randint(0, 2)
            el.append(TElement(e, q, rng.choice(gens[0] if e == 0 else enumerate_min_generators(h, q**e - 1).generators)))
        a, b, c = el
        if t_multiply(t_multiply(a, b), c) != t_multiply(a, t_multiply(b, c)):
            failures.append(("associativity", trial))
    record("9", not failures, f"200 posets, {checked} non-rigid elements, {len(failures)} failures", time.perf_counter() - t, 600)
