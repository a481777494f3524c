import itertools
import random

import pytest

import oracles
from hibicx import ExponentMap, PreconditionError, build_hat
from hibicx.fixtures import antichain, chain
from hibicx.hibi import (
    hibi_generator,
    ideal_from_members,
    in_ring,
    poset_ideals,
    presentation,
    presentation_text,
    ring_factorization,
)


def test_segre_ideals(hat):
    h = hat("segre_3_2")
    got = {I.members for I in poset_ideals(h.base)}
    want = {frozenset(s) for s in [(), ("v2",), ("v3",), ("v2", "v3"), ("v1", "v2"), ("v1", "v2", "v3")]}
    assert got == want
    assert len(presentation(h.base)) == 3


def test_presentation_small():
    assert presentation(chain(3)) == []
    assert len(presentation(antichain(2))) == 1
    (rel,) = presentation_text(antichain(2))
    assert rel == "X_{v1}*X_{v2} - X_{}*X_{v1,v2}"


def test_segre_membership(hat):
    h = hat("segre_3_2")
    xi = h.exponent_map({"-inf": 1, "v1": 1})
    assert not in_ring(h, xi)
    for I in poset_ideals(h.base):
        assert in_ring(h, hibi_generator(h, I))


def test_ideal_from_members(hat):
    p = hat("segre_3_2").base
    assert ideal_from_members(p, ["v2", "v1"]).members == {"v1", "v2"}
    with pytest.raises(PreconditionError):
        ideal_from_members(p, ["v1"])


def test_exponent_map_inf_must_vanish():
    with pytest.raises(PreconditionError):
        ExponentMap((1, 0, 1))


@pytest.mark.parametrize("seed", range(25))
def test_ideals_lattice_and_membership(seed):
    rng = random.Random(seed)
    p = oracles.random_poset(rng, 5)
    h = build_hat(p)
    ideals = poset_ideals(p)
    masks = {I.mask for I in ideals}
    assert {I.members for I in ideals} == set(oracles.ideals(p))
    for a, b in itertools.combinations(masks, 2):
        assert a | b in masks and a & b in masks
    n_incomparable = sum(
        1 for a, b in itertools.combinations(masks, 2) if a & b not in (a, b)
    )
    assert len(presentation(p)) == n_incomparable
    # box [0,3]^{P-hat} against the subset-sum oracle
    names = h.vertices[:-1]
    for _ in range(40):
        xi = {v: rng.randint(0, 3) for v in names}
        xi["inf"] = 0
        em = h.exponent_map(xi)
        assert in_ring(h, em) == oracles.in_ring(p, xi)
        fac = ring_factorization(h, em)
        if fac is not None:
            total = ExponentMap.zero(h)
            for I in fac:
                total = total + hibi_generator(h, I)
            assert total == em
