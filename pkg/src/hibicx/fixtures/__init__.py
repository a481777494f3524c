"""Shipped example posets and small generators for families of posets."""
from __future__ import annotations

from importlib import resources

from ..io import parse_poset
from ..poset import Poset


def chain(k: int) -> Poset:
    els = [f"v{i}" for i in range(1, k + 1)]
    return Poset.from_relations(els, zip(els, els[1:]), name=f"chain_{k}")


def antichain(k: int) -> Poset:
    return Poset.from_relations([f"v{i}" for i in range(1, k + 1)], [], name=f"antichain_{k}")


def segre(m: int, n: int) -> Poset:
    """Poset of the Segre product of polynomial rings in m and n variables:
    disjoint chains of m - 1 and n - 1 elements."""
    a = [f"a{i}" for i in range(1, m)]
    b = [f"b{i}" for i in range(1, n)]
    rels = list(zip(a, a[1:])) + list(zip(b, b[1:]))
    return Poset.from_relations(a + b, rels, name=f"segre_{m}_{n}")


def names() -> list[str]:
    return sorted(
        f.name[: -len(".poset")]
        for f in resources.files(__package__).iterdir()
        if f.name.endswith(".poset")
    )


def path(name: str):
    return resources.files(__package__) / f"{name}.poset"


def load(name: str) -> Poset:
    f = path(name)
    if not f.is_file():
        raise KeyError(f"no fixture named {name!r}")
    return parse_poset(f.read_text(), name=name)
