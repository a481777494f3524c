"""Plain-text poset files.

    # comment
    name: segre_3_2
    elements: v1 v2 v3
    v2 < v1

Element lists may be separated by spaces or commas.  Relation lines may be
chained (``a < b < c``) and need not be covers; they are reduced on load.
"""
from __future__ import annotations

import hashlib
from pathlib import Path as FsPath

from .errors import InvalidPosetError, PosetParseError
from .poset import NAME_RE, RESERVED, Poset


def _check_name(tok: str, line: int) -> str:
    if tok in RESERVED:
        raise PosetParseError(f"element name {tok!r} is reserved", line)
    if not NAME_RE.match(tok):
        raise PosetParseError(f"invalid identifier {tok!r}", line)
    return tok


def parse_poset(text: str, name: str = "") -> Poset:
    elements: list[str] | None = None
    relations: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and "<" not in key:
            key = key.strip().lower()
            if key == "name":
                name = rest.strip()
            elif key == "elements":
                if elements is not None:
                    raise PosetParseError("duplicate elements line", lineno)
                toks = rest.replace(",", " ").split()
                elements = [_check_name(t, lineno) for t in toks]
                if len(set(elements)) != len(elements):
                    raise PosetParseError("duplicate element identifier", lineno)
            else:
                raise PosetParseError(f"unknown header {key!r}", lineno)
            continue
        if elements is None:
            raise PosetParseError("relation before the elements line", lineno)
        parts = [p.strip() for p in line.split("<")]
        if len(parts) < 2 or any(not p for p in parts):
            raise PosetParseError(f"expected 'a < b', got {raw.strip()!r}", lineno)
        for p in parts:
            _check_name(p, lineno)
            if p not in elements:
                raise PosetParseError(f"undeclared element {p!r}", lineno)
        relations.extend(zip(parts, parts[1:]))
    if elements is None:
        raise PosetParseError("missing elements line", None)
    try:
        return Poset.from_relations(elements, relations, name=name)
    except InvalidPosetError as exc:
        raise PosetParseError(str(exc), None) from exc


def load_poset(path: str | FsPath) -> Poset:
    path = FsPath(path)
    return parse_poset(path.read_text(), name=path.stem)


def serialize_poset(p: Poset) -> str:
    lines = []
    if p.name:
        lines.append(f"name: {p.name}")
    lines.append("elements: " + " ".join(p.elements))
    lines += [f"{a} < {b}" for a, b in p.sorted_covers()]
    return "\n".join(lines) + "\n"


def digest(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()
