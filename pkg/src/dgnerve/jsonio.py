"""JSON document formats for categories, simplices, horns, and fillers.

All numeric payloads are exact rationals encoded as strings ("2/3"); ring
elements over a square-zero extension are lists ``[body, ideal₁, …]``.
Structured keys (vertex sequences) are comma-joined strings ("0,1,2").
``canonical_dumps`` fixes key order and whitespace so that equal documents
serialize to identical bytes — the CLI's determinism contract.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .dgcat import DgCategory, Morphism
from .horn import Filler, HornData
from .nerve import NerveSimplex, Seq, increasing_sequences
from .rings import (RingElement, SquareZeroRing, element_from_json,
                    element_to_json)


def canonical_dumps(doc: Any) -> str:
    """Deterministic, diff-friendly JSON text (sorted keys, newline at end)."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def seq_to_key(seq: Seq) -> str:
    return ",".join(str(v) for v in seq)


def key_to_seq(key: str) -> Seq:
    try:
        seq = tuple(int(part) for part in key.split(","))
    except ValueError:
        raise ValueError(f"bad sequence key {key!r}") from None
    if len(seq) < 2 or any(a >= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"sequence key {key!r} is not strictly increasing "
                         "with at least two vertices")
    return seq


def _elem_doc(value: Any) -> Any:
    """Normalize a ring-element document: allow bare ints, forbid floats."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("ring elements must be exact: use \"p/q\" strings")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, list):
        return [_elem_doc(item) for item in value]
    if isinstance(value, str):
        return value
    raise ValueError(f"cannot read a ring element from {value!r}")


def _coords_from(doc: Any, ring: SquareZeroRing) -> tuple[RingElement, ...]:
    if not isinstance(doc, list):
        raise ValueError("coordinate vectors must be JSON lists")
    return tuple(element_from_json(_elem_doc(item), ring) for item in doc)


def _coords_to(coords: tuple[RingElement, ...]) -> list:
    return [element_to_json(c) for c in coords]


# -- categories -----------------------------------------------------------------

def category_to_json(cat: DgCategory) -> dict:
    ranks = sorted([x, y, t, r] for (x, y, t), r in cat.ranks.items())
    diffs = []
    for (x, y, t), cols in sorted(cat.diffs.items()):
        entries = sorted([j, i, element_to_json(a)]
                         for j, col in cols.items() for i, a in col)
        diffs.append([x, y, t, entries])
    comps = []
    for (x, y, z, s, t), tensor in sorted(cat.comps.items()):
        entries = sorted([i, j, r, element_to_json(a)]
                         for (i, j), cells in tensor.items()
                         for r, a in cells)
        comps.append([x, y, z, s, t, entries])
    identities = sorted([x, _coords_to(coords)]
                        for x, coords in cat.identities.items())
    return {"kind": "category", "ring": cat.ring.ideal_rank,
            "objects": list(cat.objects), "ranks": ranks, "diffs": diffs,
            "comps": comps, "identities": identities}


def category_from_json(doc: Mapping) -> DgCategory:
    if not isinstance(doc, Mapping):
        raise ValueError("category document must be a JSON object")
    rank = doc.get("ring", 0)
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise ValueError("\"ring\" must be a nonnegative ideal rank")
    ring = SquareZeroRing(rank)
    objects = doc.get("objects")
    if (not isinstance(objects, list) or not objects
            or any(not isinstance(x, str) for x in objects)
            or len(set(objects)) != len(objects)):
        raise ValueError("\"objects\" must be a list of distinct names")
    known = set(objects)

    def obj(name: Any) -> str:
        if name not in known:
            raise ValueError(f"unknown object {name!r}")
        return name

    def integer(value: Any) -> int:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"expected an integer, got {value!r}")
        return value

    ranks = {}
    for record in doc.get("ranks", []):
        x, y, t, r = record
        if integer(r) < 0:
            raise ValueError("ranks must be nonnegative")
        ranks[(obj(x), obj(y), integer(t))] = r
    diffs = {}
    for record in doc.get("diffs", []):
        x, y, t, entries = record
        cols: dict[int, list] = {}
        for j, i, a in entries:
            cols.setdefault(integer(j), []).append(
                (integer(i), element_from_json(_elem_doc(a), ring)))
        diffs[(obj(x), obj(y), integer(t))] = {
            j: tuple(v) for j, v in cols.items()}
    comps = {}
    for record in doc.get("comps", []):
        x, y, z, s, t, entries = record
        tensor: dict[tuple[int, int], list] = {}
        for i, j, r, a in entries:
            tensor.setdefault((integer(i), integer(j)), []).append(
                (integer(r), element_from_json(_elem_doc(a), ring)))
        comps[(obj(x), obj(y), obj(z), integer(s), integer(t))] = {
            key: tuple(v) for key, v in tensor.items()}
    identities = {}
    for record in doc.get("identities", []):
        x, coords = record
        identities[obj(x)] = _coords_from(coords, ring)
    missing = known - set(identities)
    if missing:
        raise ValueError(f"objects without identities: {sorted(missing)}")
    return DgCategory(ring=ring, objects=tuple(objects), ranks=ranks,
                      diffs=diffs, comps=comps, identities=identities)


# -- simplices, horns, fillers -----------------------------------------------------

def _cells_to_json(cells: Mapping[Seq, Morphism]) -> dict:
    return {seq_to_key(seq): _coords_to(cell.coords)
            for seq, cell in sorted(cells.items())}


def _cells_from_json(doc: Any, cat: DgCategory,
                     objects: tuple[str, ...]) -> dict[Seq, Morphism]:
    if not isinstance(doc, Mapping):
        raise ValueError("\"cells\" must be a JSON object")
    n = len(objects) - 1
    cells = {}
    for key, coords_doc in doc.items():
        seq = key_to_seq(key)
        if seq[-1] > n:
            raise ValueError(f"cell key {key!r} exceeds dimension {n}")
        degree = 1 - (len(seq) - 1)
        source, target = objects[seq[0]], objects[seq[-1]]
        coords = _coords_from(coords_doc, cat.ring)
        if len(coords) != cat.rank(source, target, degree):
            raise ValueError(
                f"cell {key!r} has {len(coords)} coordinates; hom("
                f"{source}, {target}) has rank "
                f"{cat.rank(source, target, degree)} in degree {degree}")
        cells[seq] = Morphism(source, target, degree, coords)
    return cells


def _objects_from(doc: Mapping, cat: DgCategory, n: int) -> tuple[str, ...]:
    objects = doc.get("objects")
    if (not isinstance(objects, list) or len(objects) != n + 1
            or any(x not in cat.identities for x in objects)):
        raise ValueError("\"objects\" must list n+1 object names from the "
                         "category")
    return tuple(objects)


def _dimension_from(doc: Mapping) -> int:
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("\"n\" must be a nonnegative integer")
    return n


def simplex_to_json(simplex: NerveSimplex) -> dict:
    return {"kind": "simplex", "n": simplex.n,
            "objects": list(simplex.objects),
            "cells": _cells_to_json(simplex.cells)}


def simplex_from_json(doc: Mapping, cat: DgCategory) -> NerveSimplex:
    n = _dimension_from(doc)
    objects = _objects_from(doc, cat, n)
    return NerveSimplex(objects, _cells_from_json(doc.get("cells", {}),
                                                  cat, objects))


def horn_to_json(horn: HornData) -> dict:
    return {"kind": "horn", "n": horn.n, "k": horn.k,
            "objects": list(horn.objects),
            "missing": [seq_to_key(s) for s in horn.missing],
            "cells": _cells_to_json(horn.cells)}


def horn_from_json(doc: Mapping, cat: DgCategory) -> HornData:
    n = _dimension_from(doc)
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= n:
        raise ValueError("\"k\" must be an integer with 0 <= k <= n")
    objects = _objects_from(doc, cat, n)
    horn = HornData(n, k, objects,
                    _cells_from_json(doc.get("cells", {}), cat, objects))
    declared = doc.get("missing")
    if declared is not None:
        expected = [seq_to_key(s) for s in horn.missing]
        if declared != expected:
            raise ValueError(f"\"missing\" is {declared}, but an (n={n}, "
                             f"k={k}) horn omits {expected}")
    return horn


def filler_to_json(filler: Filler, objects: tuple[str, ...]) -> dict:
    horn = HornData(filler.n, filler.k, objects, {})
    cells = {horn.missing_face: filler.face, horn.full_seq: filler.top}
    return {"kind": "filler", "n": filler.n, "k": filler.k,
            "objects": list(objects), "cells": _cells_to_json(cells)}


def filler_from_json(doc: Mapping, cat: DgCategory) -> Filler:
    n = _dimension_from(doc)
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= n:
        raise ValueError("\"k\" must be an integer with 0 <= k <= n")
    objects = _objects_from(doc, cat, n)
    cells = _cells_from_json(doc.get("cells", {}), cat, objects)
    shape = HornData(n, k, objects, {})
    want = {shape.missing_face, shape.full_seq}
    if set(cells) != want:
        raise ValueError("filler must provide exactly the cells "
                         + " and ".join(sorted(seq_to_key(s) for s in want)))
    return Filler(n, k, top=cells[shape.full_seq],
                  face=cells[shape.missing_face])


def mc_to_json(eta: Morphism) -> dict:
    return {"kind": "mc", "object": eta.source, "eta": _coords_to(eta.coords)}


def mc_from_json(doc: Mapping, cat: DgCategory) -> Morphism:
    obj = doc.get("object")
    if obj not in cat.identities:
        raise ValueError(f"unknown object {obj!r}")
    coords = _coords_from(doc.get("eta", []), cat.ring)
    if len(coords) != cat.rank(obj, obj, 1):
        raise ValueError("\"eta\" has the wrong number of coordinates")
    return Morphism(obj, obj, 1, coords)


DOCUMENT_KINDS = ("category", "simplex", "horn", "filler", "mc")


def detect_kind(doc: Mapping) -> str:
    """The declared or structurally inferred document kind."""
    kind = doc.get("kind")
    if kind is not None:
        if kind not in DOCUMENT_KINDS:
            raise ValueError(f"unknown document kind {kind!r}")
        return kind
    if "ranks" in doc or "comps" in doc:
        return "category"
    if "missing" in doc:
        return "horn"
    if "eta" in doc:
        return "mc"
    if "cells" in doc:
        return "simplex"
    raise ValueError("cannot infer document kind; add a \"kind\" field")
