"""Maurer-Cartan elements, twisting, and base change along ring maps.

An MC element at an object ``X`` is a degree-1 endomorphism η with

    d(η) + η∘η = 0.

Twisting a category by a family ``{X: η_X}`` (missing objects twist by 0)
replaces every differential by

    d_tw(f) = d(f) + η_target∘f − (−1)^{|f|} f∘η_source,

which keeps the Leibniz rule and the strict units and squares to zero
exactly when every η satisfies the MC equation — d_tw²(f) equals the
commutator of the MC defects against f, which is what the mutation tests
in the suite exploit.

Base change: :func:`tensor_with_ring` extends scalars from Q to a
square-zero extension, and :func:`reduce_category` takes the quotient by
the ideal; twisting commutes with reduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .dgcat import (BilTensor, DgCategory, Morphism, SparseCols, Violation,
                    sparsify)
from .rings import RingElement, SquareZeroRing

from . import glin


class InvalidMCObject(ValueError):
    """Raised when twisting by an element that fails the MC equation."""


@dataclass(frozen=True)
class MCElement:
    """A degree-1 endomorphism attached to one object."""

    obj: str
    eta: Morphism


# -- base change ---------------------------------------------------------------

def _map_entries(entries, fn):
    return tuple((i, fn(c)) for i, c in entries)


def _map_category(cat: DgCategory, ring: SquareZeroRing, fn) -> DgCategory:
    diffs: dict = {}
    for key, cols in cat.diffs.items():
        diffs[key] = {j: _map_entries(e, fn) for j, e in cols.items()}
    comps: dict = {}
    for key, tensor in cat.comps.items():
        comps[key] = {ij: _map_entries(e, fn) for ij, e in tensor.items()}
    identities = {x: tuple(fn(c) for c in coords)
                  for x, coords in cat.identities.items()}
    return DgCategory(ring=ring, objects=cat.objects, ranks=dict(cat.ranks),
                      diffs=diffs, comps=comps, identities=identities)


def tensor_with_ring(cat: DgCategory, ring: SquareZeroRing) -> DgCategory:
    """Extend scalars of a category over Q to a square-zero extension."""
    if cat.ring.ideal_rank != 0:
        raise ValueError("can only extend scalars from the rank-0 ring")
    return _map_category(cat, ring, lambda c: ring.element(c.body))


def reduce_category(cat: DgCategory) -> DgCategory:
    """Quotient all structure constants by the square-zero ideal."""
    base = cat.ring.base()
    return _map_category(cat, base, lambda c: RingElement(c.body, ()))


def reduce_morphism(f: Morphism) -> Morphism:
    return Morphism(f.source, f.target, f.degree,
                    tuple(RingElement(c.body, ()) for c in f.coords))


def promote_morphism(cat: DgCategory, f: Morphism) -> Morphism:
    """Lift a rank-0 morphism into ``cat``'s ring with zero ideal part."""
    return Morphism(f.source, f.target, f.degree,
                    tuple(cat.ring.element(c.body) for c in f.coords))


# -- the MC equation -----------------------------------------------------------

def mc_defect(cat: DgCategory, eta: Morphism) -> Morphism:
    """The failure d(η) + η∘η of the MC equation."""
    return cat.differential(eta) + cat.compose(eta, eta)


def check_mc(cat: DgCategory, eta: Morphism) -> list[Violation]:
    """Violations of 'η is an MC element' (empty report = valid)."""
    out: list[Violation] = []
    if eta.source != eta.target:
        out.append(Violation("mc_not_endomorphism", (eta.source, eta.target),
                             "MC elements are endomorphisms"))
        return out
    if eta.degree != 1:
        out.append(Violation("mc_degree", (eta.source, eta.degree),
                             "MC elements have degree 1"))
        return out
    if not mc_defect(cat, eta).is_zero():
        out.append(Violation("mc_equation", (eta.source,),
                             "d(η) + η∘η is nonzero"))
    return out


def twist(cat: DgCategory, elements: Mapping[str, Morphism] | Iterable[MCElement],
          *, validate: bool = True) -> DgCategory:
    """The category with differentials twisted by the given MC family.

    Composition and units are untouched.  With ``validate`` (the default)
    each element must pass :func:`check_mc`; ``validate=False`` exists so
    the test suite can observe how invalid data breaks d² = 0.
    """
    if isinstance(elements, Mapping):
        family = dict(elements)
    else:
        family = {el.obj: el.eta for el in elements}
    for obj, eta in family.items():
        if obj not in cat.identities:
            raise InvalidMCObject(f"unknown object {obj!r}")
        if eta.source != obj or eta.target != obj or eta.degree != 1:
            raise InvalidMCObject(
                f"MC element at {obj!r} must be a degree-1 endomorphism")
        if validate and check_mc(cat, eta):
            raise InvalidMCObject(f"MC equation fails at {obj!r}")

    diffs: dict[tuple[str, str, int], SparseCols] = {}
    for (x, y, t) in sorted(cat.ranks):
        n = cat.rank(x, y, t)
        if n == 0 or cat.rank(x, y, t + 1) == 0:
            continue
        eta_src = family.get(x)
        eta_tgt = family.get(y)
        cols: SparseCols = {}
        sign = (-1) ** t
        for j in range(n):
            basis = cat.basis_morphism(x, y, t, j)
            image = cat.differential(basis)
            if eta_tgt is not None:
                image = image + cat.compose(eta_tgt, basis)
            if eta_src is not None:
                image = image - cat.compose(basis, eta_src).scale(sign)
            entries = sparsify(image.coords)
            if entries:
                cols[j] = entries
        if cols:
            diffs[(x, y, t)] = cols

    return DgCategory(ring=cat.ring, objects=cat.objects,
                      ranks=dict(cat.ranks), diffs=diffs,
                      comps=dict(cat.comps), identities=dict(cat.identities))


# -- sampling ------------------------------------------------------------------

def random_mc_element(cat: DgCategory, obj: str,
                      rng: random.Random) -> Morphism:
    """A random MC element at ``obj``.

    Over a square-zero extension any element whose coordinates lie in the
    ideal and whose layers are body-differential cycles is MC (the square
    dies in I²) — a linear condition.  Over Q the equation is genuinely
    quadratic, so cycles are rejection-sampled for a vanishing square.
    Falls back to 0 (always MC) when sampling finds nothing.
    """
    from fractions import Fraction

    rank1 = cat.rank(obj, obj, 1)
    zero = cat.zero(obj, obj, 1)
    if rank1 == 0:
        return zero

    dense = cat.dense_differential(obj, obj, 1)
    m = cat.ring.ideal_rank

    def body_cycle_basis() -> list[list[Fraction]]:
        if not dense:
            return [[Fraction(1 if i == j else 0) for j in range(rank1)]
                    for i in range(rank1)]
        rows = [[e.body for e in row] for row in dense]
        return glin.rational_nullspace(rows, rank1)

    basis = body_cycle_basis()

    def random_combo() -> list[Fraction]:
        coords = [Fraction(0)] * rank1
        for vec in basis:
            weight = rng.randint(-2, 2)
            if weight:
                for i, c in enumerate(vec):
                    coords[i] += c * weight
        return coords

    if m > 0:
        for _ in range(8):
            layers = [random_combo() for _ in range(m)]
            coords = tuple(RingElement(Fraction(0),
                                       tuple(layers[l][i] for l in range(m)))
                           for i in range(rank1))
            candidate = Morphism(obj, obj, 1, coords)
            if not check_mc(cat, candidate):
                return candidate
        return zero

    for _ in range(12):
        coords = tuple(RingElement(c, ()) for c in random_combo())
        candidate = Morphism(obj, obj, 1, coords)
        if not check_mc(cat, candidate):
            return candidate
    return zero
