"""Finite dg-categories with exact structure constants.

A :class:`DgCategory` has finitely many objects; each hom space
``hom(X, Y)`` is a graded module of finite total rank over a square-zero
extension of Q, carried as a rank table plus sparse structure tensors:

* ``diffs`` — per (X, Y, degree) the matrix of the degree +1 differential,
  stored column-sparse (basis index → entries of its image);
* ``comps`` — per (X, Y, Z, s, t) the bilinear composition tensor
  ``hom(Y, Z)_t × hom(X, Y)_s → hom(X, Z)_{s+t}``, stored as
  ``(outer index, inner index) → coordinate entries``;
* ``identities`` — coordinates of the strict unit of each object in degree 0.

The axioms checked by :func:`check_axioms` are d² = 0, the Leibniz rule

    d(g∘f) = d(g)∘f + (−1)^{|g|} g∘d(f),

associativity, and strict unitality.  Violations are returned as data, not
raised, so corrupted inputs can be reported coordinate by coordinate.

Morphisms are homogeneous: an element of a single ``hom(X, Y)_degree``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import glin
from .rings import (RATIONALS, RingElement, SquareZeroRing, random_element,
                    as_rational)

Entries = tuple[tuple[int, RingElement], ...]   # sparse coordinate vector
SparseCols = dict[int, Entries]                 # column index → image entries
BilTensor = dict[tuple[int, int], Entries]      # (outer, inner) → entries


class InvalidComplex(ValueError):
    """Raised for chain-complex input whose differential fails d² = 0."""


class NotEquivalence(ValueError):
    """Raised when no homotopy-inverse witness exists for a morphism."""


@dataclass(frozen=True)
class Violation:
    """One failed identity, with enough location data to find it."""

    kind: str
    location: tuple
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "location": [str(part) for part in self.location],
                "detail": self.detail}


@dataclass(frozen=True)
class Morphism:
    """A homogeneous hom element: source, target, degree, coordinates."""

    source: str
    target: str
    degree: int
    coords: tuple[RingElement, ...]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def in_ideal(self) -> bool:
        return all(c.in_ideal() for c in self.coords)

    def _check_shape(self, other: "Morphism") -> None:
        if (self.source, self.target, self.degree) != \
                (other.source, other.target, other.degree):
            raise ValueError(
                f"morphism shape mismatch: "
                f"{self.source}->{self.target} deg {self.degree} vs "
                f"{other.source}->{other.target} deg {other.degree}")
        if len(self.coords) != len(other.coords):
            raise ValueError("morphism rank mismatch")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_shape(other)
        return Morphism(self.source, self.target, self.degree,
                        tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._check_shape(other)
        return Morphism(self.source, self.target, self.degree,
                        tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, self.degree,
                        tuple(-a for a in self.coords))

    def scale(self, scalar: int | Fraction | RingElement) -> "Morphism":
        if isinstance(scalar, int):
            if scalar == 1:
                return self
            if scalar == -1:
                return -self
        return Morphism(self.source, self.target, self.degree,
                        tuple(c * scalar for c in self.coords))


@dataclass
class DgCategory:
    """Finite dg-category presented by ranks and structure tensors."""

    ring: SquareZeroRing
    objects: tuple[str, ...]
    ranks: dict[tuple[str, str, int], int]
    diffs: dict[tuple[str, str, int], SparseCols]
    comps: dict[tuple[str, str, str, int, int], BilTensor]
    identities: dict[str, tuple[RingElement, ...]]

    # -- bookkeeping -------------------------------------------------------

    def rank(self, source: str, target: str, degree: int) -> int:
        return self.ranks.get((source, target, degree), 0)

    def degrees(self, source: str, target: str) -> list[int]:
        return sorted(t for (x, y, t), r in self.ranks.items()
                      if x == source and y == target and r > 0)

    def zero(self, source: str, target: str, degree: int) -> Morphism:
        n = self.rank(source, target, degree)
        return Morphism(source, target, degree, (self.ring.zero(),) * n)

    def identity(self, obj: str) -> Morphism:
        return Morphism(obj, obj, 0, self.identities[obj])

    def basis_morphism(self, source: str, target: str,
                       degree: int, index: int) -> Morphism:
        n = self.rank(source, target, degree)
        if not 0 <= index < n:
            raise ValueError("basis index out of range")
        coords = [self.ring.zero()] * n
        coords[index] = self.ring.one()
        return Morphism(source, target, degree, tuple(coords))

    def morphism(self, source: str, target: str, degree: int,
                 coords: Iterable) -> Morphism:
        tup = tuple(c if isinstance(c, RingElement)
                    else self.ring.from_rational(as_rational(c))
                    for c in coords)
        if len(tup) != self.rank(source, target, degree):
            raise ValueError("coordinate vector has wrong length")
        return Morphism(source, target, degree, tup)

    # -- dg-structure ------------------------------------------------------

    def differential(self, f: Morphism) -> Morphism:
        out_rank = self.rank(f.source, f.target, f.degree + 1)
        acc = [self.ring.zero()] * out_rank
        cols = self.diffs.get((f.source, f.target, f.degree))
        if cols:
            for j, c in enumerate(f.coords):
                if c.is_zero():
                    continue
                for i, a in cols.get(j, ()):
                    acc[i] = acc[i] + a * c
        return Morphism(f.source, f.target, f.degree + 1, tuple(acc))

    def compose(self, outer: Morphism, inner: Morphism) -> Morphism:
        """``outer ∘ inner`` (apply ``inner`` first)."""
        if inner.target != outer.source:
            raise ValueError(
                f"morphisms do not compose: {inner.source}->{inner.target} "
                f"then {outer.source}->{outer.target}")
        degree = inner.degree + outer.degree
        out_rank = self.rank(inner.source, outer.target, degree)
        acc = [self.ring.zero()] * out_rank
        tensor = self.comps.get((inner.source, inner.target, outer.target,
                                 inner.degree, outer.degree))
        if tensor:
            nz_outer = [(i, c) for i, c in enumerate(outer.coords)
                        if not c.is_zero()]
            nz_inner = [(j, c) for j, c in enumerate(inner.coords)
                        if not c.is_zero()]
            for i, ci in nz_outer:
                for j, cj in nz_inner:
                    entries = tensor.get((i, j))
                    if entries:
                        coeff = ci * cj
                        for r, a in entries:
                            acc[r] = acc[r] + a * coeff
        return Morphism(inner.source, outer.target, degree, tuple(acc))

    def dense_differential(self, source: str, target: str,
                           degree: int) -> list[list[RingElement]]:
        """The differential hom_degree → hom_{degree+1} as a dense matrix."""
        rows = self.rank(source, target, degree + 1)
        cols_n = self.rank(source, target, degree)
        mat = [[self.ring.zero() for _ in range(cols_n)] for _ in range(rows)]
        cols = self.diffs.get((source, target, degree), {})
        for j, entries in cols.items():
            for i, a in entries:
                mat[i][j] = a
        return mat

    def random_morphism(self, source: str, target: str, degree: int,
                        rng: random.Random, *,
                        ideal_noise: bool = True,
                        ideal_only: bool = False) -> Morphism:
        n = self.rank(source, target, degree)
        return Morphism(source, target, degree,
                        tuple(random_element(self.ring, rng,
                                             ideal_noise=ideal_noise,
                                             ideal_only=ideal_only)
                              for _ in range(n)))


def sparsify(coords: Sequence[RingElement]) -> Entries:
    return tuple((i, c) for i, c in enumerate(coords) if not c.is_zero())


# -- axiom checking -----------------------------------------------------------

def check_axioms(cat: DgCategory) -> list[Violation]:
    """Every broken dg-category identity, as data."""
    out: list[Violation] = []
    objects = cat.objects

    for obj in objects:
        if obj not in cat.identities:
            out.append(Violation("missing_identity", (obj,),
                                 "object has no unit element"))
            continue
        if len(cat.identities[obj]) != cat.rank(obj, obj, 0):
            out.append(Violation("identity_rank", (obj,),
                                 "unit coordinates do not match hom rank"))

    # d² = 0 and unit closedness
    for (x, y, t) in sorted(cat.ranks):
        if cat.rank(x, y, t) == 0:
            continue
        for j in range(cat.rank(x, y, t)):
            basis = cat.basis_morphism(x, y, t, j)
            dd = cat.differential(cat.differential(basis))
            if not dd.is_zero():
                out.append(Violation("d_squared", (x, y, t, j),
                                     "d(d(basis element)) is nonzero"))
    for obj in objects:
        if obj in cat.identities and cat.rank(obj, obj, 0) == len(cat.identities[obj]):
            if not cat.differential(cat.identity(obj)).is_zero():
                out.append(Violation("unit_not_closed", (obj,),
                                     "d(identity) is nonzero"))

    # units absorb
    for (x, y, t) in sorted(cat.ranks):
        if cat.rank(x, y, t) == 0:
            continue
        for j in range(cat.rank(x, y, t)):
            basis = cat.basis_morphism(x, y, t, j)
            if cat.compose(cat.identity(y), basis) != basis:
                out.append(Violation("unit_left", (x, y, t, j),
                                     "1∘f differs from f"))
            if cat.compose(basis, cat.identity(x)) != basis:
                out.append(Violation("unit_right", (x, y, t, j),
                                     "f∘1 differs from f"))

    # Leibniz rule on all basis pairs
    for x, y, z in itertools.product(objects, repeat=3):
        for s in cat.degrees(x, y):
            for t in cat.degrees(y, z):
                for j in range(cat.rank(x, y, s)):
                    f = cat.basis_morphism(x, y, s, j)
                    df = cat.differential(f)
                    for i in range(cat.rank(y, z, t)):
                        g = cat.basis_morphism(y, z, t, i)
                        lhs = cat.differential(cat.compose(g, f))
                        rhs = cat.compose(cat.differential(g), f) + \
                            cat.compose(g, df).scale((-1) ** t)
                        if lhs != rhs:
                            out.append(Violation(
                                "leibniz", (x, y, z, s, t, i, j),
                                "d(g∘f) ≠ d(g)∘f + (−1)^{|g|} g∘d(f)"))

    # associativity on all basis triples
    for x, y, z, w in itertools.product(objects, repeat=4):
        for s in cat.degrees(x, y):
            for t in cat.degrees(y, z):
                for u in cat.degrees(z, w):
                    for j in range(cat.rank(x, y, s)):
                        f = cat.basis_morphism(x, y, s, j)
                        for i in range(cat.rank(y, z, t)):
                            g = cat.basis_morphism(y, z, t, i)
                            gf = cat.compose(g, f)
                            for l in range(cat.rank(z, w, u)):
                                h = cat.basis_morphism(z, w, u, l)
                                if cat.compose(h, gf) != \
                                        cat.compose(cat.compose(h, g), f):
                                    out.append(Violation(
                                        "associativity",
                                        (x, y, z, w, s, t, u, l, i, j),
                                        "(h∘g)∘f ≠ h∘(g∘f)"))
    return out


# -- chain complexes and their hom categories ---------------------------------

@dataclass
class ChainComplex:
    """A bounded complex of finite free modules with a degree +1 map."""

    ring: SquareZeroRing
    dims: dict[int, int]
    d: dict[int, list[list[RingElement]]] = field(default_factory=dict)

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def degrees(self) -> list[int]:
        return sorted(k for k, v in self.dims.items() if v > 0)

    def d_matrix(self, degree: int) -> list[list[RingElement]]:
        mat = self.d.get(degree)
        if mat is None:
            return [[self.ring.zero()] * self.dim(degree)
                    for _ in range(self.dim(degree + 1))]
        return mat

    def total_dim(self) -> int:
        return sum(v for v in self.dims.values())

    def validate(self) -> None:
        for i in self.degrees():
            mat = self.d_matrix(i)
            if len(mat) != self.dim(i + 1) or \
                    any(len(row) != self.dim(i) for row in mat):
                raise InvalidComplex(f"differential at degree {i} has wrong shape")
        for i in self.degrees():
            square = glin.compose_maps(self.d_matrix(i + 1), self.d_matrix(i))
            if any(not e.is_zero() for row in square for e in row):
                raise InvalidComplex(f"d² ≠ 0 between degrees {i} and {i + 2}")


def complex_from_dense(ring: SquareZeroRing, dims: Mapping[int, int],
                       d: Mapping[int, Sequence[Sequence]] = ()) -> ChainComplex:
    """Build a complex from plain nested lists of rationals."""
    dmats = {}
    for i, mat in dict(d).items():
        dmats[i] = [[e if isinstance(e, RingElement)
                     else ring.from_rational(as_rational(e)) for e in row]
                    for row in mat]
    return ChainComplex(ring, dict(dims), dmats)


def _hom_basis(a: ChainComplex, b: ChainComplex,
               degree: int) -> list[tuple[int, int, int]]:
    """Basis (level, target slot, source slot) of Hom(a, b) in one degree."""
    basis = []
    for i in a.degrees():
        if b.dim(i + degree) > 0:
            for row in range(b.dim(i + degree)):
                for col in range(a.dim(i)):
                    basis.append((i, row, col))
    return basis


def make_complex_category(complexes: Sequence[ChainComplex],
                          names: Sequence[str] | None = None) -> DgCategory:
    """The dg-category of the given complexes with full Hom complexes.

    ``hom(A, B)_t = ⊕_i Hom(A^i, B^{i+t})`` with differential
    ``D(f) = d_B∘f − (−1)^{|f|} f∘d_A`` and ordinary composition.
    """
    if not complexes:
        return DgCategory(ring=RATIONALS, objects=(), ranks={}, diffs={},
                          comps={}, identities={})
    ring = complexes[0].ring
    for cx in complexes:
        if cx.ring != ring:
            raise InvalidComplex("complexes live over different rings")
        cx.validate()
    if names is None:
        names = tuple(f"C{i}" for i in range(len(complexes)))
    if len(set(names)) != len(names) or len(names) != len(complexes):
        raise InvalidComplex("object names must be distinct, one per complex")
    by_name = dict(zip(names, complexes))

    ranks: dict[tuple[str, str, int], int] = {}
    bases: dict[tuple[str, str, int], list[tuple[int, int, int]]] = {}
    index: dict[tuple[str, str, int], dict[tuple[int, int, int], int]] = {}
    for xn, yn in itertools.product(names, repeat=2):
        a, b = by_name[xn], by_name[yn]
        degs_a = a.degrees()
        degs_b = b.degrees()
        if not degs_a or not degs_b:
            continue
        tmin = min(degs_b) - max(degs_a)
        tmax = max(degs_b) - min(degs_a)
        for t in range(tmin, tmax + 1):
            basis = _hom_basis(a, b, t)
            if basis:
                key = (xn, yn, t)
                ranks[key] = len(basis)
                bases[key] = basis
                index[key] = {unit: pos for pos, unit in enumerate(basis)}

    diffs: dict[tuple[str, str, int], SparseCols] = {}
    for (xn, yn, t), basis in bases.items():
        a, b = by_name[xn], by_name[yn]
        target_index = index.get((xn, yn, t + 1))
        if not target_index:
            continue
        cols: SparseCols = {}
        sign = ring.from_rational(-((-1) ** t))
        for pos, (i, row, col) in enumerate(basis):
            entries: list[tuple[int, RingElement]] = []
            # d_B ∘ f : unit (i, row, col) pushes forward along d_B at i+t
            db = b.d_matrix(i + t)
            for row2 in range(b.dim(i + t + 1)):
                coeff = db[row2][row]
                if not coeff.is_zero():
                    entries.append((target_index[(i, row2, col)], coeff))
            # −(−1)^t f ∘ d_A : unit pulls back along d_A at i−1
            da = a.d_matrix(i - 1)
            for col2 in range(a.dim(i - 1)):
                coeff = da[col][col2]
                if not coeff.is_zero():
                    entries.append((target_index[(i - 1, row, col2)],
                                    coeff * sign))
            if entries:
                cols[pos] = tuple(sorted(entries, key=lambda e: e[0]))
        if cols:
            diffs[(xn, yn, t)] = cols

    comps: dict[tuple[str, str, str, int, int], BilTensor] = {}
    for xn, yn, zn in itertools.product(names, repeat=3):
        for s in [t for (p, q, t) in bases if (p, q) == (xn, yn)]:
            inner_basis = bases[(xn, yn, s)]
            for t in [t for (p, q, t) in bases if (p, q) == (yn, zn)]:
                outer_basis = bases[(yn, zn, t)]
                result_index = index.get((xn, zn, s + t))
                if not result_index:
                    continue
                tensor: BilTensor = {}
                one = ring.one()
                inner_pos = {unit: pos for pos, unit in enumerate(inner_basis)}
                for opos, (i2, row2, col2) in enumerate(outer_basis):
                    # outer unit acts on level i2 of the middle complex
                    for ipos, (i1, row1, col1) in enumerate(inner_basis):
                        if i2 == i1 + s and col2 == row1:
                            target = result_index[(i1, row2, col1)]
                            tensor[(opos, ipos)] = ((target, one),)
                if tensor:
                    comps[(xn, yn, zn, s, t)] = tensor

    identities = {}
    for xn in names:
        a = by_name[xn]
        key = (xn, xn, 0)
        coords = [ring.zero()] * ranks.get(key, 0)
        idx = index.get(key, {})
        for i in a.degrees():
            for r in range(a.dim(i)):
                coords[idx[(i, r, r)]] = ring.one()
        identities[xn] = tuple(coords)

    return DgCategory(ring=ring, objects=tuple(names), ranks=ranks,
                      diffs=diffs, comps=comps, identities=identities)


def random_complex(ring: SquareZeroRing, rng: random.Random, *,
                   total_dim: int, min_degree: int = 0,
                   max_degree: int = 2) -> ChainComplex:
    """A random exact-arithmetic complex with d² = 0 by construction.

    Builds a split complex (free slots plus identity arrows between chosen
    adjacent-degree slot pairs) and conjugates it by random invertible
    change-of-basis matrices, so the differential looks generic.
    """
    degrees = list(range(min_degree, max_degree + 1))
    dims = {i: 0 for i in degrees}
    for _ in range(max(1, total_dim)):
        dims[rng.choice(degrees)] += 1
    dims = {i: n for i, n in dims.items() if n > 0}

    # split structure: at each degree mark slots as free / source / target
    source_of: dict[int, list[tuple[int, int]]] = {}
    taken_targets: dict[int, set[int]] = {i: set() for i in dims}
    taken_sources: dict[int, set[int]] = {i: set() for i in dims}
    for i in sorted(dims):
        if i + 1 not in dims:
            continue
        free_here = [s for s in range(dims[i])
                     if s not in taken_targets[i] and s not in taken_sources[i]]
        free_up = [s for s in range(dims[i + 1]) if s not in taken_targets[i + 1]]
        arrows = rng.randint(0, min(len(free_here), len(free_up)))
        pairs = list(zip(free_here[:arrows], free_up[:arrows]))
        if pairs:
            source_of[i] = pairs
            for s, t in pairs:
                taken_sources[i].add(s)
                taken_targets[i + 1].add(t)

    d = {}
    for i, pairs in source_of.items():
        mat = [[ring.zero() for _ in range(dims[i])]
               for _ in range(dims[i + 1])]
        for s, t in pairs:
            mat[t][s] = ring.one()
        d[i] = mat

    # random invertible change of basis per degree: L·U with ±1 diagonal
    def random_invertible(n: int) -> list[list[RingElement]]:
        lower = glin.identity_matrix(n, ring)
        upper = glin.identity_matrix(n, ring)
        for r in range(n):
            upper[r][r] = ring.from_rational(rng.choice([1, -1]))
            for c in range(r + 1, n):
                upper[r][c] = ring.from_rational(rng.randint(-1, 1))
                lower[c][r] = ring.from_rational(rng.randint(-1, 1))
        return glin.compose_maps(lower, upper)

    def invert_unitriangularish(mat: list[list[RingElement]]) -> list[list[RingElement]]:
        # Solve M·X = I column by column (exact, small sizes).
        n = len(mat)
        cols = []
        for c in range(n):
            rhs = [ring.one() if r == c else ring.zero() for r in range(n)]
            cols.append(glin.solve_linear(mat, rhs, ring))
        return [[cols[c][r] for c in range(n)] for r in range(n)]

    basis_change = {i: random_invertible(dims[i]) for i in dims}
    inverse = {i: invert_unitriangularish(basis_change[i]) for i in dims}
    conjugated = {}
    for i, mat in d.items():
        conjugated[i] = glin.compose_maps(
            basis_change[i + 1], glin.compose_maps(mat, inverse[i]))
    return ChainComplex(ring, dims, conjugated)


# -- opposite category --------------------------------------------------------

def opposite(cat: DgCategory) -> DgCategory:
    """The opposite dg-category with the Koszul composition sign.

    ``hom_op(X, Y) = hom(Y, X)`` with the same differential and
    ``g ∘_op f = (−1)^{|f||g|} f ∘ g``.  Applying it twice restores the
    original category on the nose.
    """
    ranks = {(y, x, t): r for (x, y, t), r in cat.ranks.items()}
    diffs = {(y, x, t): cols for (x, y, t), cols in cat.diffs.items()}
    comps: dict[tuple[str, str, str, int, int], BilTensor] = {}
    for (x, y, z, s, t), tensor in cat.comps.items():
        flip: BilTensor = {}
        negate = (s * t) % 2 == 1
        for (i, j), entries in tensor.items():
            flip[(j, i)] = tuple((r, -a) for r, a in entries) if negate \
                else entries
        comps[(z, y, x, t, s)] = flip
    return DgCategory(ring=cat.ring, objects=cat.objects, ranks=ranks,
                      diffs=diffs, comps=comps, identities=dict(cat.identities))


# -- homotopy-equivalence witnesses -------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Data (a, g, h) certifying α is invertible up to homotopy:
    d(a) = 0, a∘α = 1 + d(g), α∘a = 1 + d(h)."""

    a: Morphism
    g: Morphism
    h: Morphism


_witness_calls = 0


def witness_call_count() -> int:
    """How many times the witness solver has run (test instrumentation)."""
    return _witness_calls


def reset_witness_calls() -> None:
    global _witness_calls
    _witness_calls = 0


def find_equivalence_witness(cat: DgCategory, alpha: Morphism) -> Witness:
    """Solve d(a)=0, a∘α = 1 + d(g), α∘a = 1 + d(h) for (a, g, h).

    The three conditions form one linear system over the ring, solved
    exactly; raises :class:`NotEquivalence` when it is inconsistent.
    """
    global _witness_calls
    _witness_calls += 1

    if alpha.degree != 0:
        raise ValueError("witness queries require a degree-0 morphism")
    if not cat.differential(alpha).is_zero():
        raise ValueError("witness queries require a closed morphism")

    x, y = alpha.source, alpha.target
    n_a = cat.rank(y, x, 0)
    n_g = cat.rank(x, x, -1)
    n_h = cat.rank(y, y, -1)
    r1 = cat.rank(y, x, 1)
    r2 = cat.rank(x, x, 0)
    r3 = cat.rank(y, y, 0)

    zero = cat.ring.zero()
    ncols = n_a + n_g + n_h
    rows = [[zero] * ncols for _ in range(r1 + r2 + r3)]

    def put(col: int, block_offset: int, coords: Sequence[RingElement],
            negate: bool = False) -> None:
        for i, c in enumerate(coords):
            rows[block_offset + i][col] = -c if negate else c

    for j in range(n_a):
        e = cat.basis_morphism(y, x, 0, j)
        put(j, 0, cat.differential(e).coords)
        put(j, r1, cat.compose(e, alpha).coords)
        put(j, r1 + r2, cat.compose(alpha, e).coords)
    for j in range(n_g):
        e = cat.basis_morphism(x, x, -1, j)
        put(n_a + j, r1, cat.differential(e).coords, negate=True)
    for j in range(n_h):
        e = cat.basis_morphism(y, y, -1, j)
        put(n_a + n_g + j, r1 + r2, cat.differential(e).coords, negate=True)

    rhs = [zero] * r1 + list(cat.identity(x).coords) + \
        list(cat.identity(y).coords)

    try:
        solution = glin.solve_linear(rows, rhs, cat.ring)
    except glin.NoSolution as exc:
        raise NotEquivalence(
            f"no homotopy-inverse witness for {x}->{y}") from exc

    a = Morphism(y, x, 0, tuple(solution[:n_a]))
    g = Morphism(x, x, -1, tuple(solution[n_a:n_a + n_g]))
    h = Morphism(y, y, -1, tuple(solution[n_a + n_g:]))
    return Witness(a, g, h)
