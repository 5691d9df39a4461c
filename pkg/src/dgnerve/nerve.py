"""Coherent-nerve simplices and cochains over a finite dg-category.

An *n-simplex* is the data of objects ``X_0 … X_n`` and, for every strictly
increasing vertex sequence ``s = (i_0 < … < i_k)`` with ``k ≥ 1``, a cell
``α(s) ∈ hom(X_{i_0}, X_{i_k})`` of degree ``1 − k``.  The simplex is valid
when every cell's differential equals the alternating sum of its interior
faces plus the weighted sum of its two-sided cuts — the residual

    R(s) = d(α(s)) − Σ_p (−1)^p α(s∖i_p)
                   − Σ_p (−1)^{k(p+1)} α(i_p … i_k) ∘ α(i_0 … i_p)

(interior positions ``0 < p < k`` only) must vanish.  At n = 2 this is the
familiar  d(α(0,1,2)) = α(1,2)∘α(0,1) − α(0,2).

A *cochain* from a simplex F to a simplex G of the same dimension assigns
to each sequence a morphism ``η(s) ∈ hom(X^F_{i_0}, X^G_{i_k})`` of degree
``|η| − k`` (no vertex components).  Cochains carry a differential twisted
by the cells of F and G,

    d(η) = d_M(η) − g∘η + (−1)^{|η|} η∘f,

and an associative convolution product for which that differential is a
derivation.  All signs route through a :class:`SignPattern`; the shipped
:data:`PINNED` pattern is the unique one of the sixteen candidates that
reproduces the n = 2 anchor *and* satisfies d² = 0 and the Leibniz rule
(the calibration test re-runs the search).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .dgcat import DgCategory, Morphism, Violation, find_equivalence_witness, NotEquivalence
from .rings import SquareZeroRing

Seq = tuple[int, ...]


@dataclass(frozen=True)
class SignPattern:
    """The four free sign bits of the face/cut conventions.

    face term of length-k sequences:  (−1)^{p + face_flip + face_k_twist·k}
    cut term (before the Koszul factor of the inner cochain):
                                      (−1)^{p(k+1) + cut_flip + cut_p_twist·(p+1)}
    """

    face_flip: int = 0
    face_k_twist: int = 0
    cut_flip: int = 0
    cut_p_twist: int = 0

    def face_sign(self, p: int, k: int) -> int:
        return (-1) ** (p + self.face_flip + self.face_k_twist * k)

    def cut_sign(self, p: int, k: int) -> int:
        return (-1) ** (p * (k + 1) + self.cut_flip
                        + self.cut_p_twist * (p + 1))

    def bits(self) -> tuple[int, int, int, int]:
        return (self.face_flip, self.face_k_twist,
                self.cut_flip, self.cut_p_twist)


PINNED = SignPattern()


def all_sign_patterns() -> list[SignPattern]:
    return [SignPattern(*bits) for bits in itertools.product((0, 1), repeat=4)]


# -- simplices ----------------------------------------------------------------

def increasing_sequences(n: int, min_length: int = 2) -> list[Seq]:
    """All strictly increasing vertex sequences in {0..n}, shortest first."""
    out: list[Seq] = []
    for length in range(min_length, n + 2):
        out.extend(itertools.combinations(range(n + 1), length))
    return out


@dataclass(frozen=True)
class NerveSimplex:
    """Objects plus one cell per increasing vertex sequence of length ≥ 2."""

    objects: tuple[str, ...]
    cells: Mapping[Seq, Morphism]

    @property
    def n(self) -> int:
        return len(self.objects) - 1

    def cell(self, seq: Seq) -> Morphism:
        try:
            return self.cells[tuple(seq)]
        except KeyError:
            raise ValueError(f"simplex has no cell for {seq}") from None


def make_simplex(objects: Sequence[str],
                 cells: Mapping[Seq, Morphism]) -> NerveSimplex:
    return NerveSimplex(tuple(objects),
                        {tuple(k): v for k, v in cells.items()})


def identity_simplex(cat: DgCategory, obj: str, n: int) -> NerveSimplex:
    """All vertices at ``obj``, identity edges, zero higher cells."""
    cells: dict[Seq, Morphism] = {}
    for seq in increasing_sequences(n):
        k = len(seq) - 1
        cells[seq] = cat.identity(obj) if k == 1 else cat.zero(obj, obj, 1 - k)
    return NerveSimplex((obj,) * (n + 1), cells)


def interval_category(n: int, ring: SquareZeroRing | None = None) -> DgCategory:
    """The directed-interval dg-category on objects 0 … n.

    One degree-0 generator e_ij for each i ≤ j, zero differential, and
    e_jk ∘ e_ij = e_ik.  Simplices of the nerve of a dg-category are
    exactly strictly-unital weak functors out of this category.
    """
    ring = ring or SquareZeroRing(0)
    names = tuple(str(i) for i in range(n + 1))
    ranks = {}
    comps = {}
    identities = {}
    one = ring.one()
    for i in range(n + 1):
        for j in range(i, n + 1):
            ranks[(names[i], names[j], 0)] = 1
        identities[names[i]] = (one,)
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                comps[(names[i], names[j], names[k], 0, 0)] = {(0, 0): ((0, one),)}
    return DgCategory(ring=ring, objects=names, ranks=ranks, diffs={},
                      comps=comps, identities=identities)


# -- residuals ----------------------------------------------------------------

CellGetter = Callable[[Seq], Morphism]


def required_boundary(cat: DgCategory, objects: Sequence[str],
                      getter: CellGetter, seq: Seq,
                      signs: SignPattern = PINNED) -> Morphism:
    """What d(cell(seq)) must equal for the simplex data to be valid:

        Σ_p face_sign(p,k)·cell(s∖i_p)
      + Σ_p cut_sign(p,k)·(−1)^{k−p}·cell(top_p)∘cell(bot_p)

    over interior positions ``0 < p < k``.  Only faces and cuts of ``seq``
    are fetched, never ``seq`` itself, so this also serves horn data in
    which the cell at ``seq`` is the one being solved for.
    """
    k = len(seq) - 1
    total = cat.zero(objects[seq[0]], objects[seq[-1]], 2 - k)
    for p in range(1, k):
        face = seq[:p] + seq[p + 1:]
        total = total + getter(face).scale(signs.face_sign(p, k))
        top, bot = seq[p:], seq[:p + 1]
        cut = cat.compose(getter(top), getter(bot))
        total = total + cut.scale(signs.cut_sign(p, k) * (-1) ** (k - p))
    return total


def simplex_residual(cat: DgCategory, simplex: NerveSimplex, seq: Seq,
                     signs: SignPattern = PINNED) -> Morphism:
    """R(seq) = d(α(seq)) − required boundary; zero on valid simplices."""
    seq = tuple(seq)
    cell = simplex.cell(seq)
    return cat.differential(cell) - required_boundary(
        cat, simplex.objects, simplex.cell, seq, signs)


def validate_simplex(cat: DgCategory, simplex: NerveSimplex,
                     signs: SignPattern = PINNED) -> list[Violation]:
    """Shape and residual violations of one simplex (empty = valid)."""
    out: list[Violation] = []
    n = simplex.n
    if n < 0:
        return [Violation("shape", ("objects",), "no vertices")]
    for obj in simplex.objects:
        if obj not in cat.identities:
            return [Violation("shape", (obj,), "unknown object")]
    for seq in increasing_sequences(n):
        k = len(seq) - 1
        cell = simplex.cells.get(seq)
        if cell is None:
            out.append(Violation("missing_cell", seq, "no cell stored"))
            continue
        want_src = simplex.objects[seq[0]]
        want_tgt = simplex.objects[seq[-1]]
        if (cell.source, cell.target) != (want_src, want_tgt):
            out.append(Violation("cell_endpoints", seq,
                                 f"cell maps {cell.source}->{cell.target}, "
                                 f"expected {want_src}->{want_tgt}"))
            continue
        if cell.degree != 1 - k:
            out.append(Violation("cell_degree", seq,
                                 f"degree {cell.degree}, expected {1 - k}"))
            continue
        if len(cell.coords) != cat.rank(want_src, want_tgt, 1 - k):
            out.append(Violation("cell_rank", seq, "wrong coordinate count"))
            continue
    if out:
        return out
    for seq in increasing_sequences(n):
        if not simplex_residual(cat, simplex, seq, signs).is_zero():
            out.append(Violation("residual", seq,
                                 "cell differential does not match faces/cuts"))
    return out


def validate_star(cat: DgCategory, simplex: NerveSimplex,
                  signs: SignPattern = PINNED) -> list[Violation]:
    """validate_simplex plus: every edge has a homotopy-inverse witness."""
    out = validate_simplex(cat, simplex, signs)
    if out:
        return out
    for i, j in itertools.combinations(range(simplex.n + 1), 2):
        edge = simplex.cell((i, j))
        try:
            find_equivalence_witness(cat, edge)
        except NotEquivalence:
            out.append(Violation("edge_not_equivalence", (i, j),
                                 "edge admits no homotopy inverse"))
    return out


# -- simplicial operators -------------------------------------------------------

def face(simplex: NerveSimplex, i: int) -> NerveSimplex:
    """Delete vertex i and keep the cells not involving it."""
    n = simplex.n
    if not 0 <= i <= n:
        raise ValueError("face index out of range")
    objects = simplex.objects[:i] + simplex.objects[i + 1:]

    def old_vertex(v: int) -> int:
        return v if v < i else v + 1

    cells = {}
    for seq in increasing_sequences(n - 1):
        cells[seq] = simplex.cell(tuple(old_vertex(v) for v in seq))
    return NerveSimplex(objects, cells)


def degeneracy(cat: DgCategory, simplex: NerveSimplex, i: int) -> NerveSimplex:
    """Repeat vertex i; the new (i, i+1) edge is the identity, and cells
    spanning both copies otherwise vanish (strict unitality)."""
    n = simplex.n
    if not 0 <= i <= n:
        raise ValueError("degeneracy index out of range")
    objects = simplex.objects[:i + 1] + simplex.objects[i:]

    def collapse(v: int) -> int:
        return v if v <= i else v - 1

    cells = {}
    for seq in increasing_sequences(n + 1):
        k = len(seq) - 1
        if i in seq and i + 1 in seq:
            if seq == (i, i + 1):
                cells[seq] = cat.identity(simplex.objects[i])
            else:
                cells[seq] = cat.zero(objects[seq[0]], objects[seq[-1]], 1 - k)
            continue
        image = tuple(sorted({collapse(v) for v in seq}))
        cells[seq] = simplex.cell(image)
    return NerveSimplex(objects, cells)


# -- cochains -------------------------------------------------------------------

@dataclass(frozen=True)
class NerveCochain:
    """A graded map between two same-dimension simplices' cell data."""

    source: NerveSimplex
    target: NerveSimplex
    degree: int
    components: Mapping[Seq, Morphism] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.source.n

    def component(self, cat: DgCategory, seq: Seq) -> Morphism:
        seq = tuple(seq)
        stored = self.components.get(seq)
        if stored is not None:
            return stored
        return cat.zero(self.source.objects[seq[0]],
                        self.target.objects[seq[-1]],
                        self.degree - (len(seq) - 1))


def make_cochain(cat: DgCategory, source: NerveSimplex, target: NerveSimplex,
                 degree: int, components: Mapping[Seq, Morphism]) -> NerveCochain:
    """Normalize (drop zero components, check shapes) and build a cochain."""
    if source.n != target.n:
        raise ValueError("cochains require same-dimension simplices")
    cleaned: dict[Seq, Morphism] = {}
    for raw_seq, morphism in components.items():
        seq = tuple(raw_seq)
        k = len(seq) - 1
        if k < 1:
            raise ValueError("cochains have no vertex components")
        want = (source.objects[seq[0]], target.objects[seq[-1]], degree - k)
        got = (morphism.source, morphism.target, morphism.degree)
        if want != got:
            raise ValueError(f"component {seq} has shape {got}, wants {want}")
        if not morphism.is_zero():
            cleaned[seq] = morphism
    return NerveCochain(source, target, degree, cleaned)


def zero_cochain(source: NerveSimplex, target: NerveSimplex,
                 degree: int) -> NerveCochain:
    return NerveCochain(source, target, degree, {})


def cells_cochain(simplex: NerveSimplex) -> NerveCochain:
    """A simplex's own cells, seen as a degree-1 cochain simplex → simplex."""
    return NerveCochain(simplex, simplex, 1, dict(simplex.cells))


def cochain_equal(left: NerveCochain, right: NerveCochain) -> bool:
    if (left.degree, left.source.objects, left.target.objects) != \
            (right.degree, right.source.objects, right.target.objects):
        return False
    keys = set(left.components) | set(right.components)
    for seq in keys:
        a = left.components.get(seq)
        b = right.components.get(seq)
        if a is None:
            if not b.is_zero():
                return False
        elif b is None:
            if not a.is_zero():
                return False
        elif a != b:
            return False
    return True


def _convolve_component(cat: DgCategory, outer: NerveCochain,
                        inner: NerveCochain, seq: Seq,
                        signs: SignPattern) -> Morphism:
    k = len(seq) - 1
    degree = outer.degree + inner.degree - k
    acc = cat.zero(inner.source.objects[seq[0]],
                   outer.target.objects[seq[-1]], degree)
    for p in range(1, k):
        top, bot = seq[p:], seq[:p + 1]
        outer_part = outer.component(cat, top)
        if outer_part.is_zero():
            continue
        inner_part = inner.component(cat, bot)
        if inner_part.is_zero():
            continue
        sign = signs.cut_sign(p, k) * (-1) ** (inner.degree * (k - p))
        acc = acc + cat.compose(outer_part, inner_part).scale(sign)
    return acc


def cochain_compose(cat: DgCategory, outer: NerveCochain, inner: NerveCochain,
                    signs: SignPattern = PINNED) -> NerveCochain:
    """Convolution ``outer ∘ inner`` over all two-sided cuts of each
    sequence; associative, and a Leibniz pair with the differential."""
    if inner.target.objects != outer.source.objects or \
            inner.target.cells != outer.source.cells:
        raise ValueError("cochains do not compose: middle simplices differ")
    degree = outer.degree + inner.degree
    components: dict[Seq, Morphism] = {}
    for seq in increasing_sequences(inner.n):
        value = _convolve_component(cat, outer, inner, seq, signs)
        if not value.is_zero():
            components[seq] = value
    return NerveCochain(inner.source, outer.target, degree, components)


def cochain_differential(cat: DgCategory, cochain: NerveCochain,
                         signs: SignPattern = PINNED) -> NerveCochain:
    """The five-term twisted differential

        d(η)(s) = d_A(η(s)) + (−1)^{|η|} Σ_p (−1)^p η(s∖i_p)
                  − (g∘η)(s) + (−1)^{|η|} (η∘f)(s)

    where f and g are the cells of the source and target simplices.  On
    cochains between valid simplices it squares to zero.
    """
    t = cochain.degree
    f_cells = cells_cochain(cochain.source)
    g_cells = cells_cochain(cochain.target)
    components: dict[Seq, Morphism] = {}
    for seq in increasing_sequences(cochain.n):
        k = len(seq) - 1
        value = cat.differential(cochain.component(cat, seq))
        for p in range(1, k):
            face_seq = seq[:p] + seq[p + 1:]
            part = cochain.component(cat, face_seq)
            if not part.is_zero():
                value = value + part.scale((-1) ** t * signs.face_sign(p, k))
        g_eta = _convolve_component(cat, g_cells, cochain, seq, signs)
        if not g_eta.is_zero():
            value = value - g_eta
        eta_f = _convolve_component(cat, cochain, f_cells, seq, signs)
        if not eta_f.is_zero():
            value = value + eta_f.scale((-1) ** t)
        if not value.is_zero():
            components[seq] = value
    return NerveCochain(cochain.source, cochain.target, t + 1, components)


def cochain_add(left: NerveCochain, right: NerveCochain) -> NerveCochain:
    if (left.degree, left.source.objects, left.target.objects) != \
            (right.degree, right.source.objects, right.target.objects):
        raise ValueError("cochain shapes differ")
    components = dict(left.components)
    for seq, morphism in right.components.items():
        if seq in components:
            total = components[seq] + morphism
            if total.is_zero():
                del components[seq]
            else:
                components[seq] = total
        else:
            components[seq] = morphism
    return NerveCochain(left.source, left.target, left.degree, components)


def cochain_scale(cochain: NerveCochain, scalar) -> NerveCochain:
    components = {seq: m.scale(scalar) for seq, m in cochain.components.items()}
    return NerveCochain(cochain.source, cochain.target, cochain.degree,
                        {s: m for s, m in components.items() if not m.is_zero()})
