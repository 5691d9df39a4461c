"""Horns of the coherent nerve: obstructions, explicit fillers, lifting.

A *horn* ``(n, k)`` is the data of an n-simplex with two cells removed —
the top cell ``α(0,…,n)`` and the k-th codimension-1 face — subject to all
residual equations that involve only the remaining cells.  This module
computes the obstruction pair (U, V) controlling the two missing
equations, produces explicit fillers:

* inner ``0 < k < n``:  α̂_face = −σ_k·V and α̂_top = 0, where
  σ_k is the face sign at position k — no invertibility needed;
* outer ``k = 0``:  α̂_face = −V∘a + (−1)ⁿ U∘h and
  α̂_top = (−1)ⁿ(α̂_face∘h∘α − α̂_face∘α∘g − V∘g), where (a, g, h) is an
  equivalence witness for the first edge α = α(0,1);
* outer ``k = n``: reduced to ``k = 0`` in the opposite category via the
  order-reversing vertex map and a per-cell sign twist,

and lifts fillers through square-zero ring extensions: given a filler of
the horn reduced mod the ideal, the error terms φ, ψ of an arbitrary
coordinate lift are pure-ideal cocycles, and an explicit correction ε
(built from the same witness data) repairs the lift exactly.

``check_gp`` packages all of this into seeded randomized sweeps: sample a
valid simplex, puncture it, refill, validate, then run the reduce/lift
round trip — the executable form of the horn-extension conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .dgcat import (DgCategory, Morphism, NotEquivalence, Violation,
                    find_equivalence_witness, opposite, witness_call_count)
from .glin import nullspace
from .mc import (promote_morphism, reduce_category, reduce_morphism,
                 tensor_with_ring)
from .nerve import (NerveSimplex, PINNED, Seq, SignPattern, degeneracy,
                    increasing_sequences, required_boundary, validate_simplex)
from .rings import SquareZeroRing


class HornError(Exception):
    """Base class for horn-processing failures."""


class IncompatibleHorn(HornError):
    """The horn's present cells violate a residual or shape condition."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        lines = "; ".join(f"{v.kind}@{v.location}" for v in violations[:4])
        super().__init__(f"incompatible horn: {lines}")


class CannotFillOuterHorn(HornError):
    """The witnessed edge of an outer horn admits no equivalence witness."""


class InvalidReduction(HornError):
    """The supplied mod-ideal filler does not solve the reduced horn."""


# -- horn data ----------------------------------------------------------------

@dataclass(frozen=True)
class HornData:
    """All cells of an n-simplex except the k-face and the top cell."""

    n: int
    k: int
    objects: tuple[str, ...]
    cells: Mapping[Seq, Morphism]

    @property
    def full_seq(self) -> Seq:
        return tuple(range(self.n + 1))

    @property
    def missing_face(self) -> Seq:
        return tuple(i for i in range(self.n + 1) if i != self.k)

    @property
    def missing(self) -> tuple[Seq, Seq]:
        return (self.missing_face, self.full_seq)

    @property
    def is_inner(self) -> bool:
        return 0 < self.k < self.n

    def present_sequences(self) -> list[Seq]:
        skip = {self.missing_face, self.full_seq}
        return [s for s in increasing_sequences(self.n) if s not in skip]

    def cell(self, seq: Seq) -> Morphism:
        try:
            return self.cells[tuple(seq)]
        except KeyError:
            raise ValueError(f"horn has no cell for {seq}") from None


def extract_horn(simplex: NerveSimplex, k: int) -> HornData:
    """Forget the k-face and top cell of a simplex (test-data generator)."""
    n = simplex.n
    if n < 2:
        raise ValueError("horns require n >= 2")
    if not 0 <= k <= n:
        raise ValueError("horn index k out of range")
    horn = HornData(n, k, simplex.objects, {})
    skip = set(horn.missing)
    cells = {seq: cell for seq, cell in simplex.cells.items()
             if seq not in skip}
    return HornData(n, k, simplex.objects, cells)


def complete_horn(horn: HornData, filler: "Filler") -> NerveSimplex:
    """Insert the filler's two cells back into the horn."""
    if (filler.n, filler.k) != (horn.n, horn.k):
        raise ValueError("filler does not match horn dimensions")
    cells = dict(horn.cells)
    cells[horn.missing_face] = filler.face
    cells[horn.full_seq] = filler.top
    return NerveSimplex(horn.objects, cells)


def check_horn(cat: DgCategory, horn: HornData,
               signs: SignPattern = PINNED) -> list[Violation]:
    """Shape and compatibility violations (empty = fillable input data).

    Every residual equation involving only present cells is checked; the
    two equations through the missing cells are the filler's job.
    """
    n, k = horn.n, horn.k
    if n < 2:
        return [Violation("horn_shape", (n, k), "need n >= 2")]
    if not 0 <= k <= n:
        return [Violation("horn_shape", (n, k), "k out of range")]
    if len(horn.objects) != n + 1:
        return [Violation("horn_shape", (n, k), "object list has wrong length")]
    for obj in horn.objects:
        if obj not in cat.identities:
            return [Violation("horn_shape", (obj,), "unknown object")]
    out: list[Violation] = []
    present = horn.present_sequences()
    for seq in set(horn.cells) - set(present):
        out.append(Violation("unexpected_cell", tuple(seq),
                             "cell stored for a missing or invalid sequence"))
    for seq in present:
        cell = horn.cells.get(seq)
        if cell is None:
            out.append(Violation("missing_cell", seq, "no cell stored"))
            continue
        want_src = horn.objects[seq[0]]
        want_tgt = horn.objects[seq[-1]]
        want_deg = 1 - (len(seq) - 1)
        if (cell.source, cell.target) != (want_src, want_tgt):
            out.append(Violation("cell_endpoints", seq,
                                 f"cell maps {cell.source}->{cell.target}, "
                                 f"expected {want_src}->{want_tgt}"))
        elif cell.degree != want_deg:
            out.append(Violation("cell_degree", seq,
                                 f"degree {cell.degree}, expected {want_deg}"))
        elif len(cell.coords) != cat.rank(want_src, want_tgt, want_deg):
            out.append(Violation("cell_rank", seq, "wrong coordinate count"))
    if out:
        return out
    for seq in present:
        residual = cat.differential(horn.cell(seq)) - required_boundary(
            cat, horn.objects, horn.cell, seq, signs)
        if not residual.is_zero():
            out.append(Violation("residual", seq,
                                 "present cells violate a residual equation"))
    return out


# -- obstructions --------------------------------------------------------------

@dataclass(frozen=True)
class Obstruction:
    """The pair (U, V) controlling the two missing equations of a horn.

    With α̂_face and α̂_top the unknown cells, the remaining residual
    equations read  d(α̂_face) = U  together with

        d(α̂_top) = α̂_face∘α + V       (outer, α the witnessed first edge)
        d(α̂_top) = sign·α̂_face + V    (inner).

    For k = n the data is computed in the opposite category after vertex
    reversal (``op_reduced``), where it takes the outer k = 0 shape.
    ``U`` has degree 3−n and ``V`` degree 2−n; d(U) = 0 always, and
    d(V) = −U∘α (outer) or sign·U + d(V) = 0 (inner).
    """

    n: int
    k: int
    U: Morphism
    V: Morphism
    sign: int | None
    alpha: Morphism | None
    category: DgCategory
    op_reduced: bool = False


def obstruction_violations(obs: Obstruction) -> list[Violation]:
    """Check the cocycle identities of an obstruction pair (empty = ok)."""
    cat = obs.category
    out: list[Violation] = []
    if not cat.differential(obs.U).is_zero():
        out.append(Violation("obstruction_dU", (obs.n, obs.k),
                             "d(U) is nonzero"))
    if obs.alpha is not None:
        lhs = cat.differential(obs.V) + cat.compose(obs.U, obs.alpha)
        if not lhs.is_zero():
            out.append(Violation("obstruction_dV", (obs.n, obs.k),
                                 "d(V) + U∘α is nonzero"))
    else:
        lhs = cat.differential(obs.V) + obs.U.scale(obs.sign)
        if not lhs.is_zero():
            out.append(Violation("obstruction_dV", (obs.n, obs.k),
                                 "sign·U + d(V) is nonzero"))
    return out


def compute_obstruction(cat: DgCategory, horn: HornData,
                        signs: SignPattern = PINNED) -> Obstruction:
    problems = check_horn(cat, horn, signs)
    if problems:
        raise IncompatibleHorn(problems)
    n, k = horn.n, horn.k
    if k == n:
        inner = compute_obstruction(opposite(cat), opposite_horn(horn), signs)
        return Obstruction(n, k, inner.U, inner.V, None, inner.alpha,
                           inner.category, op_reduced=True)
    miss = horn.missing_face
    U = required_boundary(cat, horn.objects, horn.cell, miss, signs)

    def patched(seq: Seq) -> Morphism:
        if seq == miss:
            return cat.zero(horn.objects[seq[0]], horn.objects[seq[-1]], 2 - n)
        return horn.cell(seq)

    V = required_boundary(cat, horn.objects, patched, horn.full_seq, signs)
    if k == 0:
        obs = Obstruction(n, k, U, V, None, horn.cell((0, 1)), cat)
    else:
        obs = Obstruction(n, k, U, V, signs.face_sign(k, n), None, cat)
    bad = obstruction_violations(obs)
    if bad:
        raise IncompatibleHorn(bad)
    return obs


# -- fillers -------------------------------------------------------------------

@dataclass(frozen=True)
class Filler:
    """The two new cells: ``top`` for (0,…,n), ``face`` for the k-face."""

    n: int
    k: int
    top: Morphism
    face: Morphism


def fill_inner(cat: DgCategory, horn: HornData,
               signs: SignPattern = PINNED) -> Filler:
    """α̂_face = −σ_k·V and α̂_top = 0 solve both missing equations.

    Uses only the obstruction identities, never equivalence witnesses.
    """
    if not horn.is_inner:
        raise ValueError("fill_inner requires 0 < k < n")
    obs = compute_obstruction(cat, horn, signs)
    face = obs.V.scale(-obs.sign)
    top = cat.zero(horn.objects[0], horn.objects[-1], 1 - horn.n)
    return Filler(horn.n, horn.k, top, face)


def fill_outer_zero(cat: DgCategory, horn: HornData,
                    signs: SignPattern = PINNED) -> Filler:
    """Fill a k = 0 horn using an equivalence witness for the edge (0,1)."""
    if horn.k != 0:
        raise ValueError("fill_outer_zero requires k = 0")
    obs = compute_obstruction(cat, horn, signs)
    alpha = obs.alpha
    try:
        w = find_equivalence_witness(cat, alpha)
    except NotEquivalence as exc:
        raise CannotFillOuterHorn(
            f"edge (0, 1) admits no equivalence witness: {exc}") from exc
    sgn = (-1) ** horn.n
    face = cat.compose(obs.V, w.a).scale(-1) + cat.compose(obs.U, w.h).scale(sgn)
    top = (cat.compose(face, cat.compose(w.h, alpha))
           - cat.compose(face, cat.compose(alpha, w.g))
           - cat.compose(obs.V, w.g)).scale(sgn)
    return Filler(horn.n, 0, top, face)


def fill_outer_n(cat: DgCategory, horn: HornData,
                 signs: SignPattern = PINNED) -> Filler:
    """Fill a k = n horn by passing to the opposite category."""
    if horn.k != horn.n:
        raise ValueError("fill_outer_n requires k = n")
    try:
        op_filler = fill_outer_zero(opposite(cat), opposite_horn(horn), signs)
    except CannotFillOuterHorn as exc:
        n = horn.n
        raise CannotFillOuterHorn(
            f"edge ({n - 1}, {n}) admits no equivalence witness") from exc
    return opposite_filler(op_filler)


def fill_horn(cat: DgCategory, horn: HornData,
              signs: SignPattern = PINNED) -> Filler:
    if horn.is_inner:
        return fill_inner(cat, horn, signs)
    if horn.k == 0:
        return fill_outer_zero(cat, horn, signs)
    return fill_outer_n(cat, horn, signs)


# -- opposite-category transport ------------------------------------------------

def _op_seq(n: int, seq: Seq) -> Seq:
    return tuple(n - v for v in reversed(seq))


def _mu(k: int) -> int:
    """Per-cell sign of the vertex-reversal map on bar-length-k cells."""
    return 1 if (k * (k + 1) // 2) % 2 == 1 else -1


def _op_cell(cell: Morphism, k: int) -> Morphism:
    flipped = Morphism(cell.target, cell.source, cell.degree, cell.coords)
    return flipped if _mu(k) == 1 else flipped.scale(-1)


def opposite_simplex(simplex: NerveSimplex) -> NerveSimplex:
    """The same simplex read backwards in the opposite category.

    Vertices map by i ↦ n−i; a bar-length-k cell picks up the sign
    (−1)^{k(k+1)/2+1}, which makes all residuals transport on the nose.
    Involutive.
    """
    n = simplex.n
    cells = {_op_seq(n, seq): _op_cell(cell, len(seq) - 1)
             for seq, cell in simplex.cells.items()}
    return NerveSimplex(tuple(reversed(simplex.objects)), cells)


def opposite_horn(horn: HornData) -> HornData:
    n = horn.n
    cells = {_op_seq(n, seq): _op_cell(cell, len(seq) - 1)
             for seq, cell in horn.cells.items()}
    return HornData(n, n - horn.k, tuple(reversed(horn.objects)), cells)


def opposite_filler(filler: Filler) -> Filler:
    n = filler.n
    return Filler(n, n - filler.k,
                  _op_cell(filler.top, n),
                  _op_cell(filler.face, n - 1))


# -- reduction helpers -----------------------------------------------------------

def reduce_simplex(simplex: NerveSimplex) -> NerveSimplex:
    return NerveSimplex(simplex.objects,
                        {s: reduce_morphism(c) for s, c in simplex.cells.items()})


def reduce_horn(horn: HornData) -> HornData:
    return HornData(horn.n, horn.k, horn.objects,
                    {s: reduce_morphism(c) for s, c in horn.cells.items()})


def reduce_filler(filler: Filler) -> Filler:
    return Filler(filler.n, filler.k,
                  reduce_morphism(filler.top), reduce_morphism(filler.face))


def promote_filler(cat: DgCategory, filler: Filler) -> Filler:
    return Filler(filler.n, filler.k,
                  promote_morphism(cat, filler.top),
                  promote_morphism(cat, filler.face))


# -- square-zero lifting ----------------------------------------------------------

def _check_filler_shape(cat: DgCategory, horn: HornData, top: Morphism,
                        face: Morphism) -> None:
    n = horn.n
    miss = horn.missing_face
    want_top = (horn.objects[0], horn.objects[-1], 1 - n)
    want_face = (horn.objects[miss[0]], horn.objects[miss[-1]], 2 - n)
    got_top = (top.source, top.target, top.degree)
    got_face = (face.source, face.target, face.degree)
    if got_top != want_top or got_face != want_face:
        raise ValueError(f"filler cells have shapes {got_top}, {got_face}; "
                         f"expected {want_top}, {want_face}")


def lift_filler(cat: DgCategory, horn: HornData, filler_mod_ideal: Filler,
                *, lifts: Filler | None = None,
                signs: SignPattern = PINNED) -> Filler:
    """Lift a filler of the reduced horn through the square-zero ideal.

    ``horn`` lives over ``cat.ring = k ⊕ I`` and ``filler_mod_ideal``
    solves the horn reduced mod I.  Starting from any coordinate lift α̃
    (the optional ``lifts``, or the zero-ideal-part injection), the error
    terms

        φ = d(α̃_face) − U,
        ψ = d(α̃_top) − α̃_face∘α − V     (outer; sign·α̃_face inner)

    lie in I because the reduction solves the reduced equations — if not,
    InvalidReduction.  They satisfy d(φ) = 0 and d(ψ) = −φ∘α (outer) /
    −sign·φ (inner), so the witness-built correction ε kills them exactly,
    and α̂ = α̃ − ε fills the horn over the full ring while reducing
    coordinatewise back to ``filler_mod_ideal``.
    """
    n, k = horn.n, horn.k
    if (filler_mod_ideal.n, filler_mod_ideal.k) != (n, k):
        raise ValueError("filler does not match horn dimensions")
    if k == n:
        try:
            op = lift_filler(opposite(cat), opposite_horn(horn),
                             opposite_filler(filler_mod_ideal),
                             lifts=opposite_filler(lifts) if lifts else None,
                             signs=signs)
        except CannotFillOuterHorn as exc:
            raise CannotFillOuterHorn(
                f"edge ({n - 1}, {n}) admits no equivalence witness") from exc
        return opposite_filler(op)

    obs = compute_obstruction(cat, horn, signs)
    if lifts is not None:
        top_l, face_l = lifts.top, lifts.face
        if (reduce_morphism(top_l).coords != filler_mod_ideal.top.coords
                or reduce_morphism(face_l).coords
                != filler_mod_ideal.face.coords):
            raise InvalidReduction(
                "provided lifts do not reduce to the given filler")
    else:
        top_l = promote_morphism(cat, filler_mod_ideal.top)
        face_l = promote_morphism(cat, filler_mod_ideal.face)
    _check_filler_shape(cat, horn, top_l, face_l)

    phi = cat.differential(face_l) - obs.U
    if k == 0:
        psi = cat.differential(top_l) - cat.compose(face_l, obs.alpha) - obs.V
    else:
        psi = cat.differential(top_l) - face_l.scale(obs.sign) - obs.V
    if not (phi.in_ideal() and psi.in_ideal()):
        raise InvalidReduction(
            "mod-ideal filler does not solve the reduced horn equations")

    if k == 0:
        try:
            w = find_equivalence_witness(cat, obs.alpha)
        except NotEquivalence as exc:
            raise CannotFillOuterHorn(
                f"edge (0, 1) admits no equivalence witness: {exc}") from exc
        sgn = (-1) ** n
        eps_face = (cat.compose(psi, w.a).scale(-1)
                    + cat.compose(phi, w.h).scale(sgn))
        eps_top = (cat.compose(eps_face, cat.compose(w.h, obs.alpha))
                   - cat.compose(eps_face, cat.compose(obs.alpha, w.g))
                   - cat.compose(psi, w.g)).scale(sgn)
    else:
        eps_face = psi.scale(-obs.sign)
        eps_top = cat.zero(top_l.source, top_l.target, top_l.degree)
    return Filler(n, k, top_l - eps_top, face_l - eps_face)


# -- randomized generation ---------------------------------------------------------

def _random_edge_simplex(cat: DgCategory, rng: random.Random,
                         witnessed: bool) -> NerveSimplex:
    if witnessed:
        X = rng.choice(cat.objects)
        scalar = rng.choice((1, 1, 1, -1, 2))
        edge = cat.identity(X).scale(scalar)
        xi = cat.random_morphism(X, X, -1, rng)
        edge = edge + cat.differential(xi)
        return NerveSimplex((X, X), {(0, 1): edge})
    X = rng.choice(cat.objects)
    Y = rng.choice(cat.objects)
    ncols = cat.rank(X, Y, 0)
    edge = cat.zero(X, Y, 0)
    if ncols:
        matrix = cat.dense_differential(X, Y, 0)
        if matrix:
            basis = nullspace(matrix, cat.ring)
        else:
            basis = [[cat.ring.one() if i == j else cat.ring.zero()
                      for i in range(ncols)] for j in range(ncols)]
        if basis:
            coords = list(edge.coords)
            for _ in range(2):
                vec = rng.choice(basis)
                c = rng.choice((0, 1, 1, -1, 2))
                if c:
                    coords = [x + v * c for x, v in zip(coords, vec)]
            edge = Morphism(X, Y, 0, tuple(coords))
    return NerveSimplex((X, Y), {(0, 1): edge})


def random_valid_simplex(cat: DgCategory, rng: random.Random, n: int, *,
                         witnessed: bool = True,
                         signs: SignPattern = PINNED) -> NerveSimplex:
    """A random simplex passing validate_simplex (and, when ``witnessed``,
    validate_star), built bottom-up.

    Dimension 1 samples closed edges (witnessed: unit·identity + exact
    term, which always admits a witness).  Higher dimensions degenerate a
    random (n−1)-sample and then shake every top-adjacent cell with moves
    that preserve all residuals exactly: adding d(ξ) to a codim-1 face
    while correcting the top cell through the face or cut term it feeds.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n == 0:
        return NerveSimplex((rng.choice(cat.objects),), {})
    if n == 1:
        return _random_edge_simplex(cat, rng, witnessed)
    base = random_valid_simplex(cat, rng, n - 1, witnessed=witnessed,
                                signs=signs)
    simplex = degeneracy(cat, base, rng.randrange(n))
    objects = simplex.objects
    cells = dict(simplex.cells)
    full = tuple(range(n + 1))
    first, last = objects[0], objects[-1]
    for a in range(1, n):
        xi = cat.random_morphism(first, last, 1 - n, rng)
        if xi.is_zero():
            continue
        face_seq = full[:a] + full[a + 1:]
        cells[face_seq] = cells[face_seq] + cat.differential(xi)
        cells[full] = cells[full] + xi.scale(signs.face_sign(a, n))
    xi1 = cat.random_morphism(objects[1], last, 1 - n, rng)
    if not xi1.is_zero():
        cells[full[1:]] = cells[full[1:]] + cat.differential(xi1)
        cells[full] = cells[full] + cat.compose(xi1, cells[(0, 1)])
    xi2 = cat.random_morphism(first, objects[-2], 1 - n, rng)
    if not xi2.is_zero():
        cells[full[:-1]] = cells[full[:-1]] + cat.differential(xi2)
        cells[full] = cells[full] + cat.compose(
            cells[(n - 1, n)], xi2).scale((-1) ** n)
    zeta = cat.random_morphism(first, last, -n, rng)
    if not zeta.is_zero():
        cells[full] = cells[full] + cat.differential(zeta)
    return NerveSimplex(objects, cells)


def random_horn(cat: DgCategory, rng: random.Random, n: int, k: int, *,
                witnessed: bool = True,
                signs: SignPattern = PINNED) -> HornData:
    return extract_horn(
        random_valid_simplex(cat, rng, n, witnessed=witnessed, signs=signs), k)


# -- the randomized horn-condition sweep ---------------------------------------------

def _trial_seed(seed: int, trial: int, mode_index: int) -> int:
    return seed * 1_000_003 + trial * 7919 + mode_index * 97


def check_gp(cat: DgCategory, n: int, k: int, trials: int = 25,
             seed: int = 0, signs: SignPattern = PINNED) -> dict:
    """Randomized sweep of the horn-extension conditions at (n, k).

    Per trial: sample a valid simplex over the rank-1 square-zero
    extension, extract the (n, k) horn, fill it, validate; then fill the
    reduced horn over the base field and lift that filler back, checking
    exact validity and coordinatewise reduction.  Inner horns run both a
    ``witnessed`` and a ``plain`` (no equivalence assumptions) sweep, and
    the report exposes the witness-solver call counter, which must stay 0
    on inner sweeps.  Failures are recorded as data with reproducing
    seeds, never raised.
    """
    if n < 2:
        raise ValueError(
            "n must be at least 2: 1-dimensional horn conditions are "
            "deliberately out of scope for this checker")
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    if cat.ring.ideal_rank != 0:
        raise ValueError("check_gp expects a category over the rank-0 ring")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    inner = 0 < k < n
    cat_b = tensor_with_ring(cat, SquareZeroRing(1))
    red_cat = reduce_category(cat_b)
    modes = ("witnessed", "plain") if inner else ("witnessed",)
    mode_reports = []
    for mode_index, mode in enumerate(modes):
        fill_pass = fill_fail = lift_pass = lift_fail = 0
        failures: list[dict] = []
        calls_before = witness_call_count()
        for trial in range(trials):
            trial_seed = _trial_seed(seed, trial, mode_index)
            rng = random.Random(trial_seed)
            try:
                horn = random_horn(cat_b, rng, n, k,
                                   witnessed=(mode == "witnessed"),
                                   signs=signs)
                filler = fill_horn(cat_b, horn, signs)
                bad = validate_simplex(cat_b, complete_horn(horn, filler),
                                       signs)
                if bad:
                    fill_fail += 1
                    failures.append({"trial": trial, "seed": trial_seed,
                                     "stage": "fill_validate",
                                     "detail": bad[0].kind})
                    continue
                fill_pass += 1
            except HornError as exc:
                fill_fail += 1
                failures.append({"trial": trial, "seed": trial_seed,
                                 "stage": "fill", "detail": str(exc)})
                continue
            try:
                red_horn = reduce_horn(horn)
                red_filler = fill_horn(red_cat, red_horn, signs)
                lifted = lift_filler(cat_b, horn, red_filler, signs=signs)
                bad = validate_simplex(cat_b, complete_horn(horn, lifted),
                                       signs)
                reduces = (
                    reduce_morphism(lifted.top).coords
                    == red_filler.top.coords
                    and reduce_morphism(lifted.face).coords
                    == red_filler.face.coords)
                if bad or not reduces:
                    lift_fail += 1
                    failures.append({"trial": trial, "seed": trial_seed,
                                     "stage": "lift_validate",
                                     "detail": (bad[0].kind if bad
                                                else "reduction mismatch")})
                else:
                    lift_pass += 1
            except HornError as exc:
                lift_fail += 1
                failures.append({"trial": trial, "seed": trial_seed,
                                 "stage": "lift", "detail": str(exc)})
        mode_reports.append({
            "mode": mode,
            "fill_pass": fill_pass, "fill_fail": fill_fail,
            "lift_pass": lift_pass, "lift_fail": lift_fail,
            "witness_calls": witness_call_count() - calls_before,
            "failures": failures,
        })
    return {"n": n, "k": k, "kind": "inner" if inner else "outer",
            "trials": trials, "seed": seed, "modes": mode_reports}
