"""Maurer-Cartan elements, twisting, and base change along B → B/I.

Hand calculation used below: in the three-term fixture (complex
Q −0→ Q −id→ Q, one object), End¹ has basis u (level 0→1), v (level 1→2),
End² has basis w (level 0→2), and

    d(u) = w    d(v) = 0    v∘u = w    u∘u = v∘v = 0

so η = s·u + t·v has MC defect (s + s·t)·w: the MC locus is s(1+t) = 0.
"""

import random

import pytest

from dgnerve.dgcat import check_axioms, complex_from_dense, make_complex_category
from dgnerve.fixtures import mc_twisted_category
from dgnerve.mc import (
    InvalidMCObject,
    MCElement,
    check_mc,
    mc_defect,
    promote_morphism,
    random_mc_element,
    reduce_category,
    reduce_morphism,
    tensor_with_ring,
    twist,
)
from dgnerve.rings import RATIONALS, SquareZeroRing


def endo(cat, degree, coords):
    (obj,) = cat.objects
    return cat.morphism(obj, obj, degree, coords)


# ---------------------------------------------------------------------------
# tensor_with_ring / reduction.
# ---------------------------------------------------------------------------


def test_tensor_with_rank_zero_is_identity(three_term):
    cat = tensor_with_ring(three_term, RATIONALS)
    assert cat.ranks == three_term.ranks
    assert cat.diffs == three_term.diffs
    assert cat.comps == three_term.comps
    assert cat.identities == three_term.identities


@pytest.mark.parametrize("rank", [1, 2])
def test_tensor_passes_axioms(three_term, rank):
    cat = tensor_with_ring(three_term, SquareZeroRing(rank))
    assert cat.ring.ideal_rank == rank
    assert check_axioms(cat) == []


def test_reduce_recovers_base(three_term, exterior):
    for cat in (three_term, exterior):
        big = tensor_with_ring(cat, SquareZeroRing(2))
        back = reduce_category(big)
        assert back.ranks == cat.ranks
        assert back.diffs == cat.diffs
        assert back.comps == cat.comps
        assert back.identities == cat.identities


def test_tensor_requires_rational_base(three_term):
    big = tensor_with_ring(three_term, SquareZeroRing(1))
    with pytest.raises(ValueError):
        tensor_with_ring(big, SquareZeroRing(1))


def test_promote_reduce_round_trip(three_term, rng):
    big = tensor_with_ring(three_term, SquareZeroRing(2))
    (obj,) = three_term.objects
    f = three_term.random_morphism(obj, obj, 1, rng)
    assert reduce_morphism(promote_morphism(big, f)) == f


# ---------------------------------------------------------------------------
# check_mc.
# ---------------------------------------------------------------------------


def test_zero_is_mc(three_term):
    (obj,) = three_term.objects
    assert check_mc(three_term, three_term.zero(obj, obj, 1)) == []


def test_three_term_mc_locus(three_term):
    # defect of s·u + t·v is s(1+t)·w.
    assert check_mc(three_term, endo(three_term, 1, [0, 5])) == []
    assert check_mc(three_term, endo(three_term, 1, [3, -1])) == []
    report = check_mc(three_term, endo(three_term, 1, [1, 1]))
    assert [v.kind for v in report] == ["mc_equation"]
    defect = mc_defect(three_term, endo(three_term, 1, [1, 1]))
    assert defect == endo(three_term, 2, [2])


def test_closed_element_with_nonzero_square_fails():
    # Zero differential, so every η is closed; u + v squares to w ≠ 0.
    cat = make_complex_category(
        [complex_from_dense(RATIONALS, {0: 1, 1: 1, 2: 1}, {})])
    eta = endo(cat, 1, [1, 1])
    assert cat.differential(eta).is_zero()
    report = check_mc(cat, eta)
    assert [v.kind for v in report] == ["mc_equation"]


def test_ideal_cycle_is_mc_over_dual_numbers(three_term):
    big = tensor_with_ring(three_term, SquareZeroRing(1))
    (obj,) = big.objects
    eps = big.ring.generator(0)
    # ε·(closed ξ): the square dies in I², the differential by closedness.
    xi = big.morphism(obj, obj, 1, [big.ring.zero(), eps])
    assert check_mc(big, xi) == []
    # ε·(non-closed ξ) fails: d(ε·u) = ε·w ≠ 0 and the square is still 0.
    bad = big.morphism(obj, obj, 1, [eps, big.ring.zero()])
    assert [v.kind for v in check_mc(big, bad)] == ["mc_equation"]


def test_check_mc_shape_guards(three_term):
    (obj,) = three_term.objects
    wrong_degree = three_term.zero(obj, obj, 0)
    assert [v.kind for v in check_mc(three_term, wrong_degree)] == ["mc_degree"]


# ---------------------------------------------------------------------------
# twist.
# ---------------------------------------------------------------------------


def test_zero_twist_is_base(three_term):
    (obj,) = three_term.objects
    twisted = twist(three_term, {obj: three_term.zero(obj, obj, 1)})
    assert twisted.diffs == three_term.diffs
    assert twisted.comps == three_term.comps


def test_twist_passes_axioms(three_term):
    (obj,) = three_term.objects
    for coords in ([0, 1], [1, -1], [0, -3], [2, -1]):
        eta = endo(three_term, 1, coords)
        assert check_mc(three_term, eta) == []
        assert check_axioms(twist(three_term, {obj: eta})) == []


def test_twist_accepts_mc_element_records(three_term):
    (obj,) = three_term.objects
    eta = endo(three_term, 1, [0, 2])
    twisted = twist(three_term, [MCElement(obj, eta)])
    assert check_axioms(twisted) == []


def test_twist_rejects_invalid_mc(three_term):
    (obj,) = three_term.objects
    with pytest.raises(InvalidMCObject):
        twist(three_term, {obj: endo(three_term, 1, [1, 1])})
    with pytest.raises(InvalidMCObject):
        twist(three_term, {"nope": endo(three_term, 1, [0, 0])})


def test_genuine_mc_mutant_breaks_d_squared(three_term):
    (obj,) = three_term.objects
    eta = endo(three_term, 1, [1, -1])        # on the MC locus (t = −1)
    mutant = endo(three_term, 1, [1, 0])      # single-coordinate mutation
    assert check_mc(three_term, mutant)       # genuinely off the locus
    report = check_axioms(twist(three_term, {obj: mutant}, validate=False))
    assert any(v.kind == "d_squared" for v in report)


def test_twisted_fixture_passes_axioms(twisted):
    assert check_axioms(twisted) == []


# ---------------------------------------------------------------------------
# Functoriality along B → B/I and sampling.
# ---------------------------------------------------------------------------


def test_mc_reduces_functorially(three_term, rng):
    big = tensor_with_ring(three_term, SquareZeroRing(2))
    (obj,) = big.objects
    for _ in range(15):
        eta = random_mc_element(big, obj, rng)
        assert check_mc(big, eta) == []
        assert check_mc(three_term, reduce_morphism(eta)) == []


@pytest.mark.parametrize("rank", [0, 1, 2])
def test_random_mc_elements_are_mc(three_term, two_term, rank, rng):
    for base in (three_term, two_term):
        cat = base if rank == 0 else tensor_with_ring(base, SquareZeroRing(rank))
        (obj,) = cat.objects
        for _ in range(15):
            assert check_mc(cat, random_mc_element(cat, obj, rng)) == []


def test_random_mc_elements_are_sometimes_nonzero(two_term, rng):
    cat = tensor_with_ring(two_term, SquareZeroRing(1))
    (obj,) = cat.objects
    draws = [random_mc_element(cat, obj, rng) for _ in range(20)]
    assert any(not eta.is_zero() for eta in draws)
