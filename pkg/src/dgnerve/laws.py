"""Seeded randomized sweeps of the algebraic identities.

Each law row runs ``trials`` independent trials; a trial draws fresh
random simplices/cochains (or horns) and checks one exact identity:

* ``cochain_d_squared_n*`` — the twisted cochain differential squares to
  zero between valid simplices;
* ``cochain_leibniz_n*`` — d(η∘φ) = d(η)∘φ + (−1)^{|η|} η∘d(φ);
* ``cochain_assoc_n*`` — convolution associativity;
* ``obstruction_*`` — the horn obstruction pair satisfies d(U) = 0 and
  its V-identity (outer, inner, and reversed-outer branches).

All sampling is deterministic in (seed, law index, trial).  The ``signs``
parameter exists so tests can demonstrate that mutated sign conventions
break the laws; production callers always use the pinned pattern.
"""

from __future__ import annotations

import random
from typing import Callable

from .dgcat import DgCategory
from .horn import (HornError, compute_obstruction, obstruction_violations,
                   random_horn, random_valid_simplex)
from .nerve import (NerveCochain, NerveSimplex, PINNED, SignPattern,
                    cochain_add, cochain_compose, cochain_differential,
                    cochain_equal, cochain_scale, increasing_sequences)

COCHAIN_DEGREES = (-1, 0, 1, 2)


def random_cochain(cat: DgCategory, rng: random.Random, source: NerveSimplex,
                   target: NerveSimplex, degree: int) -> NerveCochain:
    """A cochain with one random component per vertex sequence."""
    components = {}
    for seq in increasing_sequences(source.n):
        k = len(seq) - 1
        morphism = cat.random_morphism(source.objects[seq[0]],
                                       target.objects[seq[-1]],
                                       degree - k, rng)
        if not morphism.is_zero():
            components[seq] = morphism
    return NerveCochain(source, target, degree, components)


def _is_zero_cochain(cochain: NerveCochain) -> bool:
    return all(m.is_zero() for m in cochain.components.values())


def law_cochain_d_squared(cat: DgCategory, rng: random.Random, n: int,
                          signs: SignPattern) -> str | None:
    source = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    target = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    eta = random_cochain(cat, rng, source, target, rng.choice(COCHAIN_DEGREES))
    once = cochain_differential(cat, eta, signs)
    twice = cochain_differential(cat, once, signs)
    if not _is_zero_cochain(twice):
        return f"d(d(η)) != 0 in degree {eta.degree}"
    return None


def law_cochain_leibniz(cat: DgCategory, rng: random.Random, n: int,
                        signs: SignPattern) -> str | None:
    f = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    g = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    h = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    phi = random_cochain(cat, rng, f, g, rng.choice(COCHAIN_DEGREES))
    eta = random_cochain(cat, rng, g, h, rng.choice(COCHAIN_DEGREES))
    lhs = cochain_differential(cat, cochain_compose(cat, eta, phi, signs),
                               signs)
    rhs = cochain_add(
        cochain_compose(cat, cochain_differential(cat, eta, signs), phi,
                        signs),
        cochain_scale(
            cochain_compose(cat, eta, cochain_differential(cat, phi, signs),
                            signs),
            (-1) ** eta.degree))
    if not cochain_equal(lhs, rhs):
        return f"Leibniz fails for degrees ({eta.degree}, {phi.degree})"
    return None


def law_cochain_assoc(cat: DgCategory, rng: random.Random, n: int,
                      signs: SignPattern) -> str | None:
    f = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    g = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    h = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    k = random_valid_simplex(cat, rng, n, witnessed=False, signs=signs)
    phi = random_cochain(cat, rng, f, g, rng.choice(COCHAIN_DEGREES))
    eta = random_cochain(cat, rng, g, h, rng.choice(COCHAIN_DEGREES))
    zeta = random_cochain(cat, rng, h, k, rng.choice(COCHAIN_DEGREES))
    lhs = cochain_compose(cat, zeta, cochain_compose(cat, eta, phi, signs),
                          signs)
    rhs = cochain_compose(cat, cochain_compose(cat, zeta, eta, signs), phi,
                          signs)
    if not cochain_equal(lhs, rhs):
        return "convolution associativity fails"
    return None


def _law_obstruction(n: int, k: int, witnessed: bool) -> Callable:
    def law(cat: DgCategory, rng: random.Random, _n: int,
            signs: SignPattern) -> str | None:
        try:
            horn = random_horn(cat, rng, n, k, witnessed=witnessed,
                               signs=signs)
            obstruction = compute_obstruction(cat, horn, signs)
        except HornError as exc:
            return str(exc)
        bad = obstruction_violations(obstruction)
        if bad:
            return bad[0].kind
        return None

    return law


def law_rows(ns: tuple[int, ...] = (1, 2, 3)) -> list[tuple[str, Callable, int]]:
    """(name, law function, dimension) rows in deterministic order."""
    rows: list[tuple[str, Callable, int]] = []
    for n in ns:
        rows.append((f"cochain_d_squared_n{n}", law_cochain_d_squared, n))
    for n in ns:
        rows.append((f"cochain_leibniz_n{n}", law_cochain_leibniz, n))
    for n in ns:
        rows.append((f"cochain_assoc_n{n}", law_cochain_assoc, n))
    rows.append(("obstruction_outer", _law_obstruction(2, 0, True), 2))
    rows.append(("obstruction_inner", _law_obstruction(3, 1, False), 3))
    rows.append(("obstruction_outer_reversed", _law_obstruction(2, 2, True), 2))
    return rows


def run_laws(cat: DgCategory, seed: int = 0, trials: int = 100,
             ns: tuple[int, ...] = (1, 2, 3),
             signs: SignPattern = PINNED) -> dict:
    """Run the whole battery; failures are reported with reproducing seeds."""
    report_rows = []
    for law_index, (name, law, n) in enumerate(law_rows(ns)):
        passed = failed = 0
        failing: list[dict] = []
        for trial in range(trials):
            trial_seed = seed * 1_000_003 + law_index * 8191 + trial
            rng = random.Random(trial_seed)
            detail = law(cat, rng, n, signs)
            if detail is None:
                passed += 1
            else:
                failed += 1
                if len(failing) < 5:
                    failing.append({"trial": trial, "seed": trial_seed,
                                    "detail": detail})
        report_rows.append({"name": name, "pass": passed, "fail": failed,
                            "failures": failing})
    return {"kind": "laws_report", "seed": seed, "trials": trials,
            "laws": report_rows}
