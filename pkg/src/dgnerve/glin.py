"""Dense exact linear algebra over square-zero extensions.

Matrices are lists of rows of :class:`~dgnerve.rings.RingElement`.  The one
nontrivial operation is :func:`solve_linear`: solving ``A·x = b`` over
``B = Q ⊕ I``.  Writing ``x = x⁰ + Σ_l ε_l·x^l`` and splitting every entry
into layers turns the system into a single rational one,

    A⁰·x⁰           = b⁰          (body layer)
    A⁰·x^l + A^l·x⁰ = b^l         (one block per ideal generator),

which is solved *jointly* by Gauss-Jordan elimination.  Solving the body
first and then patching the ideal layers is not equivalent: when the body
matrix is singular the body solution must be chosen compatibly with the
ideal blocks (``A=[[ε]], b=[ε]`` has the solution ``x=1`` even though the
body system is ``0·x = 0``).  Consequently solvability over ``B`` implies
solvability of the body system over Q, but not conversely.

All pivoting is first-nonzero and free variables are set to 0, so results
are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rings import RingElement, SquareZeroRing

Matrix = Sequence[Sequence[RingElement]]
Vector = Sequence[RingElement]


class NoSolution(ValueError):
    """Raised when a linear system is inconsistent."""


# -- rational core -----------------------------------------------------------

def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[tuple[int, int]]]:
    """Reduced row echelon form; returns (matrix, pivot (row, col) list)."""
    mat = [list(row) for row in rows]
    pivots: list[tuple[int, int]] = []
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [v - factor * w for v, w in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return mat, pivots


def solve_rational(rows: Sequence[Sequence[Fraction]],
                   rhs: Sequence[Fraction]) -> list[Fraction]:
    """One solution of a rational system (free variables 0), or NoSolution."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0:
        return []
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    solution = [Fraction(0)] * ncols
    for r, c in pivots:
        if c == ncols:
            raise NoSolution("inconsistent linear system")
        solution[c] = red[r][ncols]
    return solution


def rational_nullspace(rows: Sequence[Sequence[Fraction]],
                       ncols: int) -> list[list[Fraction]]:
    """A basis of the rational kernel of the matrix."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    red, pivots = rref(rows)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for j in range(ncols):
        if j in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for r, c in pivots:
            v[c] = -red[r][j]
        basis.append(v)
    return basis


# -- layered systems over B ---------------------------------------------------

def _expand(matrix: Matrix, rhs: Vector,
            ring: SquareZeroRing) -> tuple[list[list[Fraction]], list[Fraction], int]:
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    m = ring.ideal_rank
    zero = Fraction(0)
    big_rows: list[list[Fraction]] = []
    big_rhs: list[Fraction] = []
    for layer in range(m + 1):
        for i in range(nrows):
            row = [zero] * ((m + 1) * ncols)
            for j in range(ncols):
                entry = matrix[i][j]
                body = entry.body
                if body != 0:
                    row[layer * ncols + j] = body
                if layer > 0:
                    ideal_coeff = entry.ideal[layer - 1]
                    if ideal_coeff != 0:
                        row[j] += ideal_coeff
            big_rows.append(row)
            b = rhs[i]
            big_rhs.append(b.body if layer == 0 else b.ideal[layer - 1])
    return big_rows, big_rhs, ncols


def solve_linear(matrix: Matrix, rhs: Vector,
                 ring: SquareZeroRing) -> list[RingElement]:
    """Some exact solution of ``A·x = b`` over ``ring``, or NoSolution."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if ncols == 0:
        if any(not b.is_zero() for b in rhs):
            raise NoSolution("inconsistent linear system (no unknowns)")
        return []
    big_rows, big_rhs, _ = _expand(matrix, rhs, ring)
    flat = solve_rational(big_rows, big_rhs)
    m = ring.ideal_rank
    return [RingElement(flat[j],
                        tuple(flat[layer * ncols + j] for layer in range(1, m + 1)))
            for j in range(ncols)]


def nullspace(matrix: Matrix, ring: SquareZeroRing) -> list[list[RingElement]]:
    """A rational basis of ``{x : A·x = 0}`` over ``ring`` (as a Q-space)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    zero_rhs = [ring.zero()] * nrows
    big_rows, _, _ = _expand(matrix, zero_rhs, ring)
    m = ring.ideal_rank
    basis = rational_nullspace(big_rows, (m + 1) * ncols)
    out = []
    for flat in basis:
        out.append([RingElement(flat[j],
                                tuple(flat[layer * ncols + j]
                                      for layer in range(1, m + 1)))
                    for j in range(ncols)])
    return out


# -- matrix utilities ---------------------------------------------------------

def compose_maps(outer: Matrix, inner: Matrix) -> list[list[RingElement]]:
    """Matrix of ``outer ∘ inner`` (apply ``inner`` first)."""
    if outer and inner and len(outer[0]) != len(inner):
        raise ValueError("matrix shapes do not compose")
    if not inner or not inner[0]:
        return [[] for _ in outer]
    inner_cols = len(inner[0])
    out: list[list[RingElement]] = []
    for row in outer:
        new_row = []
        for c in range(inner_cols):
            acc = None
            for k, coeff in enumerate(row):
                if coeff.is_zero():
                    continue
                term = coeff * inner[k][c]
                acc = term if acc is None else acc + term
            if acc is None:
                zero_proto = row[0] if row else inner[0][c]
                acc = RingElement(Fraction(0),
                                  (Fraction(0),) * len(zero_proto.ideal))
            new_row.append(acc)
        out.append(new_row)
    return out


def mat_vec(matrix: Matrix, vec: Vector, ring: SquareZeroRing) -> list[RingElement]:
    out = []
    for row in matrix:
        acc = ring.zero()
        for coeff, x in zip(row, vec):
            if not coeff.is_zero() and not x.is_zero():
                acc = acc + coeff * x
        out.append(acc)
    return out


def identity_matrix(n: int, ring: SquareZeroRing) -> list[list[RingElement]]:
    return [[ring.one() if i == j else ring.zero() for j in range(n)]
            for i in range(n)]
