"""Shared helpers for the test suite: independent oracles and random
generators for algebras and matrices.

The oracles deliberately avoid the library code paths they check:
rank via brute-force minors with Laplace determinants, differentials via
the alternating-sum evaluation formula, and ranks for the Betti oracle via
sympy.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from solvco.lie import LieAlgebra
from solvco.matrices import Matrix


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def laplace_det(rows):
    """Cofactor-expansion determinant over Fraction, independent of elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[t] for t in range(n) if t != j] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


def minor_rank(m: Matrix) -> int:
    """Largest k with a nonzero k x k minor."""
    rows = m.rows_list()
    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        found = False
        for ridx in itertools.combinations(range(m.rows), k):
            for cidx in itertools.combinations(range(m.cols), k):
                sub = [[rows[i][j] for j in cidx] for i in ridx]
                if laplace_det(sub) != 0:
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


def oracle_differential(g: LieAlgebra, k: int):
    """Matrix of d on degree-k forms by evaluating the alternating-sum formula

        (d w)(x_0, ..., x_k) = sum_{p<q} (-1)^{p+q} w([x_p, x_q], ..no p, q..)

    on basis wedges, as sympy rationals.  Completely separate from the
    antiderivation expansion in the library.
    """
    n = g.dim
    source = list(itertools.combinations(range(1, n + 1), k))
    target = list(itertools.combinations(range(1, n + 1), k + 1))

    def eval_basis_form(idx, arg_indices, bracket_vec, slot):
        # w = e^idx evaluated on basis vectors arg_indices with the vector
        # bracket_vec substituted in position slot; returns a Fraction
        total = Fraction(0)
        for m_idx, coeff in enumerate(bracket_vec, start=1):
            if coeff == 0:
                continue
            args = list(arg_indices)
            args[slot] = m_idx
            if len(set(args)) != len(args):
                continue
            perm_sign = 1
            order = sorted(range(len(args)), key=lambda t: args[t])
            sorted_args = tuple(args[t] for t in order)
            if sorted_args != idx:
                continue
            # parity of the sorting permutation
            seen = [False] * len(order)
            for start in range(len(order)):
                if seen[start]:
                    continue
                length = 0
                t = start
                while not seen[t]:
                    seen[t] = True
                    t = order[t]
                    length += 1
                if length % 2 == 0:
                    perm_sign = -perm_sign
            total += coeff * perm_sign
        return total

    mat = sympy.zeros(len(target), len(source))
    for col, idx in enumerate(source):
        for row, jdx in enumerate(target):
            value = Fraction(0)
            for p in range(k + 1):
                for q in range(p + 1, k + 1):
                    bracket = g.bracket_basis(jdx[p], jdx[q])
                    remaining = [jdx[t] for t in range(k + 1) if t not in (p, q)]
                    args = [0] + remaining
                    value += ((-1) ** (p + q)) * eval_basis_form(
                        idx, args, bracket, 0)
            mat[row, col] = sympy.Rational(value.numerator, value.denominator)
    return mat


def oracle_betti(g: LieAlgebra):
    """Betti numbers via the oracle differentials and sympy ranks."""
    n = g.dim
    mats = [oracle_differential(g, k) for k in range(n + 1)]
    betti = []
    prev_rank = 0
    for k in range(n + 1):
        r = mats[k].rank()
        kernel_dim = mats[k].cols - r
        betti.append(kernel_dim - prev_rank)
        prev_rank = r
    return tuple(betti)


# ---------------------------------------------------------------------------
# random generators (all driven by a caller-provided random.Random)
# ---------------------------------------------------------------------------

def rand_fraction(rng, span=3, denominators=(1, 1, 1, 2)):
    return Fraction(rng.randint(-span, span), rng.choice(denominators))


def rand_matrix(rng, n, span=3):
    return Matrix(n, n, [rand_fraction(rng, span) for _ in range(n * n)])


def rand_unimodular(rng, n, ops=None):
    """Product of random elementary integer row operations; det is +-1."""
    rows = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(ops if ops is not None else 2 * n + 2):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-a for a in rows[i]]
    return Matrix.from_rows(rows)


def rand_invertible_rational(rng, n):
    """Unimodular core with random nonzero rational column scalings."""
    u = rand_unimodular(rng, n)
    scales = [Fraction(rng.choice((1, 2, 3, -1)), rng.choice((1, 2)))
              for _ in range(n)]
    return u * Matrix.diagonal(scales)


def rand_derivation_algebra(rng, dim, span=2):
    """R x| R^(dim-1) for a random small derivation; always a Lie algebra."""
    n = dim - 1
    table = {}
    for j in range(1, n + 1):
        coeffs = [Fraction(0)] * dim
        for k in range(1, n + 1):
            coeffs[k] = Fraction(rng.randint(-span, span))
        table[(1, 1 + j)] = tuple(coeffs)
    return LieAlgebra(dim, table)


def oscillator4() -> LieAlgebra:
    """Rotation acting on a 3-dim Heisenberg: a solvable, non-abelian-nilradical case."""
    return LieAlgebra.from_brackets(
        4, {(1, 2): {3: 1}, (1, 3): {2: -1}, (2, 3): {4: 1}})


def base_algebras():
    """Small valid algebras the randomized suites conjugate and perturb."""
    from solvco.catalog import catalog_get

    names = ["abelian2", "abelian3", "abelian4", "heisenberg3", "sol3",
             "rot3", "hyperelliptic4"]
    algebras = [catalog_get(name).algebra for name in names]
    algebras.append(oscillator4())
    algebras.append(LieAlgebra.from_brackets(
        5, {(1, 2): {2: 1}, (1, 3): {3: -1}, (1, 4): {5: 1}, (1, 5): {4: -1}}))
    return algebras


def rand_valid_algebra(rng, max_dim=5):
    """Random valid Lie algebra of dimension <= max_dim in a random basis."""
    if rng.random() < 0.5:
        g = rng.choice([a for a in base_algebras() if a.dim <= max_dim])
    else:
        g = rand_derivation_algebra(rng, rng.randint(2, max_dim))
    from solvco.lie import conjugate

    return conjugate(g, rand_unimodular(rng, g.dim))


def perturb_tensor(rng, g: LieAlgebra) -> LieAlgebra:
    """Change one structure constant; usually breaks Jacobi."""
    n = g.dim
    table = {key: list(val) for key, val in g.nonzero_brackets()}
    i = rng.randint(1, n - 1)
    j = rng.randint(i + 1, n)
    k = rng.randint(1, n)
    row = table.setdefault((i, j), [Fraction(0)] * n)
    row[k - 1] += Fraction(rng.choice((1, 2, -1)))
    return LieAlgebra(n, {key: tuple(val) for key, val in table.items()})


def rotation_block(a, b):
    return Matrix.from_rows([[a, b], [-b, a]])


def companion(poly_coeffs):
    """Companion matrix of a monic polynomial given low-to-high with lead 1."""
    coeffs = [Fraction(c) for c in poly_coeffs]
    assert coeffs[-1] == 1
    n = len(coeffs) - 1
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -coeffs[i]
    return Matrix.from_rows(rows)


def block_diag(*blocks):
    n = sum(b.rows for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.rows
    return Matrix.from_rows(rows)


def rand_semisimple(rng, n):
    """Conjugated block-diagonal semisimple matrix of size n.

    Blocks: rational scalars, rotation-type pairs (complex spectrum), and
    real-quadratic companions; all split/compact-decomposable.
    """
    blocks = []
    size = 0
    used_scalars = set()
    while size < n:
        room = n - size
        choice = rng.randrange(3) if room >= 2 else 0
        if choice == 0:
            while True:
                c = Fraction(rng.randint(-4, 4))
                if c not in used_scalars:
                    used_scalars.add(c)
                    break
            blocks.append(Matrix.from_rows([[c]]))
            size += 1
        elif choice == 1:
            a = Fraction(rng.randint(-2, 2))
            b = Fraction(rng.randint(1, 3))
            blocks.append(rotation_block(a, b))
            size += 2
        else:
            # x^2 - px - q with positive non-square discriminant: real surds
            p, q = rng.choice(((1, 1), (3, -1), (0, 3), (1, 3)))
            blocks.append(companion((-q, -p, 1)))
            size += 2
    u = rand_unimodular(rng, n)
    from solvco.matrices import inverse

    return u * block_diag(*blocks) * inverse(u)
