"""Matrix decompositions over the rationals.

Minimal polynomials are grown from Krylov dependencies (no characteristic
polynomial factoring).  The additive semisimple/nilpotent decomposition is
the Newton iteration on the squarefree part of the minimal polynomial; the
further split of a semisimple operator into real-spectrum and
imaginary-spectrum parts is a primary decomposition along the totally real
part and the negative-discriminant quadratic factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NotRationallySplittable, NotUnipotent
from .matrices import Matrix, basis_vector, inverse
from .polynomials import (
    Polynomial,
    clear_denominators,
    integer_divisors,
    poly_extended_gcd,
    poly_lcm,
    squarefree_part,
    sturm_real_root_count,
)


def poly_of_matrix(p: Polynomial, m: Matrix) -> Matrix:
    """Evaluate p at a square matrix by Horner's scheme."""
    if not m.is_square():
        raise ValueError("polynomial of a non-square matrix")
    n = m.rows
    acc = Matrix.zeros(n, n)
    for c in reversed(p.coeffs):
        acc = acc * m + c * Matrix.identity(n)
    return acc


def char_poly(m: Matrix) -> Polynomial:
    """Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier scheme."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(1)]  # leading coefficient of x^n
    M = Matrix.zeros(n, n)
    c = Fraction(1)
    for k in range(1, n + 1):
        M = m * M + c * Matrix.identity(n)
        c = -(m * M).trace() / k
        coeffs.append(c)
    return Polynomial(coeffs[::-1])


def _vector_annihilator(m: Matrix, v) -> Polynomial:
    """Monic generator of {p : p(m) v = 0} from the Krylov sequence of v."""
    n = m.rows
    combos = []  # row-reduction bookkeeping: vectors alongside Krylov coords
    basis_rows = []
    current = tuple(v)
    power = 0
    while True:
        # reduce current against stored echelon rows, tracking coordinates
        coords = [Fraction(0)] * (power + 1)
        coords[power] = Fraction(1)
        vec = list(current)
        for row, combo in zip(basis_rows, combos):
            pivot = next(i for i, x in enumerate(row) if x != 0)
            if vec[pivot] != 0:
                f = vec[pivot]
                vec = [x - f * y for x, y in zip(vec, row)]
                for i, cc in enumerate(combo):
                    coords[i] -= f * cc
        if all(x == 0 for x in vec):
            return Polynomial(coords).monic()
        pivot = next(i for i, x in enumerate(vec) if x != 0)
        scale = vec[pivot]
        basis_rows.append(tuple(x / scale for x in vec))
        combos.append(tuple(c / scale for c in coords) + (Fraction(0),))
        combos = [tuple(c) + (Fraction(0),) * (power + 2 - len(c)) for c in combos]
        current = m.apply(current)
        power += 1
        if power > n:
            raise RuntimeError("Krylov sequence failed to terminate")


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic least-degree annihilator: lcm of per-basis-vector Krylov annihilators."""
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return Polynomial((1,))
    result = Polynomial((1,))
    for i in range(n):
        result = poly_lcm(result, _vector_annihilator(m, basis_vector(n, i)))
        if result.degree == n:
            break
    return result


@dataclass(frozen=True)
class JordanDecomposition:
    """Additive decomposition m = semisimple + nilpotent, both polynomials in m."""

    semisimple: Matrix
    nilpotent: Matrix


def jordan_chevalley(m: Matrix) -> JordanDecomposition:
    """Newton iteration on the squarefree part f of the minimal polynomial.

    Starting from S = m, S <- S - f(S) * f'(S)^{-1} until f(S) = 0; f'(S)
    stays invertible because the iterates keep the spectrum of m and f is
    squarefree.  Terminates within ceil(log2 n) + 1 steps.
    """
    if not m.is_square():
        raise ValueError("decomposition of a non-square matrix")
    n = m.rows
    f = squarefree_part(minimal_polynomial(m))
    s = m
    fs = poly_of_matrix(f, s)
    steps = 0
    limit = max(1, n).bit_length() + 2
    while not fs.is_zero():
        if steps >= limit:
            raise RuntimeError("Newton iteration failed to converge")
        s = s - fs * inverse(poly_of_matrix(f.derivative(), s))
        fs = poly_of_matrix(f, s)
        steps += 1
    return JordanDecomposition(semisimple=s, nilpotent=m - s)


def _denominator_lcm(m: Matrix) -> int:
    d = 1
    for i in range(m.rows):
        for x in m.row(i):
            d = d * x.denominator // gcd(d, x.denominator)
    return d


def complex_quadratic_factors(p: Polynomial):
    """Monic integer quadratics x^2 - B x + C with B^2 < 4C dividing p.

    p must be monic with integer coefficients and squarefree.  Candidates
    come from divisors of p evaluated at two integers (any factor q
    satisfies q(t) | p(t)); each candidate is verified by exact division,
    so the search is complete and sound.
    """
    if not p.is_integer() or p.is_zero() or p.leading() != 1:
        raise ValueError("expected a monic integer polynomial")
    q = p
    if q.coeffs[0] == 0:  # squarefree, so at most one root at zero
        q = q // Polynomial.x()
    if q.degree < 2:
        return []
    c0 = int(q.coeffs[0])
    t = None
    for cand in (1, -1, 2, -2, 3, -3):
        if q(cand) != 0:
            t = cand
            break
    if t is None:
        # all of +-1, +-2, +-3 are roots; strip them and retry
        reduced = q
        for r in (1, -1, 2, -2, 3, -3):
            reduced = reduced // Polynomial((-r, 1))
        return complex_quadratic_factors(reduced)
    pt = int(q(t))
    found = []
    for big_c in integer_divisors(c0):
        for delta_abs in integer_divisors(pt):
            for delta in (delta_abs, -delta_abs):
                num = t * t + big_c - delta
                if num % t != 0:
                    continue
                big_b = num // t
                if big_b * big_b >= 4 * big_c:
                    continue
                cand = Polynomial((big_c, -big_b, 1))
                if cand in found:
                    continue
                if cand.divides(q):
                    found.append(cand)
    found.sort(key=lambda f: (f.coeffs[1], f.coeffs[0]))
    return found


@dataclass(frozen=True)
class SplitCompactParts:
    """Commuting split (real spectrum) + compact (imaginary spectrum) summands."""

    split: Matrix
    compact: Matrix


@dataclass(frozen=True)
class PrimaryComponent:
    """One factor of the minimal polynomial with its spectral projector."""

    factor: Polynomial
    projector: Matrix
    real_part: Fraction          # a with factor = x^2 - 2a x + c; 0 on the real block
    is_complex_pair: bool


def semisimple_primary_components(s: Matrix):
    """Primary decomposition of a semisimple rational matrix.

    Returns a list of PrimaryComponent: at most one totally real block plus
    one block per negative-discriminant quadratic factor of the minimal
    polynomial.  Raises NotRationallySplittable when the minimal polynomial
    has a factor of degree >= 3 with non-real roots.
    """
    if not s.is_square():
        raise ValueError("expected a square matrix")
    p = minimal_polynomial(s)
    if squarefree_part(p) != p:
        raise ValueError("matrix is not semisimple (minimal polynomial not squarefree)")
    n = s.rows
    if p.degree == 0:
        return []
    scale = _denominator_lcm(s)
    scaled_min = minimal_polynomial(scale * s)
    assert scaled_min.is_integer()
    quads_scaled = complex_quadratic_factors(scaled_min)
    # translate each x^2 - Bx + C back through eigenvalue scaling by 1/scale
    factors = []
    real_block = p
    for qs in quads_scaled:
        big_b, big_c = -qs.coeffs[1], qs.coeffs[0]
        q = Polynomial((big_c / Fraction(scale) ** 2, -big_b / Fraction(scale), 1))
        factors.append((q, -q.coeffs[1] / 2))
        quotient, remainder = divmod(real_block, q)
        assert remainder.is_zero(), "conjugate-pair factor must divide the minimal polynomial"
        real_block = quotient
    if not (real_block.degree <= 0 or
            sturm_real_root_count(real_block) == real_block.degree):
        raise NotRationallySplittable(
            f"minimal polynomial has a non-real factor of degree >= 3: {real_block}"
        )
    components = []
    pieces = []
    if real_block.degree >= 1:
        pieces.append((real_block, Fraction(0), False))
    pieces.extend((q, a, True) for q, a in factors)
    for f, a, is_pair in pieces:
        h = p // f
        g, u, _ = poly_extended_gcd(h, f)
        assert g.degree == 0 and not g.is_zero()
        projector = poly_of_matrix(u * h, s)
        components.append(PrimaryComponent(factor=f, projector=projector,
                                           real_part=a, is_complex_pair=is_pair))
    total = Matrix.zeros(n, n)
    for comp in components:
        total = total + comp.projector
    assert total.is_identity(), "primary projectors must resolve the identity"
    return components


def split_compact_parts(s: Matrix) -> SplitCompactParts:
    """Split s (semisimple) into commuting real-spectrum + imaginary-spectrum parts.

    On the totally real block the split part is s itself; on a quadratic
    block x^2 - 2a x + c the split part is a times the identity.  Both parts
    are polynomials in s.
    """
    components = semisimple_primary_components(s)
    n = s.rows
    split = Matrix.zeros(n, n)
    for comp in components:
        if comp.is_complex_pair:
            split = split + comp.real_part * comp.projector
        else:
            split = split + s * comp.projector
    return SplitCompactParts(split=split, compact=s - split)


def nilpotency_index(m: Matrix):
    """Least k with m^k = 0, or None when m is not nilpotent."""
    if not m.is_square():
        raise ValueError("expected a square matrix")
    n = m.rows
    if n == 0:
        return 0
    power = Matrix.identity(n)
    for k in range(n + 1):
        if power.is_zero():
            return k
        power = power * m
    return None


def exp_nilpotent(m: Matrix) -> Matrix:
    """Finite exponential series of a nilpotent matrix."""
    idx = nilpotency_index(m)
    if idx is None:
        raise ValueError("matrix is not nilpotent")
    n = m.rows
    acc = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, idx):
        term = term * m * Fraction(1, k)
        acc = acc + term
    return acc


def log_unipotent(m: Matrix) -> Matrix:
    """Rational logarithm of a unipotent matrix via the finite series.

    Sum over k >= 1 of (-1)^(k+1) (m - I)^k / k, truncated at the nilpotency
    index; the finite exponential series inverts it exactly, which is
    checked before returning.
    """
    if not m.is_square():
        raise ValueError("expected a square matrix")
    n = m.rows
    nil = m - Matrix.identity(n)
    idx = nilpotency_index(nil)
    if idx is None:
        raise NotUnipotent("matrix minus identity is not nilpotent")
    acc = Matrix.zeros(n, n)
    term = Matrix.identity(n)
    for k in range(1, idx):
        term = term * nil
        acc = acc + Fraction((-1) ** (k + 1), k) * term
    assert exp_nilpotent(acc) == m, "finite series round trip must be exact"
    return acc


def perfect_square_root(n: int):
    """Integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
