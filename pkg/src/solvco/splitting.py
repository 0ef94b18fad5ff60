"""Semisimple splitting, nilshadow and torus-kill modified brackets.

Given a verified decomposition g = V (+) n (n a nilpotent ideal containing
[g, g], the semisimple part of each ad(A), A in V, killing V), the modified
bracket

    [X, Y]' = [X, Y] - K(X)(Y) + K(Y)(X)

removes the action of the chosen torus part: with K(A_i) the full
semisimple part of ad(A_i) the result is the nilshadow (a nilpotent algebra
on the same space); with K(A_i) its imaginary-spectrum (compact) part the
result is a new solvable algebra whose V-adjoints have totally real
spectrum.  The splitting itself lives on V (+) g with bracket
[(A, X), (B, Y)] = (0, [X, Y] + S(A)(Y) - S(B)(X)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .decompositions import (
    jordan_chevalley,
    minimal_polynomial,
    semisimple_primary_components,
)
from .errors import NonCommutingTorus, NotNilpotent
from .lie import (
    LieAlgebra,
    Subspace,
    ad_matrix,
    is_nilpotent,
    validate,
    verify_nilpotent_complement,
)
from .matrices import Matrix, add_vectors, basis_vector, inverse, scale_vector, zero_vector
from .polynomials import is_totally_real


class KillMode(enum.Enum):
    FULL = "full"
    COMPACT = "compact"
    SELECTED = "selected"


@dataclass(frozen=True)
class SplittingInput:
    """Algebra with a verified complement V and nilpotent ideal n."""

    algebra: LieAlgebra
    complement: Subspace
    nilpotent_ideal: Subspace

    def __post_init__(self):
        verify_nilpotent_complement(self.algebra, self.complement, self.nilpotent_ideal)

    def v_projection(self) -> Matrix:
        """Matrix of the projection onto V along n, in V-basis coordinates."""
        k = self.complement.dim
        n_g = self.algebra.dim
        if k == 0:
            return Matrix.zeros(0, n_g)
        basis = list(self.complement.basis) + list(self.nilpotent_ideal.basis)
        change = inverse(Matrix.from_columns(basis))
        return Matrix.from_rows([change.row(i) for i in range(k)])


@dataclass(frozen=True)
class KillMap:
    """One commuting operator per V basis vector, vanishing on V."""

    operators: tuple
    mode: KillMode


def _verify_kill_operators(operators, semisimple_parts, v_basis):
    """Commutation and V-annihilation checks shared by every kill mode."""
    for idx, k_i in enumerate(operators):
        for k_j in operators[idx + 1 :]:
            if k_i * k_j != k_j * k_i:
                raise NonCommutingTorus("kill operators do not commute")
        for s_j in semisimple_parts:
            if k_i * s_j != s_j * k_i:
                raise NonCommutingTorus(
                    "kill operator does not commute with a semisimple part")
        for a in v_basis:
            if any(c != 0 for c in k_i.apply(a)):
                raise NonCommutingTorus("kill operator does not annihilate V")


def compact_components(inp: SplittingInput):
    """Per V-basis vector: list of (quadratic factor, compact piece) blocks.

    The pieces are the restrictions of the compact part of ad(A_i)_s to the
    individual imaginary-spectrum primary components; Selected mode picks a
    subset of them per operator.
    """
    result = []
    for a in inp.complement.basis:
        semi = jordan_chevalley(ad_matrix(inp.algebra, a)).semisimple
        blocks = []
        for comp in semisimple_primary_components(semi):
            if comp.is_complex_pair:
                piece = (semi - comp.real_part * Matrix.identity(inp.algebra.dim))
                blocks.append((comp.factor, piece * comp.projector))
        result.append(blocks)
    return result


def kill_map(inp: SplittingInput, mode: KillMode = KillMode.FULL,
             selection: Optional[dict] = None) -> KillMap:
    """Build the torus-kill operators K_i from the decomposition.

    FULL uses the whole semisimple part of ad(A_i); COMPACT only its
    imaginary-spectrum summand; SELECTED takes `selection` mapping the
    1-based V index to indices into compact_components(inp)[i-1].
    """
    semis = [jordan_chevalley(ad_matrix(inp.algebra, a)).semisimple
             for a in inp.complement.basis]
    if mode is KillMode.FULL:
        operators = list(semis)
    elif mode is KillMode.COMPACT:
        operators = []
        for semi in semis:
            total = Matrix.zeros(inp.algebra.dim, inp.algebra.dim)
            for comp in semisimple_primary_components(semi):
                if comp.is_complex_pair:
                    piece = semi - comp.real_part * Matrix.identity(inp.algebra.dim)
                    total = total + piece * comp.projector
            operators.append(total)
    elif mode is KillMode.SELECTED:
        selection = selection or {}
        blocks = compact_components(inp)
        operators = []
        for i, per_op in enumerate(blocks, start=1):
            chosen = selection.get(i, ())
            total = Matrix.zeros(inp.algebra.dim, inp.algebra.dim)
            for t in chosen:
                if not 0 <= t < len(per_op):
                    raise ValueError(
                        f"operator {i} has {len(per_op)} compact components, got index {t}")
                total = total + per_op[t][1]
            operators.append(total)
    else:
        raise ValueError(f"unknown kill mode {mode!r}")
    _verify_kill_operators(operators, semis, inp.complement.basis)
    return KillMap(operators=tuple(operators), mode=mode)


@dataclass(frozen=True)
class SplittingResult:
    """Output algebra with the kill map that produced it.

    `identification` embeds the coordinates of the input algebra into the
    output: the identity for same-space constructions, the second-block
    inclusion for the splitting on V (+) g.
    """

    output: LieAlgebra
    kill: KillMap
    identification: Matrix


def modified_bracket(inp: SplittingInput, kill: KillMap) -> SplittingResult:
    """New bracket [X,Y] - K(X)(Y) + K(Y)(X) on the vector space of g.

    FULL mode output is verified nilpotent (the nilshadow); COMPACT mode
    output is verified to have totally real V-adjoint spectra.
    """
    g = inp.algebra
    n = g.dim
    proj = inp.v_projection()
    k_of_basis = []
    for t in range(n):
        e = basis_vector(n, t)
        coords = proj.apply(e) if kill.operators else ()
        total = Matrix.zeros(n, n)
        for c, op in zip(coords, kill.operators):
            if c != 0:
                total = total + c * op
        k_of_basis.append(total)
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei = basis_vector(n, i - 1)
            ej = basis_vector(n, j - 1)
            z = g.bracket_basis(i, j)
            z = add_vectors(z, scale_vector(-1, k_of_basis[i - 1].apply(ej)))
            z = add_vectors(z, k_of_basis[j - 1].apply(ei))
            table[(i, j)] = z
    out = LieAlgebra(n, table)
    validate(out)  # a bad kill map surfaces here as a Jacobi violation
    if kill.mode is KillMode.FULL:
        if not is_nilpotent(out):
            raise NotNilpotent("full-mode output is not nilpotent; check V and n")
    if kill.mode is KillMode.COMPACT:
        for a in inp.complement.basis:
            p = minimal_polynomial(ad_matrix(out, a))
            if not is_totally_real(p):
                raise RuntimeError(
                    "compact kill left a non-real V-adjoint spectrum")
    return SplittingResult(output=out, kill=kill,
                           identification=Matrix.identity(n))


def nilshadow(inp: SplittingInput) -> SplittingResult:
    """The fully killed, nilpotent bracket on the underlying space of g."""
    return modified_bracket(inp, kill_map(inp, KillMode.FULL))


def malcev_splitting(inp: SplittingInput) -> SplittingResult:
    """Split algebra on V (+) g with the semisimple action glued in.

    Basis order: k copies of the V basis, then the dim(g) basis of g.  The
    embedded copy {(-X_V, X)} is checked to be an ideal whose induced
    bracket is exactly the nilshadow, and the nilshadow is checked
    nilpotent.
    """
    kill = kill_map(inp, KillMode.FULL)
    g = inp.algebra
    k = inp.complement.dim
    n = g.dim
    dim_out = k + n

    def embed(vec):
        return zero_vector(k) + tuple(vec)

    table = {}
    # V copies commute: S_i(A_j) = 0 by the verified decomposition
    for i in range(1, k + 1):
        for j in range(1, n + 1):
            image = kill.operators[i - 1].apply(basis_vector(n, j - 1))
            table[(i, k + j)] = embed(image)
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            table[(k + p, k + q)] = embed(g.bracket_basis(p, q))
    out = LieAlgebra(dim_out, table)
    validate(out)

    shadow = modified_bracket(inp, kill)
    proj = inp.v_projection()
    w_basis = []
    for t in range(n):
        e = basis_vector(n, t)
        v_coords = proj.apply(e) if k else ()
        w_basis.append(tuple(-c for c in v_coords) + e)
    w_space = Subspace(dim_out, w_basis)
    for t in range(dim_out):
        for w in w_basis:
            if not w_space.contains(out.bracket(basis_vector(dim_out, t), w)):
                raise NotNilpotent("embedded nilshadow copy is not an ideal")
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            inside = out.bracket(w_basis[p - 1], w_basis[q - 1])
            expected = shadow.output.bracket_basis(p, q)
            # w-coordinates of a vector in the embedded copy are its g-part
            if tuple(inside[k:]) != tuple(expected):
                raise NotNilpotent("embedded bracket does not match the nilshadow")
    if not is_nilpotent(shadow.output):
        raise NotNilpotent("nilshadow is not nilpotent")

    identification = Matrix.from_columns(
        [embed(basis_vector(n, t)) for t in range(n)]) if n else Matrix.zeros(k, 0)
    return SplittingResult(output=out, kill=kill, identification=identification)
