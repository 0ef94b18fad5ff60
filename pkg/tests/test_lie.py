"""Structure-constant validation, adjoints, series, flags, decompositions."""

import random
from fractions import Fraction

import pytest

from solvco.catalog import catalog_get
from solvco.errors import (
    AntisymmetryViolation,
    DecompositionInvalid,
    JacobiViolation,
    NotSolvable,
)
from solvco.lie import (
    LieAlgebra,
    Subspace,
    ad_matrix,
    completely_solvable_flag,
    conjugate,
    derived_series,
    derived_subalgebra,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    lower_central_series,
    nilradical_maximality_hint,
    restrict,
    validate,
    verify_nilpotent_complement,
)
from solvco.decompositions import minimal_polynomial
from solvco.matrices import basis_vector
from solvco.polynomials import Polynomial
from support import oscillator4, rand_unimodular, rand_valid_algebra

X = Polynomial.x()

HEISENBERG = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}})


def test_validate_spec_examples():
    validate(LieAlgebra.abelian(3))
    validate(HEISENBERG)
    bad = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    with pytest.raises(JacobiViolation) as err:
        validate(bad)
    assert err.value.triple == (1, 2, 3)
    assert any(c != 0 for c in err.value.residual)


def test_from_tensor_antisymmetry():
    z = [[[0] * 2 for _ in range(2)] for _ in range(2)]
    z[0][0][1] = 1  # c[1][1][2] = 1 without the mirrored entry
    with pytest.raises(AntisymmetryViolation):
        LieAlgebra.from_tensor(z)
    z[0][1][0] = -1
    g = LieAlgebra.from_tensor(z)
    assert g.bracket_basis(1, 2) == (1, 0)


def test_ad_matrix_spec_examples():
    assert ad_matrix(HEISENBERG, (0, 0, 0)).is_zero()
    ad1 = ad_matrix(HEISENBERG, basis_vector(3, 0))
    assert ad1.apply(basis_vector(3, 1)) == (0, 0, 1)  # e2 -> e3
    hyper = catalog_get("hyperelliptic4").algebra
    ad4 = ad_matrix(hyper, basis_vector(4, 3))
    assert minimal_polynomial(ad4) == X * (X * X + 1)
    # rotation on span{e1, e2}: e1 -> -e2, e2 -> e1
    assert ad4.apply(basis_vector(4, 0)) == (0, -1, 0, 0)
    assert ad4.apply(basis_vector(4, 1)) == (1, 0, 0, 0)


def test_ad_linearity():
    rng = random.Random(19)
    for _ in range(25):
        g = rand_valid_algebra(rng)
        x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(g.dim))
        y = tuple(Fraction(rng.randint(-3, 3)) for _ in range(g.dim))
        xy = tuple(a + b for a, b in zip(x, y))
        assert ad_matrix(g, xy) == ad_matrix(g, x) + ad_matrix(g, y)


def test_series_spec_examples():
    ab = LieAlgebra.abelian(3)
    assert [s.dim for s in derived_series(ab)] == [3, 0]
    assert [s.dim for s in lower_central_series(ab)] == [3, 0]

    lcs = lower_central_series(HEISENBERG)
    assert [s.dim for s in lcs] == [3, 1, 0]
    assert lcs[1].contains((0, 0, 1))

    sol3 = catalog_get("sol3").algebra
    ds = derived_series(sol3)
    assert [s.dim for s in ds] == [3, 2, 0]
    assert ds[1] == Subspace.standard(3, (2, 3))
    lcs = lower_central_series(sol3)
    assert [s.dim for s in lcs] == [3, 2]
    assert not is_nilpotent(sol3) and is_solvable(sol3)


def test_unimodular_spec_examples():
    assert is_unimodular(HEISENBERG)
    two_dim = LieAlgebra.from_brackets(2, {(1, 2): {2: 1}})  # [x, y] = y
    assert not is_unimodular(two_dim)
    assert is_unimodular(catalog_get("nakamura").algebra)


def test_completely_solvable_flag_heisenberg():
    cert = completely_solvable_flag(HEISENBERG)
    assert cert.status == "yes"
    assert [s.dim for s in cert.chain] == [0, 1, 2, 3]


def test_completely_solvable_flag_hyperelliptic_no():
    cert = completely_solvable_flag(catalog_get("hyperelliptic4").algebra)
    assert cert.status == "no"
    idx, factor = cert.witness
    assert idx == 4
    assert factor == X * X + 1


def test_completely_solvable_flag_sol3_chain():
    cert = completely_solvable_flag(catalog_get("sol3").algebra)
    assert cert.status == "yes"
    chain = cert.chain
    assert [s.dim for s in chain] == [0, 1, 2, 3]
    assert chain[1] == Subspace.standard(3, (2,))
    assert chain[2] == Subspace.standard(3, (2, 3))
    # every chain member is an ideal
    g = catalog_get("sol3").algebra
    for member in chain:
        for i in range(3):
            for w in member.basis:
                assert member.contains(g.bracket(basis_vector(3, i), w))


def test_flag_requires_solvable():
    # sl2-like: [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2 is not solvable
    sl2 = LieAlgebra.from_brackets(
        3, {(1, 2): {3: 1}, (1, 3): {1: -2}, (2, 3): {2: 2}})
    validate(sl2)
    assert not is_solvable(sl2)
    with pytest.raises(NotSolvable):
        completely_solvable_flag(sl2)


def test_verify_nilpotent_complement_spec_examples():
    verify_nilpotent_complement(HEISENBERG, Subspace.zero(3), Subspace.full(3))
    sol3 = catalog_get("sol3").algebra
    verify_nilpotent_complement(
        sol3, Subspace.standard(3, (1,)), Subspace.standard(3, (2, 3)))
    with pytest.raises(DecompositionInvalid) as err:
        verify_nilpotent_complement(
            sol3, Subspace.standard(3, (2,)), Subspace.standard(3, (1, 3)))
    assert err.value.clause == "ideal"


def test_verify_clause_order():
    sol3 = catalog_get("sol3").algebra
    with pytest.raises(DecompositionInvalid) as err:
        verify_nilpotent_complement(
            sol3, Subspace.standard(3, (1, 2)), Subspace.standard(3, (2, 3)))
    assert err.value.clause == "direct_sum"
    # n too small: [g,g] not inside
    osc = oscillator4()
    with pytest.raises(DecompositionInvalid) as err:
        verify_nilpotent_complement(
            osc, Subspace.standard(4, (1, 2)), Subspace.standard(4, (3, 4)))
    assert err.value.clause in ("ideal", "commutator")


def test_verify_semisimple_action_clause():
    # [e1, e2] = e2 + e3 style: ad(e1) has nonzero semisimple action on e2?
    # build a case where V is not killed: V = span{e1, e2} with [e1, e2] = e2
    g = LieAlgebra.from_brackets(3, {(1, 2): {2: 1}})
    with pytest.raises(DecompositionInvalid) as err:
        verify_nilpotent_complement(
            g, Subspace.standard(3, (1, 2)), Subspace.standard(3, (3,)))
    assert err.value.clause in ("commutator", "semisimple_action")


def test_restrict_and_commutator_contained_in_lower_central():
    rng = random.Random(29)
    for _ in range(20):
        g = rand_valid_algebra(rng)
        comm = derived_subalgebra(g)
        for term in lower_central_series(g)[1:]:
            assert comm.contains_subspace(term)
        sub = restrict(g, comm)
        assert sub.dim == comm.dim


def test_catalog_classifications_match_recomputation():
    for name in ("abelian4", "heisenberg3", "sol3", "rot3", "hyperelliptic4",
                 "nakamura", "nakamura_tilde"):
        entry = catalog_get(name)
        g = entry.algebra
        assert is_solvable(g)
        if entry.classification == "nilpotent":
            assert is_nilpotent(g)
        elif entry.classification == "completely solvable":
            assert completely_solvable_flag(g).status == "yes"
        else:
            assert completely_solvable_flag(g).status == "no"
        verify_nilpotent_complement(g, entry.complement, entry.nilpotent_ideal)


def test_nilradical_maximality_hint():
    sol3 = catalog_get("sol3").algebra
    assert nilradical_maximality_hint(sol3, Subspace.standard(3, (2, 3)))
    assert not nilradical_maximality_hint(HEISENBERG, Subspace.standard(3, (3,)))


def test_conjugation_preserves_structure():
    rng = random.Random(31)
    g = catalog_get("sol3").algebra
    for _ in range(10):
        u = rand_unimodular(rng, 3)
        h = conjugate(g, u)
        validate(h)
        assert is_solvable(h) and not is_nilpotent(h)
        assert is_unimodular(h) == is_unimodular(g)


def test_subspace_operations():
    a = Subspace.standard(3, (1, 2))
    b = Subspace.standard(3, (2, 3))
    meet = a.intersect(b)
    assert meet.dim == 1 and meet.contains((0, 1, 0))
    join = a.add(b)
    assert join.dim == 3
    with pytest.raises(ValueError):
        Subspace(2, [(1, 0), (2, 0)])  # dependent basis
    assert a.coordinates((2, 5, 0)) == (2, 5)
    assert a.coordinates((0, 0, 1)) is None
