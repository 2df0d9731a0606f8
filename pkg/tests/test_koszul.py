from fractions import Fraction

import pytest

from homfilt.filtvect import FiltObject
from homfilt.complexes import reduced_cohomology
from homfilt import koszul
from homfilt.koszul import (
    KoszulData,
    PolySpec,
    base_change_check,
    critical_locus,
    fancy_koszul,
    monomials_upto,
    specialized_koszul,
    verify_augmentation_qiso,
)
from homfilt.selftest import milnor_product_formula, oracle_jacobian_dim


def free(r, weights=None):
    return FiltObject(r, tuple(weights) if weights else (0,) * r)


def test_monomial_enumeration():
    ms = monomials_upto(2, 2)
    assert ms == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_insertion_map_rank_one_and_two():
    k = fancy_koszul(free(1), 2)
    h = k.h_map(0)
    col = k.layer_index[1][((0,), (0,))]
    nonzero = [i for i in range(h.matrix.rows) if h.matrix.entries[i][col] != 0]
    assert len(nonzero) == 1   # one insertion summand for rank 1
    k2 = fancy_koszul(free(2), 2)
    h2 = k2.h_map(0)
    col = k2.layer_index[1][((0, 0), (0,))]
    nonzero = [i for i in range(h2.matrix.rows) if h2.matrix.entries[i][col] != 0]
    assert len(nonzero) == 2   # the insertion has two summands for rank 2


def test_collapse_contraction_signs():
    k = fancy_koszul(free(2), 2)
    # d(1 (x) e0^ ^ e1^) must be -e0^ (x) e1^ + e1^ (x) e0^
    img = k.differential_element((0, 0), (0, 1))
    e0 = tuple(1 if i == 0 else 0 for i in range(2))
    e1 = tuple(1 if i == 1 else 0 for i in range(2))
    assert img == {(e0, (1,)): Fraction(-1), (e1, (0,)): Fraction(1)}


def test_single_contraction_carries_sign_minus_one():
    k = fancy_koszul(free(1), 3)
    img = k.differential_element((1,), (0,))
    assert img == {((2,), ()): Fraction(-1)}


def test_composite_equals_direct_formula():
    for r, d in ((1, 3), (2, 3)):
        k = fancy_koszul(free(r), d)
        for n in range(r):
            assert k.differential(n) == k.differential_direct(n)


def test_d_squared_zero_up_to_rank_four():
    # construction already sweeps d^2 = 0 over every stored basis element
    for r, d in ((1, 6), (2, 6), (3, 6), (4, 6)):
        fancy_koszul(free(r), d)


def test_fancy_koszul_shape_examples():
    k0 = fancy_koszul(free(0), 3)
    assert k0.as_complex().obj(0).dim == 1
    k1 = fancy_koszul(free(1), 2)
    names = [k1.layer_basis[0], k1.layer_basis[1]]
    assert len(names[0]) == 3 and len(names[1]) == 3
    k3 = fancy_koszul(free(3), 2)
    assert min(k3.as_complex().support) == -3


def test_augmentation_acyclicity_ranks_one_to_three():
    for r in (1, 2, 3):
        rep = verify_augmentation_qiso(fancy_koszul(free(r), 6))
        assert rep.ok, rep.violations
        assert rep.per_strand[0][0] == 1


def test_augmentation_with_weighted_module():
    p = free(2, (-1, 0))
    rep = verify_augmentation_qiso(fancy_koszul(p, 4))
    assert rep.ok


def test_rank_one_strand_is_two_term_isomorphism():
    k = fancy_koszul(free(1), 4)
    for t in range(1, 5):
        m = k.strand_matrix(t, 1)
        assert m.rows == m.cols == 1
        assert m.entries[0][0] != 0


def test_specialized_koszul_zero_point():
    s = specialized_koszul(free(2), [0, 0])
    assert not s.differentials
    assert {n: s.obj(n).dim for n in s.support} == {-2: 1, -1: 2, 0: 1}


def test_specialized_koszul_unit_point_is_acyclic():
    s = specialized_koszul(free(1), [1])
    assert reduced_cohomology(s, 0).dim == 0
    assert reduced_cohomology(s, -1).dim == 0
    s2 = specialized_koszul(free(2), [1, 0])
    for n in (-2, -1, 0):
        assert reduced_cohomology(s2, n).dim == 0


def test_specialized_koszul_rejects_filtration_violating_points():
    p = free(1, (1,))
    with pytest.raises(ValueError, match="weight"):
        specialized_koszul(p, [1])
    # zero coordinates in positive-weight slots are fine
    s = specialized_koszul(p, [0])
    assert s.obj(0).dim == 1


def test_base_change_examples():
    assert base_change_check(free(1), [0], 3).ok
    assert base_change_check(free(1), [3], 3).ok
    assert base_change_check(free(2), [Fraction(2, 3), Fraction(-1, 2)], 4).ok
    assert base_change_check(free(3), [1, 2, 3], 3).ok


def test_base_change_multiplication_by_three():
    # rank one at m = 3: both differentials are multiplication by -3
    s = specialized_koszul(free(1), [3])
    assert s.diff(-1).matrix.entries[0][0] == Fraction(-3)


def test_polyspec_basics():
    f = PolySpec(1, [(1, (3,))])
    assert f.degree() == 3
    assert f.derivative(0).terms == {(2,): Fraction(3)}
    g = PolySpec(2, [(1, (3, 0)), (1, (0, 3))])
    assert g.quasi_homogeneous_weights() == ((1, 1), 3)
    h = PolySpec(2, [(1, (2, 0)), (1, (0, 3))])
    assert h.quasi_homogeneous_weights() == ((3, 2), 6)
    inh = PolySpec(1, [(1, (2,)), (1, (3,))])
    assert inh.quasi_homogeneous_weights() is None


def test_critical_locus_values():
    cases = [
        (PolySpec(1, [(1, (2,))]), 1),
        (PolySpec(1, [(1, (3,))]), 2),
        (PolySpec(1, [(1, (4,))]), 3),
        (PolySpec(1, [(1, (5,))]), 4),
        (PolySpec(1, [(1, (1,))]), 0),
        (PolySpec(2, [(1, (3, 0)), (1, (0, 3))]), 4),
    ]
    for f, expected in cases:
        rep = critical_locus(f, 7)
        assert rep.stabilized
        assert rep.h0_dim == expected
        assert all(v == 0 for v in rep.h_minus.values())
        assert oracle_jacobian_dim(f, 7) == expected


def test_critical_locus_matches_product_formula():
    f = PolySpec(2, [(1, (2, 0)), (1, (0, 3))])   # weights (3, 2), degree 6
    rep = critical_locus(f, 7)
    ws, d = rep.quasi_homogeneous_weights = rep.quasi_homogeneous
    assert rep.stabilized
    assert rep.h0_dim == milnor_product_formula(ws, d) == 2
    assert oracle_jacobian_dim(f, 7) == 2


def test_critical_locus_detects_non_stabilized_bounds():
    f = PolySpec(1, [(1, (3,))])
    rep = critical_locus(f, 2)
    assert not rep.stabilized
    # a non-isolated singularity never stabilizes
    g = PolySpec(2, [(1, (2, 2))])
    rep2 = critical_locus(g, 6)
    assert not rep2.stabilized


def test_critical_locus_strands_are_exact_above_the_socle():
    f = PolySpec(1, [(1, (3,))])
    rep = critical_locus(f, 6)
    assert rep.safe_strand_bound == 6
    for t, coh in rep.strand_table.items():
        assert coh[-1] == 0
