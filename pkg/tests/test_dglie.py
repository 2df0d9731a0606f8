from fractions import Fraction
from math import comb

import pytest

from homfilt.filtvect import FiltObject
from homfilt.complexes import Complex, reduced_cohomology
from homfilt.graded import symmetric_algebra
from homfilt import dglie
from homfilt import koszul
from homfilt.dglie import (
    DGLie,
    abelian_lie,
    ce_resolution,
    check_lie_axioms,
    cone_lie,
    derivation_action_from_variable_images,
    derived_quotient,
    heisenberg3,
    odd_line,
    pbw_check,
    sl2,
    solvable2,
    uea,
    verify_ce_acyclicity,
)


def test_axioms_pass_for_the_library():
    for g in (abelian_lie(3), sl2(), heisenberg3(), solvable2(), odd_line()):
        assert check_lie_axioms(g).ok


def test_corrupted_constant_is_located():
    with pytest.raises(ValueError, match="Jacobi"):
        DGLie(["e", "f", "h"], [0, 0, 0], [0, 0, 0],
              {(2, 0): {0: Fraction(3)}, (2, 1): {1: Fraction(-2)},
               (0, 1): {2: Fraction(1)}})
    bad = DGLie(["e", "f", "h"], [0, 0, 0], [0, 0, 0],
                {(2, 0): {0: Fraction(3)}, (2, 1): {1: Fraction(-2)},
                 (0, 1): {2: Fraction(1)}}, check=False)
    rep = check_lie_axioms(bad)
    assert not rep.ok
    assert any("Jacobi" in v for v in rep.violations)


def test_cone_of_zero_and_abelian():
    z = cone_lie(abelian_lie(0))
    assert z.dim == 0
    c = cone_lie(abelian_lie(1))
    assert check_lie_axioms(c).ok
    cxu = c.underlying_complex()
    assert sorted(cxu.support) == [-1, 0]
    assert all(reduced_cohomology(cxu, n).dim == 0 for n in (-1, 0))


def test_cone_of_sl2_is_acyclic_and_a_lie_algebra():
    c = cone_lie(sl2())
    assert check_lie_axioms(c).ok
    cxu = c.underlying_complex()
    for n in (-1, 0):
        assert reduced_cohomology(cxu, n).dim == 0


def test_cone_of_an_odd_example():
    c = cone_lie(odd_line())
    assert check_lie_axioms(c).ok
    cxu = c.underlying_complex()
    for n in (-3, -2, -1, 0):
        assert reduced_cohomology(cxu, n).dim == 0


def test_uea_abelian_is_symmetric_algebra():
    g = abelian_lie(2)
    u = uea(g, 3)
    s = symmetric_algebra(Complex.single(FiltObject(2, (0, 0)), 0), 3)
    assert u.graded_dim(0) == 1
    for n in range(4):
        assert u.graded_dim(n) == s.dims_by_length()[n]


def test_uea_one_generator_is_polynomial():
    u = uea(abelian_lie(1), 5)
    assert [u.graded_dim(n) for n in range(6)] == [1] * 6


def test_uea_solvable_rewriting_step():
    u = uea(solvable2(), 3)
    # y x = x y - y   (with [x, y] = y)
    assert u.normal_form((1, 0)) == {(0, 1): Fraction(1), (1,): Fraction(-1)}


def test_uea_odd_square_rewrites_to_half_bracket():
    u = uea(odd_line(), 3)
    assert u.normal_form((0, 0)) == {(1,): Fraction(1, 2)}


def test_uea_truncation_flag():
    u = uea(abelian_lie(1), 2)
    elt, truncated = u.mul_words((0, 0), (0,))
    assert truncated and elt == {}
    elt, truncated = u.mul_words((0,), (0,))
    assert not truncated and elt == {(0, 0): Fraction(1)}


def test_pbw_dimension_tables():
    assert pbw_check(abelian_lie(4), 5).ok
    rep = pbw_check(sl2(), 6)
    assert rep.ok
    assert [rep.per_length[n][0] for n in range(7)] == [comb(n + 2, 2) for n in range(7)]
    rep = pbw_check(heisenberg3(), 5)
    assert rep.ok
    assert [rep.per_length[n][0] for n in range(6)] == [comb(n + 2, 2) for n in range(6)]
    assert pbw_check(solvable2(), 6).ok
    assert pbw_check(odd_line(), 5).ok


def test_ce_requires_degree_zero_weights_and_no_differential():
    with pytest.raises(ValueError, match="positive"):
        ce_resolution(sl2(), 3)   # weights are zero
    g = DGLie(["a", "b"], [0, 1], [1, 1], {}, check=True)
    with pytest.raises(ValueError, match="degree 0"):
        ce_resolution(g, 3)


def test_ce_zero_lie_algebra_is_the_base_ring():
    res = ce_resolution(abelian_lie(0), 3)
    rep = verify_ce_acyclicity(res)
    assert rep.ok
    assert rep.per_weight[0] == {0: 1}


def test_ce_abelian_line_is_the_polynomial_koszul_complex():
    res = ce_resolution(abelian_lie(1), 4)
    rep = verify_ce_acyclicity(res)
    assert rep.ok
    for w in range(1, 5):
        sl = res.slice_complex(w)
        # one enveloping word and one exterior word per positive weight
        assert sl.obj(0).dim == 1 and sl.obj(-1).dim == 1
        assert not sl.diff(-1).matrix.is_zero()


def test_ce_abelian_euler_characteristic_vanishes():
    res = ce_resolution(abelian_lie(2), 4)
    for w in range(1, 5):
        sl = res.slice_complex(w)
        chi = sum((-1) ** n * sl.obj(n).dim for n in sl.support)
        assert chi == 0


def test_ce_heisenberg_weights():
    res = ce_resolution(heisenberg3(), 4)
    rep = verify_ce_acyclicity(res)
    assert rep.ok, rep.violations


def test_ce_cross_checks_the_koszul_construction_for_abelian_input():
    # for an abelian algebra the resolution is the polynomial Koszul complex;
    # the contraction carrier on the dual module has the same strand
    # dimensions, and the differentials agree up to the global sign that
    # separates the two contraction conventions
    r = 2
    res = ce_resolution(abelian_lie(r), 4)
    k = koszul.fancy_koszul(FiltObject(r, (0,) * r), 4)
    for w in range(0, 5):
        sl = res.slice_complex(w)
        dims = koszul.strand_dims = k.strand_dims(w)
        for level in range(r + 1):
            assert sl.obj(-level).dim == dims[level]
        for level in range(1, r + 1):
            ce_mat = sl.diff(-level).matrix
            ko_mat = k.strand_matrix(w, level)
            assert ce_mat.rows == ko_mat.rows and ce_mat.cols == ko_mat.cols
            if ce_mat.rows and ce_mat.cols:
                assert ce_mat == ko_mat.scale(-1)


def test_derived_quotient_trivial_action():
    g = abelian_lie(1)
    a = symmetric_algebra(Complex.single(FiltObject(1, (0,)), 0), 5)
    action = derivation_action_from_variable_images(a, [[{}]])
    rep = derived_quotient(g, a, action)
    assert rep.total_dims[0] == len(a.basis)
    assert rep.total_dims[1] == len(a.basis)


def test_derived_quotient_translation_action():
    g = abelian_lie(1)
    a = symmetric_algebra(Complex.single(FiltObject(1, (0,)), 0), 6)
    action = derivation_action_from_variable_images(a, [[{(): Fraction(1)}]])
    rep = derived_quotient(g, a, action)
    assert rep.per_piece[0] == {k: (1 if k == 0 else 0) for k in range(7)}
    assert all(v == 0 for v in rep.per_piece[1].values())


def test_derived_quotient_euler_action():
    g = abelian_lie(1)
    a = symmetric_algebra(Complex.single(FiltObject(1, (0,)), 0), 6)
    action = derivation_action_from_variable_images(a, [[{(0,): Fraction(1)}]])
    rep = derived_quotient(g, a, action)
    assert rep.per_piece[0][0] == 1
    assert all(rep.per_piece[0][k] == 0 for k in range(1, 7))


def test_derived_quotient_rejects_non_representations():
    g = solvable2()
    a = symmetric_algebra(Complex.single(FiltObject(1, (0,)), 0), 4)
    # both generators act by d/dt: [x, y] = y is not represented
    img = {(): Fraction(1)}
    action = derivation_action_from_variable_images(a, [[img], [img]])
    with pytest.raises(ValueError, match="represent"):
        derived_quotient(g, a, action)


def test_derived_quotient_sl2_style_two_generator_action():
    # x acts as d/dt, y as t d/dt on Q[t]: [x, y] = x is the solvable relation
    g = DGLie(["x", "y"], [0, 0], [0, 0], {(0, 1): {0: Fraction(1)}})
    a = symmetric_algebra(Complex.single(FiltObject(1, (0,)), 0), 5)
    action = derivation_action_from_variable_images(
        a, [[{(): Fraction(1)}], [{(0,): Fraction(1)}]])
    rep = derived_quotient(g, a, action)
    # invariants of both operators are the constants annihilated by d/dt and
    # t d/dt simultaneously
    assert rep.total_dims[0] == 1
