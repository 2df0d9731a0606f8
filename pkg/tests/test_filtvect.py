from fractions import Fraction

import pytest

from homfilt.linalg import Matrix, rank
from homfilt import filtvect as fv
from homfilt.filtvect import FiltObject, FiltMorphism
from homfilt.selftest import Rand


def line(w):
    return FiltObject(1, (w,))


def shift_map():
    return FiltMorphism(line(0), line(-1), Matrix(1, 1, [[1]]))


def test_morphism_validation_rejects_weight_raising_entries():
    with pytest.raises(ValueError):
        FiltMorphism(line(0), line(1), Matrix(1, 1, [[1]]))


def test_kernel_examples():
    v = FiltObject(2, (0, 1))
    assert fv.kernel(fv.identity(v))[0].dim == 0
    z = fv.zero_morphism(v, line(0))
    k, incl = fv.kernel(z)
    assert k == v and fv.is_strict_mono(incl)
    f = FiltMorphism(v, line(0), Matrix(1, 2, [[1, 1]]))
    k, incl = fv.kernel(f)
    assert k.dim == 1 and k.weights == (1,)
    assert (f @ incl).is_zero()
    assert fv.is_strict_mono(incl)


def test_cokernel_examples():
    v = FiltObject(2, (0, 1))
    assert fv.cokernel(fv.identity(v))[0].dim == 0
    z = fv.zero_morphism(line(0), v)
    c, proj = fv.cokernel(z)
    assert c == v and fv.is_strict_epi(proj)
    g = FiltMorphism(line(1), v, Matrix(2, 1, [[1], [1]]))
    c, proj = fv.cokernel(g)
    assert c.dim == 1 and c.weights == (0,)
    assert (proj @ g).is_zero()
    assert fv.is_strict_epi(proj)


def test_image_coimage_on_the_shift_map():
    f = shift_map()
    im, _ = fv.image(f)
    coim, _ = fv.coimage(f)
    assert im.weights == (-1,)
    assert coim.weights == (0,)
    assert im.dim == coim.dim == rank(f.matrix)


def test_image_coimage_identity_and_zero():
    v = FiltObject(3, (-1, 0, 2))
    f = fv.identity(v)
    assert fv.image(f)[0] == v and fv.coimage(f)[0] == v
    z = fv.zero_morphism(v, v)
    assert fv.image(z)[0].dim == 0 and fv.coimage(z)[0].dim == 0


def test_is_strict_examples():
    v = FiltObject(2, (0, 1))
    assert fv.is_strict(fv.identity(v))
    f = shift_map()
    assert fv.is_mono(f) and fv.is_epi(f) and not fv.is_strict(f)
    # every morphism between weight-zero objects is strict
    a, b = FiltObject(2, (0, 0)), FiltObject(2, (0, 0))
    g = FiltMorphism(a, b, Matrix(2, 2, [[1, 2], [3, 4]]))
    assert fv.is_strict(g)


def test_strictness_oracle_agreement_random():
    r = Rand(23)
    for _ in range(150):
        f = r.morphism(r.filt_object(), r.filt_object())
        assert fv.is_strict(f) == fv.strictness_oracle(f)


def test_coim_to_im_is_bijective_and_detects_strictness():
    f = shift_map()
    phi = fv.coim_to_im(f)
    assert phi.source.dim == phi.target.dim == 1
    assert not fv.is_iso(phi)
    g = fv.identity(FiltObject(2, (0, 3)))
    assert fv.is_iso(fv.coim_to_im(g))


def test_factor_examples():
    v = FiltObject(2, (0, 1))
    fact = fv.factor(fv.identity(v))
    assert fact.composite() == fv.identity(v)
    z = fv.zero_morphism(v, line(0))
    fact = fv.factor(z)
    assert fact.strict_epi.target.dim == 0
    assert fact.composite() == z
    f = FiltMorphism(v, v, Matrix(2, 2, [[1, 1], [0, 0]]))
    fact = fv.factor(f)
    assert fact.strict_epi.target.dim == 1
    assert fact.composite() == f
    epi, mono = fv.factor_through_image(f)
    assert mono @ epi == f


def test_both_factorizations_random():
    r = Rand(31)
    for _ in range(100):
        f = r.morphism(r.filt_object(), r.filt_object())
        fact = fv.factor(f)
        assert fact.composite() == f
        assert fv.is_strict_epi(fact.strict_epi) and fv.is_mono(fact.mono)
        epi, mono = fv.factor_through_image(f)
        assert mono @ epi == f
        assert fv.is_epi(epi) and fv.is_strict_mono(mono)


def test_pushout_of_identities_and_zero():
    v = FiltObject(2, (0, 1))
    p, fy, fz = fv.pushout(fv.identity(v), fv.identity(v))
    assert p == v
    zero = FiltObject(0, ())
    z = r_obj = FiltObject(2, (0, 2))
    p, fy, fz = fv.pushout(fv.zero_morphism(zero, zero), fv.zero_morphism(zero, z))
    assert p == z and fz.matrix == Matrix.identity(2)


def test_pushout_universal_property():
    r = Rand(37)
    for _ in range(40):
        x = r.filt_object(min_dim=1)
        f = r.morphism(x, r.filt_object(min_dim=1))
        g = r.morphism(x, r.filt_object(min_dim=1))
        p, fy, fz = fv.pushout(f, g)
        # a cone: compose the legs with a random map out of the pushout
        t = r.filt_object()
        w = r.morphism(p, t)
        u, v = w @ fy, w @ fz
        got = fv.mediating_map_from_pushout(p, fy, fz, u, v)
        assert got is not None
        assert got == w  # legs of a pushout are jointly epi, so w is unique


def test_pushout_preserves_strict_monos_and_pullback_strict_epis():
    r = Rand(41)
    for _ in range(80):
        tgt = r.filt_object(min_dim=1)
        u = r.strict_mono_into(tgt)
        g = r.morphism(u.source, r.filt_object())
        _, _, from_z = fv.pushout(u, g)
        assert fv.is_strict_mono(from_z)
        src = r.filt_object(min_dim=1)
        p = r.strict_epi_from(src)
        q = r.morphism(r.filt_object(), p.target)
        _, _, to_w = fv.pullback(p, q)
        assert fv.is_strict_epi(to_w)


def test_tensor_examples():
    v = FiltObject(2, (0, 1))
    assert fv.tensor(v, fv.unit()) == v
    t = fv.tensor(v, v)
    assert sorted(t.weights) == [0, 1, 1, 2]
    # tensoring a strict mono with an identity stays a strict mono
    r = Rand(43)
    for _ in range(30):
        u = r.strict_mono_into(r.filt_object(min_dim=1))
        w = r.filt_object(min_dim=1)
        assert fv.is_strict_mono(fv.tensor_mor(fv.identity(w), u))


def test_tensor_strict_exact_sequences():
    r = Rand(47)
    for _ in range(60):
        incl, proj = r.strict_exact_sequence()
        w = r.filt_object()
        assert fv.is_strict_exact_pair(fv.tensor_mor(fv.identity(w), incl),
                                       fv.tensor_mor(fv.identity(w), proj))


def test_dual_examples():
    assert fv.dual(fv.unit()) == fv.unit()
    v = FiltObject(2, (0, 1))
    assert fv.dual(v).weights == (0, -1)
    assert fv.dual(fv.dual(v)) == v


def test_direct_sum_inclusions_and_projections():
    a, b = FiltObject(1, (0,)), FiltObject(2, (1, -1))
    s = fv.direct_sum(a, b)
    assert s.weights == (0, 1, -1)
    ia = fv.ds_inclusion((a, b), 0)
    pb = fv.ds_projection((a, b), 1)
    assert (pb @ ia).is_zero()
    assert fv.ds_projection((a, b), 0) @ ia == fv.identity(a)


def test_morphism_system_simple():
    v = FiltObject(2, (0, 1))
    sys = fv.MorphismSystem()
    sys.add_unknown("w", v, v)
    sys.add_equation([(Fraction(1), "w", Matrix.identity(2), Matrix.identity(2))],
                     Matrix.identity(2))
    sol = sys.solve()
    assert sol is not None and sol["w"] == fv.identity(v)
    # an unsatisfiable demand: the shift entry is weight-forbidden
    sys2 = fv.MorphismSystem()
    sys2.add_unknown("w", line(0), line(1))
    sys2.add_equation([(Fraction(1), "w", Matrix.identity(1), Matrix.identity(1))],
                      Matrix(1, 1, [[1]]))
    assert sys2.solve() is None
