from fractions import Fraction

import pytest

from homfilt.linalg import Matrix
from homfilt import filtvect as fv
from homfilt.filtvect import FiltObject, FiltMorphism
from homfilt import complexes as cx
from homfilt.complexes import Complex
from homfilt import dglie
from homfilt import records as rec
from homfilt.koszul import PolySpec
from homfilt.selftest import Rand


def test_fraction_round_trip():
    for s in ("3", "-2/5", "0", "7/1"):
        f = rec.parse_fraction(s)
        assert rec.parse_fraction(rec.format_fraction(f)) == f
    with pytest.raises(ValueError):
        rec.parse_fraction(0.5)
    with pytest.raises(ValueError):
        rec.parse_fraction("1/0")
    with pytest.raises(ValueError):
        rec.parse_fraction("abc")


def test_filt_object_round_trip():
    v = FiltObject(3, (-1, 0, 2))
    assert rec.filt_object_from_record(rec.filt_object_to_record(v)) == v
    with pytest.raises(ValueError):
        rec.filt_object_from_record({"dim": 2})


def test_filt_morphism_round_trip():
    f = FiltMorphism(FiltObject(2, (0, 1)), FiltObject(1, (0,)),
                     Matrix(1, 2, [[Fraction(1, 2), 1]]))
    assert rec.filt_morphism_from_record(rec.filt_morphism_to_record(f)) == f
    bad = rec.filt_morphism_to_record(f)
    bad["matrix"] = [["1"]]
    with pytest.raises(ValueError):
        rec.filt_morphism_from_record(bad)


def test_complex_and_chain_map_round_trip():
    r = Rand(101)
    for _ in range(10):
        x = r.bounded_complex()
        assert rec.complex_from_record(rec.complex_to_record(x)) == x
        y = r.bounded_complex()
        f = r.null_homotopic_map(x, y)
        assert rec.chain_map_from_record(rec.chain_map_to_record(f)) == f


def test_lie_round_trip():
    for g in (dglie.sl2(), dglie.heisenberg3(), dglie.solvable2(), dglie.odd_line()):
        back = rec.lie_from_record(rec.lie_to_record(g))
        assert back.names == g.names
        assert back.degrees == g.degrees
        assert back.weights == g.weights
        assert back.brackets == g.brackets


def test_lie_record_validation():
    with pytest.raises(ValueError, match="dim"):
        rec.lie_from_record({"degrees": [0]})
    with pytest.raises(ValueError, match="coeff"):
        rec.lie_from_record({"dim": 2, "brackets": [{"i": 0, "j": 1}]})


def test_polynomial_text_grammar():
    f = rec.parse_polynomial("x^3")
    assert f == PolySpec(1, [(1, (3,))])
    g = rec.parse_polynomial("x^3 + y^3")
    assert g == PolySpec(2, [(1, (3, 0)), (1, (0, 3))])
    h = rec.parse_polynomial("3/2 x1^2 x2 - x2 + 1")
    assert h == PolySpec(2, [(Fraction(3, 2), (2, 1)), (-1, (0, 1)), (1, (0, 0))])
    k = rec.parse_polynomial("x y - 2 x^2")
    assert k == PolySpec(2, [(1, (1, 1)), (-2, (2, 0))])


def test_polynomial_grammar_errors():
    with pytest.raises(ValueError, match="variable"):
        rec.parse_polynomial("q^2")
    with pytest.raises(ValueError, match="sign"):
        rec.parse_polynomial("x +")
    with pytest.raises(ValueError, match="exponent"):
        rec.parse_polynomial("x^")
    with pytest.raises(ValueError, match="declared"):
        rec.parse_polynomial("x2", nvars=1)


def test_polyspec_record_round_trip():
    p = PolySpec(2, [(Fraction(1, 3), (2, 0)), (-2, (0, 1))])
    assert rec.polyspec_from_record(rec.polyspec_to_record(p)) == p
    assert rec.polyspec_from_record({"polynomial": "x^2"}) == PolySpec(1, [(1, (2,))])
    assert rec.polyspec_from_record("y^2") == PolySpec(2, [(1, (0, 2))])


def test_lifting_square_record_missing_field():
    with pytest.raises(ValueError, match="left"):
        rec.lifting_square_from_record({})


def test_derived_quotient_record():
    data = {
        "lie": rec.lie_to_record(dglie.abelian_lie(1)),
        "variables": 1,
        "degree_bound": 4,
        "action": [["1"]],
    }
    g, algebra, images = rec.derived_quotient_from_record(data)
    assert g.dim == 1 and len(algebra.generators) == 1
    assert images[0][0] == {(): Fraction(1)}
    with pytest.raises(ValueError, match="action"):
        rec.derived_quotient_from_record({**data, "action": []})
