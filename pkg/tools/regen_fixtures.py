"""Regenerate the bundled fixture corpus from the library itself."""

import json
import os
from fractions import Fraction

from homfilt.linalg import Matrix
from homfilt import filtvect as fv
from homfilt.filtvect import FiltObject, FiltMorphism
from homfilt import complexes as cx
from homfilt import model
from homfilt import dglie
from homfilt import records as rec

OUT = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src", "homfilt", "fixtures")


def dump(name, data):
    with open(os.path.join(OUT, name), "w", encoding="utf-8") as fh:
        if isinstance(data, str):
            fh.write(data)
        else:
            fh.write(json.dumps(data, indent=2, sort_keys=True))
            fh.write("\n")
    print("wrote", name)


def main():
    os.makedirs(OUT, exist_ok=True)

    # cone of the identity on a 2-dim filtered space: all cohomology vanishes
    v = FiltObject(2, (0, 1))
    cone = cx.cone(cx.identity_chain_map(cx.Complex.single(v, 0)))
    dump("cone_identity.json", rec.complex_to_record(cone))

    # the filtration shift map: mono and epi but strict in neither direction
    shift_map = FiltMorphism(FiltObject(1, (0,)), FiltObject(1, (-1,)),
                             Matrix(1, 1, [[1]]))
    dump("filtration_shift.json", rec.filt_morphism_to_record(shift_map))

    # a rank-1 endomorphism of a filtered plane, for `factor`
    f = FiltMorphism(FiltObject(2, (0, 1)), FiltObject(2, (0, 1)),
                     Matrix(2, 2, [[1, 1], [0, 0]]))
    dump("rank_one_map.json", rec.filt_morphism_to_record(f))

    # a solvable lifting square: disk on the unit against a trivial fibration
    r_obj = FiltObject(1, (0,))
    gen = model.generating_projective_cofibration(r_obj, 0)
    y = model.two_term_complex(fv.identity(FiltObject(1, (0,))), -1)
    acyclic = cx.cone(cx.identity_chain_map(cx.Complex.single(FiltObject(1, (0,)), 0)))
    total, inc_y, inc_c, pr_y, pr_c = cx.direct_sum_complex(y, acyclic)
    bottom_low = fv.identity(r_obj)
    bottom_top = y.diff(-1) @ bottom_low
    bottom = cx.ChainMap(gen.target, y, {-1: bottom_low, 0: bottom_top})
    ker, incl = fv.kernel(acyclic.diff(0))
    cocycle = incl @ FiltMorphism(r_obj, ker, Matrix(ker.dim, 1, [[1]] * ker.dim))
    top_mat = inc_y.comp(0).matrix @ bottom_top.matrix + inc_c.comp(0).matrix @ cocycle.matrix
    top = cx.ChainMap(gen.source, total, {0: FiltMorphism(r_obj, total.obj(0), top_mat)})
    square = model.LiftingSquare(gen, pr_y, top, bottom)
    assert model.solve_lift(square) is not None
    dump("lift_square.json", rec.lifting_square_to_record(gen, pr_y, top, bottom))

    # a square that does not commute: same data with the bottom negated
    bad_bottom = cx.ChainMap(gen.target, y, {-1: -bottom_low, 0: -bottom_top})
    dump("noncommuting_square.json",
         rec.lifting_square_to_record(gen, pr_y, top, bad_bottom))

    # standard Lie algebras
    dump("sl2.json", rec.lie_to_record(dglie.sl2()))
    dump("heisenberg3.json", rec.lie_to_record(dglie.heisenberg3()))
    dump("solvable2.json", rec.lie_to_record(dglie.solvable2()))
    dump("abelian2.json", rec.lie_to_record(dglie.abelian_lie(2)))

    # sl2 with one corrupted structure constant: Jacobi fails
    broken = rec.lie_to_record(dglie.sl2())
    for entry in broken["brackets"]:
        if (entry["i"], entry["j"]) == (0, 2):
            entry["coeffs"] = ["-3", "0", "0"]   # should be -2 e
    dump("broken_jacobi.json", broken)

    # a would-be complex whose differential does not square to zero
    w = FiltObject(1, (0,))
    broken_cx = {
        "objects": {"0": rec.filt_object_to_record(w),
                    "1": rec.filt_object_to_record(w),
                    "2": rec.filt_object_to_record(w)},
        "differentials": {"0": [["1"]], "1": [["1"]]},
    }
    dump("broken_d_squared.json", broken_cx)

    # Koszul generator object of rank 2
    dump("koszul_rank2.json", rec.filt_object_to_record(FiltObject(2, (0, 0))))

    # polynomials for the critical locus, in the plain text grammar
    dump("crit_x3.txt", "x^3\n")
    dump("crit_x3_plus_y3.txt", "x^3 + y^3\n")

    # derived quotient inputs: translation and scaling actions on Q[t]
    dump("derived_quotient_translation.json", {
        "lie": rec.lie_to_record(dglie.abelian_lie(1)),
        "variables": 1,
        "degree_bound": 6,
        "action": [["1"]],
    })
    dump("derived_quotient_euler.json", {
        "lie": rec.lie_to_record(dglie.abelian_lie(1)),
        "variables": 1,
        "degree_bound": 6,
        "action": [["x1"]],
    })


if __name__ == "__main__":
    main()
