"""Morphism classes of the two model structures on filtered complexes.

Cofibrations of the injective structure are the degreewise strict
monomorphisms; fibrations of the projective structure are the degreewise
strict epimorphisms; the weak equivalences of both are the reduced
quasi-isomorphisms.  This module classifies chain maps against those
classes, builds the generating (projective) cofibrations, and solves finite
lifting problems exactly.

A lifting problem is turned into one affine linear system over the
rationals: the unknowns are the matrix entries of the candidate lift, with
entries that would break filtration preservation removed up front, and the
equations are the two commuting triangles plus the chain map condition.
There is no functorial factorization machinery here on purpose, every
verifiable consequence of the model structure at this scale is a
classification or a finite lift.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, solve_matrix
from . import filtvect as fv
from .filtvect import FiltMorphism, FiltObject, MorphismSystem
from .complexes import (
    ChainMap,
    Complex,
    is_reduced_qiso,
    pushout_chain,
    tensor_chain_map,
    identity_chain_map,
)


class MorphismClassification:
    """Where one chain map sits relative to both model structures."""

    __slots__ = ("degreewise_strict_mono", "degreewise_strict_epi", "reduced_qiso",
                 "degreewise_mono", "degreewise_epi")

    def __init__(self, degreewise_strict_mono, degreewise_strict_epi, reduced_qiso,
                 degreewise_mono, degreewise_epi):
        object.__setattr__(self, "degreewise_strict_mono", degreewise_strict_mono)
        object.__setattr__(self, "degreewise_strict_epi", degreewise_strict_epi)
        object.__setattr__(self, "reduced_qiso", reduced_qiso)
        object.__setattr__(self, "degreewise_mono", degreewise_mono)
        object.__setattr__(self, "degreewise_epi", degreewise_epi)

    def __setattr__(self, name, value):
        raise AttributeError("MorphismClassification is immutable")

    @property
    def injective_cofibration(self) -> bool:
        return self.degreewise_strict_mono

    @property
    def injective_trivial_cofibration(self) -> bool:
        return self.degreewise_strict_mono and self.reduced_qiso

    @property
    def projective_fibration(self) -> bool:
        return self.degreewise_strict_epi

    @property
    def projective_trivial_fibration(self) -> bool:
        return self.degreewise_strict_epi and self.reduced_qiso

    @property
    def weak_equivalence(self) -> bool:
        return self.reduced_qiso

    def as_dict(self) -> dict:
        return {
            "degreewise_mono": self.degreewise_mono,
            "degreewise_epi": self.degreewise_epi,
            "degreewise_strict_mono": self.degreewise_strict_mono,
            "degreewise_strict_epi": self.degreewise_strict_epi,
            "reduced_qiso": self.reduced_qiso,
            "injective_cofibration": self.injective_cofibration,
            "projective_fibration": self.projective_fibration,
            "weak_equivalence": self.weak_equivalence,
        }


def classify(f: ChainMap) -> MorphismClassification:
    degrees = sorted(set(f.source.support) | set(f.target.support))
    dsm = dse = dm = de = True
    for n in degrees:
        c = f.comp(n)
        if not fv.is_mono(c):
            dm = False
        if not fv.is_epi(c):
            de = False
        if not fv.is_strict_mono(c):
            dsm = False
        if not fv.is_strict_epi(c):
            dse = False
    return MorphismClassification(dsm, dse, is_reduced_qiso(f), dm, de)


def two_term_complex(u: FiltMorphism, n: int) -> Complex:
    """The complex with the source of u in degree n and its target in n + 1."""
    return Complex({n: u.source, n + 1: u.target}, {n: u})


def generating_cofibration(u: FiltMorphism, n: int) -> ChainMap:
    """The injective-structure generator induced by a strict mono u: y -> x.

    It is the map from the two-term complex (y in degree n, x in degree
    n + 1, differential u) to the contractible complex (x, x, identity),
    with components (u, id); a degreewise strict monomorphism.
    """
    if not fv.is_strict_mono(u):
        raise ValueError("generating cofibrations need a strict monomorphism")
    src = two_term_complex(u, n)
    tgt = two_term_complex(fv.identity(u.target), n)
    comps = {n: u, n + 1: fv.identity(u.target)}
    g = ChainMap(src, tgt, comps)
    cls = classify(g)
    if not cls.degreewise_strict_mono:
        raise RuntimeError("generator failed its own classification")
    return g


def generating_projective_cofibration(r: FiltObject, n: int) -> ChainMap:
    """The sphere-to-disk generator of the projective cofibrations.

    The disk is the contractible two-term complex (r, r, identity) in
    degrees n - 1 and n; the sphere is r concentrated in degree n and
    includes as the slot the disk differential maps onto.  Lifting against
    these maps asks for exact preimages of cocycles, which is what detects
    the trivial fibrations.
    """
    disk = two_term_complex(fv.identity(r), n - 1)
    sphere = Complex.single(r, n)
    if r.dim == 0:
        return ChainMap(sphere, disk, {})
    return ChainMap(sphere, disk, {n: fv.identity(r)})


class LiftingSquare:
    """A commuting square  A -top-> X ; left down to B, right down to Y.

    Commutativity (right after top equals bottom after left) is validated
    degreewise at construction; the error names the first bad degree.
    """

    __slots__ = ("left", "right", "top", "bottom")

    def __init__(self, left: ChainMap, right: ChainMap, top: ChainMap, bottom: ChainMap):
        if left.source != top.source:
            raise ValueError("left and top must share a source")
        if left.target != bottom.source:
            raise ValueError("bottom must start at the target of left")
        if right.source != top.target:
            raise ValueError("right must start at the target of top")
        if right.target != bottom.target:
            raise ValueError("right and bottom must share a target")
        lhs = right @ top
        rhs = bottom @ left
        degrees = sorted(set(lhs.components) | set(rhs.components))
        for d in degrees:
            if lhs.comp(d) != rhs.comp(d):
                raise ValueError(f"lifting square does not commute at degree {d}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("LiftingSquare is immutable")


def solve_lift(sq: LiftingSquare) -> ChainMap | None:
    """Find h: B -> X with h after left = top and right after h = bottom.

    The candidate's entries are solved for exactly; filtration preservation
    is encoded by dropping forced-zero entries from the variable set, and
    the chain map condition contributes one equation block per degree.
    Returns None when the affine system is inconsistent.
    """
    a, b = sq.left.source, sq.left.target
    x, y = sq.right.source, sq.right.target
    degrees = sorted(set(b.support) | set(x.support) | set(a.support) | set(y.support))
    sys = MorphismSystem()
    for n in degrees:
        sys.add_unknown(f"h{n}", b.obj(n), x.obj(n))
    one = Fraction(1)
    for n in degrees:
        # h . left = top
        if a.obj(n).dim and x.obj(n).dim:
            sys.add_equation(
                [(one, f"h{n}", Matrix.identity(x.obj(n).dim), sq.left.comp(n).matrix)],
                sq.top.comp(n).matrix)
        # right . h = bottom
        if b.obj(n).dim and y.obj(n).dim:
            sys.add_equation(
                [(one, f"h{n}", sq.right.comp(n).matrix, Matrix.identity(b.obj(n).dim))],
                sq.bottom.comp(n).matrix)
        # chain condition d_X h^n = h^{n+1} d_B
        if b.obj(n).dim and x.obj(n + 1).dim:
            terms = [(one, f"h{n}", x.diff(n).matrix, Matrix.identity(b.obj(n).dim))]
            if n + 1 in degrees:
                terms.append((-one, f"h{n + 1}", Matrix.identity(x.obj(n + 1).dim),
                              b.diff(n).matrix))
            sys.add_equation(terms, Matrix.zero(x.obj(n + 1).dim, b.obj(n).dim))
    sol = sys.solve()
    if sol is None:
        return None
    comps = {n: sol[f"h{n}"] for n in degrees if b.obj(n).dim and x.obj(n).dim}
    return ChainMap(b, x, comps)


def pushout_product(f: ChainMap, g: ChainMap) -> ChainMap:
    """The induced map (A@Y) +_{A@X} (B@X) -> B@Y of the two maps.

    When both inputs are degreewise strict monos the result is one as well;
    that is verified by classification in the tests rather than assumed.
    """
    a, b = f.source, f.target
    x, y = g.source, g.target
    ay = tensor_chain_map(identity_chain_map(a), g)     # A@X -> A@Y
    bx = tensor_chain_map(f, identity_chain_map(x))     # A@X -> B@X
    p, from_ay, from_bx = pushout_chain(ay, bx)
    u = tensor_chain_map(f, identity_chain_map(y))      # A@Y -> B@Y
    v = tensor_chain_map(identity_chain_map(b), g)      # B@X -> B@Y
    target = u.target
    comps = {}
    for n in p.support:
        q = from_ay.comp(n).matrix.hstack(from_bx.comp(n).matrix)
        rep = solve_matrix(q, Matrix.identity(p.obj(n).dim))
        if rep is None:
            raise RuntimeError("pushout components are not jointly epi; cannot happen")
        uv = u.comp(n).matrix.hstack(v.comp(n).matrix)
        mat = uv @ rep
        if mat.rows and mat.cols:
            comps[n] = FiltMorphism(p.obj(n), target.obj(n), mat)
    return ChainMap(p, target, comps)
