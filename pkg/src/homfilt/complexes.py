"""Bounded cochain complexes of filtered vector spaces.

A complex stores one filtered object per degree in a finite support window
and differentials that raise degree by one and square to zero exactly.  The
central computation is the reduced cohomology

    H^n(X) = coker( X^{n-1} -> Ker d^n ),

a filtered object: the kernel carries the induced filtration, the incoming
differential corestricts to it (d squares to zero), and the cokernel takes
the quotient filtration.  A chain map is a reduced quasi-isomorphism when
every induced map on reduced cohomology is an isomorphism of filtered
objects, bijective and strict; a bijective non-strict map on cohomology is
inequivalent data here, which is precisely what separates this setting from
the abelian one.

Sign conventions: cone(f)(y, x) = (dy + fx, -dx) and the k-fold shift
carries the sign (-1)^k, so cone(id) is contractible and cone(0: X -> 0)
equals X[1] on the nose.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, block_diag, rank, solve_matrix
from . import filtvect as fv
from .filtvect import FiltMorphism, FiltObject, ZERO


class Complex:
    """A bounded cochain complex; degrees with no stored object are zero."""

    __slots__ = ("objects", "differentials", "support")

    def __init__(self, objects: dict, differentials: dict):
        objs = {int(n): v for n, v in objects.items() if v.dim > 0}
        diffs = {}
        for n, d in differentials.items():
            n = int(n)
            src = objs.get(n, ZERO)
            tgt = objs.get(n + 1, ZERO)
            if d.source != src or d.target != tgt:
                raise ValueError(f"differential at degree {n} does not match the objects")
            if not d.is_zero():
                diffs[n] = d
        for n in sorted(diffs):
            if n + 1 in diffs:
                comp = diffs[n + 1] @ diffs[n]
                if not comp.is_zero():
                    raise ValueError(f"differential does not square to zero at degree {n}")
        object.__setattr__(self, "objects", objs)
        object.__setattr__(self, "differentials", diffs)
        object.__setattr__(self, "support", tuple(sorted(objs)))

    def __setattr__(self, name, value):
        raise AttributeError("Complex is immutable")

    @classmethod
    def zero(cls) -> "Complex":
        return cls({}, {})

    @classmethod
    def single(cls, v: FiltObject, degree: int = 0) -> "Complex":
        return cls({degree: v}, {})

    @classmethod
    def two_term(cls, src: FiltObject, tgt: FiltObject, d: Matrix, degree: int) -> "Complex":
        """The complex with src in the given degree mapping to tgt one higher."""
        mor = FiltMorphism(src, tgt, d)
        return cls({degree: src, degree + 1: tgt}, {degree: mor})

    def obj(self, n: int) -> FiltObject:
        return self.objects.get(n, ZERO)

    def diff(self, n: int) -> FiltMorphism:
        d = self.differentials.get(n)
        if d is not None:
            return d
        return fv.zero_morphism(self.obj(n), self.obj(n + 1))

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return False
        if self.objects != other.objects:
            return False
        return self.differentials == other.differentials

    def __hash__(self):
        return hash((tuple(sorted(self.objects.items())), tuple(sorted(self.differentials.items()))))

    def __repr__(self):
        parts = ", ".join(f"{n}: dim {v.dim}" for n, v in sorted(self.objects.items()))
        return f"Complex({parts or 'zero'})"

    def total_dim(self) -> int:
        return sum(v.dim for v in self.objects.values())


class ChainMap:
    """A degreewise morphism commuting with the differentials."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: Complex, target: Complex, components: dict):
        comps = {}
        for n, f in components.items():
            n = int(n)
            if f.source != source.obj(n) or f.target != target.obj(n):
                raise ValueError(f"component at degree {n} does not match the complexes")
            if not f.is_zero():
                comps[n] = f
        degrees = set(source.support) | set(target.support)
        for n in degrees:
            f_n = comps.get(n)
            f_n1 = comps.get(n + 1)
            lhs = (target.diff(n).matrix @ f_n.matrix) if f_n else Matrix.zero(
                target.obj(n + 1).dim, source.obj(n).dim)
            rhs = (f_n1.matrix @ source.diff(n).matrix) if f_n1 else Matrix.zero(
                target.obj(n + 1).dim, source.obj(n).dim)
            if lhs != rhs:
                raise ValueError(f"components do not commute with differentials at degree {n}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("ChainMap is immutable")

    def comp(self, n: int) -> FiltMorphism:
        f = self.components.get(n)
        if f is not None:
            return f
        return fv.zero_morphism(self.source.obj(n), self.target.obj(n))

    def __eq__(self, other):
        return (
            isinstance(other, ChainMap)
            and self.source == other.source
            and self.target == other.target
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.components.items()))))

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"

    def compose(self, other: "ChainMap") -> "ChainMap":
        if other.target != self.source:
            raise ValueError("chain maps are not composable")
        degrees = set(other.components) | set(self.components)
        comps = {n: self.comp(n) @ other.comp(n) for n in degrees}
        return ChainMap(other.source, self.target, comps)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        return self.compose(other)

    def is_zero(self) -> bool:
        return not self.components


def identity_chain_map(x: Complex) -> ChainMap:
    return ChainMap(x, x, {n: fv.identity(x.obj(n)) for n in x.support})


def zero_chain_map(x: Complex, y: Complex) -> ChainMap:
    return ChainMap(x, y, {})


class CohomologyData:
    """Everything the reduced cohomology of one degree is built from.

    ``kernel_incl`` includes Ker d^n into X^n, ``corestriction`` is the
    incoming differential with target corestricted to the kernel, ``h`` is
    the reduced cohomology object and ``proj`` the quotient projection from
    the kernel onto it.
    """

    __slots__ = ("degree", "kernel_obj", "kernel_incl", "corestriction", "h", "proj")

    def __init__(self, degree, kernel_obj, kernel_incl, corestriction, h, proj):
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "kernel_obj", kernel_obj)
        object.__setattr__(self, "kernel_incl", kernel_incl)
        object.__setattr__(self, "corestriction", corestriction)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "proj", proj)

    def __setattr__(self, name, value):
        raise AttributeError("CohomologyData is immutable")


def cohomology_data(x: Complex, n: int) -> CohomologyData:
    ker_obj, ker_incl = fv.kernel(x.diff(n))
    incoming = x.diff(n - 1)
    coords = solve_matrix(ker_incl.matrix, incoming.matrix)
    if coords is None:
        raise RuntimeError("incoming differential does not land in the kernel")
    corest = FiltMorphism(x.obj(n - 1), ker_obj, coords)
    h, proj = fv.cokernel(corest)
    return CohomologyData(n, ker_obj, ker_incl, corest, h, proj)


def reduced_cohomology(x: Complex, n: int) -> FiltObject:
    """The reduced cohomology in degree n, as a filtered object."""
    return cohomology_data(x, n).h


def cohomology_degrees(x: Complex) -> list[int]:
    return sorted(x.support)


def induced_cohomology_map(f: ChainMap, n: int) -> FiltMorphism:
    """The map H^n(f) between the reduced cohomologies."""
    dx = cohomology_data(f.source, n)
    dy = cohomology_data(f.target, n)
    if dx.h.dim == 0 or dy.h.dim == 0:
        return fv.zero_morphism(dx.h, dy.h)
    # representatives of source classes inside Ker d^n of the source
    rep = solve_matrix(dx.proj.matrix, Matrix.identity(dx.h.dim))
    through = f.comp(n).matrix @ dx.kernel_incl.matrix @ rep
    in_ker = solve_matrix(dy.kernel_incl.matrix, through)
    if in_ker is None:
        raise RuntimeError("chain map does not send kernels to kernels")
    return FiltMorphism(dx.h, dy.h, dy.proj.matrix @ in_ker)


def is_reduced_qiso(f: ChainMap) -> bool:
    """Whether every induced H^n(f) is an isomorphism of filtered objects."""
    degrees = set(f.source.support) | set(f.target.support)
    for n in sorted(degrees):
        if not fv.is_iso(induced_cohomology_map(f, n)):
            return False
    return True


def shift(x: Complex, k: int) -> Complex:
    """X[k]^n = X^{n+k} with the differential scaled by (-1)^k."""
    sign = Fraction(-1) if k % 2 else Fraction(1)
    objs = {n - k: v for n, v in x.objects.items()}
    diffs = {}
    for n, d in x.differentials.items():
        diffs[n - k] = FiltMorphism(d.source, d.target, d.matrix.scale(sign))
    return Complex(objs, diffs)


def cone(f: ChainMap) -> Complex:
    """Mapping cone: cone(f)^n = Y^n (+) X^{n+1}, d(y, x) = (dy + fx, -dx)."""
    x, y = f.source, f.target
    degrees = sorted(set(y.support) | {n - 1 for n in x.support})
    objs = {}
    diffs = {}
    for n in degrees:
        objs[n] = fv.direct_sum(y.obj(n), x.obj(n + 1))
    for n in degrees:
        src = objs.get(n)
        tgt = objs.get(n + 1, fv.direct_sum(y.obj(n + 1), x.obj(n + 2)))
        if src is None or src.dim == 0 or tgt.dim == 0:
            continue
        top = y.diff(n).matrix.hstack(f.comp(n + 1).matrix)
        bottom = Matrix.zero(x.obj(n + 2).dim, y.obj(n).dim).hstack(
            -x.diff(n + 1).matrix)
        diffs[n] = FiltMorphism(src, tgt, top.vstack(bottom))
    return Complex(objs, diffs)


def cone_inclusion(f: ChainMap) -> ChainMap:
    """The degreewise inclusion of the target complex into the cone."""
    c = cone(f)
    comps = {}
    for n in f.target.support:
        comps[n] = fv.ds_inclusion((f.target.obj(n), f.source.obj(n + 1)), 0)
        comps[n] = FiltMorphism(f.target.obj(n), c.obj(n), comps[n].matrix)
    return ChainMap(f.target, c, comps)


def cone_projection(f: ChainMap) -> ChainMap:
    """The degreewise projection of the cone onto the shifted source X[1]."""
    c = cone(f)
    sx = shift(f.source, 1)
    comps = {}
    for n in sx.support:
        pr = fv.ds_projection((f.target.obj(n), f.source.obj(n + 1)), 1)
        comps[n] = FiltMorphism(c.obj(n), sx.obj(n), pr.matrix)
    return ChainMap(c, sx, comps)


def direct_sum_complex(x: Complex, y: Complex):
    """Degreewise direct sum, returned with the two inclusions and projections."""
    degrees = sorted(set(x.support) | set(y.support))
    objs = {n: fv.direct_sum(x.obj(n), y.obj(n)) for n in degrees}
    diffs = {}
    for n in degrees:
        if n + 1 in objs or objs[n].dim:
            tgt = fv.direct_sum(x.obj(n + 1), y.obj(n + 1))
            mat = block_diag([x.diff(n).matrix, y.diff(n).matrix])
            if mat.rows and mat.cols:
                diffs[n] = FiltMorphism(objs[n], tgt, mat)
    total = Complex(objs, diffs)
    inc_x = ChainMap(x, total, {
        n: FiltMorphism(x.obj(n), total.obj(n),
                        fv.ds_inclusion((x.obj(n), y.obj(n)), 0).matrix)
        for n in x.support})
    inc_y = ChainMap(y, total, {
        n: FiltMorphism(y.obj(n), total.obj(n),
                        fv.ds_inclusion((x.obj(n), y.obj(n)), 1).matrix)
        for n in y.support})
    pr_x = ChainMap(total, x, {
        n: FiltMorphism(total.obj(n), x.obj(n),
                        fv.ds_projection((x.obj(n), y.obj(n)), 0).matrix)
        for n in x.support})
    pr_y = ChainMap(total, y, {
        n: FiltMorphism(total.obj(n), y.obj(n),
                        fv.ds_projection((x.obj(n), y.obj(n)), 1).matrix)
        for n in y.support})
    return total, inc_x, inc_y, pr_x, pr_y


def _tensor_layout(x: Complex, y: Complex, n: int) -> list[tuple[int, int]]:
    return [(p, n - p) for p in x.support if (n - p) in y.objects]


def tensor_complex(x: Complex, y: Complex) -> Complex:
    """Tensor product of complexes with the Koszul sign on the second factor."""
    degrees = sorted({p + q for p in x.support for q in y.support})
    objs = {}
    for n in degrees:
        parts = [fv.tensor(x.obj(p), y.obj(q)) for p, q in _tensor_layout(x, y, n)]
        if parts:
            objs[n] = fv.direct_sum(*parts)
    diffs = {}
    for n in degrees:
        if n not in objs:
            continue
        src_layout = _tensor_layout(x, y, n)
        tgt_layout = _tensor_layout(x, y, n + 1)
        if not tgt_layout:
            continue
        tgt_obj = fv.direct_sum(*[fv.tensor(x.obj(p), y.obj(q)) for p, q in tgt_layout])
        rows = []
        for tp, tq in tgt_layout:
            row_blocks = []
            for sp, sq in src_layout:
                src_piece = fv.tensor(x.obj(sp), y.obj(sq))
                tgt_piece = fv.tensor(x.obj(tp), y.obj(tq))
                if tp == sp + 1 and tq == sq:
                    block = fv.tensor_mor(x.diff(sp), fv.identity(y.obj(sq))).matrix
                elif tp == sp and tq == sq + 1:
                    sign = Fraction(-1) if sp % 2 else Fraction(1)
                    block = fv.tensor_mor(fv.identity(x.obj(sp)), y.diff(sq)).matrix.scale(sign)
                else:
                    block = Matrix.zero(tgt_piece.dim, src_piece.dim)
                row_blocks.append(block)
            merged = row_blocks[0]
            for b in row_blocks[1:]:
                merged = merged.hstack(b)
            rows.append(merged)
        full = rows[0]
        for r in rows[1:]:
            full = full.vstack(r)
        if full.rows and full.cols:
            diffs[n] = FiltMorphism(objs[n], tgt_obj, full)
    return Complex(objs, diffs)


def tensor_chain_map(f: ChainMap, g: ChainMap) -> ChainMap:
    """f (x) g as a chain map between the tensor product complexes."""
    src = tensor_complex(f.source, g.source)
    tgt = tensor_complex(f.target, g.target)
    comps = {}
    for n in src.support:
        src_layout = _tensor_layout(f.source, g.source, n)
        tgt_layout = _tensor_layout(f.target, g.target, n)
        if not tgt_layout:
            continue
        rows = []
        for tp, tq in tgt_layout:
            row_blocks = []
            for sp, sq in src_layout:
                if (tp, tq) == (sp, sq):
                    block = fv.tensor_mor(f.comp(sp), g.comp(sq)).matrix
                else:
                    block = Matrix.zero(
                        f.target.obj(tp).dim * g.target.obj(tq).dim,
                        f.source.obj(sp).dim * g.source.obj(sq).dim)
                row_blocks.append(block)
            merged = row_blocks[0]
            for b in row_blocks[1:]:
                merged = merged.hstack(b)
            rows.append(merged)
        full = rows[0]
        for r in rows[1:]:
            full = full.vstack(r)
        if full.rows and full.cols:
            comps[n] = FiltMorphism(src.obj(n), tgt.obj(n), full)
    return ChainMap(src, tgt, comps)


def strict_exact_check(i: ChainMap, p: ChainMap) -> bool:
    """Degreewise test that 0 -> A -> B -> C -> 0 is strict exact."""
    if i.target != p.source:
        raise ValueError("the two maps are not composable")
    degrees = set(i.source.support) | set(i.target.support) | set(p.target.support)
    for n in sorted(degrees):
        if not fv.is_strict_exact_pair(i.comp(n), p.comp(n)):
            return False
    return True


def pushout_chain(f: ChainMap, g: ChainMap):
    """Degreewise pushout of complexes along a common source.

    Returns ``(p, from_y, from_z)``; the differential of p is the one
    induced on the quotient, which exists because the degreewise projections
    assemble into a chain map.
    """
    if f.source != g.source:
        raise ValueError("pushout needs a common source")
    y, z = f.target, g.target
    degrees = sorted(set(y.support) | set(z.support) | set(f.source.support))
    pieces = {}
    for n in degrees:
        pieces[n] = fv.pushout(f.comp(n), g.comp(n))
    objs = {n: pieces[n][0] for n in degrees}
    diffs = {}
    for n in degrees:
        pn, iy, iz = pieces[n]
        if n + 1 not in pieces or pn.dim == 0 or pieces[n + 1][0].dim == 0:
            continue
        pn1, iy1, iz1 = pieces[n + 1]
        # quotient projection in degree n
        q_n = iy.matrix.hstack(iz.matrix)
        q_n1 = iy1.matrix.hstack(iz1.matrix)
        big_d = block_diag([y.diff(n).matrix, z.diff(n).matrix])
        rep = solve_matrix(q_n, Matrix.identity(pn.dim))
        if rep is None:
            raise RuntimeError("pushout projection is not surjective; cannot happen")
        diffs[n] = FiltMorphism(pn, pn1, q_n1 @ big_d @ rep)
    p = Complex(objs, diffs)
    from_y = ChainMap(y, p, {n: FiltMorphism(y.obj(n), p.obj(n), pieces[n][1].matrix)
                             for n in y.support})
    from_z = ChainMap(z, p, {n: FiltMorphism(z.obj(n), p.obj(n), pieces[n][2].matrix)
                             for n in z.support})
    return p, from_y, from_z


def classical_cohomology_dim(x: Complex, n: int) -> int:
    """Abelian oracle: dim ker(d^n) - rank(d^{n-1}), plain linear algebra."""
    dn = x.diff(n)
    dprev = x.diff(n - 1)
    return (x.obj(n).dim - rank(dn.matrix)) - rank(dprev.matrix)
