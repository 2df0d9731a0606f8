"""Finite-dimensional filtered vector spaces over the rationals.

An object is a rational vector space with an exhaustive increasing integer
filtration, recorded through an adapted basis: basis vector ``i`` carries an
integer weight ``w_i`` and the filtration step ``F_p`` is the span of the
basis vectors of weight at most ``p``.  Morphisms are the filtration
preserving linear maps.  This category is additive with kernels and
cokernels but it is not abelian: a morphism can be both mono and epi without
being an isomorphism (the weight shift map on a line is the standard
example).  It is quasi-abelian: pushouts preserve strict monomorphisms and
pullbacks preserve strict epimorphisms, and that is exactly the structure
the rest of the package exercises.

The computational backbone is the echelon form with decreasing-weight pivot
order from :mod:`homfilt.linalg`.  It yields weight-adapted bases of row
spaces, which is what makes induced (subspace) and quotient filtrations
exact and canonical here:

* a subspace gets ``dim(K \\cap F_p)`` basis vectors of weight <= p,
* a quotient class gets the least weight of any representative.

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import (
    Matrix,
    echelon_with_pivots,
    intersection_dim,
    kernel_basis,
    rank,
    kronecker,
    solve_affine,
    solve_matrix,
)


class FiltObject:
    """A filtered vector space given by an adapted basis with integer weights."""

    __slots__ = ("dim", "weights")

    def __init__(self, dim: int, weights):
        weights = tuple(int(w) for w in weights)
        if len(weights) != dim:
            raise ValueError("need one weight per basis vector")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("FiltObject is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FiltObject)
            and self.dim == other.dim
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.dim, self.weights))

    def __repr__(self):
        return f"FiltObject(dim={self.dim}, weights={list(self.weights)})"

    def filtration_dim(self, p: int) -> int:
        """dim F_p, the number of basis vectors of weight at most p."""
        return sum(1 for w in self.weights if w <= p)

    def is_abelian_instance(self) -> bool:
        return all(w == 0 for w in self.weights)


ZERO = FiltObject(0, ())


def unit() -> FiltObject:
    """The monoidal unit: a line in weight 0."""
    return FiltObject(1, (0,))


class FiltMorphism:
    """A filtration preserving linear map, stored as an exact matrix.

    The matrix is ``target.dim x source.dim`` and acts on coordinate columns.
    Filtration preservation is the entrywise condition that a nonzero entry
    (i, j) needs ``target.weights[i] <= source.weights[j]``; it is checked at
    construction and is an invariant of the type.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FiltObject, target: FiltObject, matrix: Matrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ValueError(
                f"matrix must be {target.dim}x{source.dim}, got {matrix.rows}x{matrix.cols}"
            )
        for i in range(matrix.rows):
            for j in range(matrix.cols):
                if matrix.entries[i][j] != 0 and target.weights[i] > source.weights[j]:
                    raise ValueError(
                        f"entry ({i},{j}) violates filtration preservation: "
                        f"target weight {target.weights[i]} > source weight {source.weights[j]}"
                    )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("FiltMorphism is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FiltMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"FiltMorphism({self.source!r} -> {self.target!r}, {self.matrix!r})"

    def compose(self, other: "FiltMorphism") -> "FiltMorphism":
        """self after other."""
        if other.target != self.source:
            raise ValueError("morphisms are not composable")
        return FiltMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __matmul__(self, other: "FiltMorphism") -> "FiltMorphism":
        return self.compose(other)

    def __add__(self, other: "FiltMorphism") -> "FiltMorphism":
        if self.source != other.source or self.target != other.target:
            raise ValueError("mismatched morphisms in addition")
        return FiltMorphism(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> "FiltMorphism":
        return FiltMorphism(self.source, self.target, -self.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def identity(v: FiltObject) -> FiltMorphism:
    return FiltMorphism(v, v, Matrix.identity(v.dim))


def zero_morphism(source: FiltObject, target: FiltObject) -> FiltMorphism:
    return FiltMorphism(source, target, Matrix.zero(target.dim, source.dim))


def decreasing_weight_order(weights) -> list[int]:
    """Column scan order for adapted echelon forms: heavy weights first."""
    return sorted(range(len(weights)), key=lambda j: (-weights[j], j))


def subspace_from_rows(ambient: FiltObject, rows: Matrix):
    """Adapted presentation of the subspace spanned by the given row vectors.

    Returns ``(sub, includes)`` where ``sub`` is the subspace with its
    induced filtration and ``includes`` is the inclusion into ``ambient``,
    always a strict monomorphism.  Each adapted basis vector has the weight
    of its pivot coordinate under the decreasing-weight echelon reduction.
    """
    if rows.cols != ambient.dim:
        raise ValueError("row vectors do not live in the ambient space")
    red, pivots = echelon_with_pivots(rows, decreasing_weight_order(ambient.weights))
    basis = [(ambient.weights[c], r) for r, c in pivots]
    basis.sort()
    weights = tuple(w for w, _ in basis)
    sub = FiltObject(len(basis), weights)
    cols = [red.entries[r] for _, r in basis]
    incl = Matrix(ambient.dim, len(basis), [[cols[k][i] for k in range(len(basis))] for i in range(ambient.dim)])
    return sub, FiltMorphism(sub, ambient, incl)


def quotient_by_rows(ambient: FiltObject, rows: Matrix):
    """Adapted presentation of the quotient by the span of the given rows.

    Returns ``(quot, projection)``.  The quotient filtration gives a class
    the least weight of any representative; concretely the non-pivot
    coordinates of the decreasing-weight echelon form of the subspace supply
    an adapted basis of classes, each keeping its coordinate weight.  The
    projection is a strict epimorphism by construction.
    """
    if rows.cols != ambient.dim:
        raise ValueError("row vectors do not live in the ambient space")
    red, pivots = echelon_with_pivots(rows, decreasing_weight_order(ambient.weights))
    pivot_of_col = {c: r for r, c in pivots}
    cobasis = [j for j in range(ambient.dim) if j not in pivot_of_col]
    cobasis.sort(key=lambda j: (ambient.weights[j], j))
    weights = tuple(ambient.weights[j] for j in cobasis)
    quot = FiltObject(len(cobasis), weights)
    pos = {j: k for k, j in enumerate(cobasis)}
    proj = [[Fraction(0)] * ambient.dim for _ in range(len(cobasis))]
    for j in range(ambient.dim):
        if j in pos:
            proj[pos[j]][j] = Fraction(1)
        else:
            r = pivot_of_col[j]
            # the echelon row is e_j + sum of cobasis coordinates, so the
            # class of e_j is minus that combination
            for jj in cobasis:
                c = red.entries[r][jj]
                if c != 0:
                    proj[pos[jj]][j] = -c
    return quot, FiltMorphism(ambient, quot, Matrix(len(cobasis), ambient.dim, proj))


def kernel(f: FiltMorphism):
    """Kernel with its induced filtration; returns (object, strict mono into source)."""
    ker_cols = kernel_basis(f.matrix)
    return subspace_from_rows(f.source, ker_cols.transpose())


def cokernel(f: FiltMorphism):
    """Cokernel with the quotient filtration; returns (object, strict epi out of target)."""
    return quotient_by_rows(f.target, f.matrix.transpose())


def image(f: FiltMorphism):
    """Image with the subspace filtration from the target; returns (object, mono)."""
    return subspace_from_rows(f.target, f.matrix.transpose())


def coimage(f: FiltMorphism):
    """Coimage (source modulo kernel) with the quotient filtration."""
    ker_cols = kernel_basis(f.matrix)
    return quotient_by_rows(f.source, ker_cols.transpose())


def coim_to_im(f: FiltMorphism) -> FiltMorphism:
    """The canonical map from the coimage to the image.

    It is always a filtration preserving bijection; ``f`` is strict exactly
    when it is an isomorphism of filtered objects.
    """
    coim, proj = coimage(f)
    im, incl = image(f)
    # send a class through any representative: pick representatives by
    # solving proj . R = id on the coimage coordinates
    rep = solve_matrix(proj.matrix, Matrix.identity(coim.dim))
    if rep is None:
        raise RuntimeError("projection is not surjective; cannot happen")
    through = f.matrix @ rep
    coords = solve_matrix(incl.matrix, through)
    if coords is None:
        raise RuntimeError("image of f does not factor through its image; cannot happen")
    return FiltMorphism(coim, im, coords)


def is_mono(f: FiltMorphism) -> bool:
    return rank(f.matrix) == f.source.dim


def is_epi(f: FiltMorphism) -> bool:
    return rank(f.matrix) == f.target.dim


def is_strict(f: FiltMorphism) -> bool:
    """Whether the canonical coimage-to-image map is a filtered isomorphism.

    Equivalent to ``f(F_p source) = im(f) \\cap F_p target`` for all p, and
    computed by comparing the induced weight multisets on both sides.
    """
    coim, _ = coimage(f)
    im, _ = image(f)
    return sorted(coim.weights) == sorted(im.weights)


def is_strict_mono(f: FiltMorphism) -> bool:
    return is_mono(f) and is_strict(f)


def is_strict_epi(f: FiltMorphism) -> bool:
    return is_epi(f) and is_strict(f)


def is_iso(f: FiltMorphism) -> bool:
    """Isomorphism of filtered objects: bijective with strict inverse."""
    return f.source.dim == f.target.dim and is_mono(f) and is_strict(f)


class FactoredMorphism:
    """The canonical factorization of a morphism as strict epi then mono."""

    __slots__ = ("strict_epi", "mono")

    def __init__(self, strict_epi: FiltMorphism, mono: FiltMorphism):
        if not is_strict_epi(strict_epi):
            raise ValueError("first factor is not a strict epimorphism")
        if not is_mono(mono):
            raise ValueError("second factor is not a monomorphism")
        object.__setattr__(self, "strict_epi", strict_epi)
        object.__setattr__(self, "mono", mono)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredMorphism is immutable")

    def composite(self) -> FiltMorphism:
        return self.mono @ self.strict_epi


def factor(f: FiltMorphism) -> FactoredMorphism:
    """Factor f as (mono out of the coimage) after (projection onto the coimage)."""
    coim, proj = coimage(f)
    rep = solve_matrix(proj.matrix, Matrix.identity(coim.dim))
    mono = FiltMorphism(coim, f.target, f.matrix @ rep)
    fact = FactoredMorphism(proj, mono)
    if fact.composite() != f:
        raise RuntimeError("canonical factorization failed to recompose")
    return fact


def factor_through_image(f: FiltMorphism):
    """The dual factorization: (strict mono out of the image) after an epi."""
    im, incl = image(f)
    corest = solve_matrix(incl.matrix, f.matrix)
    if corest is None:
        raise RuntimeError("f does not factor through its image; cannot happen")
    epi = FiltMorphism(f.source, im, corest)
    if not is_epi(epi) or not is_strict_mono(incl):
        raise RuntimeError("image factorization failed classification")
    if incl @ epi != f:
        raise RuntimeError("image factorization failed to recompose")
    return epi, incl


def direct_sum(*objs: FiltObject) -> FiltObject:
    weights = tuple(w for v in objs for w in v.weights)
    return FiltObject(sum(v.dim for v in objs), weights)


def ds_inclusion(objs, k: int) -> FiltMorphism:
    total = direct_sum(*objs)
    before = sum(v.dim for v in objs[:k])
    m = Matrix.zero(total.dim, objs[k].dim).entries
    m = [list(row) for row in m]
    for i in range(objs[k].dim):
        m[before + i][i] = Fraction(1)
    return FiltMorphism(objs[k], total, Matrix(total.dim, objs[k].dim, m))


def ds_projection(objs, k: int) -> FiltMorphism:
    total = direct_sum(*objs)
    before = sum(v.dim for v in objs[:k])
    m = [[Fraction(0)] * total.dim for _ in range(objs[k].dim)]
    for i in range(objs[k].dim):
        m[i][before + i] = Fraction(1)
    return FiltMorphism(total, objs[k], Matrix(objs[k].dim, total.dim, m))


def pushout(f: FiltMorphism, g: FiltMorphism):
    """Pushout of the span  y <-f- x -g-> z.

    Returned as ``(p, from_y, from_z)`` where p is the cokernel of
    (f, -g): x -> y (+) z with the quotient filtration.
    """
    if f.source != g.source:
        raise ValueError("pushout needs a common source")
    stacked = f.matrix.vstack(-g.matrix)
    summ = direct_sum(f.target, g.target)
    span = FiltMorphism(f.source, summ, stacked)
    p, proj = cokernel(span)
    from_y = proj @ ds_inclusion((f.target, g.target), 0)
    from_z = proj @ ds_inclusion((f.target, g.target), 1)
    return p, from_y, from_z


def pullback(f: FiltMorphism, g: FiltMorphism):
    """Pullback of the cospan  y -f-> x <-g- z, dual to :func:`pushout`.

    Returned as ``(p, to_y, to_z)``.
    """
    if f.target != g.target:
        raise ValueError("pullback needs a common target")
    side = f.matrix.hstack(-g.matrix)
    summ = direct_sum(f.source, g.source)
    span = FiltMorphism(summ, f.target, side)
    p, incl = kernel(span)
    to_y = ds_projection((f.source, g.source), 0) @ incl
    to_z = ds_projection((f.source, g.source), 1) @ incl
    return p, to_y, to_z


def tensor(v: FiltObject, w: FiltObject) -> FiltObject:
    """Tensor product; the weight of e_i (x) e_j is the sum of the weights."""
    weights = tuple(a + b for a in v.weights for b in w.weights)
    return FiltObject(v.dim * w.dim, weights)


def tensor_mor(f: FiltMorphism, g: FiltMorphism) -> FiltMorphism:
    return FiltMorphism(
        tensor(f.source, g.source),
        tensor(f.target, g.target),
        kronecker(f.matrix, g.matrix),
    )


def dual(v: FiltObject) -> FiltObject:
    """Internal dual into the unit: dual basis vectors carry negated weights."""
    return FiltObject(v.dim, tuple(-w for w in v.weights))


def is_strict_exact_pair(i: FiltMorphism, p: FiltMorphism) -> bool:
    """Whether 0 -> A -i-> B -p-> C -> 0 is a strict exact sequence."""
    if i.target != p.source:
        raise ValueError("maps are not composable")
    if not (p @ i).is_zero():
        return False
    if not is_strict_mono(i) or not is_strict_epi(p):
        return False
    return rank(i.matrix) + rank(p.matrix) == i.target.dim


def strictness_oracle(f: FiltMorphism) -> bool:
    """Brute-force strictness test enumerating the filtration steps.

    For every step p it compares rank(f restricted to F_p source) with
    dim(im f intersect F_p target) by plain rank arithmetic, without going
    through adapted bases.  Used to cross-check :func:`is_strict`.
    """
    steps = sorted(set(f.source.weights) | set(f.target.weights))
    for p in steps:
        src_cols = [j for j in range(f.source.dim) if f.source.weights[j] <= p]
        restricted = f.matrix.select_columns(src_cols)
        lhs = rank(restricted)
        tgt_rows = [i for i in range(f.target.dim) if f.target.weights[i] <= p]
        step_cols = []
        for i in tgt_rows:
            col = [Fraction(0)] * f.target.dim
            col[i] = Fraction(1)
            step_cols.append(col)
        step_mat = Matrix(f.target.dim, len(step_cols), [[c[i] for c in step_cols] for i in range(f.target.dim)])
        rhs = intersection_dim(f.matrix, step_mat)
        if lhs != rhs:
            return False
    return True


class MorphismSystem:
    """Affine solver for unknown filtration preserving morphisms.

    Unknowns are morphisms between given filtered objects; matrix entries
    that would violate filtration preservation are forced to zero and are
    not variables.  Equations are linear combinations of terms
    ``coeff * L @ W @ R`` summed over the unknowns, set equal to a constant
    matrix.  Solving reduces to one exact affine system.
    """

    def __init__(self):
        self._shapes: dict[str, tuple[FiltObject, FiltObject]] = {}
        self._var_index: dict[tuple[str, int, int], int] = {}
        self._equations: list[tuple[list, Matrix]] = []

    def add_unknown(self, name: str, source: FiltObject, target: FiltObject):
        if name in self._shapes:
            raise ValueError(f"duplicate unknown {name!r}")
        self._shapes[name] = (source, target)
        for i in range(target.dim):
            for j in range(source.dim):
                if target.weights[i] <= source.weights[j]:
                    self._var_index[(name, i, j)] = len(self._var_index)

    def add_equation(self, terms, rhs: Matrix):
        """terms: iterable of (coeff, name, L, R) meaning coeff * L @ W_name @ R."""
        self._equations.append((list(terms), rhs))

    def solve(self) -> dict[str, FiltMorphism] | None:
        nvars = len(self._var_index)
        rows = []
        consts = []
        for terms, rhs in self._equations:
            shape = (rhs.rows, rhs.cols)
            for a in range(shape[0]):
                for b in range(shape[1]):
                    coeffs = [Fraction(0)] * nvars
                    for c, name, left, right in terms:
                        src, tgt = self._shapes[name]
                        if left.cols != tgt.dim or right.rows != src.dim:
                            raise ValueError("term shape mismatch")
                        for i in range(tgt.dim):
                            la = left.entries[a][i]
                            if la == 0:
                                continue
                            for j in range(src.dim):
                                rb = right.entries[j][b]
                                if rb == 0:
                                    continue
                                idx = self._var_index.get((name, i, j))
                                if idx is not None:
                                    coeffs[idx] += c * la * rb
                                elif c * la * rb != 0:
                                    pass  # forced-zero entry contributes nothing
                    rows.append(coeffs)
                    consts.append(rhs.entries[a][b])
        system = Matrix(len(rows), nvars, rows)
        sol, _ = solve_affine(system, consts)
        if sol is None:
            return None
        out = {}
        for name, (src, tgt) in self._shapes.items():
            ents = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
            for i in range(tgt.dim):
                for j in range(src.dim):
                    idx = self._var_index.get((name, i, j))
                    if idx is not None:
                        ents[i][j] = sol[idx]
            out[name] = FiltMorphism(src, tgt, Matrix(tgt.dim, src.dim, ents))
        return out


def mediating_map_from_pushout(p: FiltObject, from_y: FiltMorphism, from_z: FiltMorphism,
                               u: FiltMorphism, v: FiltMorphism) -> FiltMorphism | None:
    """Solve the pushout universal property against a test cone (u, v).

    Returns the unique w with w @ from_y = u and w @ from_z = v, or None if
    no filtration preserving mediating map exists.
    """
    if u.target != v.target:
        raise ValueError("test cone must share a target")
    sys = MorphismSystem()
    sys.add_unknown("w", p, u.target)
    eye_p = Matrix.identity(u.target.dim)
    sys.add_equation([(Fraction(1), "w", eye_p, from_y.matrix)], u.matrix)
    sys.add_equation([(Fraction(1), "w", eye_p, from_z.matrix)], v.matrix)
    sol = sys.solve()
    return None if sol is None else sol["w"]
