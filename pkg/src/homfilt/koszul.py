"""Koszul-style resolutions over symmetric algebras.

For a free degree-zero module P with dual P', the resolution carrier is
Q (x) Lambda(P') with Q = Sym(P'), graded so that the k-th exterior layer
sits in cohomological degree -k.  The differential is the composite of two
maps: an insertion h that tensors in sum_i e_i* (x) e_i (the coevaluation
of the identity of P), and a collapse c that multiplies the inserted P'
factor into Q and contracts the inserted P factor into the exterior part by

    b . (f_1 ^ ... ^ f_{n+1}) = sum_j (-1)^j f_j(b) (f_1 ^ ... f_j-hat ... )

with j counted from 1, so a single contraction carries the sign -1.  The
composite raises Sym degree by one and lowers exterior degree by one, hence
preserves the total degree (Sym plus exterior), and the whole complex
splits into finite strands per total degree.  Truncating Q by polynomial
degree is therefore exact strand by strand: every reported cohomology below
the bound is the true one.

Specializing every Sym coordinate at a point m of P collapses the carrier
onto Lambda(P') with the contraction-along-m differential; checking that
this specialization agrees with the fancy differential matrix-for-matrix is
the base change verification.  The same contraction complex built over a
truncated polynomial algebra with m replaced by the gradient of a
polynomial computes the derived critical locus: its degree-zero cohomology
is the Jacobian ring.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .linalg import Matrix, rank
from .filtvect import FiltObject, FiltMorphism, dual
from .complexes import Complex


# -- monomial bookkeeping ----------------------------------------------------


def monomials_upto(nvars: int, bound: int) -> list[tuple]:
    """All exponent tuples of total degree up to the bound, degree-then-lex."""
    out = []
    for total in range(bound + 1):
        level = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                level.append(prefix + (remaining,))
                return
            for e in range(remaining, -1, -1):
                rec(prefix + (e,), remaining - e, slots - 1)

        if nvars == 0:
            if total == 0:
                level.append(())
        else:
            rec((), total, nvars)
        out.extend(sorted(level, reverse=True))
    return out


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


# -- the fancy Koszul package ------------------------------------------------


class KoszulData:
    """Layers and differentials of Q (x) Lambda(P') up to a degree bound.

    Layer k holds the basis of Q^{<= D} (x) Lambda^k P' as (monomial,
    subset) pairs, ordered by Sym degree then lexicographically; its
    filtered object adds the dual weights of both factors.  Differentials
    are stored as the composite of the insertion and collapse maps and are
    verified to square to zero over every stored basis element.
    """

    def __init__(self, p: FiltObject, degree_bound: int):
        self.p = p
        self.pdual = dual(p)
        self.rank = p.dim
        self.degree_bound = int(degree_bound)
        if self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        self.monos = monomials_upto(self.rank, self.degree_bound)
        self.mono_index = {m: i for i, m in enumerate(self.monos)}
        self.subsets = {k: list(combinations(range(self.rank), k))
                        for k in range(self.rank + 1)}
        self.layer_basis = {}
        self.layer_index = {}
        for k in range(self.rank + 1):
            basis = [(m, s) for m in self.monos for s in self.subsets[k]]
            self.layer_basis[k] = basis
            self.layer_index[k] = {b: i for i, b in enumerate(basis)}

    def mono_weight(self, m: tuple) -> int:
        return sum(e * w for e, w in zip(m, self.pdual.weights))

    def subset_weight(self, s: tuple) -> int:
        return sum(self.pdual.weights[i] for i in s)

    def layer_object(self, k: int) -> FiltObject:
        basis = self.layer_basis[k]
        return FiltObject(len(basis),
                          tuple(self.mono_weight(m) + self.subset_weight(s) for m, s in basis))

    def middle_object(self, k: int) -> FiltObject:
        """Q (x) P' (x) P (x) Lambda^k P', the target of the insertion map."""
        weights = []
        for m in self.monos:
            for a in range(self.rank):
                for b in range(self.rank):
                    for s in self.subsets[k]:
                        weights.append(self.mono_weight(m) + self.pdual.weights[a]
                                       + self.p.weights[b] + self.subset_weight(s))
        return FiltObject(len(weights), tuple(weights))

    def _middle_index(self, k: int):
        idx = {}
        pos = 0
        for mi, m in enumerate(self.monos):
            for a in range(self.rank):
                for b in range(self.rank):
                    for s in self.subsets[k]:
                        idx[(m, a, b, s)] = pos
                        pos += 1
        return idx

    def h_map(self, n: int) -> FiltMorphism:
        """Insertion of sum_i e_i* (x) e_i in front of the exterior factor."""
        k = n + 1
        if not (0 <= k <= self.rank):
            raise ValueError(f"no exterior layer of index {k}")
        src = self.layer_object(k)
        tgt = self.middle_object(k)
        midx = self._middle_index(k)
        ents = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
        for ci, (m, s) in enumerate(self.layer_basis[k]):
            for i in range(self.rank):
                ents[midx[(m, i, i, s)]][ci] = Fraction(1)
        return FiltMorphism(src, tgt, Matrix(tgt.dim, src.dim, ents))

    def c_map(self, n: int) -> FiltMorphism:
        """Multiply the P' factor into Q and contract the P factor."""
        k = n + 1
        if not (0 <= k <= self.rank):
            raise ValueError(f"no exterior layer of index {k}")
        src = self.middle_object(k)
        tgt = self.layer_object(k - 1) if k >= 1 else self.layer_object(0)
        if k == 0:
            # nothing to contract; the map is zero into the bottom layer
            return FiltMorphism(src, tgt, Matrix.zero(tgt.dim, src.dim))
        ents = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
        pos = 0
        for m in self.monos:
            for a in range(self.rank):
                bumped = mono_mul(m, tuple(1 if t == a else 0 for t in range(self.rank)))
                bi = self.mono_index.get(bumped)
                for b in range(self.rank):
                    for s in self.subsets[k]:
                        if bi is not None and b in s:
                            j = s.index(b) + 1
                            rest = tuple(x for x in s if x != b)
                            sign = Fraction(-1) if j % 2 else Fraction(1)
                            ri = self.layer_index[k - 1][(bumped, rest)]
                            ents[ri][pos] = sign
                        pos += 1
        return FiltMorphism(src, tgt, Matrix(tgt.dim, src.dim, ents))

    def differential_element(self, m: tuple, s: tuple) -> dict:
        """d(m (x) s) as a dictionary over layer k-1 basis pairs."""
        out = {}
        for j, i in enumerate(s, start=1):
            bumped = mono_mul(m, tuple(1 if t == i else 0 for t in range(self.rank)))
            if bumped not in self.mono_index:
                continue  # Sym degree beyond the bound; exact per strand below it
            rest = tuple(x for x in s if x != i)
            sign = Fraction(-1) if j % 2 else Fraction(1)
            key = (bumped, rest)
            out[key] = out.get(key, Fraction(0)) + sign
        return {k_: v for k_, v in out.items() if v != 0}

    def differential(self, n: int) -> FiltMorphism:
        """d_{n+1}: the composite of collapse after insertion."""
        composite = self.c_map(n) @ self.h_map(n)
        return composite

    def differential_direct(self, n: int) -> FiltMorphism:
        """The contraction formula expanded directly, bypassing h and c."""
        k = n + 1
        src = self.layer_object(k)
        tgt = self.layer_object(k - 1)
        ents = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
        for ci, (m, s) in enumerate(self.layer_basis[k]):
            for (bm, bs), c in self.differential_element(m, s).items():
                ents[self.layer_index[k - 1][(bm, bs)]][ci] = c
        return FiltMorphism(src, tgt, Matrix(tgt.dim, src.dim, ents))

    def as_complex(self) -> Complex:
        """The whole carrier as a cochain complex in degrees -rank .. 0."""
        objs = {-k: self.layer_object(k) for k in range(self.rank + 1)}
        diffs = {}
        for k in range(1, self.rank + 1):
            d = self.differential_direct(k - 1)
            if not d.matrix.is_zero():
                diffs[-k] = d
        return Complex(objs, diffs)

    def strand_dims(self, t: int) -> dict[int, int]:
        """Dimensions of the total-degree-t strand per exterior level."""
        out = {}
        for k in range(self.rank + 1):
            s = t - k
            if s < 0 or s > self.degree_bound:
                out[k] = 0
            else:
                out[k] = sum(1 for m in self.monos if mono_degree(m) == s) * len(self.subsets[k])
        return out

    def strand_matrix(self, t: int, k: int) -> Matrix:
        """The strand-t differential from exterior level k to level k - 1."""
        src = [(m, s) for m in self.monos if mono_degree(m) == t - k
               for s in self.subsets[k]] if 0 <= t - k <= self.degree_bound else []
        tgt = [(m, s) for m in self.monos if mono_degree(m) == t - k + 1
               for s in self.subsets[k - 1]] if 0 <= t - k + 1 <= self.degree_bound else []
        tgt_index = {b: i for i, b in enumerate(tgt)}
        ents = [[Fraction(0)] * len(src) for _ in range(len(tgt))]
        for ci, (m, s) in enumerate(src):
            for key, c in self.differential_element(m, s).items():
                if key in tgt_index:
                    ents[tgt_index[key]][ci] = c
        return Matrix(len(tgt), len(src), ents)


def fancy_koszul(p: FiltObject, degree_bound: int) -> KoszulData:
    k = KoszulData(p, degree_bound)
    # d^2 = 0 on every stored basis element
    for kk in range(2, k.rank + 1):
        for (m, s) in k.layer_basis[kk]:
            acc = {}
            for key, c in k.differential_element(m, s).items():
                for key2, c2 in k.differential_element(*key).items():
                    acc[key2] = acc.get(key2, Fraction(0)) + c * c2
            if any(v != 0 for v in acc.values()):
                raise RuntimeError(f"d^2 nonzero on {(m, s)}")
    return k


class AugmentationReport:
    """Per-strand exactness of the carrier over the augmentation."""

    def __init__(self, per_strand, violations):
        self.per_strand = per_strand      # t -> {exterior level: cohomology dim}
        self.violations = violations

    @property
    def ok(self):
        return not self.violations


def verify_augmentation_qiso(k: KoszulData) -> AugmentationReport:
    """Check each positive total-degree strand is exactly acyclic.

    Strand zero must be the base ring concentrated in degree 0, on which
    the augmentation (evaluation of Sym coordinates at zero, keeping the
    empty exterior part) is the identity.
    """
    per_strand = {}
    violations = []
    for t in range(k.degree_bound + 1):
        dims = k.strand_dims(t)
        mats = {kk: k.strand_matrix(t, kk) for kk in range(1, k.rank + 1)}
        coh = {}
        for kk in range(k.rank + 1):
            out_rank = rank(mats[kk]) if kk >= 1 else 0
            in_rank = rank(mats[kk + 1]) if kk + 1 <= k.rank else 0
            kerdim = dims[kk] - out_rank if kk >= 1 else dims[0]
            # at exterior level 0 the outgoing differential is zero
            if kk == 0:
                kerdim = dims[0]
            coh[-kk] = kerdim - in_rank
        per_strand[t] = coh
        for deg, d in coh.items():
            expected = 1 if (t == 0 and deg == 0) else 0
            if d != expected:
                violations.append(f"strand {t}: H^{deg} = {d}, expected {expected}")
    return AugmentationReport(per_strand, violations)


# -- specialization and base change ------------------------------------------


def specialized_koszul(p: FiltObject, m) -> Complex:
    """Lambda(P') with contraction along the point m of P.

    The contraction lowers exterior degree by one with the alternating sign
    counted from one.  For the complex to live in the filtered category the
    point must be a morphism from the unit, so its coordinates may only hit
    nonpositive-weight directions; zero-weight objects (the abelian
    instance) impose no condition.
    """
    coords = [Fraction(c) for c in m]
    if len(coords) != p.dim:
        raise ValueError("the point needs one coordinate per generator of P")
    for i, c in enumerate(coords):
        if c != 0 and p.weights[i] > 0:
            raise ValueError(
                f"coordinate {i} has positive weight {p.weights[i]}; "
                "contraction along it would not preserve the filtration")
    pd = dual(p)
    subsets = {k: list(combinations(range(p.dim), k)) for k in range(p.dim + 1)}
    objs = {}
    for k in range(p.dim + 1):
        objs[-k] = FiltObject(len(subsets[k]),
                              tuple(sum(pd.weights[i] for i in s) for s in subsets[k]))
    diffs = {}
    for k in range(1, p.dim + 1):
        tgt_index = {s: i for i, s in enumerate(subsets[k - 1])}
        ents = [[Fraction(0)] * len(subsets[k]) for _ in range(len(subsets[k - 1]))]
        for ci, s in enumerate(subsets[k]):
            for j, i in enumerate(s, start=1):
                c = coords[i]
                if c == 0:
                    continue
                sign = Fraction(-1) if j % 2 else Fraction(1)
                rest = tuple(x for x in s if x != i)
                ents[tgt_index[rest]][ci] += sign * c
        mat = Matrix(len(subsets[k - 1]), len(subsets[k]), ents)
        if not mat.is_zero():
            diffs[-k] = FiltMorphism(objs[-k], objs[-k + 1], mat)
    return Complex(objs, diffs)


class BaseChangeReport:
    def __init__(self, violations):
        self.violations = violations

    @property
    def ok(self):
        return not self.violations


def base_change_check(p: FiltObject, m, degree_bound: int) -> BaseChangeReport:
    """Specialize the fancy carrier at m and compare with the contraction complex.

    Every Sym coordinate is evaluated at the point; the induced differential
    on the exterior factor must agree with the contraction differential
    matrix for matrix, and the evaluation must intertwine the two
    differentials on every stored basis element.
    """
    coords = [Fraction(c) for c in m]
    k = fancy_koszul(p, degree_bound)
    spec = specialized_koszul(p, m)
    violations = []

    def ev(mono: tuple) -> Fraction:
        out = Fraction(1)
        for e, c in zip(mono, coords):
            out *= c ** e
        return out

    # induced matrices from the Sym-degree-zero stratum, one per exterior level
    subsets = k.subsets
    for lev in range(1, k.rank + 1):
        tgt_index = {s: i for i, s in enumerate(subsets[lev - 1])}
        ents = [[Fraction(0)] * len(subsets[lev]) for _ in range(len(subsets[lev - 1]))]
        zero_mono = tuple(0 for _ in range(k.rank))
        for ci, s in enumerate(subsets[lev]):
            for (bm, bs), c in k.differential_element(zero_mono, s).items():
                ents[tgt_index[bs]][ci] += c * ev(bm)
        induced = Matrix(len(subsets[lev - 1]), len(subsets[lev]), ents)
        if induced != spec.diff(-lev).matrix:
            violations.append(f"induced differential differs at exterior level {lev}")
    # the evaluation intertwines the differentials on all stored elements
    for lev in range(1, k.rank + 1):
        spec_mat = spec.diff(-lev).matrix
        sub_index = {s: i for i, s in enumerate(subsets[lev])}
        tgt_index = {s: i for i, s in enumerate(subsets[lev - 1])}
        for (mono, s) in k.layer_basis[lev]:
            if mono_degree(mono) >= degree_bound:
                continue  # the bumped monomial would leave the truncation
            lhs = {}
            for (bm, bs), c in k.differential_element(mono, s).items():
                lhs[bs] = lhs.get(bs, Fraction(0)) + c * ev(bm)
            rhs = {}
            scale = ev(mono)
            if scale != 0:
                col = sub_index[s]
                for ri in range(spec_mat.rows):
                    c = spec_mat.entries[ri][col]
                    if c != 0:
                        rhs[subsets[lev - 1][ri]] = c * scale
            lhs = {kk: v for kk, v in lhs.items() if v != 0}
            if lhs != rhs:
                violations.append(f"evaluation fails to intertwine d on {(mono, s)}")
    return BaseChangeReport(violations)


# -- polynomials and the derived critical locus -------------------------------


class PolySpec:
    """A rational polynomial in n variables as an exponent-vector table."""

    def __init__(self, nvars: int, terms):
        self.nvars = int(nvars)
        table: dict[tuple, Fraction] = {}
        for coeff, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has the wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            c = Fraction(coeff)
            if c != 0:
                cur = table.get(exps, Fraction(0)) + c
                if cur == 0:
                    table.pop(exps, None)
                else:
                    table[exps] = cur
        self.terms = dict(sorted(table.items(), reverse=True))

    def __eq__(self, other):
        return (isinstance(other, PolySpec) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __repr__(self):
        return f"PolySpec(nvars={self.nvars}, terms={self.terms})"

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def derivative(self, var: int) -> "PolySpec":
        terms = []
        for exps, c in self.terms.items():
            if exps[var] == 0:
                continue
            newexp = tuple(e - 1 if i == var else e for i, e in enumerate(exps))
            terms.append((c * exps[var], newexp))
        return PolySpec(self.nvars, terms)

    def quasi_homogeneous_weights(self):
        """Positive integer weights (w_1..w_n, d) making every term weighted
        degree d, or None when no such grading exists."""
        if not self.terms:
            return None
        exps = list(self.terms)
        base = exps[0]
        rows = []
        for e in exps[1:]:
            rows.append([Fraction(a - b) for a, b in zip(e, base)])
        if not rows:
            rows = []
        system = Matrix(len(rows), self.nvars, rows) if rows else Matrix.zero(0, self.nvars)
        from .linalg import kernel_basis
        ker = kernel_basis(system)
        # search the kernel for a strictly positive vector; try sums of columns
        candidates = []
        for j in range(ker.cols):
            candidates.append([ker.entries[i][j] for i in range(ker.rows)])
        if ker.cols > 1:
            candidates.append([sum(ker.entries[i][j] for j in range(ker.cols))
                               for i in range(ker.rows)])
        # also try sign-corrected single columns
        extra = []
        for cand in candidates:
            extra.append([-x for x in cand])
        candidates.extend(extra)
        for cand in candidates:
            if all(x > 0 for x in cand):
                denom_lcm = 1
                for x in cand:
                    denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
                ws = [int(x * denom_lcm) for x in cand]
                g = 0
                for w in ws:
                    g = gcd(g, w)
                ws = [w // g for w in ws]
                d = sum(e * w for e, w in zip(base, ws))
                if all(sum(e * w for e, w in zip(exp, ws)) == d for exp in self.terms):
                    return tuple(ws), d
        return None


class CriticalLocusReport:
    """Cohomology of the contraction complex along the gradient.

    ``h0_dim`` is the dimension of the truncated Jacobian ring (exact once
    ``stabilized`` is set: the quotient dimensions at the last two cutoffs
    agree and the ideal span contains every monomial one degree below the
    bound).  ``h_minus`` collects the higher cohomology dimensions; in the
    quasi-homogeneous case they are summed over the strands that fit inside
    the truncation, so they are exact there.
    """

    def __init__(self, h0_dim, stabilized, h0_by_cutoff, h_minus, quasi_homogeneous,
                 strand_table, safe_strand_bound):
        self.h0_dim = h0_dim
        self.stabilized = stabilized
        self.h0_by_cutoff = h0_by_cutoff
        self.h_minus = h_minus
        self.quasi_homogeneous = quasi_homogeneous
        self.strand_table = strand_table
        self.safe_strand_bound = safe_strand_bound


def critical_locus(f: PolySpec, degree_bound: int) -> CriticalLocusReport:
    """Resolve along the gradient of f and report cohomology dimensions.

    The carrier is A (x) Lambda(xi_1..xi_n) over the polynomial algebra A
    truncated at the degree bound, with the contraction-along-the-gradient
    differential.  H^0 is the Jacobian ring up to the bound; stabilization
    is detected by the two-cutoff criterion.  Higher cohomology is computed
    per weighted strand when f is quasi-homogeneous.
    """
    if degree_bound < 1:
        raise ValueError("the degree bound must be at least 1")
    n = f.nvars
    partials = [f.derivative(v) for v in range(n)]
    monos = monomials_upto(n, degree_bound)
    mono_index = {m: i for i, m in enumerate(monos)}

    def ideal_rows(cutoff: int):
        rows = []
        for pd in partials:
            if pd.is_zero():
                continue
            for m in monos:
                if mono_degree(m) + pd.degree() > cutoff:
                    continue
                row = [Fraction(0)] * len(monos)
                ok = True
                for exps, c in pd.terms.items():
                    target = mono_mul(m, exps)
                    ti = mono_index.get(target)
                    if ti is None or mono_degree(target) > cutoff:
                        ok = False
                        break
                    row[ti] += c
                if ok:
                    rows.append(row)
        return rows

    def h0_at(cutoff: int) -> int:
        keep = [i for i, m in enumerate(monos) if mono_degree(m) <= cutoff]
        rows = ideal_rows(cutoff)
        if not rows:
            return len(keep)
        mat = Matrix(len(rows), len(monos), rows).select_columns(keep)
        return len(keep) - rank(mat)

    h0_by_cutoff = {degree_bound - 1: h0_at(degree_bound - 1),
                    degree_bound: h0_at(degree_bound)}
    # stabilization: equal dimensions at the two cutoffs, and the ideal span
    # already contains every monomial one degree below the bound
    rows = ideal_rows(degree_bound - 1)
    span = Matrix(len(rows), len(monos), rows) if rows else Matrix.zero(0, len(monos))
    top_monos = []
    for m in monos:
        if mono_degree(m) == degree_bound - 1:
            row = [Fraction(0)] * len(monos)
            row[mono_index[m]] = Fraction(1)
            top_monos.append(row)
    with_tops = Matrix(len(rows) + len(top_monos), len(monos),
                       rows + top_monos) if (rows or top_monos) else span
    stabilized = (h0_by_cutoff[degree_bound - 1] == h0_by_cutoff[degree_bound]
                  and rank(with_tops) == rank(span))

    qh = f.quasi_homogeneous_weights()
    h_minus: dict[int, int] = {}
    strand_table: dict[int, dict[int, int]] = {}
    safe_bound = None
    if qh is not None:
        weights, d = qh
        xi_weight = [d - w for w in weights]
        min_w = min(weights)
        safe_bound = degree_bound * min_w
        subsets = {k: list(combinations(range(n), k)) for k in range(n + 1)}

        def wdeg(m: tuple) -> int:
            return sum(e * w for e, w in zip(m, weights))

        def strand_basis(level: int, t: int):
            out = []
            for s in subsets[level]:
                rem = t - sum(xi_weight[i] for i in s)
                for m in monos:
                    if wdeg(m) == rem:
                        out.append((m, s))
            return out

        for t in range(safe_bound + 1):
            coh = {}
            bases = {lev: strand_basis(lev, t) for lev in range(n + 1)}
            mats = {}
            for lev in range(1, n + 1):
                tgt_index = {b: i for i, b in enumerate(bases[lev - 1])}
                ents = [[Fraction(0)] * len(bases[lev]) for _ in range(len(bases[lev - 1]))]
                for ci, (m, s) in enumerate(bases[lev]):
                    for j, i in enumerate(s, start=1):
                        sign = Fraction(-1) if j % 2 else Fraction(1)
                        rest = tuple(x for x in s if x != i)
                        for exps, c in partials[i].terms.items():
                            target = mono_mul(m, exps)
                            key = (target, rest)
                            if key in tgt_index:
                                ents[tgt_index[key]][ci] += sign * c
                mats[lev] = Matrix(len(bases[lev - 1]), len(bases[lev]), ents)
            for lev in range(n + 1):
                dim = len(bases[lev])
                out_rank = rank(mats[lev]) if lev >= 1 else 0
                in_rank = rank(mats[lev + 1]) if lev + 1 <= n else 0
                kerdim = dim - out_rank if lev >= 1 else dim
                coh[-lev] = kerdim - in_rank
            strand_table[t] = coh
            for lev in range(1, n + 1):
                h_minus[lev] = h_minus.get(lev, 0) + coh[-lev]
    return CriticalLocusReport(
        h0_dim=h0_by_cutoff[degree_bound],
        stabilized=stabilized,
        h0_by_cutoff=h0_by_cutoff,
        h_minus=h_minus,
        quasi_homogeneous=qh,
        strand_table=strand_table,
        safe_strand_bound=safe_bound,
    )
