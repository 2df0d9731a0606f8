"""Differential graded Lie algebras and their resolutions.

A dg-Lie algebra is presented by a basis with cohomological degrees and
optional positive auxiliary weights, structure constants for the bracket,
and a differential.  Three axioms are checked exhaustively on basis
elements: graded antisymmetry, the graded Jacobi identity with the sign
pattern (-1)^{pr}, (-1)^{pq}, (-1)^{qr} on the cyclic summands, and the
Leibniz rule d[x, y] = [dx, y] + (-1)^{|x|}[x, dy].

The universal enveloping algebra is handled as a rewriting system on words:
an out-of-order adjacent pair rewrites through
x y -> (-1)^{|x||y|} y x + [x, y], and a repeated odd generator through
x x -> [x, x] / 2.  Normal forms are the weakly increasing words with no
repeated odd letter.  Counting them per length gives the graded dimensions
of the word-length filtration, and comparing against the symmetric algebra
dimensions is the verifiable content of the PBW isomorphism at this scale;
local confluence of the rewriting (checked on all short words by reducing
with two different strategies) is what makes the count trustworthy.

The cone of a dg-Lie algebra adjoins a shifted copy with differential
d(x + ey) = dx + y - e dy and bracket [x + ey, x' + ey'] =
[x, x'] + e([y, x'] + (-1)^{|x|}[x, y']).  Its underlying complex is the
mapping cone of the identity, so its enveloping algebra resolves the base
ring; reading the resolution in normal-form coordinates produces the
Chevalley-Eilenberg complex U(g) (x) Lambda(g) with its differential, which
this module verifies to be exactly acyclic weight by weight.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .linalg import Matrix
from .filtvect import FiltObject, FiltMorphism
from .complexes import Complex, reduced_cohomology
from .graded import GradedBasisAlgebra, add_elements, scale_element


def _merge(dst, key, coeff):
    if coeff == 0:
        return
    cur = dst.get(key)
    if cur is None:
        dst[key] = coeff
    else:
        cur += coeff
        if cur == 0:
            del dst[key]
        else:
            dst[key] = cur


class LieAxiomReport:
    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return f"LieAxiomReport(ok={self.ok}, violations={len(self.violations)})"


class DGLie:
    """A dg-Lie algebra on an explicit graded basis.

    ``brackets`` maps index pairs (i, j) to {k: c} dictionaries; missing
    reversed pairs are filled in through graded antisymmetry.  Structure
    constants must be additive in degree and weight (that much is enforced
    structurally); the Lie axioms themselves are checked at construction
    unless ``check=False`` defers them, which the negative-control fixtures
    rely on.
    """

    def __init__(self, names, degrees, weights, brackets, differential=None, check=True):
        self.names = tuple(str(n) for n in names)
        self.degrees = tuple(int(d) for d in degrees)
        self.weights = tuple(int(w) for w in weights)
        self.dim = len(self.names)
        if not (len(self.degrees) == len(self.weights) == self.dim):
            raise ValueError("names, degrees and weights must have equal length")
        table = {}
        for (i, j), elt in brackets.items():
            elt = {int(k): Fraction(c) for k, c in elt.items() if Fraction(c) != 0}
            if elt:
                table[(int(i), int(j))] = elt
        for (i, j), elt in list(table.items()):
            if (j, i) not in table:
                # antisymmetry: [y, x] = -(-1)^{pq} [x, y]
                s = Fraction(-1) if (self.degrees[i] * self.degrees[j]) % 2 == 0 else Fraction(1)
                table[(j, i)] = {k: s * c for k, c in elt.items()}
        self.brackets = table
        for (i, j), elt in table.items():
            for k, c in elt.items():
                if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    raise ValueError(f"bracket ({i},{j})->{k} is not degree additive")
                if self.weights[k] != self.weights[i] + self.weights[j]:
                    raise ValueError(f"bracket ({i},{j})->{k} is not weight additive")
        diff = {}
        for i, elt in (differential or {}).items():
            elt = {int(j): Fraction(c) for j, c in elt.items() if Fraction(c) != 0}
            for j in elt:
                if self.degrees[j] != self.degrees[int(i)] + 1:
                    raise ValueError(f"differential on generator {i} is not degree +1")
                if self.weights[j] != self.weights[int(i)]:
                    raise ValueError(f"differential on generator {i} changes the weight")
            if elt:
                diff[int(i)] = elt
        self.differential = diff
        if check:
            report = check_lie_axioms(self)
            if not report.ok:
                raise ValueError("Lie axioms fail: " + "; ".join(report.violations[:3]))

    def bracket(self, i: int, j: int) -> dict:
        return dict(self.brackets.get((i, j), {}))

    def bracket_elements(self, a: dict, b: dict) -> dict:
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self.brackets.get((i, j), {}).items():
                    _merge(out, k, ca * cb * c)
        return out

    def d_element(self, a: dict) -> dict:
        out = {}
        for i, c in a.items():
            for j, cj in self.differential.get(i, {}).items():
                _merge(out, j, c * cj)
        return out

    def underlying_complex(self) -> Complex:
        """The underlying cochain complex, with auxiliary weights as filtration."""
        by_degree = {}
        for i, d in enumerate(self.degrees):
            by_degree.setdefault(d, []).append(i)
        objs = {d: FiltObject(len(ix), tuple(self.weights[i] for i in ix))
                for d, ix in by_degree.items()}
        pos = {}
        for d, ix in by_degree.items():
            for p, i in enumerate(ix):
                pos[i] = (d, p)
        diffs = {}
        for d in sorted(by_degree):
            if d + 1 not in by_degree:
                continue
            rows = len(by_degree[d + 1])
            cols = len(by_degree[d])
            ents = [[Fraction(0)] * cols for _ in range(rows)]
            for cj, i in enumerate(by_degree[d]):
                for j, c in self.differential.get(i, {}).items():
                    ents[pos[j][1]][cj] = c
            m = Matrix(rows, cols, ents)
            if not m.is_zero():
                diffs[d] = FiltMorphism(objs[d], objs[d + 1], m)
        return Complex(objs, diffs)

    def is_concentrated_in_degree_zero(self) -> bool:
        return all(d == 0 for d in self.degrees)


def check_lie_axioms(g: DGLie, max_violations: int = 20) -> LieAxiomReport:
    """Check antisymmetry, Jacobi and Leibniz on every basis pair and triple."""
    bad = []

    def note(msg):
        if len(bad) < max_violations:
            bad.append(msg)

    deg = g.degrees
    for i in range(g.dim):
        for j in range(g.dim):
            sign = Fraction(-1) if (deg[i] * deg[j]) % 2 else Fraction(1)
            total = dict(g.bracket(i, j))
            for k, c in g.bracket(j, i).items():
                _merge(total, k, sign * c)
            if total:
                note(f"antisymmetry fails on pair ({g.names[i]}, {g.names[j]})")
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                p, q, r = deg[i], deg[j], deg[k]
                total = {}
                for t, c in g.bracket_elements({i: Fraction(1)}, g.bracket(j, k)).items():
                    _merge(total, t, (Fraction(-1) if (p * r) % 2 else Fraction(1)) * c)
                for t, c in g.bracket_elements({j: Fraction(1)}, g.bracket(k, i)).items():
                    _merge(total, t, (Fraction(-1) if (p * q) % 2 else Fraction(1)) * c)
                for t, c in g.bracket_elements({k: Fraction(1)}, g.bracket(i, j)).items():
                    _merge(total, t, (Fraction(-1) if (q * r) % 2 else Fraction(1)) * c)
                if total:
                    note(f"Jacobi fails on triple ({g.names[i]}, {g.names[j]}, {g.names[k]})")
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = g.d_element(g.bracket(i, j))
            rhs = g.bracket_elements(g.d_element({i: Fraction(1)}), {j: Fraction(1)})
            sign = Fraction(-1) if deg[i] % 2 else Fraction(1)
            for k, c in g.bracket_elements({i: Fraction(1)}, g.d_element({j: Fraction(1)})).items():
                _merge(rhs, k, sign * c)
            diffr = dict(lhs)
            for k, c in rhs.items():
                _merge(diffr, k, -c)
            if diffr:
                note(f"Leibniz fails on pair ({g.names[i]}, {g.names[j]})")
    return LieAxiomReport(bad)


def cone_lie(g: DGLie) -> DGLie:
    """The cone g (+) g[1], a dg-Lie algebra with contractible underlying complex."""
    n = g.dim
    names = list(g.names) + [f"e{name}" for name in g.names]
    degrees = list(g.degrees) + [d - 1 for d in g.degrees]
    weights = list(g.weights) + list(g.weights)
    brackets = {}
    for (i, j), elt in g.brackets.items():
        brackets[(i, j)] = dict(elt)
        # [ey, x'] = e[y, x']
        brackets[(i + n, j)] = {k + n: c for k, c in elt.items()}
        # [x, ey'] = (-1)^{|x|} e[x, y']
        sign = Fraction(-1) if g.degrees[i] % 2 else Fraction(1)
        brackets[(i, j + n)] = {k + n: sign * c for k, c in elt.items()}
    differential = {}
    for i in range(n):
        elt = {i: Fraction(1)}
        for j, c in g.differential.get(i, {}).items():
            _merge(elt, j + n, -c)
        differential[i + n] = elt
    for i, de in g.differential.items():
        differential[i] = dict(de)
    return DGLie(names, degrees, weights, brackets, differential, check=True)


# -- universal enveloping algebra ------------------------------------------


class UEATruncation:
    """Word-length truncation of U(g) in PBW normal-form coordinates.

    Normal forms are weakly increasing words with no repeated odd letter.
    Rewriting never lengthens a word, so the product of two stored words is
    complete whenever their combined length is within the bound; otherwise
    the part of the result beyond the bound is dropped and flagged.
    """

    def __init__(self, lie: DGLie, bound: int):
        self.lie = lie
        self.bound = int(bound)
        self._nf_cache: dict = {}
        self.basis = tuple(self._normal_words(self.bound))
        self.basis_index = {w: i for i, w in enumerate(self.basis)}

    def _normal_words(self, bound):
        yield ()
        frontier = [()]
        for _ in range(bound):
            new = []
            for w in frontier:
                lo = w[-1] if w else 0
                for gidx in range(lo, self.lie.dim):
                    if w and gidx == w[-1] and self.lie.degrees[gidx] % 2:
                        continue
                    new.append(w + (gidx,))
            for w in new:
                yield w
            frontier = new

    def is_normal(self, word) -> bool:
        for a, b in zip(word, word[1:]):
            if a > b:
                return False
            if a == b and self.lie.degrees[a] % 2:
                return False
        return True

    def _bad_positions(self, word):
        out = []
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a > b or (a == b and self.lie.degrees[a] % 2):
                out.append(k)
        return out

    def normal_form(self, word, strategy: str = "leftmost") -> dict:
        """Rewrite a word into normal-form coordinates.

        ``strategy`` picks which out-of-order pair rewrites first; any
        strategy must give the same answer exactly when the Lie axioms hold,
        which is what the confluence part of the PBW check exercises.
        """
        word = tuple(word)
        key = (word, strategy)
        cached = self._nf_cache.get(key)
        if cached is not None:
            return dict(cached)
        bad = self._bad_positions(word)
        if not bad:
            out = {word: Fraction(1)}
            self._nf_cache[key] = out
            return dict(out)
        k = bad[0] if strategy == "leftmost" else bad[-1]
        a, b = word[k], word[k + 1]
        out: dict = {}
        if a == b:
            # odd square: x x = [x, x] / 2
            for m, c in self.lie.bracket(a, a).items():
                sub = self.normal_form(word[:k] + (m,) + word[k + 2:], strategy)
                out = add_elements(out, scale_element(sub, c / 2))
        else:
            sign = Fraction(-1) if (self.lie.degrees[a] * self.lie.degrees[b]) % 2 else Fraction(1)
            swapped = self.normal_form(word[:k] + (b, a) + word[k + 2:], strategy)
            out = add_elements(out, scale_element(swapped, sign))
            for m, c in self.lie.bracket(a, b).items():
                sub = self.normal_form(word[:k] + (m,) + word[k + 2:], strategy)
                out = add_elements(out, scale_element(sub, c))
        self._nf_cache[key] = out
        return dict(out)

    def mul_words(self, u, v):
        """Product of two normal words; returns (element, truncated_flag)."""
        elt = self.normal_form(tuple(u) + tuple(v))
        if len(u) + len(v) <= self.bound:
            return elt, False
        kept = {w: c for w, c in elt.items() if len(w) <= self.bound}
        return kept, len(kept) != len(elt)

    def d_word(self, word) -> dict:
        """The differential extended to U(g) as a derivation."""
        out: dict = {}
        sign = Fraction(1)
        for i, gidx in enumerate(word):
            dg = self.lie.differential.get(gidx)
            if dg:
                for j, c in dg.items():
                    piece = self.normal_form(word[:i] + (j,) + word[i + 1:])
                    out = add_elements(out, scale_element(piece, sign * c))
            if self.lie.degrees[gidx] % 2:
                sign = -sign
        return out

    def word_degree(self, word) -> int:
        return sum(self.lie.degrees[i] for i in word)

    def word_weight(self, word) -> int:
        return sum(self.lie.weights[i] for i in word)

    def graded_dim(self, n: int) -> int:
        """dim gr_n: the number of normal words of length exactly n."""
        return sum(1 for w in self.basis if len(w) == n)


def uea(g: DGLie, bound: int) -> UEATruncation:
    return UEATruncation(g, bound)


def sym_graded_dim(g: DGLie, n: int) -> int:
    """dim Sym^n(g) by direct counting: odd letters at most once each.

    Independent of the rewriting machinery; used as the oracle side of the
    PBW dimension identity.
    """
    odd = sum(1 for d in g.degrees if d % 2)
    even = g.dim - odd
    total = 0
    for k in range(0, min(odd, n) + 1):
        rest = n - k
        total += comb(odd, k) * (comb(even + rest - 1, rest) if even else (1 if rest == 0 else 0))
    return total


class PBWReport:
    def __init__(self, confluent, per_length, violations):
        self.confluent = confluent
        self.per_length = per_length          # n -> (dim gr_n, dim Sym^n)
        self.violations = violations

    @property
    def ok(self):
        return self.confluent and not self.violations

    def __repr__(self):
        return f"PBWReport(ok={self.ok})"


def pbw_check(g: DGLie, bound: int) -> PBWReport:
    """Compare dim gr_n U(g) against dim Sym^n(g) for n up to the bound.

    Also certifies the rewriting is locally confluent by reducing every
    length-two and length-three word with both scan strategies and insisting
    on exact agreement; without that the normal-form count would not be a
    dimension.
    """
    u = uea(g, bound)
    violations = []
    confluent = True
    short = [(i, j) for i in range(g.dim) for j in range(g.dim)]
    for w in short:
        if u.normal_form(w, "leftmost") != u.normal_form(w, "rightmost"):
            confluent = False
            violations.append(f"rewriting not confluent on word {w}")
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                w = (i, j, k)
                if u.normal_form(w, "leftmost") != u.normal_form(w, "rightmost"):
                    confluent = False
                    violations.append(f"rewriting not confluent on word {w}")
    per_length = {}
    for n in range(bound + 1):
        got = u.graded_dim(n)
        want = sym_graded_dim(g, n)
        per_length[n] = (got, want)
        if got != want:
            violations.append(f"dim gr_{n} = {got} but dim Sym^{n} = {want}")
    return PBWReport(confluent, per_length, violations)


# -- Chevalley-Eilenberg resolution ----------------------------------------


class CEResolution:
    """The complex U(g) (x) Lambda(g) sliced by auxiliary weight.

    ``slices`` maps each weight w up to the bound to the finite subcomplex
    of that weight; ``labels`` records, per weight and degree, the normal
    words behind the basis vectors.  The augmentation onto the base ring is
    the coefficient of the empty word in weight zero.
    """

    def __init__(self, lie, weight_bound, slices, labels, cone_uea):
        self.lie = lie
        self.weight_bound = weight_bound
        self.slices = slices
        self.labels = labels
        self.cone_uea = cone_uea

    def slice_complex(self, w: int) -> Complex:
        return self.slices[w]


def ce_resolution(g: DGLie, weight_bound: int) -> CEResolution:
    """Resolve the base ring by U(g) (x) Lambda(g) using the cone of g.

    Requires g concentrated in degree zero with zero differential and
    strictly positive weights (weight additivity of the bracket is already
    structural).  The enveloping algebra of the cone is formed with the
    plain generators ordered before the shifted ones, so normal words
    factor as (enveloping word) * (strictly decreasing exterior part), and
    the derivation differential read in those coordinates is the
    Chevalley-Eilenberg differential.  Everything is sliced by total
    weight, each slice being a finite complex; d squaring to zero is
    rechecked on every stored basis element.
    """
    if not g.is_concentrated_in_degree_zero():
        raise ValueError("resolution needs a Lie algebra concentrated in degree 0")
    if g.differential:
        raise ValueError("resolution needs a zero internal differential")
    if any(w <= 0 for w in g.weights):
        raise ValueError("resolution needs strictly positive auxiliary weights")
    cone = cone_lie(g)
    u = UEATruncation(cone, weight_bound)  # weights >= 1, so length <= weight
    words = [w for w in u.basis if u.word_weight(w) <= weight_bound]
    slices = {}
    labels = {}
    for wt in range(weight_bound + 1):
        by_degree = {}
        for word in words:
            if u.word_weight(word) != wt:
                continue
            by_degree.setdefault(u.word_degree(word), []).append(word)
        objs = {}
        pos = {}
        for d, ws in sorted(by_degree.items()):
            ws.sort()
            objs[d] = FiltObject(len(ws), tuple(wt for _ in ws))
            for p, word in enumerate(ws):
                pos[word] = (d, p)
        diffs = {}
        for d, ws in sorted(by_degree.items()):
            if d + 1 not in by_degree:
                continue
            rows = len(by_degree[d + 1])
            ents = [[Fraction(0)] * len(ws) for _ in range(rows)]
            for cj, word in enumerate(sorted(ws)):
                img = u.d_word(word)
                for tw, c in img.items():
                    td, tp = pos[tw]
                    if td != d + 1:
                        raise RuntimeError("differential is not degree +1 on normal words")
                    ents[tp][cj] = c
            m = Matrix(rows, len(ws), ents)
            if not m.is_zero():
                diffs[d] = FiltMorphism(objs[d], objs[d + 1], m)
        slices[wt] = Complex(objs, diffs)
        labels[wt] = {d: sorted(ws) for d, ws in by_degree.items()}
    for word in words:
        dd = {}
        for tw, c in u.d_word(word).items():
            for ttw, cc in u.d_word(tw).items():
                _merge(dd, ttw, c * cc)
        if dd:
            raise RuntimeError(f"d^2 is nonzero on the stored word {word}")
    return CEResolution(g, weight_bound, slices, labels, u)


class CEAcyclicityReport:
    def __init__(self, per_weight, violations):
        self.per_weight = per_weight
        self.violations = violations

    @property
    def ok(self):
        return not self.violations


def verify_ce_acyclicity(res: CEResolution, weight_bound: int | None = None) -> CEAcyclicityReport:
    """Exactness of each positive-weight slice; the base ring in weight zero."""
    if weight_bound is None:
        weight_bound = res.weight_bound
    if weight_bound > res.weight_bound:
        raise ValueError("resolution was not built out to that weight")
    per_weight = {}
    violations = []
    for w in range(weight_bound + 1):
        cx = res.slice_complex(w)
        degrees = sorted(set(cx.support) | {0})
        dims = {n: reduced_cohomology(cx, n).dim for n in degrees}
        per_weight[w] = dims
        for n, d in dims.items():
            expected = 1 if (w == 0 and n == 0) else 0
            if d != expected:
                violations.append(f"weight {w}: H^{n} has dimension {d}, expected {expected}")
    return CEAcyclicityReport(per_weight, violations)


# -- derived quotients -------------------------------------------------------


def derivation_action_from_variable_images(a: GradedBasisAlgebra, images):
    """Extend generator images to derivations of a polynomial algebra.

    ``images[i][v]`` is the element of ``a`` that the i-th Lie generator
    sends the v-th variable to.  Each action matrix column is the image of
    one basis word under the Leibniz expansion; words pushed past the
    truncation bound are dropped.
    """
    nvars = len(a.generators)
    out = []
    for per_gen in images:
        if len(per_gen) != nvars:
            raise ValueError("need one image per variable")
        cols = []
        for word in a.basis:
            img: dict = {}
            for pos, v in enumerate(word):
                prefix = {word[:pos]: Fraction(1)}
                suffix = {word[pos + 1:]: Fraction(1)}
                term = a.mul(a.mul(prefix, per_gen[v]), suffix)
                img = add_elements(img, term)
            cols.append(img)
        out.append(cols)
    return out


def _action_shifts(a: GradedBasisAlgebra, action) -> set[int]:
    shifts = set()
    for cols in action:
        for j, img in enumerate(cols):
            src_len = len(a.basis[j])
            for w in img:
                shifts.add(len(w) - src_len)
    return shifts


class DerivedQuotientReport:
    """Cohomology of the Chevalley-Eilenberg cochain complex of an action.

    ``per_piece`` maps cohomological degree -> {polynomial degree: dim} for
    the pieces where the truncated complex is complete; ``valid_up_to``
    records that cutoff per cohomological degree.
    """

    def __init__(self, degrees, per_piece, valid_up_to, total_dims, homogeneous_shift):
        self.degrees = degrees
        self.per_piece = per_piece
        self.valid_up_to = valid_up_to
        self.total_dims = total_dims
        self.homogeneous_shift = homogeneous_shift


def derived_quotient(g: DGLie, a: GradedBasisAlgebra, action) -> DerivedQuotientReport:
    """Cohomology of the invariants-style complex Lambda(g') (x) A.

    ``action`` gives, per Lie generator, the image of every basis word of
    ``a`` as an element (see derivation_action_from_variable_images).  The
    action is checked to consist of derivations and to respect the bracket;
    either failure raises with the witnessing generator and word.  The
    differential is the Lie algebra cochain differential with coefficients
    in ``a``, and cohomology is reported per polynomial degree piece over
    the range untouched by truncation.
    """
    if not g.is_concentrated_in_degree_zero() or g.differential:
        raise ValueError("derived quotients need g in degree 0 with zero differential")
    if len(action) != g.dim:
        raise ValueError("need one action column set per Lie generator")
    basis = a.basis
    index = a.basis_index

    def act(i: int, elt: dict) -> dict:
        out: dict = {}
        for w, c in elt.items():
            out = add_elements(out, scale_element(action[i][index[w]], c))
        return out

    # derivation check within the truncation bound
    for i in range(g.dim):
        for u in basis:
            for v in basis:
                if len(u) + len(v) > a.truncation:
                    continue
                uv = a.mul_words(u, v)
                # cap: only check when every term of the Leibniz expansion
                # stays below the bound under the action's length shifts
                if any(len(w) + s > a.truncation
                       for w in list(uv) + [u + v]
                       for s in _action_shifts(a, action)):
                    continue
                lhs = act(i, uv)
                rhs = add_elements(a.mul(act(i, {u: Fraction(1)}), {v: Fraction(1)}),
                                   a.mul({u: Fraction(1)}, act(i, {v: Fraction(1)})))
                if lhs != rhs:
                    raise ValueError(
                        f"action of {g.names[i]} is not a derivation on "
                        f"({a.word_name(u)}, {a.word_name(v)})")
    # representation check
    for i in range(g.dim):
        for j in range(g.dim):
            br = g.bracket(i, j)
            for w in basis:
                shifts = _action_shifts(a, action)
                if any(len(w) + s1 + s2 > a.truncation for s1 in shifts for s2 in shifts):
                    continue
                lhs: dict = {}
                for k, c in br.items():
                    lhs = add_elements(lhs, scale_element(act(k, {w: Fraction(1)}), c))
                rhs = act(i, act(j, {w: Fraction(1)}))
                for ww, c in act(j, act(i, {w: Fraction(1)})).items():
                    _merge(rhs, ww, -c)
                if lhs != rhs:
                    raise ValueError(
                        f"action does not represent the bracket on "
                        f"({g.names[i]}, {g.names[j]}) applied to {a.word_name(w)}")

    subsets = {k: list(combinations(range(g.dim), k)) for k in range(g.dim + 1)}
    layout = {}
    for k, subs in subsets.items():
        layout[k] = [(s, w) for s in subs for w in basis]
    positions = {k: {sw: p for p, sw in enumerate(layout[k])} for k in layout}

    def differential_matrix(k: int) -> Matrix:
        rows = len(layout[k + 1])
        cols = len(layout[k])
        ents = [[Fraction(0)] * cols for _ in range(rows)]
        for ci, (s, w) in enumerate(layout[k]):
            sset = set(s)
            for t in subsets[k + 1]:
                # action terms: remove one element of t and act with it
                for pos_i, gi in enumerate(t):
                    rest = tuple(x for x in t if x != gi)
                    if rest != s:
                        continue
                    sign = Fraction(-1) if pos_i % 2 else Fraction(1)
                    for ww, c in act(gi, {w: Fraction(1)}).items():
                        ents[positions[k + 1][(t, ww)]][ci] += sign * c
                # bracket terms
                for pi in range(len(t)):
                    for pj in range(pi + 1, len(t)):
                        rest = tuple(x for idx, x in enumerate(t) if idx not in (pi, pj))
                        for m, c in g.bracket(t[pi], t[pj]).items():
                            if m in rest:
                                continue
                            merged = tuple(sorted(rest + (m,)))
                            if merged != s:
                                continue
                            swaps = sum(1 for x in rest if x < m)
                            sgn = Fraction(-1) if (pi + pj + swaps) % 2 else Fraction(1)
                            ents[positions[k + 1][(t, w)]][ci] += sgn * c
        return Matrix(rows, cols, ents)

    mats = {k: differential_matrix(k) for k in range(g.dim)}
    for k in range(g.dim - 1):
        if not (mats[k + 1] @ mats[k]).is_zero():
            raise RuntimeError(f"cochain differential fails d^2 = 0 at level {k}")

    shifts = _action_shifts(a, action) or {0}
    smin, smax = min(min(shifts), 0), max(max(shifts), 0)
    homogeneous = len(shifts) <= 1
    objs = {k: FiltObject(len(layout[k]), tuple(0 for _ in layout[k])) for k in range(g.dim + 1)}
    cx = Complex(objs, {k: FiltMorphism(objs[k], objs[k + 1], mats[k])
                        for k in range(g.dim) if not mats[k].is_zero()})
    total = {k: reduced_cohomology(cx, k).dim for k in range(g.dim + 1)}

    per_piece: dict[int, dict[int, int]] = {}
    valid_up_to: dict[int, int] = {}
    if homogeneous:
        shift = next(iter(shifts)) if shifts else 0
        for k in range(g.dim + 1):
            cutoff = a.truncation - (smax if k == 0 else max(smax, -smin))
            valid_up_to[k] = cutoff
            piece_dims = {}
            for deg in range(cutoff + 1):
                def slice_indices(level: int, adeg: int):
                    return [p for p, (s, w) in enumerate(layout[level]) if len(w) == adeg]
                cur = slice_indices(k, deg)
                if not cur:
                    piece_dims[deg] = 0
                    continue
                out_m = (mats[k].select_columns(cur)
                         if k < g.dim else Matrix.zero(0, len(cur)))
                if k < g.dim:
                    tgt = slice_indices(k + 1, deg + shift)
                    out_m = out_m.select_rows(tgt)
                from .linalg import rank as _rank
                kerdim = len(cur) - _rank(out_m)
                imdim = 0
                if k > 0:
                    src = slice_indices(k - 1, deg - shift)
                    if src:
                        inc = mats[k - 1].select_columns(src).select_rows(cur)
                        imdim = _rank(inc)
                piece_dims[deg] = kerdim - imdim
            per_piece[k] = piece_dims
    return DerivedQuotientReport(list(range(g.dim + 1)), per_piece, valid_up_to,
                                 total, homogeneous)


# -- a small library of standard examples -----------------------------------


def abelian_lie(n: int, weights=None) -> DGLie:
    weights = weights or [1] * n
    return DGLie([f"a{i}" for i in range(n)], [0] * n, weights, {})


def sl2() -> DGLie:
    """Basis (e, f, h) with [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    brackets = {
        (2, 0): {0: Fraction(2)},
        (2, 1): {1: Fraction(-2)},
        (0, 1): {2: Fraction(1)},
    }
    return DGLie(["e", "f", "h"], [0, 0, 0], [0, 0, 0], brackets)


def heisenberg3(weights=(1, 1, 2)) -> DGLie:
    """Basis (x, y, z) with [x, y] = z; weights default to (1, 1, 2)."""
    return DGLie(["x", "y", "z"], [0, 0, 0], list(weights), {(0, 1): {2: Fraction(1)}})


def solvable2() -> DGLie:
    """Basis (x, y) with [x, y] = y."""
    return DGLie(["x", "y"], [0, 0], [0, 0], {(0, 1): {1: Fraction(1)}})


def odd_line() -> DGLie:
    """One odd generator t in degree -1 with [t, t] = z in degree -2."""
    return DGLie(["t", "z"], [-1, -2], [0, 0], {(0, 0): {1: Fraction(1)}})
