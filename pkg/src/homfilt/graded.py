"""Truncated free graded algebras with Koszul signs.

Three flavours are built from a bounded complex of filtered objects: the
tensor algebra on its basis (noncommutative words), the free graded
commutative algebra (sign rule x y = (-1)^{|x||y|} y x, so odd generators
square to zero over the rationals), and the exterior algebra, realised as
the free graded commutative algebra on the shifted generators so that a
word of k degree-zero generators sits in cohomological degree -k.

Everything is truncated by word length.  All constructions are graded by
(word length, cohomological degree, weight) and multiplication only ever
lengthens words, so truncation is exact per graded piece rather than an
approximation: any identity checked below the bound is an identity of the
untruncated algebra.

Elements are dictionaries mapping normal-form words (tuples of generator
indices) to rational coefficients.  The differential of the underlying
complex extends as a derivation with the sign d(xy) = (dx)y + (-1)^{|x|}
x(dy); that sign is forced by d squaring to zero on products.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import Complex


def _merge(dst: dict, word, coeff):
    if coeff == 0:
        return
    cur = dst.get(word)
    if cur is None:
        dst[word] = coeff
    else:
        cur += coeff
        if cur == 0:
            del dst[word]
        else:
            dst[word] = cur


def scale_element(elt: dict, c) -> dict:
    c = Fraction(c)
    if c == 0:
        return {}
    return {w: c * x for w, x in elt.items()}


def add_elements(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        _merge(out, w, c)
    return out


class GradedBasisAlgebra:
    """A free graded algebra presented by generators and normal-form words.

    ``generators`` is a tuple of (name, cohomological degree, weight).  The
    unit is the empty word.  ``differential`` records d on each generator as
    an element; d extends to all words as a derivation.  Products of words
    whose combined length exceeds the truncation bound are dropped, which is
    exact stratum by stratum because multiplication is length-additive.
    """

    def __init__(self, generators, truncation: int, commutative: bool,
                 differential: dict | None = None):
        self.generators = tuple((str(n), int(d), int(w)) for n, d, w in generators)
        self.truncation = int(truncation)
        if self.truncation < 0:
            raise ValueError("truncation bound must be nonnegative")
        self.commutative = commutative
        self.differential = {int(k): dict(v) for k, v in (differential or {}).items()}
        self.basis = tuple(self._enumerate_basis())
        self.basis_index = {w: i for i, w in enumerate(self.basis)}
        self._mul_cache: dict = {}
        self._overrides: dict = {}

    # -- structure ---------------------------------------------------------

    def gen_degree(self, i: int) -> int:
        return self.generators[i][1]

    def gen_weight(self, i: int) -> int:
        return self.generators[i][2]

    def word_degree(self, word) -> int:
        return sum(self.gen_degree(i) for i in word)

    def word_weight(self, word) -> int:
        return sum(self.gen_weight(i) for i in word)

    def word_name(self, word) -> str:
        if not word:
            return "1"
        return "*".join(self.generators[i][0] for i in word)

    def _enumerate_basis(self):
        yield ()
        frontier = [()]
        for _ in range(self.truncation):
            new = []
            for w in frontier:
                start = w[-1] if (self.commutative and w) else 0
                for g in range(start if self.commutative else 0, len(self.generators)):
                    if self.commutative and w and g < w[-1]:
                        continue
                    if (self.commutative and w and g == w[-1]
                            and self.gen_degree(g) % 2 != 0):
                        continue
                    new.append(w + (g,))
            for w in new:
                yield w
            frontier = new

    # -- multiplication ----------------------------------------------------

    def normalize_word(self, word) -> tuple[tuple, Fraction]:
        """Sort a raw word into normal form, returning (word, sign).

        For the tensor algebra the word is already normal.  For the graded
        commutative case an insertion sort accumulates the Koszul exchange
        sign; a repeated odd generator collapses the word to zero, signalled
        by a zero sign.
        """
        if not self.commutative:
            return tuple(word), Fraction(1)
        word = list(word)
        sign = 1
        for i in range(1, len(word)):
            j = i
            while j > 0 and word[j - 1] > word[j]:
                if (self.gen_degree(word[j - 1]) % 2) and (self.gen_degree(word[j]) % 2):
                    sign = -sign
                word[j - 1], word[j] = word[j], word[j - 1]
                j -= 1
        for a, b in zip(word, word[1:]):
            if a == b and self.gen_degree(a) % 2 != 0:
                return tuple(word), Fraction(0)
        return tuple(word), Fraction(sign)

    def mul_words(self, u, v) -> dict:
        """Product of two normal-form words as an element."""
        if (u, v) in self._overrides:
            return dict(self._overrides[(u, v)])
        key = (u, v)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return dict(cached)
        if len(u) + len(v) > self.truncation:
            out: dict = {}
        else:
            word, sign = self.normalize_word(u + v)
            out = {} if sign == 0 else {word: sign}
        self._mul_cache[key] = out
        return dict(out)

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for u, cu in a.items():
            for v, cv in b.items():
                for w, c in self.mul_words(u, v).items():
                    _merge(out, w, cu * cv * c)
        return out

    def unit_element(self) -> dict:
        return {(): Fraction(1)}

    # -- differential ------------------------------------------------------

    def d_word(self, word) -> dict:
        out: dict = {}
        sign = 1
        for i, g in enumerate(word):
            dg = self.differential.get(g)
            if dg:
                prefix = {word[:i]: Fraction(sign)}
                rest = {word[i + 1:]: Fraction(1)}
                piece = self.mul(self.mul(prefix, dg), rest)
                out = add_elements(out, piece)
            if self.gen_degree(g) % 2:
                sign = -sign
        return out

    def d(self, elt: dict) -> dict:
        out: dict = {}
        for w, c in elt.items():
            out = add_elements(out, scale_element(self.d_word(w), c))
        return out

    # -- views -------------------------------------------------------------

    def dims_by_length(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.basis:
            out[len(w)] = out.get(len(w), 0) + 1
        return out

    def dims_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.basis:
            d = self.word_degree(w)
            out[d] = out.get(d, 0) + 1
        return out

    def dims_by_length_and_degree(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for w in self.basis:
            key = (len(w), self.word_degree(w))
            out[key] = out.get(key, 0) + 1
        return out

    def with_corrupted_product(self, u, v, element: dict) -> "GradedBasisAlgebra":
        """A copy whose stored product of one basis pair is overridden.

        Negative control hook: axiom checking consults the stored table, so
        a corrupted entry must be caught and located by the checker.
        """
        clone = GradedBasisAlgebra(self.generators, self.truncation,
                                   self.commutative, self.differential)
        clone._overrides = dict(self._overrides)
        clone._overrides[(tuple(u), tuple(v))] = dict(element)
        return clone


def _generators_from_complex(m: Complex, degree_shift: int = 0, prefix: str = "x"):
    gens = []
    columns = []
    for n in m.support:
        v = m.obj(n)
        for k in range(v.dim):
            gens.append((f"{prefix}{n}_{k}" if n != 0 or degree_shift else f"{prefix}{k}",
                         n + degree_shift, v.weights[k]))
            columns.append((n, k))
    return gens, columns


def _differential_from_complex(m: Complex, columns, d_sign: int = 1) -> dict:
    index_of = {nk: i for i, nk in enumerate(columns)}
    diff = {}
    for i, (n, k) in enumerate(columns):
        dmat = m.diff(n).matrix
        elt = {}
        for row in range(dmat.rows):
            c = dmat.entries[row][k]
            if c != 0:
                elt[(index_of[(n + 1, row)],)] = Fraction(d_sign) * c
        if elt:
            diff[i] = elt
    return diff


def tensor_algebra(m: Complex, truncation: int) -> GradedBasisAlgebra:
    """Words of length up to the bound in a basis of m; d is a derivation."""
    gens, columns = _generators_from_complex(m)
    diff = _differential_from_complex(m, columns)
    return GradedBasisAlgebra(gens, truncation, commutative=False, differential=diff)


def symmetric_algebra(m: Complex, truncation: int) -> GradedBasisAlgebra:
    """Free graded commutative algebra on a basis of m."""
    gens, columns = _generators_from_complex(m)
    diff = _differential_from_complex(m, columns)
    return GradedBasisAlgebra(gens, truncation, commutative=True, differential=diff)


def exterior_algebra(m: Complex, truncation: int) -> GradedBasisAlgebra:
    """Exterior algebra, graded so k degree-zero generators sit in degree -k.

    Realised as the free graded commutative algebra on the shift of m: each
    generator drops one cohomological degree (so degree-zero inputs become
    odd and strictly sorted words with sign normalization result) and the
    inherited differential changes sign with the shift.
    """
    gens, columns = _generators_from_complex(m, degree_shift=-1, prefix="e")
    diff = _differential_from_complex(m, columns, d_sign=-1)
    return GradedBasisAlgebra(gens, truncation, commutative=True, differential=diff)


class AxiomReport:
    """Outcome of a dg-algebra axiom check; empty violations means pass."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        return f"AxiomReport(ok={self.ok}, violations={len(self.violations)})"


def check_dga_axioms(a: GradedBasisAlgebra, max_violations: int = 20) -> AxiomReport:
    """Verify unitality, associativity, commutativity, d^2 = 0 and Leibniz.

    All checks run over stored basis words whose combined length stays
    within the truncation bound, so every reported identity is exact.
    """
    bad: list[str] = []

    def note(msg):
        if len(bad) < max_violations:
            bad.append(msg)

    one = a.unit_element()
    for w in a.basis:
        elt = {w: Fraction(1)}
        if a.mul(one, elt) != elt or a.mul(elt, one) != elt:
            note(f"unit fails on {a.word_name(w)}")
    for u in a.basis:
        if not u:
            continue
        for v in a.basis:
            if not v or len(u) + len(v) > a.truncation:
                continue
            uv = a.mul_words(u, v)
            if a.commutative:
                sign = Fraction(-1) if (a.word_degree(u) % 2 and a.word_degree(v) % 2) else Fraction(1)
                vu = scale_element(a.mul_words(v, u), sign)
                if uv != vu:
                    note(f"graded commutativity fails on ({a.word_name(u)}, {a.word_name(v)})")
            for t in a.basis:
                if not t or len(u) + len(v) + len(t) > a.truncation:
                    continue
                lhs = a.mul(uv, {t: Fraction(1)})
                rhs = a.mul({u: Fraction(1)}, a.mul_words(v, t))
                if lhs != rhs:
                    note(f"associativity fails on ({a.word_name(u)}, {a.word_name(v)}, {a.word_name(t)})")
    for w in a.basis:
        if a.d(a.d_word(w)):
            note(f"d^2 nonzero on {a.word_name(w)}")
    for u in a.basis:
        for v in a.basis:
            if len(u) + len(v) > a.truncation:
                continue
            lhs = a.d(a.mul_words(u, v))
            sign = Fraction(-1) if a.word_degree(u) % 2 else Fraction(1)
            rhs = add_elements(a.mul(a.d_word(u), {v: Fraction(1)}),
                               scale_element(a.mul({u: Fraction(1)}, a.d_word(v)), sign))
            if lhs != rhs:
                note(f"Leibniz fails on ({a.word_name(u)}, {a.word_name(v)})")
    return AxiomReport(bad)
