"""Structured text records for every object the command line accepts.

All records are JSON with rationals carried as exact "p/q" strings (integer
strings allowed on input); no decimal serialization exists anywhere, so
exactness survives the file format.  Serialization is deterministic and
every emitted record re-parses under the same grammar.

Polynomials additionally accept a plain text grammar: terms are a rational
coefficient followed by variable powers like ``3/2 x1^2 x2``, joined by
``+`` and ``-``.  The variables are x1..xn; the letters x, y, z, w are
shorthand for x1..x4.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .linalg import Matrix
from .filtvect import FiltObject, FiltMorphism
from .complexes import Complex, ChainMap
from .dglie import DGLie
from .koszul import PolySpec


def format_fraction(x: Fraction) -> str:
    return str(x)


def parse_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rational literals")
    if isinstance(value, (int, str, Fraction)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {value!r}: {exc}") from None
    raise ValueError(f"bad rational literal {value!r} (floats are not accepted)")


# -- filtered objects and morphisms -------------------------------------------


def filt_object_to_record(v: FiltObject) -> dict:
    return {"dim": v.dim, "weights": list(v.weights)}


def filt_object_from_record(rec) -> FiltObject:
    if not isinstance(rec, dict) or "dim" not in rec or "weights" not in rec:
        raise ValueError("filtered object record needs 'dim' and 'weights'")
    return FiltObject(int(rec["dim"]), [int(w) for w in rec["weights"]])


def matrix_to_record(m: Matrix) -> list:
    return [[format_fraction(x) for x in row] for row in m.entries]


def matrix_from_record(rec, rows: int, cols: int) -> Matrix:
    if not isinstance(rec, list):
        raise ValueError("matrix record must be a list of rows")
    ents = [[parse_fraction(x) for x in row] for row in rec]
    if len(ents) != rows or any(len(r) != cols for r in ents):
        raise ValueError(f"matrix record must be {rows}x{cols}")
    return Matrix(rows, cols, ents)


def filt_morphism_to_record(f: FiltMorphism) -> dict:
    return {
        "source": filt_object_to_record(f.source),
        "target": filt_object_to_record(f.target),
        "matrix": matrix_to_record(f.matrix),
    }


def filt_morphism_from_record(rec) -> FiltMorphism:
    for key in ("source", "target", "matrix"):
        if key not in rec:
            raise ValueError(f"morphism record is missing '{key}'")
    src = filt_object_from_record(rec["source"])
    tgt = filt_object_from_record(rec["target"])
    mat = matrix_from_record(rec["matrix"], tgt.dim, src.dim)
    return FiltMorphism(src, tgt, mat)


# -- complexes and chain maps --------------------------------------------------


def complex_to_record(x: Complex) -> dict:
    return {
        "objects": {str(n): filt_object_to_record(v) for n, v in sorted(x.objects.items())},
        "differentials": {str(n): matrix_to_record(d.matrix)
                          for n, d in sorted(x.differentials.items())},
    }


def complex_from_record(rec) -> Complex:
    if "objects" not in rec:
        raise ValueError("complex record is missing 'objects'")
    objs = {int(n): filt_object_from_record(v) for n, v in rec["objects"].items()}
    diffs = {}
    for n, mat in rec.get("differentials", {}).items():
        n = int(n)
        src = objs.get(n)
        tgt = objs.get(n + 1)
        if src is None or tgt is None:
            raise ValueError(f"differential at degree {n} has no objects on both ends")
        diffs[n] = FiltMorphism(src, tgt, matrix_from_record(mat, tgt.dim, src.dim))
    return Complex(objs, diffs)


def chain_map_to_record(f: ChainMap) -> dict:
    return {
        "source": complex_to_record(f.source),
        "target": complex_to_record(f.target),
        "components": {str(n): matrix_to_record(c.matrix)
                       for n, c in sorted(f.components.items())},
    }


def chain_map_from_record(rec) -> ChainMap:
    for key in ("source", "target"):
        if key not in rec:
            raise ValueError(f"chain map record is missing '{key}'")
    src = complex_from_record(rec["source"])
    tgt = complex_from_record(rec["target"])
    comps = {}
    for n, mat in rec.get("components", {}).items():
        n = int(n)
        comps[n] = FiltMorphism(src.obj(n), tgt.obj(n),
                                matrix_from_record(mat, tgt.obj(n).dim, src.obj(n).dim))
    return ChainMap(src, tgt, comps)


def lifting_square_to_record(left, right, top, bottom) -> dict:
    return {
        "left": chain_map_to_record(left),
        "right": chain_map_to_record(right),
        "top": chain_map_to_record(top),
        "bottom": chain_map_to_record(bottom),
    }


def lifting_square_from_record(rec):
    from .model import LiftingSquare
    for key in ("left", "right", "top", "bottom"):
        if key not in rec:
            raise ValueError(f"lifting square record is missing '{key}'")
    return LiftingSquare(
        left=chain_map_from_record(rec["left"]),
        right=chain_map_from_record(rec["right"]),
        top=chain_map_from_record(rec["top"]),
        bottom=chain_map_from_record(rec["bottom"]),
    )


# -- Lie algebras --------------------------------------------------------------


def lie_to_record(g: DGLie) -> dict:
    brackets = []
    for (i, j) in sorted(g.brackets):
        if i > j or (i == j and not g.brackets.get((i, j))):
            continue
        elt = g.brackets[(i, j)]
        coeffs = [format_fraction(elt.get(k, Fraction(0))) for k in range(g.dim)]
        brackets.append({"i": i, "j": j, "coeffs": coeffs})
    return {
        "dim": g.dim,
        "names": list(g.names),
        "degrees": list(g.degrees),
        "weights": list(g.weights),
        "brackets": brackets,
    }


def lie_from_record(rec, check: bool = True) -> DGLie:
    if "dim" not in rec:
        raise ValueError("lie record is missing 'dim'")
    dim = int(rec["dim"])
    degrees = [int(d) for d in rec.get("degrees", [0] * dim)]
    weights = [int(w) for w in rec.get("weights", [0] * dim)]
    names = [str(n) for n in rec.get("names", [f"g{i}" for i in range(dim)])]
    if len(degrees) != dim or len(weights) != dim or len(names) != dim:
        raise ValueError("lie record field lengths do not match 'dim'")
    brackets = {}
    for entry in rec.get("brackets", []):
        for key in ("i", "j", "coeffs"):
            if key not in entry:
                raise ValueError(f"bracket entry is missing '{key}'")
        i, j = int(entry["i"]), int(entry["j"])
        coeffs = [parse_fraction(c) for c in entry["coeffs"]]
        if len(coeffs) != dim:
            raise ValueError(f"bracket ({i},{j}) needs {dim} coefficients")
        elt = {k: c for k, c in enumerate(coeffs) if c != 0}
        if elt:
            brackets[(i, j)] = elt
    differential = {}
    for key, col in rec.get("differential", {}).items():
        differential[int(key)] = {int(k): parse_fraction(c) for k, c in col.items()}
    return DGLie(names, degrees, weights, brackets, differential, check=check)


# -- polynomials ---------------------------------------------------------------

_VAR_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}
_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|[a-zA-Z]\w*|\^)")


def parse_polynomial(text: str, nvars: int | None = None) -> PolySpec:
    """Parse the plain text polynomial grammar into a PolySpec."""
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize polynomial at ...{text[pos:pos + 12]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    terms = []
    i = 0
    max_var = 0

    def var_index(tok: str) -> int:
        if tok in _VAR_ALIASES:
            return _VAR_ALIASES[tok]
        m2 = re.fullmatch(r"x(\d+)", tok)
        if not m2:
            raise ValueError(f"unknown variable {tok!r} (use x1..xn or x, y, z, w)")
        idx = int(m2.group(1))
        if idx < 1:
            raise ValueError("variable indices start at 1")
        return idx

    while i < len(tokens):
        sign = Fraction(1)
        while tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
            if i >= len(tokens):
                raise ValueError("polynomial ends with a dangling sign")
        coeff = Fraction(1)
        powers: dict[int, int] = {}
        saw_something = False
        while i < len(tokens) and tokens[i] not in "+-":
            tok = tokens[i]
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                i += 1
                saw_something = True
                continue
            v = var_index(tok)
            i += 1
            exp = 1
            if i < len(tokens) and tokens[i] == "^":
                i += 1
                if i >= len(tokens) or not re.fullmatch(r"\d+", tokens[i]):
                    raise ValueError(f"exponent expected after '^' on variable x{v}")
                exp = int(tokens[i])
                i += 1
            powers[v] = powers.get(v, 0) + exp
            max_var = max(max_var, v)
            saw_something = True
        if not saw_something:
            raise ValueError("empty term in polynomial")
        terms.append((sign * coeff, dict(powers)))
    n = nvars if nvars is not None else max_var
    if max_var > n:
        raise ValueError(f"polynomial uses x{max_var} but only {n} variables are declared")
    specs = []
    for coeff, powers in terms:
        exps = tuple(powers.get(v + 1, 0) for v in range(n))
        specs.append((coeff, exps))
    return PolySpec(n, specs)


def polyspec_to_record(p: PolySpec) -> dict:
    return {
        "variables": p.nvars,
        "terms": [{"coeff": format_fraction(c), "exponents": list(e)}
                  for e, c in sorted(p.terms.items(), reverse=True)],
    }


def polyspec_from_record(rec) -> PolySpec:
    if isinstance(rec, str):
        return parse_polynomial(rec)
    if isinstance(rec, dict) and "polynomial" in rec:
        return parse_polynomial(rec["polynomial"], rec.get("variables"))
    if not isinstance(rec, dict) or "variables" not in rec or "terms" not in rec:
        raise ValueError("polynomial record needs 'variables' and 'terms' (or a 'polynomial' string)")
    terms = []
    for t in rec["terms"]:
        if "coeff" not in t or "exponents" not in t:
            raise ValueError("polynomial term needs 'coeff' and 'exponents'")
        terms.append((parse_fraction(t["coeff"]), [int(e) for e in t["exponents"]]))
    return PolySpec(int(rec["variables"]), terms)


# -- derived quotient input ----------------------------------------------------


def derived_quotient_from_record(rec):
    """Parse {lie, variables, degree_bound, action} into solver inputs.

    ``action[i][v]`` is the polynomial image of variable v under Lie
    generator i, given as a polynomial string or record.
    """
    from .filtvect import FiltObject as FO
    from .complexes import Complex as CX
    from .graded import symmetric_algebra
    for key in ("lie", "variables", "degree_bound", "action"):
        if key not in rec:
            raise ValueError(f"derived quotient record is missing '{key}'")
    g = lie_from_record(rec["lie"])
    nvars = int(rec["variables"])
    bound = int(rec["degree_bound"])
    algebra = symmetric_algebra(CX.single(FO(nvars, (0,) * nvars), 0), bound)
    action_rows = rec["action"]
    if len(action_rows) != g.dim:
        raise ValueError("need one action row per Lie generator")
    images = []
    for row in action_rows:
        if len(row) != nvars:
            raise ValueError("each action row needs one polynomial per variable")
        per_var = []
        for cell in row:
            p = polyspec_from_record(cell) if not isinstance(cell, str) \
                else parse_polynomial(cell, nvars)
            if p.nvars != nvars:
                p = PolySpec(nvars, [(c, (list(e) + [0] * nvars)[:nvars])
                                     for e, c in p.terms.items()])
            elt = {}
            for exps, c in p.terms.items():
                word = []
                for v, e in enumerate(exps):
                    word.extend([v] * e)
                elt[tuple(word)] = c
            per_var.append(elt)
        images.append(per_var)
    return g, algebra, images


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {exc}") from None


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)
