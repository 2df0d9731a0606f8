"""Command line front end.

One input file per invocation; structured JSON records in, a deterministic
report out.  Exit status 0 means the computation succeeded (and, for
verification commands, passed), 1 means a verification failure with located
witnesses in the report, and 2 means the input was rejected, with the
offending field named in the message.  ``--format machine`` emits a single
JSON document that re-parses under the input grammars.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import resources

from . import records as rec
from . import filtvect as fv
from . import complexes as cx
from . import model
from . import dglie
from . import koszul
from . import selftest as st


def fixture_path(name: str):
    """Path of a bundled fixture file."""
    return resources.files("homfilt").joinpath("fixtures").joinpath(name)


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


class Report:
    def __init__(self, command: str, options: dict, input_digest: str | None):
        self.command = command
        self.options = options
        self.input_digest = input_digest
        self.results: dict = {}
        self.passed = True
        self.witnesses: list[str] = []
        self.human: list[str] = []

    def fail(self, witness: str):
        self.passed = False
        self.witnesses.append(witness)

    def as_machine(self) -> str:
        doc = {
            "command": self.command,
            "input_digest": self.input_digest,
            "options": {k: v for k, v in sorted(self.options.items())},
            "results": self.results,
            "pass": self.passed,
            "witnesses": self.witnesses,
        }
        return rec.dump_json(doc)

    def emit(self, fmt: str, out) -> None:
        if fmt == "machine":
            print(self.as_machine(), file=out)
        else:
            for line in self.human:
                print(line, file=out)
            if self.witnesses:
                for w in self.witnesses:
                    print(f"witness: {w}", file=out)
            print("result: " + ("pass" if self.passed else "FAIL"), file=out)


def _load_chain_map_or_morphism(data):
    """classify-map accepts a chain map or a bare morphism record."""
    if "components" in data:
        return rec.chain_map_from_record(data)
    if "matrix" in data:
        f = rec.filt_morphism_from_record(data)
        src = cx.Complex.single(f.source, 0)
        tgt = cx.Complex.single(f.target, 0)
        comps = {0: f} if not f.is_zero() else {}
        return cx.ChainMap(src, tgt, comps)
    raise ValueError("expected a chain map record ('components') or a morphism record ('matrix')")


def cmd_cohomology(data, args, report):
    x = rec.complex_from_record(data)
    degrees = sorted(set(x.support) | {min(x.support, default=0), max(x.support, default=0)}) \
        if x.support else [0]
    out = {}
    for n in degrees:
        h = cx.reduced_cohomology(x, n)
        out[str(n)] = rec.filt_object_to_record(h)
        report.human.append(f"H^{n}: dim {h.dim}, weights {list(h.weights)}")
    report.results["cohomology"] = out
    return 0


def cmd_classify_map(data, args, report):
    f = _load_chain_map_or_morphism(data)
    cls = model.classify(f)
    report.results["classification"] = cls.as_dict()

    def yn(b):
        return "yes" if b else "no"

    report.human.append(
        f"mono: {yn(cls.degreewise_mono)}, strict mono: {yn(cls.degreewise_strict_mono)}, "
        f"epi: {yn(cls.degreewise_epi)}, strict epi: {yn(cls.degreewise_strict_epi)}")
    report.human.append(
        f"injective cofibration: {yn(cls.injective_cofibration)}, "
        f"fibration: {yn(cls.projective_fibration)}, "
        f"weak equivalence: {yn(cls.weak_equivalence)}")
    return 0


def cmd_check_lift(data, args, report):
    square = rec.lifting_square_from_record(data)
    h = model.solve_lift(square)
    if h is None:
        report.results["lift"] = None
        report.fail("no filtration-compatible lift: the affine system is inconsistent")
        report.human.append("no lift exists")
        return 1
    report.results["lift"] = rec.chain_map_to_record(h)
    report.human.append("lift found")
    for n in sorted(h.components):
        report.human.append(f"  degree {n}: {rec.matrix_to_record(h.comp(n).matrix)}")
    return 0


def cmd_factor(data, args, report):
    f = rec.filt_morphism_from_record(data)
    fact = fv.factor(f)
    epi, mono = fv.factor_through_image(f)
    report.results["strict_epi_then_mono"] = {
        "strict_epi": rec.filt_morphism_to_record(fact.strict_epi),
        "mono": rec.filt_morphism_to_record(fact.mono),
    }
    report.results["epi_then_strict_mono"] = {
        "epi": rec.filt_morphism_to_record(epi),
        "strict_mono": rec.filt_morphism_to_record(mono),
    }
    report.results["is_strict"] = fv.is_strict(f)
    mid1 = fact.strict_epi.target
    report.human.append(f"coimage: dim {mid1.dim}, weights {list(mid1.weights)}")
    mid2 = mono.source
    report.human.append(f"image: dim {mid2.dim}, weights {list(mid2.weights)}")
    report.human.append(f"strict: {'yes' if report.results['is_strict'] else 'no'}")
    return 0


def cmd_resolve_ce(data, args, report):
    g = rec.lie_from_record(data)
    res = dglie.ce_resolution(g, args.weight_bound)
    ver = dglie.verify_ce_acyclicity(res)
    report.results["per_weight_cohomology"] = {
        str(w): {str(n): d for n, d in sorted(dims.items())}
        for w, dims in sorted(ver.per_weight.items())}
    for w, dims in sorted(ver.per_weight.items()):
        report.human.append(f"weight {w}: " + ", ".join(
            f"H^{n}={d}" for n, d in sorted(dims.items())))
    if not ver.ok:
        for v in ver.violations:
            report.fail(v)
        return 1
    report.human.append(f"resolution is exact in weights 1..{args.weight_bound}, "
                        "base ring at weight 0")
    return 0


def cmd_resolve_koszul(data, args, report):
    p = rec.filt_object_from_record(data)
    k = koszul.fancy_koszul(p, args.degree_bound)
    ver = koszul.verify_augmentation_qiso(k)
    report.results["per_strand_cohomology"] = {
        str(t): {str(n): d for n, d in sorted(dims.items())}
        for t, dims in sorted(ver.per_strand.items())}
    for t, dims in sorted(ver.per_strand.items()):
        nonzero = {n: d for n, d in dims.items() if d}
        report.human.append(f"total degree {t}: " + (
            ", ".join(f"H^{n}={d}" for n, d in sorted(nonzero.items())) or "acyclic"))
    if not ver.ok:
        for v in ver.violations:
            report.fail(v)
        return 1
    report.human.append("augmentation is a reduced quasi-isomorphism on the stored range")
    return 0


def cmd_pbw(data, args, report):
    g = rec.lie_from_record(data)
    rep = dglie.pbw_check(g, args.pbw_bound)
    report.results["confluent"] = rep.confluent
    report.results["per_length"] = {
        str(n): {"gr_dim": a, "sym_dim": b} for n, (a, b) in sorted(rep.per_length.items())}
    for n, (a, b) in sorted(rep.per_length.items()):
        mark = "==" if a == b else "!="
        report.human.append(f"length {n}: dim gr = {a} {mark} dim Sym = {b}")
    if not rep.ok:
        for v in rep.violations:
            report.fail(v)
        return 1
    report.human.append("graded dimensions match the symmetric algebra; rewriting confluent")
    return 0


def cmd_lie_check(data, args, report):
    g = rec.lie_from_record(data, check=False)
    rep = dglie.check_lie_axioms(g)
    report.results["violations"] = rep.violations
    if not rep.ok:
        for v in rep.violations:
            report.fail(v)
        report.human.append(f"{len(rep.violations)} axiom violations")
        return 1
    report.human.append("all Lie algebra axioms hold")
    return 0


def cmd_derived_quotient(data, args, report):
    g, algebra, images = rec.derived_quotient_from_record(data)
    action = dglie.derivation_action_from_variable_images(algebra, images)
    rep = dglie.derived_quotient(g, algebra, action)
    report.results["total_dims"] = {str(k): v for k, v in sorted(rep.total_dims.items())}
    report.results["per_piece"] = {
        str(k): {str(d): v for d, v in sorted(pieces.items())}
        for k, pieces in sorted(rep.per_piece.items())}
    report.results["valid_up_to"] = {str(k): v for k, v in sorted(rep.valid_up_to.items())}
    for k in sorted(rep.total_dims):
        line = f"H^{k}: dim {rep.total_dims[k]} (truncated complex)"
        if k in rep.per_piece:
            pieces = rep.per_piece[k]
            line += "; per degree piece: " + ", ".join(
                f"{d}:{v}" for d, v in sorted(pieces.items()))
        report.human.append(line)
    return 0


def cmd_crit(data, args, report):
    f = rec.polyspec_from_record(data)
    rep = koszul.critical_locus(f, args.degree_bound)
    report.results["h0_dim"] = rep.h0_dim
    report.results["stabilized"] = rep.stabilized
    report.results["h_minus"] = {str(k): v for k, v in sorted(rep.h_minus.items())}
    report.results["quasi_homogeneous"] = (
        {"weights": list(rep.quasi_homogeneous[0]), "degree": rep.quasi_homogeneous[1]}
        if rep.quasi_homogeneous else None)
    stab = " (stabilized)" if rep.stabilized else " (not stabilized; raise --degree-bound)"
    report.human.append(f"dim H0 = {rep.h0_dim}{stab}")
    for k in sorted(rep.h_minus):
        report.human.append(f"H-{k} = {rep.h_minus[k]}")
    return 0


def cmd_selftest(args, report):
    results = st.run_all(args.seed)
    report.results["seed"] = args.seed
    report.results["suites"] = [
        {"name": s.name, "pass": s.ok, "detail": s.detail, "witness": s.witness}
        for s in results]
    ok = True
    for s in results:
        report.human.append(s.line())
        if not s.ok:
            ok = False
            report.fail(f"{s.name}: {s.witness}")
    report.human.append(f"seed: {args.seed}")
    return 0 if ok else 1


_INPUT_COMMANDS = {
    "cohomology": cmd_cohomology,
    "classify-map": cmd_classify_map,
    "check-lift": cmd_check_lift,
    "factor": cmd_factor,
    "resolve-ce": cmd_resolve_ce,
    "resolve-koszul": cmd_resolve_koszul,
    "pbw": cmd_pbw,
    "lie-check": cmd_lie_check,
    "derived-quotient": cmd_derived_quotient,
    "crit": cmd_crit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homfilt",
        description="exact homological algebra over filtered rational vector spaces")
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "cohomology": "reduced cohomology of a complex",
        "classify-map": "model-structure classification of a (chain) map",
        "check-lift": "solve a lifting square exactly",
        "factor": "canonical factorizations of a morphism",
        "resolve-ce": "Chevalley-Eilenberg resolution and its acyclicity",
        "resolve-koszul": "Koszul resolution and its acyclicity",
        "pbw": "PBW graded-dimension check for a Lie algebra",
        "lie-check": "verify the dg-Lie axioms",
        "derived-quotient": "cohomology of a Lie algebra action on polynomials",
        "crit": "derived critical locus of a polynomial",
        "selftest": "run the bundled verification suites",
    }
    for name, desc in descriptions.items():
        sp = sub.add_parser(name, help=desc)
        if name != "selftest":
            sp.add_argument("input", help="path of the input record")
        sp.add_argument("--format", choices=["human", "machine"], default="human")
        sp.add_argument("--degree-bound", type=int, default=6)
        sp.add_argument("--weight-bound", type=int, default=4)
        sp.add_argument("--pbw-bound", type=int, default=6)
        sp.add_argument("--seed", type=int, default=20240801)
    return parser


def _run(argv, out) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for bound in ("degree_bound", "weight_bound", "pbw_bound"):
        if getattr(args, bound) < 0:
            print(f"error: --{bound.replace('_', '-')} must be nonnegative", file=out)
            return 2
    options = {
        "degree_bound": args.degree_bound,
        "weight_bound": args.weight_bound,
        "pbw_bound": args.pbw_bound,
        "seed": args.seed,
    }
    if args.command == "selftest":
        report = Report("selftest", options, None)
        code = cmd_selftest(args, report)
        report.emit(args.format, out)
        return code
    try:
        digest = _digest(args.input)
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = fh.read()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            if args.command != "crit":
                raise ValueError(f"not valid JSON: {exc}") from None
            # crit also accepts the plain text polynomial grammar
            data = {"polynomial": raw}
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=out)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return 2
    report = Report(args.command, options, digest)
    try:
        code = _INPUT_COMMANDS[args.command](data, args, report)
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return 2
    report.emit(args.format, out)
    return code


def run_for_test(argv) -> tuple[int, str]:
    """Run the CLI in-process, returning (exit code, captured output)."""
    import io
    buf = io.StringIO()
    code = _run(list(argv), buf)
    return code, buf.getvalue()


def main(argv=None) -> int:
    return _run(sys.argv[1:] if argv is None else list(argv), sys.stdout)


if __name__ == "__main__":
    raise SystemExit(main())
