"""Command-line interface.

Exit codes: 0 when every check passes (or an enumeration completes), 1 when
a checked property fails, 2 for usage, file and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from . import classify as classify_mod
from . import corpus, enumeration, relations, reps, textio
from .category import TranscriptionCategory, is_groupoid, validate_transcription
from .core import AxiomReport, FiniteUnarySemigroup
from .errors import (
    AxiomViolation,
    MissingUnary,
    NonAssociative,
    OrderTooLarge,
    ParseError,
    TheoremViolation,
)
from .functor import pseudoproduct_semigroup, roundtrip_check, trace_category
from .starloc import check_star_compatibility

CLASS_ALIASES = {
    "*-localisable": "star-localisable",
    "∗-localisable": "star-localisable",
    "Ehresmann": "ehresmann",
}


class Failure(Exception):
    """A checked property failed; carries the report to print."""

    def __init__(self, lines, data):
        super().__init__("\n".join(lines))
        self.lines = lines
        self.data = data


class UsageError(Exception):
    pass


def _class_id(name: str) -> str:
    return CLASS_ALIASES.get(name, name)


def _witness(report: AxiomReport, names) -> dict:
    w = None if report.witness is None else [names[i] for i in report.witness]
    return {"axiom": report.axiom, "holds": report.holds, "witness": w}


def _resolve(path: str) -> Path:
    """A path as given, or else the bundled corpus file of that name."""
    p = Path(path)
    if not p.exists() and p.name == path and corpus.path(path).exists():
        return corpus.path(path)
    return p


def _load(path: str):
    try:
        return textio.parse_file(_resolve(path)).payload
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _semigroup(path: str) -> FiniteUnarySemigroup:
    X = _load(path)
    if not isinstance(X, FiniteUnarySemigroup):
        raise UsageError(f"{path} is a category; this command needs a uas document")
    return X


def _category(path: str) -> TranscriptionCategory:
    X = _load(path)
    if not isinstance(X, TranscriptionCategory):
        raise UsageError(f"{path} is a semigroup; this command needs a ucat document")
    return X


# -- commands --------------------------------------------------------------------------
# each returns (text lines, json data) or raises Failure

def cmd_check(args):
    cls = _class_id(args.cls)
    X = _load(args.file)
    if isinstance(X, TranscriptionCategory):
        if cls not in ("transcription", "category", "groupoid"):
            raise UsageError("categories support --class transcription or groupoid")
        reports = validate_transcription(X)
        bad = next((r for r in reports if not r.holds), None)
        if bad is not None:
            raise Failure([f"FAIL {cls}: {bad.describe(X.names)}"],
                          {"class": cls, "holds": False, **_witness(bad, X.names)})
        if cls == "groupoid":
            g = is_groupoid(X)
            if not g:
                names = [X.names[i] for i in g.witness]
                raise Failure([f"FAIL groupoid: no inverse for ({','.join(names)})"],
                              {"class": cls, "holds": False, "witness": names})
        return [f"OK {cls}"], {"class": cls, "holds": True}
    try:
        pred = classify_mod.predicate(cls)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    for need in pred.needs:
        if not X.has(need):
            raise UsageError(f"class {cls} needs the unary map {need!r}")
    if X.star is not None and X.plus is not None and X.minus is not None:
        compat = check_star_compatibility(X)
        if not compat.holds and "star" in pred.needs:
            raise Failure([f"FAIL {cls}: {compat.describe(X.names)}"],
                          {"class": cls, "holds": False, **_witness(compat, X.names)})
    if pred.test(X):
        return [f"OK {cls}"], {"class": cls, "holds": True}
    w = classify_mod.witness(cls, X)
    if w is None and cls == "generalised-D":
        w = relations.is_generalised_D(X, set(X.plus))
    if w is None or w.holds:
        raise Failure([f"FAIL {cls}"], {"class": cls, "holds": False, "witness": None})
    raise Failure([f"FAIL {cls}: {w.describe(X.names)}"],
                  {"class": cls, "holds": False, **_witness(w, X.names)})


def cmd_derive_category(args):
    S = _semigroup(args.file)
    C = trace_category(S)
    return [textio.render(C).rstrip("\n")], textio.to_json_obj(C)


def cmd_derive_semigroup(args):
    C = _category(args.file)
    S = pseudoproduct_semigroup(C)
    return [textio.render(S).rstrip("\n")], textio.to_json_obj(S)


def cmd_roundtrip(args):
    X = _load(args.file)
    report = roundtrip_check(X)
    if not report:
        raise Failure(["tables differ"] + report.diffs, {"identical": False, "diffs": report.diffs})
    return ["tables identical"], {"identical": True, "diffs": []}


def cmd_enumerate(args):
    cls = _class_id(args.cls)
    spec = enumeration.SearchSpec(args.order, cls, not args.labelled, args.jobs)
    found = enumeration.enumerate_structures(spec)
    if args.digests:
        digests = [enumeration.digest(S) for S in found]
        return digests, {"class": cls, "order": args.order, "count": len(found), "digests": digests}
    lines = []
    for i, S in enumerate(found):
        lines.append(f"# {cls} {args.order} #{i + 1}")
        lines.append(textio.render(S).rstrip("\n"))
    lines.append(f"# {len(found)} structures")
    return lines, {"class": cls, "order": args.order, "count": len(found),
                   "structures": [textio.to_json_obj(S) for S in found]}


def cmd_classify(args):
    S = _semigroup(args.file)
    report = classify_mod.classify(S)
    lines = []
    for name, value in report.results.items():
        text = {True: "yes", False: "no", None: "n/a"}[value]
        w = report.witnesses.get(name)
        lines.append(f"{name:24} {text}" + (f"  ({w.describe(S.names)})" if w is not None else ""))
    data = {name: value for name, value in report.results.items()}
    data = {"results": data,
            "witnesses": {k: _witness(w, S.names) for k, w in report.witnesses.items()}}
    return lines, data


def _blocks(rel, names):
    return [[names[i] for i in block] for block in rel.classes()]


def _pairs(rel, names, strict=True):
    return [[names[s], names[t]] for s, t in rel.pairs() if not strict or s != t]


def _fmt_blocks(blocks):
    return " ".join("{" + ",".join(b) + "}" for b in blocks)


def cmd_relations(args):
    S = _semigroup(args.file)
    nm = S.names
    which = args.which
    if which == "mu":
        mu = relations.mu_relation(S)
        blocks = _blocks(mu, nm)
        ps = relations.is_projection_separating(S, mu)
        lines = [f"mu classes: {_fmt_blocks(blocks)}",
                 f"projection-separating: {'yes' if ps else 'no'}",
                 f"fundamental: {'yes' if mu.is_identity() else 'no'}",
                 f"+-congruence on this instance: {'yes' if relations.mu_is_congruence(S) else 'no'}"]
        return lines, {"mu": blocks, "projection_separating": ps, "fundamental": mu.is_identity()}
    if which == "orders":
        po, mo = relations.natural_orders(S)
        lines = ["projection order: " + " ".join(f"{a}<{b}" for a, b in _pairs(po, nm)),
                 "Mitsch order: " + " ".join(f"{a}<{b}" for a, b in _pairs(mo, nm))]
        return lines, {"projection_order": _pairs(po, nm), "mitsch_order": _pairs(mo, nm)}
    if which == "greens":
        g = relations.greens(S)
        data = {k: _blocks(rel, nm) for k, rel in g.items()}
        if S.plus is not None:
            data["swung-R"] = _blocks(relations.swung_R(S), nm)
        return [f"{k}: {_fmt_blocks(v)}" for k, v in data.items()], data
    tag = args.tag
    found = relations.congruences(S, tag)
    blocks = [_blocks(rel, nm) for rel in found]
    lines = [_fmt_blocks(b) for b in blocks] + [f"# {len(found)} congruences ({tag})"]
    return lines, {"tag": tag, "congruences": blocks}


def cmd_reps(args):
    S = _semigroup(args.file)
    nm = S.names
    d, g = reps.delta(S), reps.gamma(S)
    P = d[0].domain

    def show(t):
        return " ".join(f"{nm[p]}->{nm[t(p)]}" for p in P)

    lines = ["delta (right action, p -> (p s)-):"]
    lines += [f"  {nm[s]}: {show(d[s])}" for s in S.elements]
    lines.append("gamma (left action, p -> (s p)+):")
    lines += [f"  {nm[s]}: {show(g[s])}" for s in S.elements]
    phi = reps.omega_embedding(S)
    lines.append("projections embed into inner bitranslations: " +
                 " ".join(f"{nm[p]}->{phi.target.names[phi(i)]}" for i, p in enumerate(P)))
    kernel = reps.kernel_of_gamma_delta(S)
    lines.append(f"kernel of gamma x delta: {_fmt_blocks(_blocks(kernel, nm))}")
    data = {
        "projections": [nm[p] for p in P],
        "delta": {nm[s]: [nm[d[s](p)] for p in P] for s in S.elements},
        "gamma": {nm[s]: [nm[g[s](p)] for p in P] for s in S.elements},
        "kernel": _blocks(kernel, nm),
    }
    return lines, data


def cmd_counterexample(args):
    has, lacks = _class_id(args.has), _class_id(args.lacks)
    for name in (has, lacks):
        if name not in classify_mod.PREDICATES:
            raise UsageError(f"unknown class {name!r}")
    S, exhausted = enumeration.find_counterexample(has, lacks, args.max_order)
    if S is None:
        raise Failure([f"no structure of order <= {exhausted} is {has} but not {lacks}"],
                      {"found": False, "searched_to": exhausted})
    lines = [f"# order {S.order}: {has} but not {lacks}"]
    w = classify_mod.witness(lacks, S)
    if w is not None and not w.holds:
        lines.append(f"# {lacks} fails: {w.describe(S.names)}")
    lines.append(textio.render(S).rstrip("\n"))
    return lines, {"found": True, "structure": textio.to_json_obj(S)}


# -- driver ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transcat", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--output", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a document against a named class")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive-category", help="trace category of a localisable semigroup")
    p.add_argument("file")
    p.set_defaults(func=cmd_derive_category)

    p = sub.add_parser("derive-semigroup", help="pseudoproduct semigroup of a category")
    p.add_argument("file")
    p.set_defaults(func=cmd_derive_semigroup)

    p = sub.add_parser("roundtrip", help="rebuild a structure through the other side")
    p.add_argument("file")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("enumerate", help="all structures of a class up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--digests", action="store_true", help="print sha256 digests only")
    p.add_argument("--labelled", action="store_true", help="do not identify isomorphic copies")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="evaluate every registered class predicate")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("relations", help="mu, natural orders, Green's relations, congruences")
    p.add_argument("--which", choices=("mu", "orders", "greens", "congruences"), default="mu")
    p.add_argument("--tag", choices=sorted(relations.TAGS), default="semigroup",
                   help="kind of congruence for --which congruences")
    p.add_argument("file")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("reps", help="actions on the projections")
    p.add_argument("file")
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("counterexample", help="smallest structure in one class but not another")
    p.add_argument("--has", required=True)
    p.add_argument("--lacks", required=True)
    p.add_argument("--max-order", type=int, default=4)
    p.set_defaults(func=cmd_counterexample)
    return parser


def _violation_failure(exc: AxiomViolation, names) -> Failure:
    report = AxiomReport(exc.axiom, False, exc.witness)
    return Failure([f"FAIL: {report.describe(names)}"], _witness(report, names))


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(args, lines, data):
    with _sink(args.output) as out:
        if args.format == "json":
            json.dump(data, out, indent=2, ensure_ascii=False)
            out.write("\n")
        else:
            for line in lines:
                out.write(line + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        lines, data = args.func(args)
        code = 0
    except Failure as f:
        lines, data, code = f.lines, f.data, 1
    except (UsageError, ParseError, MissingUnary, OrderTooLarge, OSError, ValueError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "error"
        print(f"transcat: {kind}: {exc}", file=sys.stderr)
        return 2
    except NonAssociative as exc:
        lines = [f"FAIL: associativity at ({','.join(map(str, exc.witness))})"]
        data, code = {"axiom": "associativity", "witness": list(exc.witness)}, 1
    except AxiomViolation as exc:
        names = _names_of(args)
        f = _violation_failure(exc, names)
        lines, data, code = f.lines, f.data, 1
    except TheoremViolation as exc:
        print(f"transcat: internal consistency check failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, lines, data)
    return code


def _names_of(args):
    path = getattr(args, "file", None)
    if path is None:
        return None
    try:
        text = _resolve(path).read_text()
        for line in text.splitlines():
            tokens = line.split("#", 1)[0].split()
            if tokens and tokens[0] == "names":
                return tokens[1:]
    except OSError:
        pass
    return None


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
