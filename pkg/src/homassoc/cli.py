"""Command-line interface: ``homassoc <subcommand> ...``.

Exit codes: 0 pass, 1 check failure (the report carries witnesses), 2 input
error.  Reports are canonical JSON on stdout; timings are only included with
``--timings`` so that default reports are byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bundle import Bundle, load_bundle, save_bundle
from .checks import CHECKS, covariant_from_bundle, run_check
from .covariant import check_covariant_hom_bialgebra, dualize, quasitriangular_maps
from .errors import HomAlgebraError, SchemaError, WitnessedError
from .rota_baxter import (
    PRELIE_CONVENTIONS,
    RotaBaxterSystem,
    dendriform_from_rbs,
    prelie_from_dendriform,
    pseudotwistor_from_rbs,
    rbs_from_weighted_operator,
    require_rb_system,
    star_product,
)
from .search import CATALOG_NAMES, TARGETS, SearchTask, catalog
from .structures import CheckReport
from .field import FieldSpec
from .theorems import THEOREMS, TheoremResult, verify_theorem
from .yang_baxter import AlphaNRBSystem, YangBaxterPair, dendriform_from_alpha_n_rbs, rbs_from_ybp
from . import search as search_mod

CONSTRUCTIONS = (
    "dendriform-from-rbs",
    "prelie-from-dendriform",
    "star-product",
    "pseudotwistor-from-rbs",
    "rbs-from-weighted",
    "rbs-from-ybp",
    "dendriform-from-alpha-n-rbs",
    "quasitriangular",
    "dualize-covariant",
    "quasitriangular-maps",
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(HomAlgebraError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so errors become exit-2 reports."""

    def error(self, message):
        raise UsageError(message)


# -- report helpers --------------------------------------------------------------


def _fmt_value(field, x) -> str:
    if isinstance(x, (bool,)) or x is None:
        return json.dumps(x)
    if isinstance(x, str):
        return x
    return field.format_raw(x)


def report_entry(report: CheckReport, basis, max_witnesses: int, seconds: float | None = None) -> dict:
    f = report.field
    witnesses = []
    for w in report.witnesses[:max_witnesses]:
        entry = {
            "identity": w.identity,
            "at": list(w.at),
            "lhs": [_fmt_value(f, x) for x in w.lhs],
            "rhs": [_fmt_value(f, x) for x in w.rhs],
        }
        if w.at and all(isinstance(i, int) and 0 <= i < len(basis) for i in w.at):
            entry["at_labels"] = [basis[i] for i in w.at]
        witnesses.append(entry)
    out = {
        "name": report.name,
        "passed": report.passed,
        "witness_count": len(report.witnesses),
        "witnesses": witnesses,
        "failed_identities": report.failed_identities(),
    }
    if seconds is not None:
        out["seconds"] = round(seconds, 6)
    return out


def _base_report(argv) -> dict:
    return {"tool": "homassoc", "version": __version__, "command": list(argv)}


def _emit(doc: dict, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


# -- bundle resolution ------------------------------------------------------------


def resolve_bundle(ref: str, validate: bool = True, field: str | None = None) -> Bundle:
    """A bundle file path, or the name of a catalog instance."""
    path = Path(ref)
    if path.exists():
        bundle = load_bundle(path, validate=validate)
    elif ref in CATALOG_NAMES:
        bundle = catalog(ref).bundle
    else:
        raise SchemaError(f"no bundle file or catalog instance named {ref!r}", "/")
    if field is not None:
        bundle = bundle.with_field(FieldSpec.parse(field))
    return bundle


# -- subcommands ------------------------------------------------------------------


def cmd_check(args, doc) -> int:
    bundle = resolve_bundle(args.bundle, not args.no_validate, args.field)
    names = [n.strip() for n in args.checks.split(",") if n.strip()]
    if not names:
        raise UsageError("--checks needs at least one check name")
    entries = []
    for name in names:
        t0 = time.perf_counter()
        report = run_check(name, bundle)
        entries.append(report_entry(report, bundle.basis, args.max_witnesses,
                                    time.perf_counter() - t0 if args.timings else None))
    doc["checks"] = entries
    return EXIT_PASS if all(e["passed"] for e in entries) else EXIT_FAIL


def _derive(name: str, b: Bundle, convention: str) -> Bundle:
    A = b.algebra()
    keep = dict(R=None, S=None, r=None, s=None, coproduct=None, delta1=None, delta2=None,
                prec=None, succ=None, diamond=None, partial1=None, partial2=None, T=None, tau=None,
                n_power=None, lam=None)
    prov = f"{name} applied to {b.name or 'bundle'}"

    def fresh(**sections):
        # drop every companion section, then set the derived ones
        return b.replace(**{**keep, **sections})

    if name in ("dendriform-from-rbs", "star-product", "pseudotwistor-from-rbs"):
        sys_ = RotaBaxterSystem(A, b.linear("R"), b.linear("S"))
        require_rb_system(sys_)
        if name == "dendriform-from-rbs":
            D = dendriform_from_rbs(sys_)
            return fresh(mul=D.total().c, prec=D.prec.c, succ=D.succ.c,
                             declared=("hom-algebra", "hom-dendriform"), provenance=prov)
        if name == "star-product":
            return fresh(mul=star_product(sys_).mu.c, declared=("hom-algebra",), provenance=prov)
        T = pseudotwistor_from_rbs(sys_)
        return b.replace(T=T.T, tau=T.tau, declared=("hom-algebra", "rb-system", "weak-pseudotwistor"),
                         provenance=prov)
    if name == "prelie-from-dendriform":
        if b.prec is None and b.succ is None:
            sys_ = RotaBaxterSystem(A, b.linear("R"), b.linear("S"))
            require_rb_system(sys_)
            D = dendriform_from_rbs(sys_)
        else:
            from .rota_baxter import HomDendriform
            D = HomDendriform(b.field, b.linear("alpha"), b.bilinear("prec"), b.bilinear("succ"))
        P = prelie_from_dendriform(D, convention)
        return fresh(mul=D.total().c, alpha=D.alpha.m, prec=D.prec.c, succ=D.succ.c,
                         diamond=P.diamond.c, declared=("hom-dendriform", "hom-prelie"), provenance=prov)
    if name == "rbs-from-weighted":
        b.require("lambda")
        sys_ = rbs_from_weighted_operator(A, b.linear("R"), b.lam)
        return b.replace(S=sys_.S.m, declared=("hom-algebra", "weighted-rb", "rb-system"), provenance=prov)
    if name == "rbs-from-ybp":
        sys_ = rbs_from_ybp(YangBaxterPair(A, b.tensor("r"), b.tensor("s")))
        return b.replace(R=sys_.R.m, S=sys_.S.m, n_power=2,
                         declared=("hom-algebra", "yb-pair", "alpha-n-rbs"), provenance=prov)
    if name == "dendriform-from-alpha-n-rbs":
        b.require("n_power")
        D = dendriform_from_alpha_n_rbs(AlphaNRBSystem(A, b.linear("R"), b.linear("S"), b.n_power))
        return fresh(mul=D.total().c, alpha=D.alpha.m, prec=D.prec.c, succ=D.succ.c,
                         declared=("hom-algebra", "hom-dendriform"), provenance=prov)
    if name == "quasitriangular":
        from .covariant import build_quasitriangular
        B = build_quasitriangular(YangBaxterPair(A, b.tensor("r"), b.tensor("s")))
        return b.replace(coproduct=B.delta.d, delta1=B.delta1.d, delta2=B.delta2.d,
                         declared=("hom-algebra", "yb-pair", "covariant-bialgebra"), provenance=prov)
    if name == "quasitriangular-maps":
        dp, dr, ds = quasitriangular_maps(A, b.tensor("r"), b.tensor("s"))
        return b.replace(coproduct=dp.d, delta1=dr.d, delta2=ds.d, declared=("invariant",), provenance=prov)
    if name == "dualize-covariant":
        return dual_bundle(b)
    raise UsageError(f"unknown construction {name!r}")


def dual_bundle(b: Bundle) -> Bundle:
    D = dualize(covariant_from_bundle(b))
    return Bundle(
        D.field, D.dim, D.product.c, D.alpha.m, tuple(f"{x}*" for x in b.basis),
        name=f"{b.name}-dual" if b.name else None,
        provenance=f"dual of {b.name or 'bundle'}",
        coproduct=D.comul.d, partial1=D.partial1.c, partial2=D.partial2.c,
        declared=("dual-covariant-bialgebra",),
    )


def _write_or_print(bundle: Bundle, out: str | None, doc: dict) -> None:
    if out:
        save_bundle(bundle, out)
        doc["output"] = out
    else:
        doc["bundle"] = bundle.to_json()


def cmd_derive(args, doc) -> int:
    bundle = resolve_bundle(args.bundle, not args.no_validate, args.field)
    doc["construction"] = args.construction
    try:
        result = _derive(args.construction, bundle, args.convention)
    except WitnessedError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if exc.report is not None:
            doc["checks"] = [report_entry(exc.report, bundle.basis, args.max_witnesses)]
        return EXIT_FAIL
    _write_or_print(result, args.out, doc)
    return EXIT_PASS


def _theorem_doc(result: TheoremResult, basis, args) -> dict:
    return {
        "theorem": result.name,
        "vacuous": result.vacuous,
        "holds": result.holds,
        "hypotheses": [report_entry(r, basis, args.max_witnesses) for r in result.hypotheses],
        "conclusions": [report_entry(r, basis, args.max_witnesses) for r in result.conclusions],
    }


def cmd_verify(args, doc) -> int:
    bundle = resolve_bundle(args.bundle, not args.no_validate, args.field)
    result = verify_theorem(args.name, bundle, convention=args.convention, form=args.form)
    doc.update(_theorem_doc(result, bundle.basis, args))
    return EXIT_PASS if result.holds else EXIT_FAIL


def cmd_search(args, doc) -> int:
    bundle = resolve_bundle(args.bundle, not args.no_validate, args.field)
    exhaustive = args.seed is None
    task = SearchTask(args.target, bundle.algebra(), exhaustive=exhaustive, seed=args.seed,
                      samples=args.samples, weight=bundle.field.parse_raw(args.weight))
    solutions = search_mod.enumerate_solutions(task)
    lines = []
    for cand in solutions:
        if args.target == "yb_pairs":
            sol = bundle.replace(r=cand[0].t, s=cand[1].t, declared=("yb-pair",))
        elif args.target == "rb_systems":
            sol = bundle.replace(R=cand[0].m, S=cand[1].m, declared=("rb-system",))
        else:
            sol = bundle.replace(R=cand[0].m, lam=task.weight, declared=("weighted-rb",))
        sol = sol.replace(provenance=f"{args.target} solution, {'exhaustive' if exhaustive else 'sampled'} search")
        lines.append(json.dumps(sol.to_json(), sort_keys=True, separators=(",", ":"), ensure_ascii=False))
    for line in lines:
        sys.stdout.write(line + "\n")
    doc["solutions"] = len(lines)
    doc["mode"] = "exhaustive" if exhaustive else "sampled"
    return EXIT_PASS


def cmd_dualize(args, doc) -> int:
    bundle = resolve_bundle(args.bundle, not args.no_validate, args.field)
    B = covariant_from_bundle(bundle)
    report = check_covariant_hom_bialgebra(B)
    if not report.passed:
        doc["checks"] = [report_entry(report, bundle.basis, args.max_witnesses)]
        return EXIT_FAIL
    _write_or_print(dual_bundle(bundle), args.out, doc)
    return EXIT_PASS


def cmd_catalog(args, doc) -> int:
    if args.name is None:
        doc["catalog"] = list(CATALOG_NAMES)
        return EXIT_PASS
    field = FieldSpec.parse(args.field) if args.field else None
    inst = catalog(args.name, field)
    _write_or_print(inst.bundle, args.out, doc)
    return EXIT_PASS


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homassoc", description="Exact checks and constructions for Hom-associative structures.")
    parser.add_argument("--version", action="version", version=f"homassoc {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, bundle=True):
        if bundle:
            p.add_argument("--bundle", required=True, help="bundle file or catalog name")
            p.add_argument("--no-validate", action="store_true", help="skip declared-structure validation on load")
        p.add_argument("--field", help="reinterpret the bundle data over this field, e.g. GF(5)")
        p.add_argument("--max-witnesses", type=int, default=20, help="witnesses listed per check (default 20)")
        p.add_argument("--timings", action="store_true", help="include per-check timings in the report")

    p = sub.add_parser("check", help="run named checkers on a bundle")
    common(p)
    p.add_argument("--checks", required=True, help=f"comma-separated names from: {', '.join(sorted(CHECKS))}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="apply a construction and write the result bundle")
    common(p)
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--out", help="output bundle path (default: embed in the report)")
    p.add_argument("--convention", choices=PRELIE_CONVENTIONS, default="direct")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify-theorem", help="check hypotheses, then conclusions")
    common(p)
    p.add_argument("--name", required=True, choices=THEOREMS)
    p.add_argument("--convention", choices=PRELIE_CONVENTIONS, default="direct",
                   help="difference product used by dend-prelie")
    p.add_argument("--form", choices=("stated", "corrected"), default="stated",
                   help="perturbation criterion to compare against the axioms")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="stream solutions as JSON lines")
    common(p)
    p.add_argument("--target", required=True, choices=TARGETS)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate everything (default)")
    mode.add_argument("--seed", type=int, help="sample candidates with this seed")
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--weight", default="0", help="weight for weighted_rb")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dualize", help="dualize a covariant Hom-bialgebra bundle")
    common(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("catalog", help="list or print catalog bundles")
    common(p, bundle=False)
    p.add_argument("--name", choices=CATALOG_NAMES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return parser


def run_command(argv) -> tuple[int, dict]:
    """Run one command; returns (exit code, report).  Search lines go to stdout directly."""
    argv = list(argv)
    doc = _base_report(argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        code = args.func(args, doc)
    except WitnessedError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if exc.report is not None:
            doc["checks"] = [report_entry(exc.report, (), 20)]
        code = EXIT_FAIL
    except HomAlgebraError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, SchemaError):
            doc["error"]["path"] = exc.path
        code = EXIT_INPUT
    except (ValueError, TypeError, KeyError, OverflowError) as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    doc["exit_status"] = code
    return code, doc


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if any(a in ("-h", "--help", "--version") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        except UsageError:
            pass
    code, doc = run_command(argv)
    if "error" in doc:
        print(f"homassoc: {doc['error']['type']}: {doc['error']['message']}", file=sys.stderr)
    _emit(doc, sys.stderr if doc.get("command", [None])[0] == "search" and code == EXIT_PASS else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
