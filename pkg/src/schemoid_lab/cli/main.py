"""
Command-line entry point: JSON on stdout, diagnostics on stderr.

Exit codes: 0 ok, 1 predicate false or precondition failed, 2 malformed
input, 3 undecided or unsupported computation.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from schemoid_lab.cli.fixtures import GENERATORS, generate
from schemoid_lab.cli.golden import load_expected, run_golden
from schemoid_lab.builders.natlen import nat_len_symbol
from schemoid_lab.cohomology.schemoid import schemoid_cohomology
from schemoid_lab.coloring.colored import ColoredCategory, object_classes
from schemoid_lab.coloring.predicates import (
    color_quiver,
    is_naturally_colored,
    structure_constants,
    tameness,
)
from schemoid_lab.config import CompletionCaps, configure_logging, default_caps, default_max_degree
from schemoid_lab.core import jsonio
from schemoid_lab.core.category import validate_category
from schemoid_lab.core.functors import SetFunctor, check_functor
from schemoid_lab.core.report import log_report
from schemoid_lab.exceptions import PreconditionError, StructuralError, UndecidedError, UnsupportedError
from schemoid_lab.monitoring.metrics import start_metrics_server
from schemoid_lab.quotient.quotient import quotient_category
from schemoid_lab.scheme.association import AssociationScheme, scheme_from_spec, standard_representation_check, validate_scheme
from schemoid_lab.scheme.embedding import as_schemoid, prop_h_crosscheck
from schemoid_lab.scheme.residue import factor_scheme, thin_residue
from schemoid_lab.topos.sheaves import is_color_preserving, sheafify

logger = logging.getLogger(__name__)


class PredicateFailed(Exception):
    """An ``--assert`` predicate evaluated to false."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schemoid-lab", description="Colored categories, schemoids and their quotients.")
    parser.add_argument("--log-level", default=None, help="Logging level (default: SCHEMOID_LAB_LOG_LEVEL or WARNING)")
    parser.add_argument("--caps", default=None, help="Completion caps, e.g. max_rule_length=8,max_pairs=500")
    parser.add_argument("--metrics-port", type=int, default=None, help="Expose prometheus metrics on this port")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Structure constants, naturality and tameness")
    analyze.add_argument("input", nargs="?", default="-")
    analyze.add_argument("--assert", dest="assert_", choices=["schemoid", "natural", "tame"], default=None)

    quotient = sub.add_parser("quotient", help="Quotient category by completion")
    quotient.add_argument("input", nargs="?", default="-")

    scheme = sub.add_parser("scheme", help="Association scheme tools")
    scheme_sub = scheme.add_subparsers(dest="scheme_command", required=True)
    scheme_gen = scheme_sub.add_parser("gen", help="hamming N Q | johnson V D | group NAME-OR-TABLE")
    scheme_gen.add_argument("spec", nargs="+")
    for name, aliases, text in (("validate", ["check"], "Validate axioms and the standard representation"),
                                ("thin-residue", [], "Colors of the thin residue"),
                                ("factor", [], "Factor scheme by the thin residue"),
                                ("quo", [], "Thin-residue factor group against the quotient group"),
                                ("schemoid", [], "Emit the colored category of a scheme")):
        cmd = scheme_sub.add_parser(name, aliases=aliases, help=text)
        cmd.set_defaults(scheme_action=name)
        cmd.add_argument("input", nargs="?", default="-")

    cohomology = sub.add_parser("cohomology", help="Cohomology with constant coefficients")
    cohomology.add_argument("input", nargs="?", default="-")
    cohomology.add_argument("--coeff", default="Z", help="Z or Z/n")
    cohomology.add_argument("--max-degree", type=int, default=None)
    cohomology.add_argument("--natlen", action="store_true", help="Use the (N, len) symbol instead of an input")
    cohomology.add_argument("--augmentation", type=int, choices=[0, 1], default=1)
    cohomology.add_argument("--action", type=int, default=1, help="Action of the generator on Z for --natlen")

    gen = sub.add_parser("gen", help="Generate a colored.json fixture")
    gen.add_argument("kind", choices=GENERATORS)
    gen.add_argument("args", nargs="*")
    gen.add_argument("--input", default=None, help="category.json for 'discrete'")

    sheaf = sub.add_parser("sheafify", help="Apply the sheafification to a functor")
    sheaf.add_argument("colored")
    sheaf.add_argument("functor")

    golden = sub.add_parser("golden", help="Run the acceptance rows against expectations")
    golden.add_argument("--expected", default=None)
    golden.add_argument("--row", action="append", default=None)
    return parser


def _load_colored(path: str):
    payload, digest = jsonio.load(path)
    X = ColoredCategory.from_json(payload)
    report = validate_category(X.base)
    if not report.ok:
        log_report(report)
        raise StructuralError(f"Not a category: {report.violations[0]}", pointer="compose")
    return X, digest


def _coefficient(text: str) -> Optional[int]:
    text = text.strip().upper()
    if text == "Z":
        return None
    if text.startswith("Z/"):
        try:
            n = int(text[2:])
        except ValueError as e:
            raise StructuralError(f"Bad coefficient '{text}'", pointer="--coeff") from e
        if n >= 2:
            return n
    raise StructuralError(f"Bad coefficient '{text}'", pointer="--coeff")


def cmd_analyze(args, caps: CompletionCaps) -> Dict[str, Any]:
    X, digest = _load_colored(args.input)
    table = structure_constants(X)
    natural = is_naturally_colored(X)
    tame = tameness(X, table)
    result: Dict[str, Any] = {
        "structure_constants": table.to_json(),
        "natural": {"holds": natural.holds, "witness": list(natural.witness) if natural.witness else None},
        "tame": tame.to_json(),
        "object_classes": object_classes(X),
        "color_quiver": color_quiver(X).to_json() if natural else None,
    }
    print(table.to_frame().to_string(index=False), file=sys.stderr)
    flags = {"schemoid": table.schemoid, "natural": natural.holds, "tame": tame.tame}
    if args.assert_ and not flags[args.assert_]:
        raise PredicateFailed(args.assert_, {"input_digest": digest, "result": result})
    return {"input_digest": digest, "result": result}


def cmd_quotient(args, caps: CompletionCaps) -> Dict[str, Any]:
    X, digest = _load_colored(args.input)
    Q = quotient_category(X, caps)
    if not Q.finite:
        raise UndecidedError("Quotient undecided within caps", partial={"input_digest": digest, "result": Q.to_json()})
    return {"input_digest": digest, "result": Q.to_json()}


def cmd_scheme(args, caps: CompletionCaps) -> Any:
    if args.scheme_command == "gen":
        return scheme_from_spec(args.spec).to_json()
    payload, digest = jsonio.load(args.input)
    A = AssociationScheme.from_json(payload)
    report = validate_scheme(A)
    if not report.ok:
        log_report(report)
        raise StructuralError(f"Not an association scheme: {report.violations[0]}", pointer="relations")
    action = args.scheme_action
    if action == "schemoid":
        return as_schemoid(A).to_json()
    if action == "thin-residue":
        T = thin_residue(A)
        return {"input_digest": digest,
                "result": {"colors": T.to_json(), "names": [A.color_name(c) for c in T.colors]}}
    if action == "factor":
        return {"input_digest": digest, "result": factor_scheme(A).to_json()}
    if action == "validate":
        print(A.intersection_frame().to_string(index=False), file=sys.stderr)
        result = {
            "axioms": report.to_json(),
            "standard_representation": standard_representation_check(A).to_json(),
            "symmetric": A.is_symmetric(),
            "commutative": A.is_commutative(),
            "valencies": A.valencies(),
        }
        return {"input_digest": digest, "result": result}
    factor = factor_scheme(A)
    result = {"factor": factor.to_json()}
    if factor.is_thin:
        group = factor.group(A)
        result["group"] = {"kind": "group", "order": group.element_count, "table": [list(r) for r in group.table]}
        result["crosscheck"] = prop_h_crosscheck(A, caps).to_json()
    return {"input_digest": digest, "result": result}


def cmd_cohomology(args, caps: CompletionCaps) -> Dict[str, Any]:
    modulus = _coefficient(args.coeff)
    max_degree = args.max_degree if args.max_degree is not None else default_max_degree()
    if args.natlen:
        groups = schemoid_cohomology(nat_len_symbol(), max_degree=max_degree, modulus=modulus,
                                     augmentation=args.augmentation, sigma_action=[[args.action]])
        digest = None
    else:
        X, digest = _load_colored(args.input)
        groups = schemoid_cohomology(X, max_degree=max_degree, modulus=modulus, caps=caps)
    print(str(groups), file=sys.stderr)
    return {"input_digest": digest, "result": groups.to_json()}


def cmd_gen(args, caps: CompletionCaps) -> Any:
    category = jsonio.load(args.input)[0] if args.input else None
    return generate(args.kind, args.args, category)


def cmd_sheafify(args, caps: CompletionCaps) -> Dict[str, Any]:
    X, digest = _load_colored(args.colored)
    payload, functor_digest = jsonio.load(args.functor)
    F = SetFunctor.from_json(payload, X.base)
    report = check_functor(X.base, F)
    if not report.ok:
        log_report(report)
        raise StructuralError(f"Not a functor: {report.violations[0]}", pointer="morphism_maps")
    sheaf = sheafify(X, F, caps=caps)
    result = {
        "input_color_preserving": is_color_preserving(X, F).holds,
        "color_preserving": is_color_preserving(X, sheaf).holds,
        "functor": sheaf.to_json(),
    }
    return {"input_digest": f"{digest}:{functor_digest}", "result": result}


def cmd_golden(args, caps: CompletionCaps) -> Dict[str, Any]:
    expected = load_expected(args.expected)
    frame = run_golden(expected, caps, args.row)
    print(frame[["key", "title", "status"]].to_string(index=False), file=sys.stderr)
    rows = frame.to_dict(orient="records")
    result = {"passed": int((frame["status"] == "pass").sum()), "rows": rows}
    if (frame["status"] != "pass").any():
        raise PredicateFailed("golden", {"input_digest": None, "result": result})
    return {"input_digest": None, "result": result}


COMMANDS = {
    "analyze": cmd_analyze,
    "quotient": cmd_quotient,
    "scheme": cmd_scheme,
    "cohomology": cmd_cohomology,
    "gen": cmd_gen,
    "sheafify": cmd_sheafify,
    "golden": cmd_golden,
}

RAW_OUTPUT = {("gen", None), ("scheme", "gen"), ("scheme", "schemoid")}


def _emit(argv: Sequence[str], body: Any, raw: bool) -> None:
    if raw:
        sys.stdout.write(jsonio.dumps(body))
        return
    envelope = {"command": list(argv)}
    envelope.update(body)
    sys.stdout.write(jsonio.dumps(envelope))


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch and map errors to exit codes.

    Returns:
        Process exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    if args.metrics_port:
        start_metrics_server(args.metrics_port)
    raw = (args.command, getattr(args, "scheme_command", None)) in RAW_OUTPUT
    try:
        caps = default_caps().override(args.caps)
        body = COMMANDS[args.command](args, caps)
    except PredicateFailed as e:
        logger.error(f"Assertion failed: {e.args[0]}")
        _emit(argv, e.args[1], False)
        return 1
    except StructuralError as e:
        logger.error(f"Malformed input: {e}")
        _emit(argv, {"error": str(e), "pointer": e.pointer}, False)
        return 2
    except UndecidedError as e:
        logger.error(f"Undecided: {e}")
        partial = e.partial if isinstance(e.partial, dict) else {"result": e.partial}
        _emit(argv, dict(partial, error=str(e)), False)
        return 3
    except UnsupportedError as e:
        logger.error(f"Unsupported: {e}")
        _emit(argv, {"error": str(e)}, False)
        return 3
    except PreconditionError as e:
        logger.error(f"Precondition failed: {e}")
        _emit(argv, {"error": str(e), "witness": e.witness}, False)
        return 1
    _emit(argv, body, raw)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
