"""
Module for the golden acceptance harness.

Each row computes a small JSON-able observation; ``run_golden`` compares the
observations with the committed expectations in ``data/golden/expected.json``.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from schemoid_lab.builders.examples import prop_app_example, pullback_counterexample
from schemoid_lab.builders.natlen import nat_len_symbol
from schemoid_lab.builders.schemoids import group_schemoid, hamming_schemoid, johnson_schemoid
from schemoid_lab.builders.simplicial import (
    SimplicialComplex,
    complexes_on,
    face_weights,
    simplicial_schemoid,
    trace_monoid_presentation,
    vertex_colors,
)
from schemoid_lab.cohomology.complexes import cochain_cohomology
from schemoid_lab.cohomology.resolutions import MonoidModule, bar_cochain_complex, cyclic_cohomology
from schemoid_lab.cohomology.schemoid import schemoid_cohomology
from schemoid_lab.coloring.colored import ColoredCategory, class_index
from schemoid_lab.config import CompletionCaps
from schemoid_lab.core.functors import SetFunctor
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import StructuralError
from schemoid_lab.monitoring.metrics import GOLDEN_ROWS
from schemoid_lab.quotient.presentation import build_presentation
from schemoid_lab.quotient.quotient import growth_series, quotient_category
from schemoid_lab.scheme.association import builtin_schemes, standard_representation_check
from schemoid_lab.scheme.embedding import prop_h_crosscheck
from schemoid_lab.topos.limits import enumerate_functors, hom_count, objectwise_pullback
from schemoid_lab.topos.sheaves import is_color_preserving, sheafify

logger = logging.getLogger(__name__)

EXPECTED_PATH = Path(__file__).resolve().parents[3] / "data" / "golden" / "expected.json"

GROUPS = ("Z2", "Z3", "Z4", "Z2xZ2", "S3")


@dataclass(frozen=True)
class GoldenRow:
    key: str
    title: str
    compute: Callable[[Optional[CompletionCaps]], Any]


def _order(X: ColoredCategory, caps: Optional[CompletionCaps]) -> Optional[int]:
    Q = quotient_category(X, caps)
    return Q.order if Q.finite else None


def hamming_quotients(caps: Optional[CompletionCaps] = None) -> Dict[str, Optional[int]]:
    cases = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)]
    return {f"H({n},{q})": _order(hamming_schemoid(n, q), caps) for n, q in cases}


def johnson_quotients(caps: Optional[CompletionCaps] = None) -> Dict[str, Optional[int]]:
    cases = [(2, 1), (3, 1), (4, 2), (5, 2)]
    return {f"J({v},{d})": _order(johnson_schemoid(v, d), caps) for v, d in cases}


def factor_group_agreement(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    failures: List[str] = []
    schemes = builtin_schemes(16)
    for name, A in schemes.items():
        report = prop_h_crosscheck(A, caps)
        if not report.ok:
            failures.append(name)
    return {"checked": len(schemes), "failures": failures}


def group_schemoid_quotients(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    out = {}
    for name in GROUPS:
        G = FiniteMonoid.named(name)
        Q = quotient_category(group_schemoid(G), caps)
        out[name] = {
            "order": Q.order if Q.finite else None,
            "isomorphic": Q.finite and Q.monoid().find_isomorphism(G) is not None,
        }
    return out


def hamming_cohomology(caps: Optional[CompletionCaps] = None) -> Dict[str, List[str]]:
    out = {}
    for n in (1, 2, 3):
        groups = schemoid_cohomology(hamming_schemoid(n, 2), max_degree=5, modulus=2, caps=caps)
        out[f"H({n},2)"] = [str(g) for g in groups]
    example = prop_app_example()
    groups = schemoid_cohomology(example.colored, max_degree=5, modulus=2, caps=caps)
    out["prop_app"] = [str(g) for g in groups]
    return out


def resolution_agreement(caps: Optional[CompletionCaps] = None) -> Dict[str, Dict[str, bool]]:
    out: Dict[str, Dict[str, bool]] = {}
    for n in (2, 3, 4):
        modules = {"trivial": MonoidModule.trivial(FiniteMonoid.cyclic(n))}
        if n % 2 == 0:
            modules["sign"] = MonoidModule.sign(n)
        row = {}
        for label, M in modules.items():
            bar = cochain_cohomology(bar_cochain_complex(M.monoid, M, 5), 5)
            periodic = cyclic_cohomology(n, M, 5)
            row[label] = bar.to_json() == periodic.to_json()
        out[f"Z/{n}"] = row
    return out


def standard_representation(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    schemes = builtin_schemes(36)
    failures = [name for name, A in schemes.items() if not standard_representation_check(A).ok]
    return {"checked": len(schemes), "failures": failures}


def koszul_column(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    symbol = nat_len_symbol()
    cases = {"action0_aug0": (0, 0), "action1_aug1": (1, 1), "action2_aug1": (2, 1)}
    out: Dict[str, Any] = {}
    higher_zero = True
    for label, (action, aug) in cases.items():
        groups = schemoid_cohomology(symbol, max_degree=5, augmentation=aug, sigma_action=[[action]])
        out[label] = [str(g) for g in groups[:2]]
        higher_zero = higher_zero and all(g.is_zero for g in groups[2:])
    out["higher_vanish"] = higher_zero
    return out


def pullback_regression(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    ex = pullback_counterexample()
    P, _, _ = objectwise_pullback(ex.colored.base, ex.F, ex.F, ex.eta, ex.lam)
    verdict = is_color_preserving(ex.colored, P)
    return {
        "x": sorted(P.object_sets[ex.x]),
        "y": sorted(P.object_sets[ex.y]),
        "color_preserving": verdict.holds,
        "witness": list(verdict.witness) if verdict.witness else None,
    }


def adjunction_agrees(X: ColoredCategory, caps: Optional[CompletionCaps] = None, max_size: int = 2) -> bool:
    """``|Hom(F, G)| = |Hom♮(F, π*π_*G)|`` for every color-preserving ``F`` and every ``G``."""
    C = X.base
    Q = quotient_category(X, caps)
    classes = class_index(X)
    functors = list(enumerate_functors(C, max_size))
    sheaves = [F for F in functors if is_color_preserving(X, F)]
    for G in functors:
        sheafified: SetFunctor = sheafify(X, G, Q)
        for F in sheaves:
            if hom_count(C, F, G) != hom_count(C, F, sheafified, classes):
                logger.warning(f"Adjunction count differs for F={F.to_json()} G={G.to_json()}")
                return False
    return True


def adjunction_counts(caps: Optional[CompletionCaps] = None) -> Dict[str, bool]:
    return {
        "S(Z2)": adjunction_agrees(group_schemoid(FiniteMonoid.cyclic(2)), caps),
        "pullback": adjunction_agrees(pullback_counterexample().colored, caps),
    }


def simplicial_growth(K: SimplicialComplex, max_length: int = 4) -> List[int]:
    presentation = build_presentation(simplicial_schemoid(K))
    return growth_series(presentation, vertex_colors(K), max_length, face_weights(K))


def trace_growth(K: SimplicialComplex, max_length: int = 4) -> List[int]:
    presentation = trace_monoid_presentation(K)
    return growth_series(presentation, range(len(K.vertices)), max_length)


def trace_monoid_growth(caps: Optional[CompletionCaps] = None) -> Dict[str, Any]:
    complexes = [K for n in (1, 2, 3) for K in complexes_on(n)]
    mismatches = [K.to_json() for K in complexes if simplicial_growth(K) != trace_growth(K)]
    same_skeleton = simplicial_growth(SimplicialComplex.simplex(3)) == simplicial_growth(SimplicialComplex.boundary(3))
    return {"checked": len(complexes), "mismatches": mismatches, "skeleton_invariant": same_skeleton}


ROWS: Sequence[GoldenRow] = (
    GoldenRow("1", "Hamming quotients", hamming_quotients),
    GoldenRow("2", "Johnson quotients", johnson_quotients),
    GoldenRow("3", "Factor group agreement", factor_group_agreement),
    GoldenRow("4", "Group schemoid quotients", group_schemoid_quotients),
    GoldenRow("5", "Hamming cohomology mod 2", hamming_cohomology),
    GoldenRow("6", "Bar and periodic resolutions", resolution_agreement),
    GoldenRow("7", "Standard representation", standard_representation),
    GoldenRow("8", "Koszul column", koszul_column),
    GoldenRow("9", "Pullback counterexample", pullback_regression),
    GoldenRow("10", "Sheafification adjunction", adjunction_counts),
    GoldenRow("11", "Trace monoid growth", trace_monoid_growth),
)


def load_expected(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Read the golden expectations, ``data/golden/expected.json`` of a source checkout by default.

    Raises:
        StructuralError: if the file is missing or not a JSON object
    """
    target = Path(path) if path else EXPECTED_PATH
    try:
        expected = json.loads(target.read_text(encoding="utf-8"))
    except OSError as e:
        raise StructuralError(f"Cannot read golden expectations {target}: {e.strerror}", pointer="--expected") from e
    except json.JSONDecodeError as e:
        raise StructuralError(f"Invalid JSON in {target}: {e.msg}", pointer="--expected") from e
    if not isinstance(expected, dict):
        raise StructuralError("Golden expectations must be a JSON object keyed by row", pointer="--expected")
    return expected


def run_golden(expected: Dict[str, Any], caps: Optional[CompletionCaps] = None,
               only: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """
    Run the acceptance rows and compare with expectations.

    Args:
        expected: Row key to expected observation
        caps: Completion caps
        only: Restrict to these row keys

    Returns:
        DataFrame with columns key, title, status, observed, expected
    """
    records = []
    rows = [row for row in ROWS if only is None or row.key in only]
    for row in tqdm(rows, desc="Golden rows", disable=None):
        observed = json.loads(json.dumps(row.compute(caps)))
        want = expected.get(row.key)
        status = "pass" if observed == want else "fail"
        GOLDEN_ROWS.labels(outcome=status).inc()
        logger.info(f"Row {row.key} ({row.title}): {status}")
        records.append({"key": row.key, "title": row.title, "status": status,
                        "observed": observed, "expected": want})
    return pd.DataFrame(records, columns=["key", "title", "status", "observed", "expected"])
