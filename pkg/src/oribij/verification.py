"""The invariant battery behind the verify command.

Each suite is an independent certificate: separation over all orientation
pairs, sampled half-open tilings, Tutte (or direct enumeration) counts for
the specialization tags, reversal classes against the breadth-first oracle,
and the two counting-polynomial identities.
"""

from __future__ import annotations

from .bijection import BijectionTable
from .core import Orientation, RegularMatroidRep
from .geometry import (
    MultilinearPolynomial,
    cell_count_polynomial,
    independent_set_polynomial,
    verify_cube_tiling,
)
from .oracle import reversal_closure_classes, tutte
from .reversal import KINDS, enumerate_classes
from .signatures import Signature


def _suite(name: str, passed: bool, detail) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def separation_violations(table: BijectionTable) -> list[tuple[int, int]]:
    """Orientation pairs with no disagreeing element in the image difference."""
    total = 1 << table.rep.element_count
    images = [table.forward[m] for m in range(total)]
    bad = []
    for a in range(total):
        ia = images[a]
        for b in range(a + 1, total):
            if not ((a ^ b) & (ia ^ images[b])):
                bad.append((a, b))
    return bad


def run_verification(
    rep: RegularMatroidRep,
    sig: Signature,
    cosig: Signature,
    samples: int = 2000,
    seed: int = 0,
    table: BijectionTable | None = None,
) -> dict:
    if table is None:
        table = BijectionTable.build(rep, sig, cosig)
    n = rep.element_count
    suites = []

    bad_pairs = separation_violations(table)
    suites.append(_suite("separation", not bad_pairs, {"violations": bad_pairs[:5]}))

    forward = verify_cube_tiling(rep, table, samples, seed=seed, complement=False)
    dual = verify_cube_tiling(rep, table, samples, seed=seed, complement=True)
    suites.append(_suite(
        "tiling-sample",
        forward.passed and dual.passed,
        {"forward": forward.to_json_obj(), "complement": dual.to_json_obj()},
    ))

    counts = {"basis": 0, "forest": 0, "connected-spanning": 0, "general": 0}
    for m in rep.orientation_universe():
        counts[table.tags[m]] += 1
    got = {
        "bases": counts["basis"],
        "independent": counts["basis"] + counts["forest"],
        "spanning": counts["basis"] + counts["connected-spanning"],
        "total": sum(counts.values()),
    }
    if rep.graph is not None:
        want = {
            "bases": tutte(rep.graph, 1, 1),
            "independent": tutte(rep.graph, 2, 1),
            "spanning": tutte(rep.graph, 1, 2),
            "total": tutte(rep.graph, 2, 2),
        }
        source = "tutte"
    else:
        want = {
            "bases": len(rep._basis_masks),
            "independent": len(rep._independent_masks),
            "spanning": len(rep._spanning_masks),
            "total": 1 << n,
        }
        source = "direct-enumeration"
    suites.append(_suite(
        "count-identities", got == want,
        {"source": source, "got": got, "want": want},
    ))

    mismatched = []
    for kind in KINDS:
        ours = tuple(tuple(o.mask for o in cls) for cls in enumerate_classes(rep, kind))
        oracle = tuple(tuple(o.mask for o in cls) for cls in reversal_closure_classes(rep, kind))
        if sorted(ours) != sorted(oracle):
            mismatched.append(kind)
    suites.append(_suite("class-oracle", not mismatched, {"mismatched_kinds": mismatched}))

    product = cell_count_polynomial(table)
    cube = MultilinearPolynomial.full_cube(n)
    suites.append(_suite(
        "cell-polynomial-product", product == cube,
        {"monomials": len(product), "expected": 1 << n},
    ))

    compatible = [
        Orientation.from_mask(n, m)
        for m in rep.orientation_universe()
        if table.tags[m] in ("basis", "forest")
    ]
    restricted = cell_count_polynomial(table, compatible)
    independent = independent_set_polynomial(rep)
    suites.append(_suite(
        "cell-polynomial-restricted", restricted == independent,
        {"monomials": len(restricted), "expected": len(independent)},
    ))

    return {
        "seed": seed,
        "samples": samples,
        "elements": n,
        "suites": suites,
        "passed": all(s["passed"] for s in suites),
    }
