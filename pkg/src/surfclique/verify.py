"""End-to-end check of every reference triangulation against the excess table."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Iterable

from .cliques import clique_report
from .embed import EmbeddingError, surface_of
from .fixtures import MAX_EXCESS_TABLE, Fixture, all_fixtures, catalog
from .surfmath import (
    SPHERE,
    clique_upper_bound,
    min_degree_cap,
    minimal_triangulation_order,
    omega_of,
    planar_bound,
)
from .surgery import embeddings_isomorphic, is_irreducible, isomorphic

__all__ = ["CheckRecord", "VerificationReport", "verify_table", "EXTREMAL_SET_SIZES"]

# size of the maximum-excess set for each surface, keyed by surface name
EXTREMAL_SET_SIZES = {"S0": 1, "S1": 1, "S2": 2, "N1": 1, "N2": 3, "N3": 15, "N4": 3}


@dataclass(frozen=True)
class CheckRecord:
    check: str
    subject: str
    expected: Any
    actual: Any
    passed: bool


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check: str, subject: str, expected: Any, actual: Any, passed: bool | None = None):
        if passed is None:
            passed = expected == actual
        self.records.append(CheckRecord(check, subject, expected, actual, bool(passed)))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json(self) -> str:
        payload = {
            "overall": "pass" if self.passed else "fail",
            "checks": len(self.records),
            "failed": len(self.failures()),
            "records": [asdict(r) for r in self.records],
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"{mark}  {r.check:<20} {r.subject:<12} expected={r.expected} actual={r.actual}")
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'}: {len(self.records) - len(self.failures())}"
            f"/{len(self.records)} checks passed"
        )
        return "\n".join(lines)


def _check_fixture(report: VerificationReport, fx: Fixture) -> dict | None:
    try:
        e = fx.embedding
    except EmbeddingError as exc:
        report.add("valid", fx.id, "triangulation", f"error: {exc}", False)
        return None
    report.add("valid", fx.id, "triangulation", "triangulation", True)
    n = e.vertex_count
    report.add("vertices", fx.id, fx.expected_vertices, n)
    try:
        surface = surface_of(e)
    except EmbeddingError as exc:
        report.add("surface", fx.id, fx.surface.name, f"error: {exc}", False)
        return None
    report.add("surface", fx.id, fx.surface.name, surface.name)
    irreducible = is_irreducible(e)
    report.add("irreducible", fx.id, True, irreducible)
    cr = clique_report(e)
    table_value = MAX_EXCESS_TABLE.get(fx.surface, {}).get(n)
    report.add("excess", fx.id, table_value, cr.excess)
    report.add("clique-number", fx.id, fx.expected_clique_number, cr.clique_number)
    if fx.surface == SPHERE:
        bound = planar_bound(n)
        report.add("clique-upper-bound", fx.id, f"<= {bound}", cr.total, cr.total <= bound)
    else:
        bound = clique_upper_bound(fx.surface, n)
        report.add("clique-upper-bound", fx.id, f"<= {bound}", cr.total, cr.total <= bound)
        cap = min_degree_cap(fx.surface, n)
        report.add("min-degree", fx.id, f"<= {cap}", e.min_degree(), e.min_degree() <= cap)
    return {
        "embedding": e,
        "surface": surface,
        "irreducible": irreducible,
        "report": cr,
        "n": n,
    }


def verify_table(fixtures: Iterable[Fixture] | None = None) -> VerificationReport:
    """Validate each fixture, then the per-surface catalog built from them."""
    fixtures = list(all_fixtures() if fixtures is None else fixtures)
    report = VerificationReport()
    results = {fx.id: _check_fixture(report, fx) for fx in fixtures}

    for entry in catalog():
        s = entry.surface
        name = s.name
        row = MAX_EXCESS_TABLE[s]
        report.add("table-max", name, max(row.values()), entry.max_excess)
        report.add("extremal-set-size", name, EXTREMAL_SET_SIZES[name], len(entry.members))
        orders = []
        for fid in entry.members:
            res = results.get(fid)
            if res is None:
                report.add("extremal-member", fid, "valid fixture", "missing or invalid", False)
                continue
            ok = res["irreducible"] and res["report"].excess == entry.max_excess
            report.add("extremal-member", fid, entry.max_excess, res["report"].excess, ok)
            report.add("contains-K-omega", fid, omega_of(s), res["report"].clique_number)
            orders.append(res["n"])
        if orders:
            report.add("minimal-order", name, minimal_triangulation_order(s), min(orders))

    n4 = [results.get(f"N4#{k}") for k in (1, 2, 3)]
    if all(n4):
        embs = [r["embedding"] for r in n4]  # type: ignore[index]
        same = all(isomorphic(a, b) for a, b in combinations(embs, 2))
        report.add("N4-same-graph", "N4#1-3", True, same)
        distinct = any(not embeddings_isomorphic(a, b) for a, b in combinations(embs, 2))
        report.add("N4-distinct-maps", "N4#1-3", True, distinct)
    else:
        report.add("N4-same-graph", "N4#1-3", True, "fixtures invalid", False)
    return report
