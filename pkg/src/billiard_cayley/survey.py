"""Per-triple reports and bulk sweeps over canonical triples."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from .cayley import build_cayley, girth, has_length4_circuit
from .dihedral import TriangleTriple, coprime_angles, isosceles_permutation, right_permutation
from .embedding import DEFAULT_BUDGET, verified_genus
from .surface import build_surface, cone_points, surface_genus

REPORT_SCHEMA = "billiard-cayley/report/1"
SWEEP_SCHEMA = "billiard-cayley/sweep/1"
SWEEP_CAP = 30

SWEEP_FIELDS = [
    "p1",
    "p2",
    "p3",
    "n",
    "isosceles",
    "right",
    "girth",
    "graph_genus",
    "surface_genus",
    "verification_method",
]


def default_budget() -> int:
    value = os.environ.get("BILLIARD_BUDGET")
    if value is None:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ValueError(f"BILLIARD_BUDGET must be an integer, got {value!r}") from None
    if budget < 1:
        raise ValueError("BILLIARD_BUDGET must be positive")
    return budget


@dataclass
class TripleReport:
    triple: list[int]
    n: int
    budget: int
    isosceles: bool
    right: bool
    isosceles_permutation: Optional[list[int]]
    right_permutation: Optional[list[int]]
    girth: int
    length4_word: Optional[str]
    predicted_graph_genus: int
    graph_genus: int
    verification_method: str
    faces: int
    surface_genus: int
    surface_counts: dict
    cones: list[dict]
    notes: list[str]
    timings: Optional[dict] = None
    schema: str = field(default=REPORT_SCHEMA)

    def to_json(self) -> str:
        data = asdict(self)
        if data["timings"] is None:
            del data["timings"]
        schema = data.pop("schema")
        return json.dumps({"schema": schema, **data}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> TripleReport:
        data = json.loads(text)
        if data.get("schema") != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)

    def verdicts(self) -> dict:
        return {
            "graph_genus": self.graph_genus,
            "predicted_graph_genus": self.predicted_graph_genus,
            "surface_genus": self.surface_genus,
            "girth": self.girth,
            "verification_method": self.verification_method,
        }

    def rerun(self) -> TripleReport:
        """Recompute the report from its own header (triple and budget)."""
        return make_report(TriangleTriple(*self.triple), self.budget)

    def to_text(self) -> str:
        t = self.triple
        lines = [
            f"triangle T({t[0]},{t[1]},{t[2]})  n = {self.n}",
            f"  isosceles: {self.isosceles}   right: {self.right}",
        ]
        if self.isosceles_permutation:
            lines.append(f"  isosceles normalization (angle order): {self.isosceles_permutation}")
        if self.right_permutation:
            lines.append(f"  right-angle normalization (angle order): {self.right_permutation}")
        lines += [
            f"  girth: {self.girth}" + (f"   4-circuit: {self.length4_word}" if self.length4_word else ""),
            f"  graph genus: {self.graph_genus} (predicted {self.predicted_graph_genus}, "
            f"method {self.verification_method}, {self.faces} faces)",
            f"  surface genus: {self.surface_genus}   "
            + "  ".join(f"{k}={v}" for k, v in self.surface_counts.items()),
        ]
        for c in self.cones:
            lines.append(
                f"  corner {c['corner_type']}: {c['count']} point(s), {c['copies']} copies, "
                f"angle {c['angle']}" + (" (regular)" if c["regular"] else "")
            )
        for note in self.notes:
            lines.append(f"  note: {note}")
        if self.timings:
            lines.append("  timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in self.timings.items()))
        return "\n".join(lines) + "\n"


def make_report(t: TriangleTriple, budget: Optional[int] = None, timings: bool = False) -> TripleReport:
    budget = default_budget() if budget is None else budget
    clock = {}

    start = time.perf_counter()
    g = build_cayley(t)
    gi = girth(g)
    _, word = has_length4_circuit(t)
    clock["graph"] = time.perf_counter() - start

    start = time.perf_counter()
    vg = verified_genus(t, budget)
    clock["genus"] = time.perf_counter() - start

    start = time.perf_counter()
    s = build_surface(t)
    sg = surface_genus(t, s)
    cones = cone_points(t, s)
    clock["surface"] = time.perf_counter() - start

    notes = []
    if not coprime_angles(t):
        gcds = ", ".join(str(math.gcd(p, t.n)) for p in t.ps)
        notes.append(f"no single p_i coprime to n (gcd(p_i, n) = {gcds}); no generator pair is guaranteed to span D_n")
    if sg > vg.g:
        notes.append(f"surface genus {sg} exceeds graph genus {vg.g}")

    iso = isosceles_permutation(t)
    rp = right_permutation(t)
    return TripleReport(
        triple=list(t.ps),
        n=t.n,
        budget=budget,
        isosceles=t.isosceles,
        right=t.right,
        isosceles_permutation=list(iso) if iso else None,
        right_permutation=list(rp) if rp else None,
        girth=gi,
        length4_word=word,
        predicted_graph_genus=vg.predicted,
        graph_genus=vg.g,
        verification_method=vg.method,
        faces=vg.report.r,
        surface_genus=sg,
        surface_counts={"F": s.F, "E": s.E, "V": s.V, "chi": s.euler_characteristic},
        cones=cones.to_json(),
        notes=notes,
        timings=clock if timings else None,
    )


@dataclass(frozen=True)
class SweepRow:
    p1: int
    p2: int
    p3: int
    n: int
    isosceles: bool
    right: bool
    girth: int
    graph_genus: int
    surface_genus: int
    verification_method: str


def canonical_triples(max_n: int, min_n: int = 3) -> Iterator[TriangleTriple]:
    """Triples p1 <= p2 <= p3 with gcd 1, ordered by (n, p1, p2, p3)."""
    for n in range(max(min_n, 3), max_n + 1):
        for p1 in range(1, n // 3 + 1):
            for p2 in range(p1, (n - p1) // 2 + 1):
                p3 = n - p1 - p2
                if math.gcd(p1, p2, p3) == 1:
                    yield TriangleTriple(p1, p2, p3)


def sweep_row(t: TriangleTriple, budget: int) -> SweepRow:
    vg = verified_genus(t, budget)
    return SweepRow(
        t.p1, t.p2, t.p3, t.n, t.isosceles, t.right,
        girth(build_cayley(t)), vg.g, surface_genus(t), vg.method,
    )


def sweep(max_n: int, budget: Optional[int] = None, cap: int = SWEEP_CAP) -> list[SweepRow]:
    if max_n > cap:
        raise ValueError(f"sweep limit {max_n} exceeds the cap {cap}")
    budget = default_budget() if budget is None else budget
    rows = [sweep_row(t, budget) for t in canonical_triples(max_n)]
    return sorted(rows, key=lambda r: (r.n, r.p1, r.p2, r.p3))


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (int(v) if isinstance(v, bool) else v) for k, v in asdict(row).items()})
    return buf.getvalue()


def rows_to_json(rows: list[SweepRow], budget: int) -> str:
    return json.dumps({"schema": SWEEP_SCHEMA, "budget": budget, "rows": [asdict(r) for r in rows]}, indent=2) + "\n"
