"""Per-graph analysis reports and their text, JSON and DOT renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import chroma
from .graph_core import Graph, classify, girth, is_bipartite
from .oriented import CircularPartition, chi_o, circular_witness, verify_partition
from .theorems import evaluate
from .vertex import VertexColouring, build_t_periodic_colouring, chi_t, verify_t_periodic


@dataclass
class ChiTRow:
    t: int
    k: int
    unconstrained: list[int]
    colours: list[int]


@dataclass
class AnalysisReport:
    n: int
    m: int
    min_degree: int
    max_degree: int
    kind: str
    girth: Optional[int]
    bipartite: bool
    chi_o: int
    witness: dict
    chi_t: list[ChiTRow] = field(default_factory=list)
    chi: Optional[int] = None
    chi_star: Optional[int] = None
    vizing_class: Optional[str] = None
    theorems: dict[str, Optional[bool]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [
            f"vertices        {self.n}",
            f"edges           {self.m}",
            f"degree          min {self.min_degree}, max {self.max_degree}",
            f"class           {self.kind}",
            f"girth           {self.girth if self.girth is not None else '-'}",
            f"bipartite       {'yes' if self.bipartite else 'no'}",
            f"chi_o           {self.chi_o}",
            f"chi             {_opt(self.chi)}",
            f"chi*            {_opt(self.chi_star)}",
            f"vizing class    {_opt(self.vizing_class)}",
        ]
        if self.chi_t:
            lines.append("chi_t")
            for row in self.chi_t:
                extra = f"  unconstrained {row.unconstrained}" if row.unconstrained else ""
                lines.append(f"  t={row.t:<3d} {row.k}{extra}")
        lines.append("theorems")
        for name, ok in self.theorems.items():
            lines.append(f"  {name:<20s} {'n/a' if ok is None else ('pass' if ok else 'FAIL')}")
        return "\n".join(lines) + "\n"


def _opt(x) -> str:
    return "-" if x is None else str(x)


def analyze(g: Graph, t_values: list[int]) -> AnalysisReport:
    cls = classify(g)
    witness = circular_witness(g)
    assert not verify_partition(g, witness)
    rows = []
    for t in t_values:
        res = chi_t(g, t)
        col = build_t_periodic_colouring(g, t, res)
        assert not verify_t_periodic(g, t, col)
        rows.append(ChiTRow(t, col.k, sorted(res.unconstrained), col.colour_of))
    report = AnalysisReport(
        n=g.n,
        m=g.m,
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        kind=cls.kind,
        girth=girth(g),
        bipartite=bool(is_bipartite(g)),
        chi_o=chi_o(g),
        witness=witness.to_record(),
        chi_t=rows,
    )
    if g.n <= chroma.MAX_CHI_VERTICES:
        report.chi = chroma.chi(g)
    if g.m <= chroma.MAX_CHI_STAR_EDGES:
        report.chi_star = chroma.chi_star(g)
        report.vizing_class = "one" if report.chi_star == g.max_degree() else "two"
    report.theorems = {
        name: (None if res is None else not res) for name, res in evaluate(g).items()
    }
    return report


PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
]  # fmt: skip


def to_dot(
    g: Graph,
    partition: Optional[CircularPartition] = None,
    colouring: Optional[VertexColouring] = None,
) -> str:
    """Graphviz source; vertices filled by colour class, edges labelled with circular classes."""
    out = ["graph G {", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in g.vertices:
        if colouring is not None:
            c = colouring.colour_of[v]
            out.append(f'  {v} [fillcolor="{PALETTE[c % len(PALETTE)]}", xlabel="{c}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.edges():
        if partition is not None:
            a, b = partition.class_of[(u, v)], partition.class_of[(v, u)]
            out.append(f'  {u} -- {v} [label="{u}>{v}:{a} {v}>{u}:{b}"];')
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
