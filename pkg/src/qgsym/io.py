"""Persistence formats: graph documents (JSON) and spectra (CSV).

Graph documents are schema-versioned JSON with vertices, edges, optional
per-vertex condition annotations, and an optional group action.  Phases are
stored as (re, im) pairs.  Spectra are CSV with a mandatory header and
'#'-prefixed metadata comment lines, rows sorted by k.
"""

from __future__ import annotations

import json
from typing import Optional, TextIO

from .actions import GeneratorMaps, GraphAction
from .graphs import MetricGraph, Vertex, Edge
from .scattering import Condition, QuasiPeriodic, Standard
from .spectra import SpectralRoot, Spectrum

FORMAT_VERSION = 1


def graph_to_doc(
    g: MetricGraph,
    conditions: Optional[list[Condition]] = None,
    action: Optional[GraphAction] = None,
) -> dict:
    doc: dict = {
        "format_version": FORMAT_VERSION,
        "vertices": [{"id": v.id, "tag": v.tag} for v in g.vertices],
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "length": e.length} for e in g.edges
        ],
    }
    if conditions is not None:
        conds = []
        for c in conditions:
            if isinstance(c, Standard):
                conds.append({"vertex": c.vertex, "type": "standard"})
            else:
                conds.append(
                    {
                        "vertex": c.vertex,
                        "type": "quasi_periodic",
                        "phase": [complex(c.tau).real, complex(c.tau).imag],
                        "edges": list(c.edges),
                    }
                )
        doc["conditions"] = conds
    if action is not None:
        doc["action"] = {
            "orders": list(action.orders),
            "generators": [
                {
                    "vertex_perm": list(gm.vertex_perm),
                    "edge_perm": list(gm.edge_perm),
                    "edge_flip": list(gm.edge_flip),
                }
                for gm in action.generators
            ],
        }
    return doc


def doc_to_graph(doc: dict) -> tuple[MetricGraph, Optional[list[Condition]], Optional[GraphAction]]:
    vertices = tuple(
        Vertex(v["id"], v.get("tag", "original")) for v in doc["vertices"]
    )
    edges = tuple(
        Edge(e["id"], e["u"], e["v"], float(e["length"])) for e in doc["edges"]
    )
    g = MetricGraph(vertices, edges)

    conditions = None
    if "conditions" in doc:
        conditions = []
        for c in doc["conditions"]:
            if c["type"] == "standard":
                conditions.append(Standard(c["vertex"]))
            else:
                re, im = c["phase"]
                conditions.append(
                    QuasiPeriodic(c["vertex"], complex(re, im), tuple(c["edges"]))
                )

    action = None
    if "action" in doc:
        a = doc["action"]
        action = GraphAction(
            tuple(a["orders"]),
            tuple(
                GeneratorMaps(
                    tuple(gm["vertex_perm"]),
                    tuple(gm["edge_perm"]),
                    tuple(bool(x) for x in gm["edge_flip"]),
                )
                for gm in a["generators"]
            ),
        )
    return g, conditions, action


def save_graph(path: str, g: MetricGraph, conditions=None, action=None) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_doc(g, conditions, action), fh, indent=1)
        fh.write("\n")


def load_graph(path: str):
    with open(path) as fh:
        return doc_to_graph(json.load(fh))


def write_spectrum_csv(fh: TextIO, s: Spectrum) -> None:
    for key, val in sorted(s.meta.items()):
        fh.write(f"# {key} = {val!r}\n")
    fh.write(f"# k_max = {s.k_max!r}\n")
    fh.write("k,lambda,order,source_label\n")
    for r in sorted(s.roots, key=lambda r: r.k):
        fh.write(f"{r.k!r},{r.k * r.k!r},{r.order},{r.source}\n")


def save_spectrum(path: str, s: Spectrum) -> None:
    with open(path, "w") as fh:
        write_spectrum_csv(fh, s)


def read_spectrum_csv(fh: TextIO) -> Spectrum:
    meta: dict = {}
    roots = []
    header_seen = False
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if "=" in line:
                key, _, val = line[1:].partition("=")
                meta[key.strip()] = val.strip()
            continue
        if not header_seen:
            header_seen = True  # column header row
            continue
        k, _lam, order, source = line.split(",", 3)
        roots.append(SpectralRoot(float(k), int(order), source))
    k_max = float(meta.get("k_max", roots[-1].k if roots else 0.0))
    return Spectrum(tuple(roots), k_max, meta)


def load_spectrum(path: str) -> Spectrum:
    with open(path) as fh:
        return read_spectrum_csv(fh)
