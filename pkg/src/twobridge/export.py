"""JSON, Graphviz DOT and plain-text renderings of a quiver.

Every renderer is deterministic: same inputs, same bytes.
"""

from __future__ import annotations

import json

from .homset import OrbitDecomposition
from .quiver import Quiver, QuiverCertificate, vertex_orbit_labels


def _vertex_name(v) -> str:
    return f"{v.a}_{v.b}"


def quiver_to_json(
    q: Quiver,
    decomp: OrbitDecomposition,
    cert: QuiverCertificate,
    link: str | None = None,
    isomorphic: bool | None = None,
) -> str:
    doc = {"n": q.n, "determinant": q.determinant}
    if link is not None:
        doc["link"] = link
    doc["vertices"] = [[v.a, v.b] for v in q.vertices]
    doc["edges"] = [list(e) for e in q.edges()]
    doc["orbits"] = [{"divisor": o.divisor, "size": o.size} for o in decomp.orbits]
    doc["certificate"] = cert.to_json()
    if isomorphic is not None:
        doc["isomorphic"] = isomorphic
    return json.dumps(doc, indent=2) + "\n"


def quiver_to_dot(q: Quiver, decomp: OrbitDecomposition, expand_edges: bool = False) -> str:
    labels = vertex_orbit_labels(q, decomp)
    lines = ["digraph quiver {", f'  label="Z_{q.n} coloring quiver, determinant {q.determinant}";']
    for orb in decomp.orbits:
        lines.append(f"  subgraph cluster_d{orb.divisor} {{")
        lines.append(f'    label="d={orb.divisor} ({orb.size})";')
        lines.append("    rank=same;")
        for v, d in zip(q.vertices, labels):
            if d == orb.divisor:
                lines.append(f'    "{_vertex_name(v)}";')
        lines.append("  }")
    for s, t, m in q.edges():
        src, dst = _vertex_name(q.vertices[s]), _vertex_name(q.vertices[t])
        if expand_edges:
            lines.extend(f'  "{src}" -> "{dst}";' for _ in range(m))
        else:
            lines.append(f'  "{src}" -> "{dst}" [label={m}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def certificate_table(cert: QuiverCertificate) -> list[str]:
    lines = [f"{'divisor':>8} {'size':>6} {'loops':>6} {'internal':>9}"]
    for o in cert.orbits:
        internal = "-" if o.internal is None else str(o.internal)
        lines.append(f"{o.divisor:>8} {o.size:>6} {o.self_loops:>6} {internal:>9}")
    divisors = [o.divisor for o in cert.orbits]
    if len(divisors) > 1:
        cross = {(s, t): m for s, t, m in cert.cross}
        width = max(len(str(d)) for d in divisors) + 2
        lines.append("")
        lines.append("cross multiplicities (row -> column):")
        lines.append(" " * width + "".join(f"{d:>{width}}" for d in divisors))
        for s in divisors:
            row = "".join(
                f"{'.' if s == t else cross[(s, t)]:>{width}}" for t in divisors
            )
            lines.append(f"{s:>{width}}{row}")
    return lines
