"""Human-readable and JSON renderings of certifier results."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .certifier.certify import Certificate, GenericCertificate, RandomReport
from .certifier.obstruct import SolvableObstruction


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@lru_cache(maxsize=1)
def report_schema() -> dict:
    text = resources.files("tautcert").joinpath("schemas/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _matrix_lines(rows, fmt) -> list[str]:
    cells = [[fmt(x) for x in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return ["  [" + " ".join(c.rjust(width) for c in r) + "]" for r in cells]


def render_certificate(c: Certificate) -> str:
    fmt = c.representation.field.format
    out = [f"presentation: {c.label or '(unnamed)'}"]
    d = c.representation.describe()
    out.append(f"representation: dim {d['dim']} over {d['field']}")
    for name, m in d["matrices"].items():
        out.append(f"  {name} -> {m}")
    out.append("evaluated Jacobian (rows: surface words, columns: generators):")
    out.extend(_matrix_lines(c.jacobian.rows, fmt))
    out.append(f"det: {fmt(c.det)}")
    if c.self_dual_reason:
        out.append(f"self-dual: {c.self_dual_reason}")
    else:
        out.append(f"dual det: {fmt(c.dual_det)}")
    out.append(f"verdict: {c.verdict}")
    return "\n".join(out) + "\n"


def render_generic(g: GenericCertificate) -> str:
    return f"{g.polynomial_text()}\nverdict: {g.verdict}\n"


def render_random(r: RandomReport) -> str:
    out = [
        f"presentation: {r.label or '(unnamed)'}",
        f"search: dim {r.dim} over F_{r.prime}, {r.trials} trials, seed {r.seed}",
        f"status: {r.status}",
    ]
    if r.found:
        out.append(f"witness at trial {r.witness_trial} after {r.failures} failures")
        for name, m in r.representation.describe()["matrices"].items():
            out.append(f"  {name} -> {m}")
        out.append(f"det: {r.det}")
        out.append(f"dual det: {r.dual_det}")
    else:
        out.append(f"failures: {r.failures} (proves nothing)")
    return "\n".join(out) + "\n"


def render_obstruction(o: SolvableObstruction, one_dim_witness: str | None = None) -> str:
    out = [f"presentation: {o.label or '(unnamed)'}"]
    for n, d in zip(o.word_names, o.depths):
        out.append(f"{n} depth {d}")
    out.append(f"obstruction degree D*: {o.degree}")
    if one_dim_witness is not None:
        out.append(f"one-dimensional witness: {one_dim_witness}")
    out.append(o.statement())
    return "\n".join(out) + "\n"
